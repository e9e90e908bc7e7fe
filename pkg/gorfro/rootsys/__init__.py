"""Root systems of classical type, canonical weights and subcanonicity."""

from gorfro.rootsys.cartan import (
    SUPPORTED_TYPES,
    RootTypeError,
    block_cartan,
    format_type,
    parse_type,
    positive_root_count,
    simple_cartan,
)
from gorfro.rootsys.roots import (
    RootSystem,
    WeightError,
    WeightVector,
    build_root_system,
    parse_weight,
    roots_by_factor,
)
from gorfro.rootsys.subcanonical import (
    SubcanonicityVerdict,
    canonical_weight,
    parabolic_levi,
    subcanonicity_test,
)

__all__ = [
    "SUPPORTED_TYPES",
    "RootSystem",
    "RootTypeError",
    "SubcanonicityVerdict",
    "WeightError",
    "WeightVector",
    "block_cartan",
    "build_root_system",
    "canonical_weight",
    "format_type",
    "parabolic_levi",
    "parse_type",
    "parse_weight",
    "positive_root_count",
    "roots_by_factor",
    "simple_cartan",
    "subcanonicity_test",
]
