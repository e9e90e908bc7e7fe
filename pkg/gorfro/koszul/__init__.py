"""Koszul complex, homology, Betti tables and products."""

from gorfro.koszul.betti import BettiTable, betti_table, koszul_euler_characteristic, render_betti_text
from gorfro.koszul.complex import (
    Block,
    KoszulCell,
    KoszulComplex,
    check_d_squared,
    differential_matrix,
    wedge_sign,
)
from gorfro.koszul.homology import (
    HomologyBasis,
    HomologyCell,
    compute_cell,
    homology_basis,
    top_rows_have_homology,
)
from gorfro.koszul.product import (
    HomologyClass,
    PairingUndefinedError,
    basis_class,
    chain_product,
    class_chain,
    dg_product,
    graded_commutator,
    pairing_labels,
    pairing_matrix,
    unit_class,
)

__all__ = [
    "BettiTable",
    "Block",
    "HomologyBasis",
    "HomologyCell",
    "HomologyClass",
    "KoszulCell",
    "KoszulComplex",
    "PairingUndefinedError",
    "basis_class",
    "betti_table",
    "chain_product",
    "check_d_squared",
    "class_chain",
    "compute_cell",
    "dg_product",
    "differential_matrix",
    "graded_commutator",
    "homology_basis",
    "koszul_euler_characteristic",
    "pairing_labels",
    "pairing_matrix",
    "render_betti_text",
    "top_rows_have_homology",
    "unit_class",
    "wedge_sign",
]
