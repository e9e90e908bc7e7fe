"""Tests for Cartan data, positive roots and the subcanonicity criterion."""

from __future__ import annotations

from typing import Tuple

import pytest

from gorfro.catalog.families import entry_from_id
from gorfro.exactalg.field import QQ
from gorfro.rootsys import (
    RootTypeError,
    WeightError,
    WeightVector,
    build_root_system,
    canonical_weight,
    parabolic_levi,
    parse_type,
    parse_weight,
    positive_root_count,
    simple_cartan,
    subcanonicity_test,
)


def test_parse_type_products() -> None:
    assert parse_type("A1xA2") == [("A", 1), ("A", 2)]
    assert parse_type("b3") == [("B", 3)]


@pytest.mark.parametrize("text", ["G2", "A0", "B1", "D2", "", "A1x?"])
def test_unsupported_types(text: str) -> None:
    with pytest.raises(RootTypeError) as excinfo:
        parse_type(text)
    assert excinfo.value.code == "ERR_ROOT_TYPE"


def test_cartan_conventions() -> None:
    assert simple_cartan("B", 2) == ((2, -1), (-2, 2))
    assert simple_cartan("C", 2) == ((2, -2), (-1, 2))
    assert simple_cartan("A", 3) == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


@pytest.mark.parametrize(
    ("type_name", "count"),
    [("A1", 1), ("A3", 6), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12), ("A1xA2", 4)],
)
def test_positive_root_counts(type_name: str, count: int) -> None:
    rs = build_root_system(type_name)
    assert len(rs.positive_roots) == count
    expected = sum(positive_root_count(letter, rank) for letter, rank in rs.factors)
    assert expected == count


def test_highest_root_of_b2() -> None:
    rs = build_root_system("B2")
    assert rs.positive_roots[-1] == (1, 2)


def test_levi_is_orthogonal_simple_roots() -> None:
    rs = build_root_system("A3")
    assert parabolic_levi(rs, WeightVector((0, 1, 0))) == frozenset({0, 2})


def test_grassmannian_is_subcanonical() -> None:
    rs = build_root_system("A3")
    verdict = subcanonicity_test(rs, parse_weight("0,1,0", rs))
    assert verdict.holds
    assert verdict.N == 4
    assert verdict.kappa == WeightVector((0, 4, 0))
    assert verdict.to_text() == "subcanonical: yes, N=4, kappa=4*w2"


def test_projective_plane_canonical_weight() -> None:
    rs = build_root_system("A2")
    assert canonical_weight(rs, {1}) == WeightVector((3, 0))


def test_full_flag_canonical_weight_is_two_rho() -> None:
    rs = build_root_system("A2")
    assert canonical_weight(rs, set()) == WeightVector((2, 2))
    assert subcanonicity_test(rs, WeightVector((1, 1))).N == 2


@pytest.mark.parametrize(
    ("type_name", "weight", "expected"),
    [
        ("A1", (2,), 1),
        ("A1", (3,), None),
        ("A1xA1", (1, 1), 2),
        ("A1xA2", (1, 1, 0), None),
        ("A2", (2, 0), None),
        ("B2", (1, 0), 3),
        ("C2", (1, 0), 4),
        ("D4", (1, 0, 0, 0), 6),
    ],
)
def test_subcanonicity_table(type_name: str, weight: tuple, expected: object) -> None:
    verdict = subcanonicity_test(build_root_system(type_name), WeightVector(weight))
    assert verdict.N == expected
    assert verdict.holds is (expected is not None)


def test_failed_verdict_text() -> None:
    verdict = subcanonicity_test(build_root_system("A1"), WeightVector((3,)))
    assert verdict.to_text() == "subcanonical: no, kappa=2*w1"


def test_weight_must_be_dominant() -> None:
    rs = build_root_system("A3")
    with pytest.raises(WeightError) as excinfo:
        subcanonicity_test(rs, WeightVector((0, -1, 0)))
    assert excinfo.value.code == "ERR_WEIGHT_NOT_DOMINANT"


def test_weight_length_must_match_rank() -> None:
    rs = build_root_system("A3")
    with pytest.raises(WeightError) as excinfo:
        parse_weight("1,0", rs)
    assert excinfo.value.code == "ERR_WEIGHT_LENGTH"


@pytest.mark.parametrize(("type_name", "weight"), [("A1xA2", (0, 1, 0)), ("A3", (0, 0, 0))])
def test_weight_vanishing_on_a_factor_is_ill_posed(type_name: str, weight: tuple) -> None:
    with pytest.raises(WeightError) as excinfo:
        subcanonicity_test(build_root_system(type_name), WeightVector(weight))
    assert excinfo.value.code == "ERR_WEIGHT_ILL_POSED"


def test_weight_text() -> None:
    assert WeightVector((2, 0, -1)).to_text() == "2*w1 - w3"
    assert WeightVector((0, 0)).to_text() == "0"


def test_fundamental_weights_in_root_coordinates() -> None:
    rs = build_root_system("A2")
    assert rs.weight_in_roots(WeightVector((1, 0))) == (QQ(2, 3), QQ(1, 3))


CATALOG_FLAGS = [
    (root.type, root.weight)
    for root in (
        entry_from_id(example).root_data
        for example in (
            "veronese:1,2",
            "veronese:1,3",
            "veronese:1,4",
            "veronese:2,2",
            "segre:1,1",
            "segre:1,2",
            "plucker2:4",
        )
    )
    if root is not None
]


def _reversed_factors(type_name: str, weight: Tuple[int, ...]) -> Tuple[str, Tuple[int, ...]]:
    factors = parse_type(type_name)
    blocks = []
    offset = 0
    for _, rank in factors:
        blocks.append(weight[offset:offset + rank])
        offset += rank
    reordered = "x".join(f"{letter}{rank}" for letter, rank in reversed(factors))
    return reordered, tuple(c for block in reversed(blocks) for c in block)


def test_reversed_factors_of_a_segre_weight() -> None:
    assert _reversed_factors("A1xA2", (1, 1, 0)) == ("A2xA1", (1, 0, 1))


@pytest.mark.parametrize(("type_name", "weight"), CATALOG_FLAGS)
def test_verdict_is_invariant_under_factor_relabeling(type_name: str, weight: Tuple[int, ...]) -> None:
    original = subcanonicity_test(build_root_system(type_name), WeightVector(weight))
    other_type, other_weight = _reversed_factors(type_name, weight)
    relabeled = subcanonicity_test(build_root_system(other_type), WeightVector(other_weight))
    assert (relabeled.holds, relabeled.N) == (original.holds, original.N)
    assert relabeled.kappa == WeightVector(_reversed_factors(type_name, original.kappa.coordinates)[1])


@pytest.mark.parametrize(("type_name", "weight"), CATALOG_FLAGS)
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_scaling_the_weight_divides_n(type_name: str, weight: Tuple[int, ...], k: int) -> None:
    rs = build_root_system(type_name)
    base = subcanonicity_test(rs, WeightVector(weight))
    scaled = subcanonicity_test(rs, WeightVector(weight).scale(k))
    divisible = base.N is not None and base.N % k == 0
    assert scaled.holds is divisible
    assert scaled.N == (base.N // k if divisible and base.N is not None else None)
