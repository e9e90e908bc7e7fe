"""Tests for exact fields, sparse polynomials and exact linear algebra."""

from __future__ import annotations

from typing import List

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gorfro.errors import GorfroError, InputError, ResourceLimitError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import (
    GF,
    QQ,
    FieldError,
    convert,
    field_name,
    inverse,
    is_prime,
    parse_field,
    scalar_text,
)
from gorfro.exactalg.matrix import (
    apply,
    echelonize,
    from_dense,
    identity,
    image_echelon,
    rank,
    rank_and_kernel,
    rank_crosscheck,
    sparse_kernel,
)
from gorfro.exactalg.polynomial import (
    Polynomial,
    change_field,
    coefficient,
    degree,
    from_terms,
    is_homogeneous,
    poly_mul,
    polynomial_ring,
    substitute,
    to_text,
    variables,
)

F101 = GF(101)

coefficients = st.integers(min_value=-5, max_value=5)
monomials = st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(3)))
polynomials = st.dictionaries(monomials, coefficients, max_size=4).map(lambda t: from_terms(t, F101, 3))
small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=-3, max_value=3), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def test_prime_field_arithmetic() -> None:
    f = GF(7)
    assert inverse(f, f(3)) == f(5)
    assert f(3) * f(5) == f.one
    assert scalar_text(f, f(6)) == "-1"
    assert convert(QQ(1, 2), QQ, f) == f(4)
    assert field_name(f) == "p:7"
    assert field_name(QQ) == "q"


def test_prime_field_rejects_composite_modulus() -> None:
    with pytest.raises(InputError) as excinfo:
        parse_field("p:15")
    assert excinfo.value.code == "ERR_FIELD_PRIME"


def test_parse_field_modes() -> None:
    assert parse_field("q") is QQ
    assert parse_field("p:32003") == GF(32003)
    assert parse_field("p") == GF(32003)
    with pytest.raises(InputError):
        parse_field("z")


def test_division_by_zero_is_reported() -> None:
    with pytest.raises(FieldError) as excinfo:
        inverse(QQ, QQ.zero)
    assert excinfo.value.code == "ERR_FIELD_DIVISION_BY_ZERO"
    with pytest.raises(FieldError):
        convert(QQ(1, 7), QQ, GF(7))


def test_fields_do_not_mix() -> None:
    one_q = from_terms({(0, 0): 1}, QQ, 2)
    one_p = from_terms({(0, 0): 1}, GF(7), 2)
    with pytest.raises(FieldError) as excinfo:
        poly_mul(one_q, one_p)
    assert excinfo.value.code == "ERR_FIELD_MODE_MISMATCH"


def test_ring_needs_a_variable() -> None:
    with pytest.raises(GorfroError) as excinfo:
        polynomial_ring(0, QQ)
    assert excinfo.value.code == "ERR_RING_MISMATCH"


def test_is_prime() -> None:
    assert is_prime(32003)
    assert is_prime(65521)
    assert not is_prime(1)
    assert not is_prime(65521 * 32003)


def test_polynomial_cancellation_and_degree() -> None:
    x0, x1, x2 = variables(QQ, 3)
    f = x0 * x2 - x1 * x1
    assert degree(f) == 2
    assert not (f - f)
    assert degree(x0 + x1 * x1) is None
    assert not is_homogeneous(x0 + x1 * x1)


def test_polynomial_text() -> None:
    x0, x1, _ = variables(QQ, 3)
    assert to_text(x0 * x0 - 2 * x1) == "x0^2 - 2*x1"
    assert to_text(-x1 + x0 * x0) == "x0^2 - x1"
    assert to_text(polynomial_ring(3, QQ).zero) == "0"


def test_substitute_twisted_cubic_parameterization() -> None:
    s, t = variables(QQ, 2)
    images = [s**3, s * s * t, s * t * t, t**3]
    x0, x1, x2, x3 = variables(QQ, 4)
    assert not substitute(x0 * x2 - x1 * x1, images)
    assert not substitute(x0 * x3 - x1 * x2, images)
    assert substitute(x0 * x3, images) == s**3 * t**3


def test_change_field_lifts_symmetric_residues() -> None:
    x0, x1 = variables(GF(7), 2)
    f = x0 - x1
    assert coefficient(change_field(f, QQ), (0, 1)) == QQ(-1)


@settings(max_examples=60, deadline=None)
@given(polynomials, polynomials, polynomials)
def test_ring_axioms(f: Polynomial, g: Polynomial, h: Polynomial) -> None:
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g - g == f


def test_rank_and_kernel_over_q() -> None:
    m = from_dense(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, kernel = sparse_kernel(m)
    assert r == 2
    assert len(kernel) == 1
    assert apply(m, kernel[0]) == {}
    _, dense = rank_and_kernel(m)
    assert len(dense) == 1 and len(dense[0]) == 3


def test_kernel_of_zero_and_full_rank_matrices() -> None:
    assert sparse_kernel(from_dense(QQ, [[0, 0], [0, 0]])) == (0, [{0: QQ.one}, {1: QQ.one}])
    assert sparse_kernel(identity(3, QQ)) == (3, [])


def test_echelon_reduce_and_contains() -> None:
    echelon = echelonize([{0: QQ(1), 1: QQ(1)}, {1: QQ(1), 2: QQ(1)}], 3, QQ)
    assert echelon.rank == 2
    assert echelon.contains({0: QQ(1), 2: QQ(-1)})
    assert not echelon.contains({2: QQ(1)})


def test_echelon_rows_are_reduced() -> None:
    echelon = echelonize([{0: QQ(2), 1: QQ(4)}, {0: QQ(1), 2: QQ(3)}], 3, QQ)
    for col, row in echelon.pivots.items():
        assert row[col] == QQ.one
        assert all(row.get(other, QQ.zero) == QQ.zero for other in echelon.pivots if other != col)


def test_image_echelon_spans_columns() -> None:
    m = from_dense(QQ, [[1, 1], [0, 0], [1, 1]])
    image = image_echelon(m)
    assert image.rank == 1
    assert image.contains({0: QQ(3), 2: QQ(3)})
    assert not image.contains({1: QQ(1)})


def test_rank_crosscheck_flags_unlucky_prime() -> None:
    m = from_dense(QQ, [[1, 0], [0, 32003]])
    check = rank_crosscheck(m)
    assert check.rank_q == 2
    assert check.rank_p == 1
    assert check.rank_p2 == 2
    assert check.unlucky_prime
    assert not check.agree


def test_rank_crosscheck_reports_vanishing_denominator() -> None:
    m = from_dense(QQ, [[QQ(1, 32003), 0], [0, 1]])
    check = rank_crosscheck(m)
    assert check.rank_q == 2
    assert check.rank_p == -1
    assert check.rank_p2 == 2


def test_budget_caps_nonzeros() -> None:
    m = identity(5, QQ)
    with pytest.raises(ResourceLimitError) as excinfo:
        rank(m, budget=Budget.from_limits(max_nonzeros=3))
    assert excinfo.value.code == "ERR_RESOURCE_LIMIT"


def test_cancelled_budget_stops_elimination() -> None:
    budget = Budget.unlimited()
    budget.cancel()
    with pytest.raises(ResourceLimitError):
        rank(identity(2, QQ), budget=budget)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rank_over_q_matches_large_prime(dense: List[List[int]]) -> None:
    over_q = from_dense(QQ, dense)
    over_p = from_dense(GF(65521), dense)
    assert rank(over_q) == rank(over_p)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_kernel_vectors_are_annihilated(dense: List[List[int]]) -> None:
    m = from_dense(QQ, dense)
    r, kernel = sparse_kernel(m)
    assert r + len(kernel) == m.shape[1]
    for vec in kernel:
        assert apply(m, vec) == {}
