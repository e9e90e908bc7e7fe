"""Sparse multivariate polynomials over an exact field, as sympy ring elements.

Every ring has the variables ``x0 .. x{n-1}``; rings are cached by sympy, so
two polynomials built for the same (n, field, order) share one ring object.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_mul
from sympy.polys.orderings import MonomialOrder as SympyOrder
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from gorfro.errors import GorfroError
from gorfro.exactalg.field import Field, FieldElement, check_same, convert

Polynomial = PolyElement
Monomial = Tuple[int, ...]


def polynomial_ring(nvars: int, field: Field, order: SympyOrder = grevlex) -> PolyRing:
    if nvars < 1:
        raise GorfroError("ERR_RING_MISMATCH", f"A polynomial ring needs at least one variable, got {nvars}")
    return PolyRing([f"x{i}" for i in range(nvars)], field, order)


def variables(field: Field, nvars: int) -> Tuple[Polynomial, ...]:
    """Return the ring generators ``x0 .. x{n-1}``."""

    return tuple(polynomial_ring(nvars, field).gens)


def from_terms(terms: Mapping[Monomial, object], field: Field, nvars: int) -> Polynomial:
    """Polynomial from monomial -> integer (or field element) coefficients; zeros are dropped."""

    for mono in terms:
        if len(mono) != nvars:
            raise GorfroError(
                "ERR_RING_MISMATCH",
                f"Monomial {tuple(mono)} does not live in a ring with {nvars} variables",
            )
    return polynomial_ring(nvars, field).from_dict(dict(terms))


def monomial_polynomial(mono: Monomial, field: Field) -> Polynomial:
    return from_terms({tuple(mono): 1}, field, len(mono))


def unit_monomial(index: int, nvars: int) -> Monomial:
    return tuple(1 if i == index else 0 for i in range(nvars))


def times_variable(mono: Monomial, index: int) -> Monomial:
    return monomial_mul(mono, unit_monomial(index, len(mono)))


def degree(f: Polynomial) -> Optional[int]:
    """Homogeneous degree, or ``None`` for zero and inhomogeneous polynomials."""

    degrees = {sum(mono) for mono in f.itermonoms()}
    return degrees.pop() if len(degrees) == 1 else None


def is_homogeneous(f: Polynomial) -> bool:
    return not f or degree(f) is not None


def check_same_ring(f: Polynomial, g: Polynomial) -> None:
    check_same(f.ring.domain, g.ring.domain)
    if f.ring.ngens != g.ring.ngens:
        raise GorfroError(
            "ERR_RING_MISMATCH",
            f"Polynomials in {f.ring.ngens} and {g.ring.ngens} variables cannot be combined",
        )


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Product of two polynomials with every cancellation carried out."""

    check_same_ring(f, g)
    if f.ring != g.ring:
        g = g.set_ring(f.ring)
    return f * g


def change_field(f: Polynomial, field: Field) -> Polynomial:
    """Re-read the coefficients in another field, keeping variables and order."""

    source = f.ring.domain
    if field == source:
        return f
    ring = PolyRing(f.ring.symbols, field, f.ring.order)
    return ring.from_dict({mono: convert(coeff, source, field) for mono, coeff in f.iterterms()})


def substitute(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Evaluate at ``x_i -> images[i]`` (all images in one common ring)."""

    if len(images) != f.ring.ngens:
        raise GorfroError("ERR_RING_MISMATCH", f"Expected {f.ring.ngens} images, got {len(images)}")
    target = images[0].ring
    source = f.ring.domain
    result = target.zero
    for mono, coeff in f.iterterms():
        term = target.ground_new(convert(coeff, source, target.domain))
        for idx, exp in enumerate(mono):
            if exp:
                term = term * images[idx] ** exp
        result = result + term
    return result


def coefficient(f: Polynomial, mono: Monomial) -> FieldElement:
    return f.get(tuple(mono), f.ring.domain.zero)


def monomial_text(mono: Monomial, names: Optional[Sequence[str]] = None) -> str:
    factors = []
    for idx, exp in enumerate(mono):
        if not exp:
            continue
        name = names[idx] if names else f"x{idx}"
        factors.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(factors) if factors else "1"


def to_text(f: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    """``x0^2 - 2*x1`` in the ideal file syntax, terms in decreasing ring order."""

    if not f:
        return "0"
    domain = f.ring.domain
    parts = []
    for idx, (mono, coeff) in enumerate(f.terms()):
        value = domain.to_sympy(coeff)
        negative = bool(value < 0)
        magnitude = -value if negative else value
        body = monomial_text(mono, names)
        if not any(mono):
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if idx == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)
