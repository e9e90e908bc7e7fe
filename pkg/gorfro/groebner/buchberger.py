"""Buchberger's algorithm with the normal selection strategy and pair criteria.

Polynomials are sympy ring elements; the pair bookkeeping works on their
exponent tuples.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.rings import PolyRing

from gorfro.errors import GorfroError, InputError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import Field, check_same
from gorfro.exactalg.polynomial import Monomial, Polynomial, is_homogeneous, to_text
from gorfro.groebner.order import MonomialOrder

logger = logging.getLogger("gorfro.groebner")

Pair = Tuple[int, int]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    ``generators`` are monic, live in ``ring`` (which carries ``order``) and
    are sorted by decreasing leading monomial; ``source`` keeps the ideal
    generators the basis was computed from.
    """

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    source: Tuple[Polynomial, ...]
    ring: PolyRing

    @property
    def field(self) -> Field:
        return self.ring.domain

    @property
    def nvars(self) -> int:
        return int(self.ring.ngens)

    @cached_property
    def lead_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.LM for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def is_zero_ideal(self) -> bool:
        return not self.generators


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials of one ring."""

    lcm = monomial_lcm(f.LM, g.LM)
    return f.mul_monom(monomial_div(lcm, f.LM)) - g.mul_monom(monomial_div(lcm, g.LM))


def reduce(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Full remainder of ``f`` on division by ``divisors`` (monic or not)."""

    nonzero = [g for g in divisors if g]
    return f.rem(nonzero) if nonzero else f


def _select(pairs: Set[Pair], lcms: Dict[Pair, Monomial], order: MonomialOrder) -> Pair:
    # normal strategy, ties broken on indices for determinism
    return min(pairs, key=lambda p: (sum(lcms[p]), order.key(lcms[p]), p[1], p[0]))


def _is_coprime(a: Monomial, b: Monomial) -> bool:
    return monomial_mul(a, b) == monomial_lcm(a, b)


def _update(
    leads: List[Monomial],
    pairs: Set[Pair],
    lcms: Dict[Pair, Monomial],
    new_lead: Monomial,
    order: MonomialOrder,
) -> None:
    """Add the pairs of a new basis element, pruning with Gebauer-Moeller."""

    new_index = len(leads)
    kept = set()
    for pair in pairs:
        lcm = lcms[pair]
        i, j = pair
        if (
            not monomial_divides(new_lead, lcm)
            or lcm == monomial_lcm(leads[i], new_lead)
            or lcm == monomial_lcm(leads[j], new_lead)
        ):
            kept.add(pair)
        else:
            del lcms[pair]
    pairs.intersection_update(kept)

    by_lcm: Dict[Monomial, List[int]] = {}
    for i, lead in enumerate(leads):
        by_lcm.setdefault(monomial_lcm(lead, new_lead), []).append(i)
    minimal: List[Monomial] = []
    for lcm in sorted(by_lcm, key=order.key):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        members = by_lcm[lcm]
        # product criterion: coprime leading monomials need no pair
        if any(_is_coprime(leads[i], new_lead) for i in members):
            continue
        pair = (min(members), new_index)
        pairs.add(pair)
        lcms[pair] = lcm
    leads.append(new_lead)


def _minimalize(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    result: List[Polynomial] = []
    for f in sorted(basis, key=lambda h: order.key(h.LM)):
        if all(not monomial_divides(g.LM, f.LM) for g in result):
            result.append(f)
    return result


def _interreduce(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    reduced = []
    for idx, g in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        reduced.append(reduce(g, others).monic())
    return sorted(reduced, key=lambda h: order.key(h.LM), reverse=True)


def buchberger(
    ideal_generators: Sequence[Polynomial],
    order: Optional[MonomialOrder] = None,
    *,
    nvars: Optional[int] = None,
    field: Optional[Field] = None,
    budget: Optional[Budget] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by homogeneous generators."""

    budget = budget or Budget.unlimited()
    if ideal_generators:
        nvars = int(ideal_generators[0].ring.ngens)
        field = ideal_generators[0].ring.domain
    if nvars is None or field is None:
        raise GorfroError("ERR_RING_MISMATCH", "An empty generator list needs nvars and field")
    order = order or MonomialOrder.grevlex(nvars)
    if order.nvars != nvars:
        raise GorfroError("ERR_RING_MISMATCH", f"Order on {order.nvars} variables used in a ring with {nvars}")
    ring = order.ring(field)

    source = tuple(ideal_generators)
    for idx, gen in enumerate(source):
        if gen.ring.ngens != nvars:
            raise GorfroError("ERR_RING_MISMATCH", "Generators live in different rings", pointer=f"/generators/{idx}")
        check_same(field, gen.ring.domain)
        if not is_homogeneous(gen):
            raise InputError(
                "ERR_IDEAL_INHOMOGENEOUS",
                f"Generator '{to_text(gen)}' is not homogeneous",
                pointer=f"/generators/{idx}",
            )

    basis: List[Polynomial] = []
    leads: List[Monomial] = []
    pairs: Set[Pair] = set()
    lcms: Dict[Pair, Monomial] = {}
    for gen in source:
        if not gen:
            logger.debug("Dropping zero generator")
            continue
        monic = gen.set_ring(ring).monic()
        _update(leads, pairs, lcms, monic.LM, order)
        basis.append(monic)

    reductions = 0
    while pairs:
        budget.check()
        pair = _select(pairs, lcms, order)
        pairs.remove(pair)
        del lcms[pair]
        r = reduce(s_polynomial(basis[pair[0]], basis[pair[1]]), basis)
        reductions += 1
        if r:
            monic = r.monic()
            _update(leads, pairs, lcms, monic.LM, order)
            basis.append(monic)

    generators = tuple(_interreduce(_minimalize(basis, order), order)) if basis else ()
    logger.debug(
        "Groebner basis with %d elements after %d S-pair reductions", len(generators), reductions
    )
    return GroebnerBasis(generators=generators, order=order, source=source, ring=ring)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``f`` modulo the ideal of ``gb``."""

    if f.ring.ngens != gb.nvars:
        raise GorfroError("ERR_RING_MISMATCH", f"Polynomial in {f.ring.ngens} variables, basis in {gb.nvars}")
    check_same(gb.field, f.ring.domain)
    return reduce(f.set_ring(gb.ring), gb.generators)


def is_groebner(gb: GroebnerBasis) -> bool:
    """Check that every S-polynomial of the basis reduces to zero."""

    gens = gb.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if reduce(s_polynomial(gens[i], gens[j]), gens):
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    """No monomial of a generator lies in the lead ideal of the others."""

    leads = gb.lead_monomials
    for idx, g in enumerate(gb.generators):
        for mono in g.itermonoms():
            if any(monomial_divides(lead, mono) for k, lead in enumerate(leads) if k != idx):
                return False
    return True
