"""Graded pieces of A = S/I: standard monomials, normal forms, Hilbert data."""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul

from gorfro.errors import GorfroError, InternalCheckError
from gorfro.exactalg.budget import Budget
from gorfro.exactalg.field import FieldElement, check_same
from gorfro.exactalg.polynomial import Monomial, Polynomial, times_variable
from gorfro.groebner.buchberger import GroebnerBasis

logger = logging.getLogger("gorfro.groebner")

# normal form of a monomial, as standard monomial -> coefficient
MonomialForm = Dict[Monomial, FieldElement]


class QMaxTooSmallError(GorfroError):
    """Raised when a degree range is too short to certify a Hilbert numerator."""


class QuotientAlgebra:
    """Standard-monomial model of A = S/I with memoized normal forms.

    The caches only ever grow and every entry is a pure function of the
    basis; they are filled under one reentrant lock so an algebra can be
    shared between worker threads.
    """

    def __init__(self, gb: GroebnerBasis) -> None:
        self.gb = gb
        self.field = gb.field
        self.nvars = gb.nvars
        self._leads = gb.lead_monomials
        self._tails: List[List[Tuple[Monomial, FieldElement]]] = []
        for g, lead in zip(gb.generators, self._leads):
            self._tails.append([(m, c) for m, c in g.iterterms() if m != lead])
        self._standard: Dict[int, Tuple[Monomial, ...]] = {}
        self._index: Dict[int, Dict[Monomial, int]] = {}
        self._forms: Dict[Monomial, MonomialForm] = {}
        self._lock = threading.RLock()

    def is_standard(self, mono: Monomial) -> bool:
        return not any(monomial_divides(lead, mono) for lead in self._leads)

    def standard_monomials(self, q: int) -> Tuple[Monomial, ...]:
        """Degree-``q`` monomials outside the lead ideal, decreasing in the order."""

        if q < 0:
            return ()
        with self._lock:
            cached = self._standard.get(q)
            if cached is not None:
                return cached
            if q == 0:
                one = (0,) * self.nvars
                found = [one] if self.is_standard(one) else []
            else:
                # standard monomials are closed under division, so extend degree q-1
                found_set = set()
                for mono in self.standard_monomials(q - 1):
                    for i in range(self.nvars):
                        candidate = times_variable(mono, i)
                        if candidate not in found_set and self.is_standard(candidate):
                            found_set.add(candidate)
                found = list(found_set)
            result = tuple(self.gb.order.sorted_desc(found))
            self._index[q] = {m: i for i, m in enumerate(result)}
            self._standard[q] = result
            return result

    def dimension(self, q: int) -> int:
        return len(self.standard_monomials(q))

    def index(self, q: int) -> Mapping[Monomial, int]:
        self.standard_monomials(q)
        with self._lock:
            return self._index.get(q, {})

    def monomial_form(self, mono: Monomial) -> MonomialForm:
        """Normal form of a single monomial, memoized across calls."""

        mono = tuple(mono)
        with self._lock:
            return self._monomial_form(mono)

    def _monomial_form(self, mono: Monomial) -> MonomialForm:
        forms = self._forms
        if mono in forms:
            return forms[mono]
        zero = self.field.zero
        stack = [mono]
        while stack:
            current = stack[-1]
            if current in forms:
                stack.pop()
                continue
            divisor = None
            for idx, lead in enumerate(self._leads):
                if monomial_divides(lead, current):
                    divisor = idx
                    break
            if divisor is None:
                forms[current] = {current: self.field.one}
                stack.pop()
                continue
            shift = monomial_div(current, self._leads[divisor])
            shifted = [(monomial_mul(m, shift), c) for m, c in self._tails[divisor]]
            missing = [m for m, _ in shifted if m not in forms]
            if missing:
                stack.extend(missing)
                continue
            # current = -sum(c * shifted) modulo I, since generators are monic
            form: MonomialForm = {}
            for m, c in shifted:
                for std, value in forms[m].items():
                    updated = form.get(std, zero) - c * value
                    if updated:
                        form[std] = updated
                    else:
                        form.pop(std, None)
            forms[current] = form
            stack.pop()
        return forms[mono]

    def normal_form(self, f: Polynomial) -> Polynomial:
        check_same(self.field, f.ring.domain)
        zero = self.field.zero
        out: Dict[Monomial, FieldElement] = {}
        for mono, coeff in f.iterterms():
            for std, value in self.monomial_form(mono).items():
                updated = out.get(std, zero) + coeff * value
                if updated:
                    out[std] = updated
                else:
                    out.pop(std, None)
        return self.gb.ring.from_dict(out)

    def multiply(self, m1: Monomial, m2: Monomial) -> MonomialForm:
        """Normal form of the product of two monomials."""

        return self.monomial_form(monomial_mul(m1, m2))

    def hilbert_function(self, q_max: int) -> List[int]:
        return [self.dimension(q) for q in range(q_max + 1)]


def standard_monomials(gb: GroebnerBasis, q: int) -> Tuple[Monomial, ...]:
    return QuotientAlgebra(gb).standard_monomials(q)


@dataclass(frozen=True)
class HilbertNumerator:
    """N(t) with HilbertSeries(A) = N(t) / (1 - t)^n."""

    coefficients: Tuple[int, ...]
    nvars: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, q: int) -> int:
        return self.coefficients[q] if 0 <= q < len(self.coefficients) else 0

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def series(self, q_max: int) -> List[int]:
        """Power-series coefficients of N(t)/(1-t)^n through degree ``q_max``."""

        out = []
        for q in range(q_max + 1):
            total = 0
            for k, c in enumerate(self.coefficients[: q + 1]):
                total += c * comb(q - k + self.nvars - 1, self.nvars - 1) if self.nvars else (c if k == q else 0)
            out.append(total)
        return out

    def is_palindromic(self) -> bool:
        """True when t^deg N(1/t) = +N(t) or -N(t)."""

        coeffs = list(self.coefficients)
        rev = coeffs[::-1]
        return rev == coeffs or rev == [-c for c in coeffs]

    def to_text(self) -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mag = abs(c)
            body = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            term = body if (mag == 1 and k) else (str(mag) if k == 0 else f"{mag}*{body}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def _times_one_minus_t_power(values: Sequence[int], power: int) -> List[int]:
    coeffs = list(values)
    for _ in range(power):
        coeffs = [coeffs[k] - (coeffs[k - 1] if k else 0) for k in range(len(coeffs))]
    return coeffs


def numerator_degree_bound(gb: GroebnerBasis) -> int:
    """deg lcm of all leading monomials bounds deg N(t) (Taylor complex of the lead ideal)."""

    leads = gb.lead_monomials
    if not leads:
        return 0
    lcm = leads[0]
    for lead in leads[1:]:
        lcm = monomial_lcm(lcm, lead)
    return sum(lcm)


def hilbert_numerator(
    gb: GroebnerBasis,
    q_max: Optional[int] = None,
    *,
    algebra: Optional[QuotientAlgebra] = None,
    budget: Optional[Budget] = None,
) -> HilbertNumerator:
    """Multiply the observed Hilbert function by (1-t)^n and certify the tail.

    With an explicit ``q_max`` the last ``n`` coefficients must vanish unless
    ``q_max`` reaches the lead-ideal bound, which certifies exactly. Without
    one, the range starts at max lead degree + n and grows by n until either
    test passes.
    """

    algebra = algebra or QuotientAlgebra(gb)
    budget = budget or Budget.unlimited()
    n = gb.nvars
    bound = numerator_degree_bound(gb)
    window = max(n, 1)
    if q_max is not None:
        return _numerator_on_range(algebra, q_max, bound, window, budget, strict=True)  # type: ignore[return-value]
    max_lead = max((sum(lead) for lead in gb.lead_monomials), default=0)
    q = max_lead + window
    while True:
        result = _numerator_on_range(algebra, q, bound, window, budget, strict=False)
        if result is not None:
            return result
        q += window


def _numerator_on_range(
    algebra: QuotientAlgebra,
    q_max: int,
    bound: int,
    window: int,
    budget: Budget,
    *,
    strict: bool,
) -> Optional[HilbertNumerator]:
    budget.check()
    n = algebra.nvars
    coeffs = _times_one_minus_t_power(algebra.hilbert_function(q_max), n)
    certified = q_max >= bound
    if not certified:
        tail = coeffs[max(0, q_max - window + 1):]
        if q_max + 1 < window or any(tail):
            if strict:
                raise QMaxTooSmallError(
                    "ERR_QMAX_TOO_SMALL",
                    f"Hilbert numerator has not stabilized by degree {q_max}",
                    pointer=f"q_max={q_max}",
                )
            return None
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    numerator = HilbertNumerator(tuple(coeffs), n)
    logger.debug("Hilbert numerator %s (range %d, certified=%s)", numerator.to_text(), q_max, certified)
    return numerator


def krull_dim(numerator: HilbertNumerator, nvars: Optional[int] = None) -> int:
    """n minus the multiplicity of t = 1 as a root of N(t)."""

    n = numerator.nvars if nvars is None else nvars
    if numerator.is_zero():
        raise GorfroError("ERR_NUMERATOR_ZERO", "The Hilbert numerator is identically zero (A = 0)")
    coeffs = list(numerator.coefficients)
    multiplicity = 0
    while sum(coeffs) == 0:
        # synthetic division by (1 - t): quotient q_k = sum_{j<=k} c_j
        quotient = []
        running = 0
        for c in coeffs[:-1]:
            running += c
            quotient.append(running)
        coeffs = quotient
        multiplicity += 1
    return n - multiplicity


def h_vector(numerator: HilbertNumerator, dim: int) -> Tuple[int, ...]:
    """N(t) / (1 - t)^(n - dim); the h-vector of A."""

    coeffs = list(numerator.coefficients)
    for _ in range(numerator.nvars - dim):
        quotient = []
        running = 0
        for c in coeffs[:-1]:
            running += c
            quotient.append(running)
        if running + coeffs[-1] != 0:
            raise InternalCheckError("ERR_NUMERATOR_DIVISION", "(1 - t) does not divide the Hilbert numerator")
        coeffs = quotient or [0]
    return tuple(coeffs)
