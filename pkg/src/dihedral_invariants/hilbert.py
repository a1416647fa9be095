"""Hilbert function, polynomial and series of the extended invariant ring.

``hf_closed`` is the closed formula. Two independent routes check it: the
average of traces over the group (computed in Q(zeta_2d)) and a direct count
of invariant monomials.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .exactmath import CycloElement, IntPolynomial
from .group import GroupParams, character_exponent, check_d, elements
from .monomial import enumerate_degree, is_gamma_invariant


class ConsistencyError(AssertionError):
    """An internal cross-check failed; indicates a bug, not bad input."""


def hf_closed(d: int, t: int) -> int:
    check_d(d)
    if t < 0:
        return 0
    num = 2 * d * t * t + (d + gcd(d, 2) + 2) * t + 2
    return num // 2


def element_trace(g, p: GroupParams, t: int) -> CycloElement:
    """Trace of g on the monomial basis of R_2dt, in Q(zeta_2d).

    Only monomials fixed by g up to scalar contribute: every monomial for a
    rotation, the a1 = a2 ones for a reflection. Contributions are grouped by
    their power of e before summing.
    """
    d = p.d
    counts = [0] * d
    for m in enumerate_degree(2 * d * t):
        if g.reflected and m[1] != m[2]:
            continue
        k, _ = character_exponent(g, m, p)
        counts[k] += 1
    n = 2 * d
    return sum((CycloElement.root(n, 2 * k) * c for k, c in enumerate(counts) if c),
               CycloElement.zero(n))


def hf_trace_oracle(d: int, a: int, t: int) -> int:
    p = GroupParams(d, a)
    total = CycloElement.zero(2 * d)
    for g in elements(p):
        total = total + element_trace(g, p, t)
    avg = total / (2 * d)
    if not avg.is_rational():
        raise ConsistencyError(f"trace average is irrational: {avg}")
    val = avg.to_rational()
    if val.denominator != 1 or val < 0:
        raise ConsistencyError(f"trace average is not a nonnegative integer: {val}")
    return int(val)


def reflection_trace_sum(d: int, a: int, t: int) -> int:
    p = GroupParams(d, a)
    total = CycloElement.zero(2 * d)
    for g in elements(p):
        if g.reflected:
            total = total + element_trace(g, p, t)
    return int(total.to_rational())


def gamma_invariant_count(d: int, t: int) -> int:
    return sum(1 for m in enumerate_degree(2 * d * t) if is_gamma_invariant(m, d))


def hf_count_oracle(d: int, t: int) -> int:
    check_d(d)
    mu_c = gamma_invariant_count(d, t)
    symmetric = t * d + 1
    if (mu_c - symmetric) % 2:
        raise ConsistencyError(f"odd number of non-symmetric invariant monomials: {mu_c - symmetric}")
    return symmetric + (mu_c - symmetric) // 2


@dataclass(frozen=True)
class SurfaceInvariants:
    degree: int
    codim: int
    cm_type: int
    h: int
    regularity: int
    gorenstein: bool

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class HilbertData:
    d: int
    hf: Callable[[int], int]
    hp_coeffs: tuple  # ascending, Fractions
    hs_numerator: IntPolynomial

    def hp(self, t) -> Fraction:
        return sum((c * Fraction(t) ** k for k, c in enumerate(self.hp_coeffs)), Fraction(0))

    def series_coefficients(self, n: int) -> list[int]:
        """First n Taylor coefficients of hs_numerator / (1 - z)^3."""
        num = list(self.hs_numerator.coeffs)
        out = []
        for t in range(n):
            # [z^t] 1/(1-z)^3 = C(t+2, 2)
            out.append(sum(c * (t - k + 2) * (t - k + 1) // 2
                           for k, c in enumerate(num) if k <= t))
        return out

    def to_json(self, t_values) -> dict:
        return {"d": self.d,
                "hf": [self.hf(t) for t in t_values],
                "hs_numerator": list(self.hs_numerator.coeffs),
                "surface": surface_invariants(self.d).to_json()}


def hilbert_series(d: int) -> HilbertData:
    check_d(d)
    g = gcd(d, 2)
    numerator = IntPolynomial([1, (3 * d + g - 2) // 2, (d - g) // 2])
    hp = (Fraction(1), Fraction(d + g + 2, 2), Fraction(d))
    return HilbertData(d, lambda t: hf_closed(d, t), hp, numerator)


def surface_invariants(d: int) -> SurfaceInvariants:
    check_d(d)
    g = gcd(d, 2)
    degree = 2 * d
    codim = (3 * d + g - 2) // 2
    cm_type = (d - g) // 2
    return SurfaceInvariants(degree=degree, codim=codim, cm_type=cm_type,
                             h=degree - codim - 2, regularity=3,
                             gorenstein=d in (3, 4))
