"""Togliatti certificate for the ideal generated by the fundamental invariants.

Three ingredients: the count bound mu <= 2d + 1, rank deficiency of
multiplication by a linear form from degree 2d-1 to degree 2d of R/I, and an
explicit kernel element F = prod_{g != Id} g(L) with L*F invariant.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactmath import CycloElement, ExactMatrix, in_span, rank, row_reduce
from .group import IDENTITY, GroupParams, act_on_polynomial, check_d, elements, valid_a_values
from .hilbert import ConsistencyError
from .invariants import fundamental_invariants, mu
from .monomial import ExponentVector, enumerate_degree

VARIABLES = (ExponentVector(1, 0, 0), ExponentVector(0, 1, 0), ExponentVector(0, 0, 1))


@dataclass
class WlpReport:
    d: int
    mu: int
    bound_ok: bool
    source_dim: int
    target_dim: int
    observed_rank: int
    witness_verified: bool
    trials: int
    seed: int
    forms: list

    @property
    def rank_deficient(self) -> bool:
        return self.observed_rank < min(self.source_dim, self.target_dim)

    @property
    def certified(self) -> bool:
        return self.bound_ok and self.rank_deficient and self.witness_verified

    def to_json(self) -> dict:
        out = asdict(self)
        out["forms"] = [[int(c) for c in L] for L in self.forms]
        out["certified"] = self.certified
        return out


def mu_bound_check(d: int) -> bool:
    check_d(d)
    m = mu(d)
    if m != len(fundamental_invariants(d)):
        raise ConsistencyError(f"mu formula {m} disagrees with enumeration for d={d}")
    return m <= 2 * d + 1


@lru_cache(maxsize=None)
def quotient_projection(d: int):
    """Coordinates of R_2d / span(B_2d) on a monomial complement.

    Returns (complement, proj) where proj maps every degree-2d monomial to a
    dict {complement index: coefficient}. Generators are reduced against the
    latest possible columns so the complement keeps the earliest monomials.
    """
    target = enumerate_degree(2 * d)
    n = len(target)
    rev = {m: n - 1 - i for i, m in enumerate(target)}
    rows = []
    for inv in fundamental_invariants(d):
        row = [0] * n
        for m, c in inv.polynomial().items():
            row[rev[m]] = c
        rows.append(row)
    reduced, pivots = row_reduce(ExactMatrix.from_rows(rows), full=True)
    pivot_set = set(pivots)
    complement = [target[n - 1 - j] for j in range(n - 1, -1, -1) if j not in pivot_set]
    cindex = {m: i for i, m in enumerate(complement)}
    proj = {}
    for m in complement:
        proj[m] = {cindex[m]: Fraction(1)}
    for i, pc in enumerate(pivots):
        m = target[n - 1 - pc]
        coords = {}
        for j, c in enumerate(reduced[i]):
            if c and j not in pivot_set:
                coords[cindex[target[n - 1 - j]]] = -Fraction(c)
        proj[m] = coords
    return complement, proj


def multiplication_matrix(d: int, L) -> ExactMatrix:
    """Matrix of x L from R_{2d-1} to (R/I)_{2d}: target rows, source columns."""
    check_d(d)
    L = [Fraction(c) for c in L]
    if not any(L):
        raise ValueError("linear form must be nonzero")
    source = enumerate_degree(2 * d - 1)
    complement, proj = quotient_projection(d)
    entries = [0] * (len(complement) * len(source))
    ncols = len(source)
    for j, s in enumerate(source):
        for coef, v in zip(L, VARIABLES):
            if not coef:
                continue
            for i, c in proj[s * v].items():
                entries[i * ncols + j] += coef * c
    return ExactMatrix(len(complement), ncols, entries)


def linear_form(L, order: int) -> dict:
    return {v: CycloElement(order, [c]) for c, v in zip(L, VARIABLES) if c}


def cyclo_poly_mul(f: dict, g: dict) -> dict:
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = m1 * m2
            prod = c1 * c2
            out[m] = out[m] + prod if m in out else prod
    return {m: c for m, c in out.items() if not c.is_zero()}


def witness_polynomial(d: int, a: int, L) -> dict:
    """F = product of g(L) over the non-identity group elements, over Q(zeta_2d)."""
    p = GroupParams(d, a)
    order = 2 * d
    lf = linear_form([Fraction(c) for c in L], order)
    F = {ExponentVector(0, 0, 0): CycloElement.one(order)}
    for g in elements(p):
        if g == IDENTITY:
            continue
        F = cyclo_poly_mul(F, act_on_polynomial(g, lf, p, order))
    return F


def witness_verify(d: int, a: int, L) -> bool:
    """F is nonzero and L*F lies in the Q(zeta_2d)-span of B_2d."""
    L = [Fraction(c) for c in L]
    if not any(L):
        raise ValueError("linear form must be nonzero")
    F = witness_polynomial(d, a, L)
    if not F:
        return False
    LF = cyclo_poly_mul(F, linear_form(L, 2 * d))
    target = enumerate_degree(2 * d)
    columns = [[inv.polynomial().get(m, 0) for m in target] for inv in fundamental_invariants(d)]
    zero = CycloElement.zero(2 * d)
    vec = [LF.get(m, zero) for m in target]
    return in_span(columns, vec)


def witness_vector(d: int, a: int, L) -> list[Fraction]:
    """Coefficients of F on the degree 2d-1 monomials; F is rational."""
    F = witness_polynomial(d, a, L)
    out = []
    for m in enumerate_degree(2 * d - 1):
        c = F.get(m)
        out.append(Fraction(0) if c is None else c.to_rational())
    return out


def random_form(rng: random.Random) -> tuple[int, int, int]:
    return tuple(rng.randint(1, 100) for _ in range(3))


def wlp_failure_check(d: int, seed: int = 0, trials: int = 5, a: int | None = None) -> WlpReport:
    check_d(d)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if a is None:
        a = valid_a_values(d)[0]
    m = mu(d)
    bound_ok = mu_bound_check(d)
    source_dim = comb(2 * d + 1, 2)
    target_dim = comb(2 * d + 2, 2) - m
    rng = random.Random(seed)
    forms = [random_form(rng) for _ in range(trials)]
    observed = 0
    witness_ok = True
    for L in forms:
        observed = max(observed, rank(multiplication_matrix(d, L)))
        witness_ok = witness_ok and witness_verify(d, a, L)
    return WlpReport(d=d, mu=m, bound_ok=bound_ok, source_dim=source_dim,
                     target_dim=target_dim, observed_rank=observed,
                     witness_verified=witness_ok, trials=trials, seed=seed, forms=forms)
