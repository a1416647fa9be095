"""Graded bases of the invariant ring, the y-variable description and factorization.

Degree t of the extended invariant ring is the degree-2dt slice of
k[x0, x1, x2]^{D_2d} = k[y0, y1, y2] with y0 = x0, y1 = x1 x2, y2 = x1^d + x2^d.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .group import ParameterError, check_d
from .monomial import ExponentVector, enumerate_degree, is_gamma_invariant, monomial_latex, \
    monomial_text, sigma_mirror

MONOMIAL = "monomial"
BINOMIAL = "binomial"


@dataclass(frozen=True, order=True)
class SymInvariant:
    kind: str
    lead: ExponentVector

    def __post_init__(self):
        lead = ExponentVector(*self.lead)
        object.__setattr__(self, "lead", lead)
        if self.kind == MONOMIAL and lead.a1 != lead.a2:
            raise ValueError(f"monomial invariant needs a1 = a2, got {tuple(lead)}")
        if self.kind == BINOMIAL and lead.a1 <= lead.a2:
            raise ValueError(f"binomial representative needs a1 > a2, got {tuple(lead)}")
        if self.kind not in (MONOMIAL, BINOMIAL):
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def mirror(self) -> ExponentVector | None:
        return sigma_mirror(self.lead) if self.kind == BINOMIAL else None

    @property
    def degree(self) -> int:
        return self.lead.degree

    def polynomial(self) -> dict:
        if self.kind == MONOMIAL:
            return {self.lead: 1}
        return {self.lead: 1, self.mirror: 1}

    def to_json(self) -> dict:
        out = {"kind": self.kind, "lead": list(self.lead)}
        if self.kind == BINOMIAL:
            out["mirror"] = list(self.mirror)
        return out

    @classmethod
    def from_json(cls, obj) -> "SymInvariant":
        inv = cls(obj["kind"], ExponentVector(*obj["lead"]))
        if "mirror" in obj and list(inv.mirror or ()) != list(obj["mirror"]):
            raise ValueError("mirror does not match lead")
        return inv

    def to_text(self) -> str:
        if self.kind == MONOMIAL:
            return monomial_text(self.lead)
        return f"{monomial_text(self.lead)} + {monomial_text(self.mirror)}"

    def to_latex(self) -> str:
        if self.kind == MONOMIAL:
            return monomial_latex(self.lead)
        return f"{monomial_latex(self.lead)} + {monomial_latex(self.mirror)}"


def sym_invariant(m) -> SymInvariant:
    """The basis element whose support contains the monomial m."""
    m = ExponentVector(*m)
    if m.a1 == m.a2:
        return SymInvariant(MONOMIAL, m)
    return SymInvariant(BINOMIAL, m if m.a1 > m.a2 else sigma_mirror(m))


def _check_dt(d, t):
    check_d(d)
    if not isinstance(t, int) or t < 1:
        raise ParameterError("t must be ≥ 1")


def graded_basis(d: int, t: int) -> list[SymInvariant]:
    """Basis of the invariants of degree 2dt: symmetric monomials and sigma-orbit binomials."""
    _check_dt(d, t)
    return [sym_invariant(m) for m in enumerate_degree(2 * d * t)
            if m.a1 >= m.a2 and is_gamma_invariant(m, d)]


def fundamental_invariants(d: int) -> list[SymInvariant]:
    return graded_basis(d, 1)


def mu(d: int) -> int:
    """Number of fundamental invariants, d + 2 + (d + gcd(2, d))/2."""
    return d + 2 + (d + gcd(2, d)) // 2


class YMonomial(NamedTuple):
    b0: int
    b1: int
    b2: int

    def weighted_degree(self, d: int) -> int:
        return self.b0 + 2 * self.b1 + d * self.b2

    def divides(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return YMonomial(*(a - b for a, b in zip(self, other)))

    def __mul__(self, other):
        return YMonomial(*(a + b for a, b in zip(self, other)))

    def to_text(self) -> str:
        return monomial_text(self, ("y0", "y1", "y2"))

    def to_latex(self) -> str:
        return monomial_latex(self, ("y_0", "y_1", "y_2"))


def y_basis(d: int, t: int) -> list[YMonomial]:
    """All y0^b0 y1^b1 y2^b2 with b0 + 2 b1 + d b2 = 2dt; b2 ascending, then b1 ascending."""
    _check_dt(d, t)
    n = 2 * d * t
    out = []
    for b2 in range(n // d + 1):
        rest = n - d * b2
        for b1 in range(rest // 2 + 1):
            out.append(YMonomial(rest - 2 * b1, b1, b2))
    return out


# -- polynomials in x as sparse dicts {ExponentVector: int} --

def poly_mul(f: dict, g: dict) -> dict:
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = ExponentVector(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def poly_add(f: dict, g: dict, scale=1) -> dict:
    out = dict(f)
    for m, c in g.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c != 0}


def poly_pow(f: dict, k: int) -> dict:
    out = {ExponentVector(0, 0, 0): 1}
    for _ in range(k):
        out = poly_mul(out, f)
    return out


def y_variable_images(d: int):
    """x-polynomials of y0, y1, y2."""
    return ({ExponentVector(1, 0, 0): 1},
            {ExponentVector(0, 1, 1): 1},
            {ExponentVector(0, d, 0): 1, ExponentVector(0, 0, d): 1})


def y_to_x(y, d: int) -> dict:
    """Expand a y-monomial as a polynomial in x0, x1, x2."""
    y0, y1, y2 = y_variable_images(d)
    b0, b1, b2 = y
    head = {ExponentVector(b0, b1, b1): 1}
    return poly_mul(head, poly_pow(y2, b2))


def rho_map(y, d: int) -> dict:
    """Change of basis from A_2d to the span of B_2d, as {SymInvariant: coefficient}."""
    y = YMonomial(*y)
    if y.weighted_degree(d) != 2 * d:
        raise ValueError(f"{y} does not have weighted degree 2d = {2 * d}")
    assert y.b2 <= 2
    return to_sym_basis(y_to_x(y, d))


def to_sym_basis(f: dict) -> dict:
    """Write a sigma-symmetric polynomial in the monomial/binomial basis."""
    out = {}
    for m, c in f.items():
        m = ExponentVector(*m)
        if f.get(sigma_mirror(m), 0) != c:
            raise ValueError(f"polynomial is not sigma-symmetric at {tuple(m)}")
        if m.a1 >= m.a2:
            out[sym_invariant(m)] = c
    return out


def from_sym_basis(combo: dict) -> dict:
    f = {}
    for inv, c in combo.items():
        f = poly_add(f, inv.polynomial(), c)
    return f


def factor_invariant(y, d: int) -> YMonomial:
    """A divisor of y in A_2d, for y of weighted degree 2dt with t >= 2.

    Cases tried in order: y0^2d, y1^d, y2^2, y0^d y2.
    """
    check_d(d)
    y = YMonomial(*y)
    deg = y.weighted_degree(d)
    if deg % (2 * d) or deg // (2 * d) < 2:
        raise ParameterError(f"{y} is not in A_2dt with t >= 2")
    b0, b1, b2 = y
    if b0 >= 2 * d:
        return YMonomial(2 * d, 0, 0)
    if b1 >= d:
        return YMonomial(0, d, 0)
    if b2 >= 2:
        return YMonomial(0, 0, 2)
    assert b2 == 1 and b0 >= d, y
    return YMonomial(d, 0, 1)


def factor_completely(y, d: int) -> list[YMonomial]:
    """Split y in A_2dt into t factors from A_2d."""
    y = YMonomial(*y)
    factors = []
    while y.weighted_degree(d) > 2 * d:
        f = factor_invariant(y, d)
        factors.append(f)
        y = y / f
    factors.append(y)
    return factors
