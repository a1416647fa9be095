"""The dihedral group D_2d acting on k[x0, x1, x2].

The rotation generator acts as diag(1, e^a, e^(d-a)) with e a primitive d-th
root of unity, the reflection swaps x1 and x2. The scalar factor eps*Id of the
cyclic extension acts trivially on degrees divisible by 2d and is never built;
callers restrict to those degrees instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactmath import CycloElement
from .monomial import ExponentVector


class ParameterError(ValueError):
    """Invalid d, a or t."""


def check_d(d: int) -> None:
    if not isinstance(d, int) or d < 3:
        raise ParameterError("d must be ≥ 3")


@dataclass(frozen=True)
class GroupParams:
    d: int
    a: int = 1

    def __post_init__(self):
        check_d(self.d)
        if not (0 < self.a and 2 * self.a < self.d and gcd(self.d, self.a) == 1):
            raise ParameterError(
                f"a must satisfy 0 < a < d/2 and gcd(d, a) = 1 (got d={self.d}, a={self.a})")


def valid_a_values(d: int) -> list[int]:
    check_d(d)
    return [a for a in range(1, (d + 1) // 2) if 2 * a < d and gcd(d, a) == 1]


@dataclass(frozen=True)
class GroupElement:
    """M^l (reflected=False) or M^l * sigma (reflected=True)."""

    l: int
    reflected: bool = False

    def __str__(self):
        rot = "Id" if self.l == 0 else f"M^{self.l}"
        return f"{rot}*sigma" if self.reflected else rot


IDENTITY = GroupElement(0, False)


def elements(p: GroupParams) -> list[GroupElement]:
    """Rotations l = 0..d-1, then reflections l = 0..d-1."""
    return ([GroupElement(l, False) for l in range(p.d)]
            + [GroupElement(l, True) for l in range(p.d)])


def compose(g: GroupElement, h: GroupElement, p: GroupParams) -> GroupElement:
    """Group product g*h, using sigma M sigma = M^-1."""
    sign = -1 if g.reflected else 1
    return GroupElement((g.l + sign * h.l) % p.d, g.reflected != h.reflected)


def inverse(g: GroupElement, p: GroupParams) -> GroupElement:
    if g.reflected:
        return g  # reflections are involutions
    return GroupElement((-g.l) % p.d, False)


def character_exponent(g: GroupElement, m, p: GroupParams):
    """Power k of e and image monomial with g(x^m) = e^k x^image."""
    d, a = p.d, p.a
    if g.reflected:
        m = ExponentVector(m[0], m[2], m[1])
    else:
        m = ExponentVector(*m)
    return (g.l * (a * m[1] + (d - a) * m[2])) % d, m


def act_on_monomial(g: GroupElement, m, p: GroupParams):
    """(scalar in Q(zeta_d), image exponent triple)."""
    k, image = character_exponent(g, m, p)
    return CycloElement.root(p.d, k), image


def act_on_polynomial(g: GroupElement, f: dict, p: GroupParams, order: int | None = None) -> dict:
    """Apply g to a polynomial {exponent triple: coefficient}.

    Coefficients live in Q(zeta_order) with d | order; plain rationals are
    promoted to Q(zeta_2d).
    """
    if order is None:
        order = next((c.order for c in f.values() if isinstance(c, CycloElement)), 2 * p.d)
    if order % p.d:
        raise ValueError(f"coefficient field Q(zeta_{order}) does not contain the d-th roots of unity")
    step = order // p.d
    out = {}
    for m, c in f.items():
        if isinstance(c, CycloElement):
            if c.order != order:
                raise ValueError(f"coefficient order mismatch: {c.order} vs {order}")
        else:
            c = CycloElement(order, [c])
        k, image = character_exponent(g, m, p)
        val = c * CycloElement.root(order, step * k)
        if image in out:
            val = out[image] + val
        out[image] = val
    return {m: c for m, c in out.items() if not c.is_zero()}


def matrix(g: GroupElement, p: GroupParams):
    """3x3 matrix of g over Q(zeta_d), acting on the column (x0, x1, x2)."""
    d, a = p.d, p.a
    z = CycloElement.zero(d)
    one = CycloElement.one(d)
    diag = [one, CycloElement.root(d, g.l * a), CycloElement.root(d, g.l * (d - a))]
    rot = [[diag[i] if i == j else z for j in range(3)] for i in range(3)]
    if not g.reflected:
        return rot
    swap = [[one, z, z], [z, z, one], [z, one, z]]
    return matmul(rot, swap)


def matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum((A[i][t] * B[t][j] for t in range(k)), A[0][0] * 0) for j in range(m)]
            for i in range(n)]
