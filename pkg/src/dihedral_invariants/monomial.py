"""Exponent vectors in x0, x1, x2 and the diagonal cyclic invariance test."""
from __future__ import annotations

from math import comb
from typing import NamedTuple


class ExponentVector(NamedTuple):
    a0: int
    a1: int
    a2: int

    @property
    def degree(self) -> int:
        return self.a0 + self.a1 + self.a2

    def __mul__(self, other):  # monomial product
        return ExponentVector(self.a0 + other[0], self.a1 + other[1], self.a2 + other[2])

    def divides(self, other) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def to_latex(self) -> str:
        return monomial_latex(self)


def enumerate_degree(n: int) -> list[ExponentVector]:
    """All C(n+2, 2) exponent triples of degree n, descending in (a0, a1)."""
    if n < 0:
        return []
    return [ExponentVector(a0, a1, n - a0 - a1)
            for a0 in range(n, -1, -1)
            for a1 in range(n - a0, -1, -1)]


def num_monomials(n: int) -> int:
    return comb(n + 2, 2) if n >= 0 else 0


def is_gamma_invariant(m, d: int) -> bool:
    # a1 + (d-1) a2 = 0 mod d, i.e. a1 = a2 mod d
    return (m[1] + (d - 1) * m[2]) % d == 0


def sigma_mirror(m) -> ExponentVector:
    return ExponentVector(m[0], m[2], m[1])


def monomial_latex(m, names=("x_0", "x_1", "x_2")) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}" if e > 9 else f"{name}^{e}")
    return "".join(parts) if parts else "1"


def monomial_text(m, names=("x0", "x1", "x2")) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
