"""Exact arithmetic: integer polynomials, cyclotomic fields and dense linear algebra.

Rationals are :class:`fractions.Fraction`. Nothing in this package touches
floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

Rational = Fraction


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        self.coeffs = tuple(int(c) for c in _trim(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("z" if k == 1 else f"z^{k}")
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, _as_poly(other).coeffs
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                              for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        a, b = self.coeffs, _as_poly(other).coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def divmod_monic(self, divisor: "IntPolynomial"):
        """Quotient and remainder by a monic divisor; stays inside Z[x]."""
        if not divisor.coeffs or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) <= dd:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                quot[k - dd] = c
                for j, dc in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= c * dc
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_monic(divisor)
        if r.coeffs:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q


def _as_poly(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPolynomial")


def divisors(n: int) -> list[int]:
    return [m for m in range(1, n + 1) if n % m == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_m for proper divisors m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = IntPolynomial.monomial(n) - 1
    for m in divisors(n)[:-1]:
        out = out.exact_div(cyclotomic_polynomial(m))
    return out


# -- polynomials over Q as lists of Fractions (ascending), used for inversion --

def _qtrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _qdivmod(a, b):
    a = _qtrim(a)
    b = _qtrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bc in enumerate(b):
            a[shift + j] -= c * bc
        a = _qtrim(a)
    return q, a


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qsub(a, b):
    n = max(len(a), len(b))
    return _qtrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def _power_table(n: int):
    """x^k mod Phi_n for k < max(2*phi(n) - 1, n), as integer coefficient tuples."""
    phi = cyclotomic_polynomial(n)
    deg = phi.degree
    table = []
    for k in range(max(2 * deg - 1, n)):
        _, r = IntPolynomial.monomial(k).divmod_monic(phi)
        row = list(r.coeffs) + [0] * (deg - len(r.coeffs))
        table.append(tuple(row))
    return table


class CycloElement:
    """Element of Q(zeta_n), stored as coefficients of a residue mod Phi_n."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence = ()):
        self.order = order
        deg = cyclotomic_polynomial(order).degree
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            coeffs = _reduce(order, coeffs)
        self.coeffs = tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))

    @classmethod
    def zero(cls, n: int) -> "CycloElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CycloElement":
        return cls(n, [1])

    @classmethod
    def root(cls, n: int, k: int = 1) -> "CycloElement":
        """zeta_n ** k for any integer k."""
        k %= n
        return cls(n, [0] * k + [1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _lift(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.order, [other])
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloElement):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycloElement({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.order}^{k}")
        return " + ".join(terms) if terms else "0"

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _raw(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return _raw(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _raw(self.order, [a * other for a in self.coeffs])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return cyclo_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return _raw(self.order, [a / other for a in self.coeffs])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return cyclo_mul(self, cyclo_inv(other))

    def __rtruediv__(self, other):
        return cyclo_inv(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return cyclo_inv(self) ** (-k)
        out = CycloElement.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


def _raw(order, coeffs):
    el = CycloElement.__new__(CycloElement)
    el.order = order
    el.coeffs = tuple(coeffs)
    return el


def _reduce(n, coeffs):
    table = _power_table(n)
    deg = len(table[0]) if table else 0
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if not c:
            continue
        # x^n = 1 mod Phi_n
        row = table[k] if k < len(table) else table[k % n]
        for j, rc in enumerate(row):
            if rc:
                out[j] += c * rc
    return out


def cyclo_add(a: CycloElement, b: CycloElement) -> CycloElement:
    return a + b


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    ac, bc = a.coeffs, b.coeffs
    prod = [0] * (2 * len(ac) - 1) if ac else []
    for i, x in enumerate(ac):
        if x:
            for j, y in enumerate(bc):
                if y:
                    prod[i + j] += x * y
    return _raw(a.order, _reduce(a.order, prod) if len(prod) > len(ac) else prod)


def cyclo_inv(a: CycloElement) -> CycloElement:
    """Inverse by the extended Euclidean algorithm over Q."""
    if a.is_zero():
        raise ZeroDivisionError("division by zero in cyclotomic field")
    n = a.order
    r0 = [Fraction(c) for c in cyclotomic_polynomial(n).coeffs]
    r1 = _qtrim(a.coeffs)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qsub(s0, _qmul(q, s1))
    # r1 is a nonzero constant since Phi_n is irreducible
    c = r1[0]
    return CycloElement(n, [x / c for x in s1])


# -- dense exact linear algebra --

class ExactMatrix:
    """Row-major dense matrix over Q or Q(zeta_n)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            entries = [0] * (rows * cols)
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return self.rows, self.cols

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = 0
            for a, v in zip(self.row(i), vec):
                if a and v:
                    acc = a * v + acc
            out.append(acc)
        return out


def _is_zero(x) -> bool:
    return x == 0


def _one_like(x):
    if isinstance(x, int):
        return Fraction(1)
    return x / x


def row_reduce(M: ExactMatrix, full: bool = True):
    """Gaussian elimination over the entries' field.

    Returns (reduced rows, pivot columns). Pivots are chosen as the first
    nonzero entry scanning rows top to bottom within each column in turn.
    With ``full`` the result is the reduced row echelon form.
    """
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in M.to_rows()]
    pivots = []
    r = 0
    nrows, ncols = M.rows, M.cols
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if not _is_zero(rows[i][c]):
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        prow = [x / piv if not _is_zero(x) else x for x in rows[r]]
        rows[r] = prow
        nz = [j for j in range(c, ncols) if not _is_zero(prow[j])]
        targets = range(nrows) if full else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            f = rows[i][c]
            if _is_zero(f):
                continue
            ri = rows[i]
            for j in nz:
                ri[j] = ri[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(M: ExactMatrix) -> int:
    return len(row_reduce(M, full=False)[1])


def rank_and_kernel(M: ExactMatrix):
    """Rank and a basis of the right kernel {v : M v = 0}."""
    rows, pivots = row_reduce(M, full=True)
    rk = len(pivots)
    sample = next((x for x in M.entries if not _is_zero(x)), None)
    one = _one_like(sample) if sample is not None else Fraction(1)
    zero = one - one
    pivot_set = set(pivots)
    kernel = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [zero] * M.cols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        kernel.append(v)
    return rk, kernel


def in_span(columns, target) -> bool:
    """Is ``target`` a linear combination of the given column vectors?"""
    if not columns:
        return all(_is_zero(x) for x in target)
    n = len(target)
    base = ExactMatrix.from_rows([[col[i] for col in columns] for i in range(n)])
    aug = ExactMatrix.from_rows([[col[i] for col in columns] + [target[i]] for i in range(n)])
    return rank(base) == rank(aug)


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer (or rational) matrix over F_p, given as lists of rows."""
    m = []
    for row in rows:
        out = []
        for x in row:
            x = Fraction(x)
            out.append(x.numerator * pow(x.denominator, -1, p) % p)
        m.append(out)
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p_row = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p_row is None:
            continue
        m[r], m[p_row] = m[p_row], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r
