import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dihedral_invariants.exactmath import (CycloElement, ExactMatrix, IntPolynomial, cyclo_inv,
                                           cyclotomic_polynomial, divisors, euler_phi, in_span,
                                           rank, rank_and_kernel, rank_mod_p)


def mobius(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def cyclotomic_by_mobius(n):
    """prod_{k | n} (x^k - 1)^mobius(n/k), numerator and denominator multiplied separately."""
    num, den = IntPolynomial([1]), IntPolynomial([1])
    for k in divisors(n):
        f = IntPolynomial.monomial(k) - 1
        mu = mobius(n // k)
        if mu == 1:
            num = num * f
        elif mu == -1:
            den = den * f
    # den is monic up to sign; normalise to monic before dividing
    if den.coeffs[-1] == -1:
        den, num = -den, -num
    return num.exact_div(den)


def test_cyclotomic_small():
    assert cyclotomic_polynomial(1) == IntPolynomial([-1, 1])
    assert cyclotomic_polynomial(4) == IntPolynomial([1, 0, 1])
    assert cyclotomic_polynomial(6) == IntPolynomial([1, -1, 1])
    assert (IntPolynomial.monomial(4) - 1) == (cyclotomic_polynomial(1) * cyclotomic_polynomial(2)
                                               * cyclotomic_polynomial(4))


@pytest.mark.parametrize("n", [1, 2, 3, 6, 12, 15, 30, 105])
def test_cyclotomic_matches_mobius_formula(n):
    assert cyclotomic_polynomial(n) == cyclotomic_by_mobius(n)


def test_cyclotomic_degree_and_product_up_to_200():
    for n in range(1, 201):
        assert cyclotomic_polynomial(n).degree == euler_phi(n)
        prod = IntPolynomial([1])
        for m in divisors(n):
            prod = prod * cyclotomic_polynomial(m)
        assert prod == IntPolynomial.monomial(n) - 1


def test_cyclo_examples():
    z4 = CycloElement.root(4)
    assert z4 * z4 == -1
    a = CycloElement(6, [1, 1])
    assert a * cyclo_inv(a) == 1
    total = CycloElement.zero(5)
    for k in range(5):
        total = total + CycloElement.root(5, k)
    assert total.is_zero()


def test_cyclo_inverse_of_zero():
    with pytest.raises(ZeroDivisionError, match="division by zero in cyclotomic field"):
        cyclo_inv(CycloElement.zero(8))


def test_cyclo_order_mismatch():
    with pytest.raises(ValueError):
        CycloElement.root(6) + CycloElement.root(8)


def test_root_powers_wrap():
    for n in (5, 6, 8, 12):
        z = CycloElement.root(n)
        assert z ** n == 1
        assert z ** (n + 3) == CycloElement.root(n, 3)
        assert CycloElement.root(n, -1) * z == 1


def cyclo_elements(n):
    deg = euler_phi(n)
    coef = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(coef, min_size=deg, max_size=deg).map(lambda cs: CycloElement(n, cs))


@pytest.mark.parametrize("n", [6, 8, 10, 12])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_field_axioms(n, data):
    a, b, c = (data.draw(cyclo_elements(n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * cyclo_inv(a) == 1
        assert (b / a) * a == b


def test_identity_and_zero_matrix():
    assert rank_and_kernel(ExactMatrix.identity(2)) == (2, [])
    rk, ker = rank_and_kernel(ExactMatrix(3, 4))
    assert rk == 0 and len(ker) == 4


def random_matrix(rng, rows, cols, rank_hint=None):
    if rank_hint is None:
        return ExactMatrix(rows, cols, [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                        for _ in range(rows * cols)])
    # product of rows x k and k x cols has rank <= k
    A = [[rng.randint(-3, 3) for _ in range(rank_hint)] for _ in range(rows)]
    B = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rank_hint)]
    return ExactMatrix.from_rows([[sum(A[i][t] * B[t][j] for t in range(rank_hint))
                                   for j in range(cols)] for i in range(rows)])


@settings(max_examples=25, deadline=None)
@given(rows=st.integers(1, 40), cols=st.integers(1, 40), k=st.integers(0, 40),
       seed=st.integers(0, 2**32))
def test_rank_nullity(rows, cols, k, seed):
    rng = random.Random(seed)
    M = random_matrix(rng, rows, cols, rank_hint=min(k, rows, cols) or None)
    rk, ker = rank_and_kernel(M)
    assert rk + len(ker) == cols
    for v in ker:
        assert all(x == 0 for x in M.apply(v))


P62 = 4611686018427387847  # prime just below 2^62


@settings(max_examples=25, deadline=None)
@given(rows=st.integers(1, 25), cols=st.integers(1, 25), k=st.integers(1, 25),
       seed=st.integers(0, 2**32))
def test_rank_agrees_with_mod_p(rows, cols, k, seed):
    rng = random.Random(seed)
    M = random_matrix(rng, rows, cols, rank_hint=min(k, rows, cols))
    assert rank(M) == rank_mod_p(M.to_rows(), P62)


def test_p62_is_prime():
    n = P62
    # deterministic Miller-Rabin bases for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            pytest.fail(f"{n} is composite (witness {a})")


def test_rank_over_cyclotomic_entries():
    z = CycloElement.root(6)
    M = ExactMatrix.from_rows([[1, z], [z, z * z]])
    rk, ker = rank_and_kernel(M)
    assert rk == 1 and len(ker) == 1
    assert all(x == 0 for x in M.apply(ker[0]))


def test_in_span():
    cols = [[1, 0, 1], [0, 1, 1]]
    assert in_span(cols, [2, 3, 5])
    assert not in_span(cols, [1, 1, 1])
    assert in_span([], [0, 0])


def test_intpolynomial_arithmetic():
    p = IntPolynomial([1, 4, 1])
    q = IntPolynomial([1, -1]) ** 4
    prod = p * q
    assert prod(1) == 0
    assert prod.exact_div(IntPolynomial([-1, 1])) * IntPolynomial([-1, 1]) == prod
    assert str(p) == "z^2 + 4z + 1"
    with pytest.raises(ArithmeticError):
        p.exact_div(IntPolynomial([1, 1]))
