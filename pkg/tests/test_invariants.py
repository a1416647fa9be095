from math import gcd

import pytest

from dihedral_invariants.exactmath import ExactMatrix, rank
from dihedral_invariants.hilbert import hf_trace_oracle
from dihedral_invariants.group import GroupParams, ParameterError, act_on_polynomial, elements, \
    valid_a_values
from dihedral_invariants.invariants import (BINOMIAL, MONOMIAL, SymInvariant, YMonomial,
                                            factor_completely, factor_invariant,
                                            from_sym_basis, fundamental_invariants, graded_basis,
                                            mu, rho_map, sym_invariant, y_basis, y_to_x)
from dihedral_invariants.monomial import ExponentVector, enumerate_degree

# Basis lists for d = 3, 4 at t = 1, as (monomial-support) sets; the d = 4
# entry x0^4 x1^4 + x0^4 x2^4 is the corrected form of the printed typo.
B6 = [[(6, 0, 0)], [(3, 3, 0), (3, 0, 3)], [(4, 1, 1)], [(0, 6, 0), (0, 0, 6)],
      [(1, 4, 1), (1, 1, 4)], [(2, 2, 2)], [(0, 3, 3)]]
B8 = [[(8, 0, 0)], [(4, 4, 0), (4, 0, 4)], [(6, 1, 1)], [(0, 8, 0), (0, 0, 8)],
      [(2, 5, 1), (2, 1, 5)], [(4, 2, 2)], [(0, 6, 2), (0, 2, 6)], [(2, 3, 3)], [(0, 4, 4)]]


def supports(basis):
    return {frozenset(inv.polynomial()) for inv in basis}


def as_support_set(listing):
    return {frozenset(ExponentVector(*m) for m in supp) for supp in listing}


def test_fixture_bases():
    assert supports(graded_basis(3, 1)) == as_support_set(B6)
    assert supports(graded_basis(4, 1)) == as_support_set(B8)
    assert len(fundamental_invariants(5)) == 10


def test_sym_invariant_validation():
    with pytest.raises(ValueError):
        SymInvariant(MONOMIAL, ExponentVector(1, 2, 3))
    with pytest.raises(ValueError):
        SymInvariant(BINOMIAL, ExponentVector(1, 2, 3))
    assert sym_invariant((1, 2, 3)) == SymInvariant(BINOMIAL, ExponentVector(1, 3, 2))


def test_json_round_trip():
    for d in (3, 4, 7):
        for inv in graded_basis(d, 2):
            obj = inv.to_json()
            assert SymInvariant.from_json(obj) == inv
            assert ("mirror" in obj) == (inv.kind == BINOMIAL)
    with pytest.raises(ValueError):
        SymInvariant.from_json({"kind": "binomial", "lead": [3, 3, 0], "mirror": [3, 3, 0]})


def test_bad_t():
    with pytest.raises(ParameterError):
        graded_basis(3, 0)
    with pytest.raises(ParameterError):
        graded_basis(2, 1)


@pytest.mark.parametrize("d", range(3, 9))
@pytest.mark.parametrize("t", [1, 2])
def test_basis_is_invariant(d, t):
    p = GroupParams(d, valid_a_values(d)[-1])
    for inv in graded_basis(d, t):
        f = inv.polynomial()
        lifted = act_on_polynomial(elements(p)[0], f, p)
        for g in elements(p):
            assert act_on_polynomial(g, f, p) == lifted


@pytest.mark.parametrize("d", range(3, 21))
def test_basis_size(d):
    for t in range(1, 5):
        n = len(graded_basis(d, t))
        assert 2 * n == 2 * d * t * t + (d + gcd(d, 2) + 2) * t + 2


@pytest.mark.parametrize("d", [5, 7, 8, 9, 10, 12])
def test_basis_a_independent(d):
    """graded_basis takes no a; check it is the full invariant space for every valid a."""
    basis = graded_basis(d, 1)
    for a in valid_a_values(d):
        p = GroupParams(d, a)
        for inv in basis:
            f = inv.polynomial()
            images = [act_on_polynomial(g, f, p) for g in elements(p)]
            assert all(img == images[0] for img in images)
        assert hf_trace_oracle(d, a, 1) == len(basis)


@pytest.mark.parametrize("d", range(3, 30))
def test_mu(d):
    assert len(y_basis(d, 1)) == len(fundamental_invariants(d)) == mu(d)
    assert mu(d) == d + 2 + (d + gcd(2, d)) // 2


@pytest.mark.parametrize("d", range(3, 12))
def test_rho_transition_invertible(d):
    basis = fundamental_invariants(d)
    col = {inv: j for j, inv in enumerate(basis)}
    rows = []
    for y in y_basis(d, 1):
        row = [0] * len(basis)
        for inv, c in rho_map(y, d).items():
            row[col[inv]] = c
        rows.append(row)
    assert rank(ExactMatrix.from_rows(rows)) == len(basis)


def test_rho_round_trip():
    for d in (3, 4, 5, 6):
        for y in y_basis(d, 1):
            assert from_sym_basis(rho_map(y, d)) == y_to_x(y, d)


@pytest.mark.parametrize("d", range(3, 7))
@pytest.mark.parametrize("t", [2, 3])
def test_closure_under_products(d, t):
    basis = graded_basis(d, t)
    ys = y_basis(d, t)
    assert len(ys) == len(basis)
    for y in ys:
        factors = factor_completely(y, d)
        assert len(factors) == t
        assert all(f.weighted_degree(d) == 2 * d for f in factors)
        prod = YMonomial(0, 0, 0)
        for f in factors:
            prod = prod * f
        assert prod == y
    # the expanded y-monomials span the same space as the x-basis
    monos = enumerate_degree(2 * d * t)
    rows = [[y_to_x(y, d).get(m, 0) for m in monos] for y in ys]
    assert rank(ExactMatrix.from_rows(rows)) == len(basis)
    rows += [[inv.polynomial().get(m, 0) for m in monos] for inv in basis]
    assert rank(ExactMatrix.from_rows(rows)) == len(basis)


def test_factor_invariant_case_order():
    d = 4
    assert factor_invariant((16, 0, 0), d) == YMonomial(8, 0, 0)
    assert factor_invariant((0, 8, 0), d) == YMonomial(0, 4, 0)
    assert factor_invariant((0, 0, 4), d) == YMonomial(0, 0, 2)
    assert factor_invariant((6, 3, 1), d) == YMonomial(4, 0, 1)
    with pytest.raises(ParameterError):
        factor_invariant((8, 0, 0), d)
