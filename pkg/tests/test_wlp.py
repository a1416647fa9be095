import random
from math import comb

import pytest

from dihedral_invariants.exactmath import in_span, rank, rank_and_kernel
from dihedral_invariants.group import GroupElement, GroupParams, act_on_polynomial, \
    valid_a_values
from dihedral_invariants.invariants import mu
from dihedral_invariants.wlp import (cyclo_poly_mul, linear_form, multiplication_matrix,
                                     mu_bound_check, quotient_projection, random_form,
                                     witness_polynomial, witness_vector, witness_verify,
                                     wlp_failure_check)


def test_shapes():
    assert multiplication_matrix(3, (1, 2, 3)).shape == (21, 21)
    assert multiplication_matrix(4, (1, 2, 3)).shape == (36, 36)
    assert multiplication_matrix(5, (1, 2, 3)).shape == (56, 55)


@pytest.mark.parametrize("d", range(3, 60))
def test_bound_and_dimensions(d):
    assert mu_bound_check(d)
    source, target = comb(2 * d + 1, 2), comb(2 * d + 2, 2) - mu(d)
    assert source <= target


def test_complement_is_earliest():
    complement, proj = quotient_projection(3)
    assert len(complement) == 28 - 7
    # x0^6 is itself an invariant, so it is not in the complement
    assert (6, 0, 0) not in complement
    assert all(len(coords) <= 1 for coords in proj.values())


@pytest.mark.parametrize("d", range(3, 11))
def test_witness_in_kernel(d):
    rng = random.Random(1000 + d)
    for _ in range(2 if d > 7 else 3):
        L = random_form(rng)
        M = multiplication_matrix(d, L)
        rk, ker = rank_and_kernel(M)
        assert rk < min(M.shape) and rk + len(ker) == M.cols
        F = witness_vector(d, valid_a_values(d)[0], L)
        assert any(F)
        assert all(x == 0 for x in M.apply(F))
        assert in_span(ker, F)


@pytest.mark.parametrize("d", range(3, 7))
def test_LF_invariant(d):
    p = GroupParams(d, valid_a_values(d)[-1])
    L = (3, 5, 7)
    LF = cyclo_poly_mul(witness_polynomial(d, p.a, L), linear_form(L, 2 * d))
    for g in (GroupElement(1, False), GroupElement(0, True)):
        assert act_on_polynomial(g, LF, p) == LF


@pytest.mark.parametrize("d", [5, 7, 8])
def test_witness_a_independent(d):
    L = (2, 9, 4)
    products = []
    for a in valid_a_values(d)[:2]:
        assert witness_verify(d, a, L)
        products.append(cyclo_poly_mul(witness_polynomial(d, a, L), linear_form(L, 2 * d)))
    assert products[0] == products[1]


def test_witness_special_forms():
    assert witness_verify(4, 1, (0, 1, 0))
    assert witness_verify(3, 1, (1, 0, 0))
    F = witness_vector(3, 1, (1, 0, 0))
    assert sum(1 for c in F if c) == 1  # x0^5
    with pytest.raises(ValueError):
        witness_verify(3, 1, (0, 0, 0))


def test_report():
    rep = wlp_failure_check(4, seed=11, trials=3)
    assert rep.certified and rep.rank_deficient
    assert rep.observed_rank == rep.source_dim - 1
    obj = rep.to_json()
    assert obj["certified"] is True
    assert obj["forms"] == [list(f) for f in rep.forms]
    assert all(1 <= c <= 100 for f in rep.forms for c in f)
    assert wlp_failure_check(4, seed=11, trials=3).forms == rep.forms
    with pytest.raises(ValueError):
        wlp_failure_check(4, trials=0)


def test_rank_is_exactly_one_short():
    for d in range(3, 8):
        M = multiplication_matrix(d, (7, 3, 11))
        assert rank(M) == M.cols - 1
