from itertools import product

import pytest
from hypothesis import given

import worked_examples as W
from conftest import compositions_st
from qschur.errors import NotSymmetric, SizeMismatch
from qschur.functions import (QSymVector, expansion_to_M, is_symmetric, monomial_M, monomial_coefficients,
                              qschur_M, schur_M, schur_coefficient_if_symmetric, schur_decompose,
                              skew_qschur_M, skew_schur_M, vsum)
from qschur.lr import nclr_coefficient, qs_expansion, schur_expansion_left
from qschur.shapes import (compositions, less_c, make_skew, make_skew_partition, partitions,
                           rearrangements, skew_shapes, sort_to_partition)


def polynomial(v: QSymVector, nvars: int) -> dict:
    """Truncate to nvars variables: exponent vector -> coefficient."""
    out = {}
    for gamma, c in v.coeffs.items():
        if len(gamma) > nvars:
            continue
        for idx in product(range(nvars), repeat=len(gamma)):
            if all(a < b for a, b in zip(idx, idx[1:])):
                exp = [0] * nvars
                for i, g in zip(idx, gamma):
                    exp[i] = g
                out[tuple(exp)] = out.get(tuple(exp), 0) + c
    return out


def test_qschur_examples():
    v = qschur_M((1, 2))
    assert (v[(1, 2)], v[(1, 1, 1)], v[(2, 1)]) == (1, 1, 0)
    assert qschur_M((1,)).coeffs == {(1,): 1}
    assert qschur_M((2, 1)) + qschur_M((1, 2)) == schur_M((2, 1))


def test_qschur_polynomial_matches_listed_monomials():
    poly = polynomial(qschur_M((1, 2)), 3)
    assert poly[(1, 2, 0)] == 1 and poly[(0, 1, 2)] == 1 and poly[(1, 0, 2)] == 1
    assert poly[(1, 1, 1)] == 1
    assert (2, 1, 0) not in poly


def test_skew_examples():
    s = make_skew(*W.NCLR_SHAPE)
    combo = vsum((qschur_M(d).scale(c) for d, c in qs_expansion(s).terms.items()), s.size)
    assert skew_qschur_M(s) == combo
    assert skew_qschur_M(make_skew((2, 1))) == qschur_M((2, 1))
    assert skew_qschur_M(make_skew(())).coeffs == {(): 1}


def test_schur_examples():
    assert schur_M((2, 1))[(1, 1, 1)] == 2
    assert schur_M((1,)).coeffs == {(1,): 1}
    lhs = skew_schur_M(make_skew_partition((2, 2), (1,)))
    rhs = vsum((skew_qschur_M(make_skew(g, (1,))) for g in rearrangements((2, 2)) if less_c((1,), g)), 3)
    assert lhs == rhs
    assert schur_decompose(lhs).terms == {(2, 1): 1}


def test_is_symmetric_examples():
    assert is_symmetric(skew_qschur_M(make_skew((2, 2, 4, 3, 3), (3, 1, 2))))
    assert not is_symmetric(qschur_M((1, 2)))
    assert is_symmetric(QSymVector.zero(0))


def test_schur_coefficient_examples():
    assert schur_coefficient_if_symmetric(make_skew(*W.BIG_SHAPE), (6, 2, 1)) == 2
    assert schur_coefficient_if_symmetric(make_skew(*W.SMALL_SHAPE), (2, 2, 2)) == 1
    assert schur_coefficient_if_symmetric(make_skew((4,)), (4,)) == 1
    with pytest.raises(NotSymmetric):
        schur_coefficient_if_symmetric(make_skew((1, 2)), (2, 1))


def test_vector_arithmetic_and_json():
    a, b = qschur_M((2, 1)), qschur_M((1, 2))
    assert (a + b) - b == a
    assert 2 * a == a + a
    assert not (a - a)
    assert QSymVector.from_json(a.to_json()) == a
    with pytest.raises(SizeMismatch):
        a + qschur_M((1,))
    with pytest.raises(SizeMismatch):
        QSymVector(2, {(1,): 1})


def test_refinement_identity():
    for n in range(8):
        for lam in partitions(n):
            total = vsum((qschur_M(a) for a in compositions(n) if sort_to_partition(a) == lam), n)
            assert schur_M(lam) == total


def test_skew_schur_is_sum_over_composition_shapes():
    for n in range(7):
        for lam in partitions(n):
            for k in range(n + 1):
                for mu in partitions(k):
                    try:
                        ls = make_skew_partition(lam, mu)
                    except ValueError:
                        continue
                    lhs = skew_schur_M(ls)
                    for beta in rearrangements(mu):
                        rhs = vsum((skew_qschur_M(make_skew(g, beta)) for g in rearrangements(lam)
                                    if less_c(beta, g)), ls.size)
                        assert lhs == rhs, (lam, mu, beta)


@pytest.mark.parametrize("s", list(skew_shapes(7)), ids=str)
def test_qs_expansion_realizes_skew_function(s):
    assert expansion_to_M(qs_expansion(s)) == skew_qschur_M(s)


def test_greedy_extraction_reconstructs():
    for s in skew_shapes(7):
        v = skew_qschur_M(s)
        if is_symmetric(v):
            e = schur_decompose(v)
            assert all(c > 0 for c in e.terms.values())
            assert expansion_to_M(e) == v
            assert e == schur_expansion_left(s)


def test_schur_coefficient_matches_nclr():
    for s in skew_shapes(6):
        v = skew_qschur_M(s)
        if is_symmetric(v):
            e = schur_decompose(v)
            for nu in partitions(s.size):
                assert e[nu] == nclr_coefficient(s, nu)


@given(compositions_st(7, 1))
def test_monomial_vectors(c):
    lam = sort_to_partition(c)
    m = monomial_M(lam)
    assert is_symmetric(m)
    assert m[c] == 1
    assert monomial_coefficients(m) == {lam: 1}


def test_symmetric_vectors_decompose_in_monomials():
    for n in range(7):
        for lam in partitions(n):
            v = schur_M(lam)
            coeffs = monomial_coefficients(v)
            assert vsum((monomial_M(mu).scale(c) for mu, c in coeffs.items()), n) == v
    with pytest.raises(NotSymmetric):
        monomial_coefficients(qschur_M((1, 2)))


def test_schur_decompose_rejects_nonpositive():
    with pytest.raises(ValueError):
        schur_decompose(monomial_M((1, 1)) - schur_M((2,)))
