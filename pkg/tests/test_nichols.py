import itertools
import math

import pytest

from q8nichols.braidlin import braiding_matrix, diagonal_braiding, flip
from q8nichols.cyclo import CycNum
from q8nichols.linalg import SparseOp
from q8nichols.nichols import (
    BudgetExceeded,
    NicholsError,
    elementary_braidings,
    hilbert_prefix,
    inversions,
    lift_permutation,
    reduced_word_bubble,
    reduced_word_lehmer,
    symmetrizer,
    symmetrizer_right_factored,
    symmetrizer_sum,
    symmetrizers,
    word_product,
)
from q8nichols.ydmod import BraidOp, braiding_operator


def rank1(value, m=4):
    return diagonal_braiding(braiding_matrix([[value]], m))


@pytest.mark.parametrize("n", range(1, 6))
def test_reduced_words_are_reduced(n):
    for w in itertools.permutations(range(n)):
        for strategy in (reduced_word_bubble, reduced_word_lehmer):
            word = strategy(w)
            assert word_product(word, n) == w
            assert len(word) == inversions(w)


def test_strategies_differ_somewhere():
    ws = list(itertools.permutations(range(4)))
    assert any(reduced_word_bubble(w) != reduced_word_lehmer(w) for w in ws)


def test_lift_identity_and_generator(q8_modules):
    c = braiding_operator(q8_modules[("x", "phi2")])
    assert lift_permutation(c, (0, 1, 2)) == SparseOp.identity(8, 4)
    assert lift_permutation(c, (1, 0)) == c.op


def test_longest_element_of_s3(q8_modules):
    c = braiding_operator(q8_modules[("x", "phi2")])
    c1, c2 = elementary_braidings(c, 3)
    assert c1 @ c2 @ c1 == c2 @ c1 @ c2
    assert lift_permutation(c, (2, 1, 0)) == c1 @ c2 @ c1


def test_reduced_word_independence_s4(q8_modules):
    for M in q8_modules.values():
        c = braiding_operator(M)
        for w in itertools.permutations(range(4)):
            assert lift_permutation(c, w, "bubble") == lift_permutation(c, w, "lehmer")


def test_lift_refuses_non_braiding():
    c = flip(2, 4)
    cols = [dict(col) for col in c.op.cols]
    cols[1][1] = CycNum.one(4)
    with pytest.raises(NicholsError):
        lift_permutation(BraidOp(2, SparseOp(4, 4, cols)), (1, 0))


def test_low_degrees(q8_modules):
    c = braiding_operator(q8_modules[("x", "phi1")])
    assert symmetrizer(c, 0).rank() == 1
    assert symmetrizer(c, 1) == SparseOp.identity(2, 4)
    assert symmetrizer(c, 2) == SparseOp.identity(4, 4) + c.op


def test_s3_factorized_form(q8_modules):
    for M in q8_modules.values():
        c = braiding_operator(M)
        if M.dim == 1:
            continue
        c1, c2 = elementary_braidings(c, 3)
        ident = SparseOp.identity(c.dim**3, c.m)
        assert (ident + c1 + c2 @ c1) @ (ident + c2) == symmetrizer_sum(c, 3)


@pytest.mark.parametrize("key", [("x", "phi1"), ("x", "phi2"), ("1", "rho5"), ("y", "phi3")])
def test_factorized_equals_sum(q8_modules, key):
    c = braiding_operator(q8_modules[key])
    for n in range(5):
        assert symmetrizer(c, n) == symmetrizer_sum(c, n) == symmetrizer_sum(c, n, strategy="lehmer")


def test_right_factorization(q8_modules):
    c = braiding_operator(q8_modules[("x", "phi1")])
    S = list(symmetrizers(c, 5))
    for n in range(2, 6):
        assert symmetrizer_right_factored(c, S[n - 1], n) == S[n]


def test_rho5_on_x2_degree_two(q8_modules):
    c = braiding_operator(q8_modules[("x2", "rho5")])
    assert symmetrizer(c, 2).rank() == 1


def test_exterior_algebra_profile(q8_modules):
    for key in [("x", "phi2"), ("x2", "rho5"), ("y", "phi2"), ("xy", "phi2")]:
        hp = hilbert_prefix(braiding_operator(q8_modules[key]), 6)
        assert hp.dims == (1, 2, 1, 0, 0, 0, 0)
        assert hp.terminated and hp.total == 4
        # independent: the exterior algebra on 2 generators has dims binom(2, n)
        assert hp.dims == tuple(math.comb(2, n) for n in range(7))


def test_polynomial_line(q8_modules):
    hp = hilbert_prefix(braiding_operator(q8_modules[("1", "rho1")]), 6)
    assert hp.dims == (1,) * 7 and not hp.terminated and hp.total is None


def test_two_variable_polynomial(q8_modules):
    hp = hilbert_prefix(braiding_operator(q8_modules[("x", "phi0")]), 6)
    assert hp.dims == tuple(n + 1 for n in range(7))


def test_affine_case_never_terminates(q8_modules):
    hp = hilbert_prefix(braiding_operator(q8_modules[("x", "phi1")]), 6)
    assert all(d >= 1 for d in hp.dims) and not hp.terminated


@pytest.mark.parametrize("order", [2, 3, 4, 6, 12])
def test_rank_one_truncation(order):
    c = rank1(CycNum.zeta(12, 12 // order), 12)
    N = order + 2
    hp = hilbert_prefix(c, N, budget=10**12, stop_at_zero=False)
    assert hp.dims == (1,) * order + (0,) * (N + 1 - order)


def test_rank_one_q_equal_one():
    hp = hilbert_prefix(rank1(CycNum.one(4)), 6)
    assert hp.dims == (1,) * 7


def test_termination_monotone(q8_modules):
    for M in q8_modules.values():
        hp = hilbert_prefix(braiding_operator(M), 5, stop_at_zero=False)
        seen_zero = False
        for d in hp.dims:
            if seen_zero:
                assert d == 0
            seen_zero = seen_zero or d == 0


def test_quantum_plane_dims():
    # q11 = q22 = -1, q12 q21 = 1 but q12 = i: still the exterior-type algebra of dim 4
    i = CycNum.zeta(4)
    c = diagonal_braiding(braiding_matrix([[-1, i], [i**3, -1]], 4))
    assert hilbert_prefix(c, 4).dims == (1, 2, 1, 0, 0)


def test_budget_guard(monkeypatch):
    c = rank1(CycNum.zeta(4))
    with pytest.raises(BudgetExceeded):
        hilbert_prefix(c, 6, budget=100)
    monkeypatch.setenv("Q8N_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        symmetrizer(c, 4)
    monkeypatch.setenv("Q8N_BUDGET", "1e9")
    assert symmetrizer(c, 3).rank() == 1
    assert symmetrizer(c, 4).rank() == 0


def test_json_form():
    hp = hilbert_prefix(rank1(-CycNum.one(4)), 3)
    assert hp.to_json() == {"cutoff": 3, "dims": [1, 1, 0, 0], "terminated": True, "total": 2}
    hp = hilbert_prefix(rank1(CycNum.one(4)), 3)
    assert hp.to_json()["total"] == "≥ 4"
