import itertools

import pytest
from hypothesis import given, strategies as st

from nilgrass.combinatorics import (
    compose,
    conjugate,
    determinant,
    from_word,
    identity,
    inverse,
    length,
    longest_element,
    nilcoxeter_mul,
    nilcoxeter_word,
    partition,
    partitions_in_box,
    permutations,
    reduced_word,
    rho,
    schubert_indices,
    simple_reflection,
    strict_tuples,
    tau,
    tau_hat,
    tau_hat_inv,
    tau_inv,
    tensor_col,
    tensor_row,
    theta,
    theta_inv,
)
from nilgrass.sympoly import complete, elementary, expand_in_schur, schur

partitions = st.lists(st.integers(0, 5), max_size=4).map(lambda xs: partition(sorted(xs, reverse=True)))


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_partition_rejects_increasing():
    with pytest.raises(ValueError):
        partition((1, 2))


def test_box_count():
    assert len(partitions_in_box(2, 2)) == 6
    assert len(partitions_in_box(3, 3)) == 20


def test_theta():
    assert theta((0, 0, 1, 1)) == (3, 4)
    assert theta((1, 0, 1, 0)) == (1, 3)
    assert theta_inv((1, 3), 4) == (1, 0, 1, 0)


def test_rho_examples():
    assert rho((3, 4), 4) == ()
    assert rho((1, 2), 4) == (2, 2)
    assert rho((2, 4), 4) == (1,)


def test_tau_examples():
    assert tau((0, 0), 4) == (3, 4)
    assert tau((0, 1), 4) == (2, 4)
    assert tau((2, 2), 4) == (1, 2)


def test_tau_hat_examples():
    assert tau_hat((0, 0), 4) == (3, 4)
    assert tau_hat((1, 2), 4) == (1, 3)


def test_tau_hat_inv_by_definition():
    # deleting {1, 3, 5} from 1..5 leaves (2, 4), so (0,1,2) is the preimage
    assert tau_hat((0, 1, 2), 5) == (2, 4)
    assert tau_hat_inv((2, 4), 5) == (0, 1, 2)
    assert tau_hat_inv((3, 5), 5) == (0, 0, 1)


@pytest.mark.parametrize("ell", range(1, 8))
def test_bijections_round_trip(ell):
    for n in range(0, ell + 1):
        strict = strict_tuples(ell, n)
        assert sorted(tau(a, ell) for a in schubert_indices(n, ell - n)) == strict
        assert sorted(tau_hat(a, ell) for a in schubert_indices(ell - n, n)) == strict
        for lam in strict:
            assert tau(tau_inv(lam, ell), ell) == lam
            assert tau_hat(tau_hat_inv(lam, ell), ell) == lam
            assert theta(theta_inv(lam, ell)) == lam
        assert sorted(rho(lam, ell) for lam in strict) == sorted(partitions_in_box(n, ell - n))


@pytest.mark.parametrize("ell", range(1, 9))
def test_rho_tau_preserves_size(ell):
    for n in range(0, ell + 1):
        for a in schubert_indices(n, ell - n):
            assert sum(rho(tau(a, ell), ell)) == sum(a)
            # the two routes to a box partition are conjugate to each other
            assert conjugate(rho(tau_hat(a, ell), ell)) == partition(reversed(a))


def test_tensor_examples():
    assert sorted(tensor_row((1,), 1, 2)) == [(1, 1), (2,)]
    assert tensor_row((2, 1), 0, 3) == [(2, 1)]
    assert set(tensor_row((2, 1), 2, 3)) == {(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)}
    assert sorted(tensor_col((1,), 1, 2)) == [(1, 1), (2,)]
    assert tensor_col((1, 1), 1, 2) == [(2, 1)]
    assert set(tensor_col((2,), 2, 3)) == {(3, 1), (2, 1, 1)}


small_partitions = st.lists(st.integers(0, 3), max_size=3).map(lambda xs: partition(sorted(xs, reverse=True)))


@given(small_partitions, st.integers(0, 2))
def test_strips_match_schur_products(lam, s):
    n = len(lam) + s
    if n == 0:
        return
    rows = expand_in_schur(schur(lam, n) * complete(s, n))
    assert rows == {mu: 1 for mu in tensor_row(lam, s, n)}
    cols = expand_in_schur(schur(lam, n) * elementary(s, n))
    assert cols == {mu: 1 for mu in tensor_col(lam, s, n)}


def test_nilcoxeter_examples():
    s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
    assert nilcoxeter_mul(s1, s1) is None
    assert nilcoxeter_mul(s1, compose(s2, s1)) == longest_element(3)
    assert nilcoxeter_mul(identity(3), s2) == s2
    assert nilcoxeter_word((1, 2, 1), 3) == nilcoxeter_word((2, 1, 2), 3) == longest_element(3)
    assert nilcoxeter_word((1, 2, 2), 3) is None


def test_reduced_word_examples():
    assert reduced_word(identity(3)) == ()
    assert reduced_word(longest_element(2)) == (1,)
    assert len(reduced_word(longest_element(3))) == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_permutation_facts(n):
    perms = permutations(n)
    assert len(perms) == len(set(perms)) == len(list(itertools.permutations(range(n))))
    for w in perms:
        word = reduced_word(w)
        assert len(word) == length(w)
        assert from_word(word, n) == w
        assert compose(w, inverse(w)) == identity(n)
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        assert length(w) == inversions
    assert length(longest_element(n)) == n * (n - 1) // 2


def test_determinant_against_cofactor():
    m = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
    cof = 2 * (3 * -2 - 4 * 5) - (-1) * (1 * -2 - 4 * 0)
    assert determinant(m, 1) == cof
    assert determinant([], 1) == 1
