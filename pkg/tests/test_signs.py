"""Pinned values and algebraic laws for the sign module."""

import pytest
from hypothesis import given, strategies as st

from ainfty import (
    InputError,
    alpha_sign,
    desusp_word_sign,
    koszul_permutation_sign,
    pass_operator_sign,
    s_sign,
    susp_iso_sign,
)


def test_koszul_identity_permutation_is_plus_one():
    assert koszul_permutation_sign((5, -3, 2, 0), (0, 1, 2, 3)) == 1


def test_koszul_transposition_of_two_odd_letters():
    assert koszul_permutation_sign((-1, -1), (1, 0)) == -1


def test_koszul_even_letter_commutes_freely():
    assert koszul_permutation_sign((0, -1), (1, 0)) == 1


def test_koszul_length_mismatch_rejected():
    with pytest.raises(InputError):
        koszul_permutation_sign((1, 2, 3), (0, 1))


def test_koszul_non_permutation_rejected():
    with pytest.raises(InputError):
        koszul_permutation_sign((1, 2), (0, 0))


@given(st.data())
def test_koszul_sign_is_a_homomorphism(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    degrees = data.draw(
        st.lists(st.integers(-3, 3), min_size=n, max_size=n).map(tuple)
    )
    sigma = tuple(data.draw(st.permutations(list(range(n)))))
    tau = tuple(data.draw(st.permutations(list(range(n)))))
    composed = tuple(sigma[tau[i]] for i in range(n))
    # after tau, letter i sits at position tau[i]
    tau_degrees = [0] * n
    for i in range(n):
        tau_degrees[tau[i]] = degrees[i]
    assert koszul_permutation_sign(degrees, composed) == (
        koszul_permutation_sign(tau_degrees, sigma)
        * koszul_permutation_sign(degrees, tau)
    )


@given(st.data())
def test_koszul_sign_on_even_degrees_is_trivial(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    degrees = data.draw(
        st.lists(st.integers(-2, 2).map(lambda d: 2 * d), min_size=n, max_size=n)
    )
    sigma = tuple(data.draw(st.permutations(list(range(n)))))
    assert koszul_permutation_sign(degrees, sigma) == 1


@given(st.data())
def test_koszul_sign_on_odd_degrees_is_the_signature(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    degrees = data.draw(
        st.lists(st.integers(-1, 1).map(lambda d: 2 * d + 1), min_size=n, max_size=n)
    )
    sigma = tuple(data.draw(st.permutations(list(range(n)))))
    inversions = sum(
        1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )
    assert koszul_permutation_sign(degrees, sigma) == (-1) ** inversions


def test_pass_operator_sign_values():
    assert pass_operator_sign(1, -1) == -1
    assert pass_operator_sign(1, 0) == 1
    # degree 2-k operator for k=3 passing a degree-1 symbol
    assert pass_operator_sign(2 - 3, 1) == -1


def test_susp_iso_sign_values():
    assert susp_iso_sign(1) == 1
    assert susp_iso_sign(2) == -1
    assert susp_iso_sign(4) == 1
    with pytest.raises(InputError):
        susp_iso_sign(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_susp_iso_sign_matches_reversing_odd_operators(n):
    # reversing n desuspensions commutes every pair of degree -1 symbols once
    reversal = tuple(range(n - 1, -1, -1))
    assert susp_iso_sign(n) == koszul_permutation_sign((-1,) * n, reversal)
    assert susp_iso_sign(n) * susp_iso_sign(n) == 1


def test_desusp_word_sign_values():
    assert desusp_word_sign((0, 1)) == 1
    assert desusp_word_sign((1, 1)) == -1
    assert desusp_word_sign((1, 0, 1)) == 1
    with pytest.raises(InputError):
        desusp_word_sign(())


def test_alpha_sign_worked_values():
    assert alpha_sign(1, 0, 2, 0) == -1
    assert alpha_sign(2, 0, 2, 0) == 1
    assert alpha_sign(2, 1, 3, 1) == -1


def test_alpha_sign_range_checks():
    with pytest.raises(InputError):
        alpha_sign(3, 0, 2, 0)  # k > n - lam
    with pytest.raises(InputError):
        alpha_sign(1, 2, 2, 0)  # lam > n - 1
    with pytest.raises(InputError):
        alpha_sign(0, 0, 2, 0)  # k < 1


def test_s_sign_values():
    assert s_sign(2) == 1
    assert s_sign(4) == -1
    assert s_sign(6) == 1
    with pytest.raises(InputError):
        s_sign(0)


@pytest.mark.parametrize("n", range(1, 30))
def test_s_sign_has_period_four(n):
    assert s_sign(n + 4) == s_sign(n)


def test_s_sign_cycle_from_two():
    assert [s_sign(n) for n in range(2, 10)] == [1, 1, -1, -1, 1, 1, -1, -1]


@given(st.integers(min_value=-50, max_value=50), st.integers(min_value=-50, max_value=50))
def test_pass_operator_sign_depends_only_on_parities(p, q):
    assert pass_operator_sign(p, q) == pass_operator_sign(p % 2, q % 2)
