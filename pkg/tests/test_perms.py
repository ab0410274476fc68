from __future__ import annotations

from itertools import permutations

from latchcheck.perms import (
    adjacent_transposition,
    adjacent_word,
    block_sum,
    chi,
    compose_perm,
    factor_by_blocks,
    identity_perm,
    invert_perm,
    is_shuffle,
    multi_shuffles,
    shuffles,
)


def realize_word(word, n):
    p = identity_perm(n)
    for i in reversed(word):
        p = compose_perm(adjacent_transposition(n, i), p)
    return p


def test_adjacent_word_spells_every_s4_element():
    for p in permutations(range(4)):
        assert realize_word(adjacent_word(p), 4) == p


def test_compose_invert():
    p = (2, 0, 3, 1)
    assert compose_perm(p, invert_perm(p)) == identity_perm(4)
    assert compose_perm(invert_perm(p), p) == identity_perm(4)


def test_shuffle_counts_are_binomial():
    assert len(shuffles(1, 1)) == 2
    assert len(shuffles(2, 1)) == 3
    assert len(shuffles(2, 2)) == 6
    assert all(is_shuffle(g, (2, 2)) for g in shuffles(2, 2))


def test_multi_shuffle_counts_are_multinomial():
    assert len(multi_shuffles((1, 1, 1))) == 6
    assert len(multi_shuffles((1, 0, 1))) == 2
    assert len(multi_shuffles((2, 1, 1))) == 12


def test_factorization_is_exact_and_unique():
    sizes = (2, 2)
    for p in permutations(range(4)):
        gamma, (rho, tau) = factor_by_blocks(p, sizes)
        assert is_shuffle(gamma, sizes)
        assert compose_perm(gamma, block_sum(rho, tau)) == p


def test_chi_exchanges_blocks():
    # chi(a,b) conjugates rho ⊕ tau into tau ⊕ rho
    rho, tau = (1, 0), (0, 2, 1)
    lhs = compose_perm(chi(2, 3), block_sum(rho, tau))
    rhs = compose_perm(block_sum(tau, rho), chi(2, 3))
    assert lhs == rhs
