import itertools

import pytest

from hopfcomb import symfunc
from hopfcomb.symfunc import (
    basis_in_m,
    convert,
    derangements,
    e_in_m,
    expand_to_monomial,
    h_in_m,
    hook_schur_sum,
    kostka,
    m_eval_at_n,
    m_mul,
    m_mul_basis,
    partitions,
    sym,
)


def test_partitions_enumeration():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_h2_in_monomials():
    assert basis_in_m("h", (2,)) == sym("m", (2,)) + sym("m", (1, 1))


def test_degree_one_coincidences():
    for basis in ("e", "h", "p", "s"):
        assert basis_in_m(basis, (1,)) == sym("m", (1,))


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (2, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0


def test_conversions_round_trip_to_degree_8():
    for n in range(9):
        for basis in ("e", "h", "p", "s"):
            for lam in partitions(n):
                x = sym(basis, lam)
                assert convert(expand_to_monomial(x), basis) == x


def test_pieri_hook_identity_to_degree_8():
    for n in range(9):
        for k in range(n + 1):
            product = m_mul(e_in_m(k), h_in_m(n - k))
            assert convert(product, "s") == hook_schur_sum(k, n), (n, k)


def test_m_eval_examples():
    assert m_eval_at_n((1, 1), 2) == 1
    assert m_eval_at_n((2,), 3) == 3
    assert m_eval_at_n((2, 1), 1) == 0


def test_m_eval_sum_gives_stalactic_parking_count():
    import math

    total = sum(m_eval_at_n(mu, 4) * math.factorial(len(mu)) for mu in partitions(3))
    assert total // 4 == 13


def test_m_eval_matches_brute_monomial_count():
    for n in range(1, 5):
        for mu in partitions(n):
            nvars = n + 1
            vectors = set(
                itertools.permutations(tuple(mu) + (0,) * (nvars - len(mu)))
            ) if len(mu) <= nvars else set()
            assert m_eval_at_n(mu, nvars) == len(vectors)


def test_derangements():
    assert [derangements(k) for k in range(7)] == [1, 0, 1, 2, 9, 44, 265]
    for k in range(2, 9):
        assert derangements(k) == (k - 1) * (derangements(k - 1) + derangements(k - 2))


def test_m_product_example():
    assert m_mul_basis((2,), (1, 1)) == sym("m", (2, 1, 1)) + sym("m", (3, 1))


def test_unsupported_basis_rejected():
    with pytest.raises(ValueError):
        convert(sym("m", (1,)), "z")
    with pytest.raises(ValueError):
        symfunc.kind("w")
