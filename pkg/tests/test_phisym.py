import itertools

import pytest

from conftest import lc, tensor_terms
from hopfcomb import phisym, sgqsym
from hopfcomb.axioms import hopf_check
from hopfcomb.lincomb import LinComb, tensor_swap
from hopfcomb.words import (
    cycle_from_word,
    cycle_words,
    permutations,
    shifted_concat,
    shuffle,
    word_from_text as W,
)

PHI = "phisym:phi"


def test_cyclic_shuffle_worked_example():
    out = phisym.cyclic_shuffle((1, 3, 2), (4, 5))
    expected = {
        (1, 3, 2, 4, 5), (1, 3, 4, 2, 5), (1, 3, 4, 5, 2), (1, 4, 3, 2, 5),
        (1, 4, 3, 5, 2), (1, 4, 5, 3, 2), (1, 3, 2, 5, 4), (1, 3, 5, 2, 4),
        (1, 3, 5, 4, 2), (1, 5, 3, 2, 4), (1, 5, 3, 4, 2), (1, 5, 4, 3, 2),
    }
    assert out == frozenset(expected)


def test_cyclic_shuffle_singletons():
    assert phisym.cyclic_shuffle((1,), (2,)) == frozenset({(1, 2)})


def test_cyclic_shuffle_rejects_overlap():
    with pytest.raises(ValueError):
        phisym.cyclic_shuffle((1, 2), (2, 3))


def test_cyclic_shuffle_against_rotation_closure_oracle():
    # independent route: shuffle one fixed rotation pair, then close by rotation
    for c1, c2 in [((1, 2), (3, 4)), ((1, 3, 2), (4, 5)), ((1,), (2, 3))]:
        words = set()
        for w1 in cycle_words(c1):
            for w2 in cycle_words(c2):
                words.update(shuffle(w1, w2))
        closed = {cycle_from_word(w) for w in words}
        assert phisym.cyclic_shuffle(c1, c2) == frozenset(closed)


def test_matching_product_worked_example():
    out = phisym.matching_product(((1,), (2,)), ((3,), (4,)))
    expected = {
        ((1,), (2,), (3,), (4,)), ((1,), (2, 3), (4,)), ((1,), (2, 4), (3,)),
        ((1, 3), (2,), (4,)), ((1, 3), (2, 4)), ((1, 4), (2,), (3,)),
        ((1, 4), (2, 3)),
    }
    assert out == expected
    assert len(out) == 7


def test_matching_product_empty_side():
    assert phisym.matching_product((), ((1, 2),)) == {((1, 2),)}


def test_phi_product_golden_examples():
    assert phisym.product_phi(W("12"), W("12")) == lc(
        PHI, ("1234", 1), ("1324", 1), ("1432", 1), ("3214", 1),
        ("3412", 1), ("4231", 1), ("4321", 1),
    )
    assert phisym.product_phi(W("12"), W("21")) == lc(
        PHI, ("1243", 1), ("1342", 1), ("1423", 1), ("3241", 1), ("4213", 1)
    )
    assert phisym.product_phi(W("1"), W("4312")) == lc(
        PHI, ("15423", 1), ("25413", 1), ("35421", 1), ("45123", 1), ("51423", 1)
    )
    assert phisym.product_phi(W("312"), W("21")) == lc(
        PHI,
        ("31254", 1), ("31452", 1), ("31524", 1), ("34251", 1), ("34512", 1),
        ("35214", 1), ("35421", 1), ("41253", 1), ("41532", 1), ("45231", 1),
        ("51234", 1), ("51423", 1), ("54213", 1),
    )


def test_phi_coefficients_are_zero_or_one():
    for i in range(1, 4):
        for j in range(1, 5 - i):
            for a in permutations(i):
                for b in permutations(j):
                    assert all(
                        c == 1 for c in phisym.product_phi(a, b).terms.values()
                    ), (a, b)


def test_phi_coproduct_golden_examples():
    assert phisym.coproduct_phi(W("12")) == tensor_terms(
        PHI, ("12", "()", 1), ("1", "1", 2), ("()", "12", 1)
    )
    assert phisym.coproduct_phi(W("312")) == tensor_terms(
        PHI, ("312", "()", 1), ("()", "312", 1)
    )
    assert phisym.coproduct_phi(W("4231")) == tensor_terms(
        PHI,
        ("4231", "()", 1), ("321", "1", 2), ("21", "12", 1),
        ("12", "21", 1), ("1", "321", 2), ("()", "4231", 1),
    )


def test_phi_coproduct_cocommutative():
    for n in range(1, 5):
        for sigma in permutations(n):
            cop = phisym.coproduct_phi(sigma)
            assert tensor_swap(cop) == cop


def test_ssecond_expansion_2431():
    # matching-product expansion of the cycles (124)(3); the third term is the
    # permutation whose cycle is (1243)
    assert phisym.ssecond_expand(W("2431")) == lc(
        PHI, ("2431", 1), ("2413", 1), ("2341", 1), ("3421", 1)
    )


def test_sprime_of_connected_is_phi():
    for sigma in [W("312"), W("4231"), W("21")]:
        assert phisym.sprime_expand(sigma) == lc(PHI, (sigma, 1))


def test_basis_round_trips_degree_5():
    for n in range(1, 6):
        for sigma in permutations(n):
            x = LinComb.basis(PHI, sigma)
            sp = phisym.phi_to_sprime(x)
            assert phisym.sprime_to_phi(LinComb(PHI, sp.terms)) == x
            ss = phisym.phi_to_ssecond(x)
            assert phisym.ssecond_to_phi(LinComb(PHI, ss.terms)) == x


def test_sprime_ssecond_products_match_the_dual_basis():
    for i in range(1, 4):
        for j in range(1, 5 - i):
            for a in permutations(i):
                for b in permutations(j):
                    target = {shifted_concat(a, b): 1}
                    assert phisym.product_sprime(a, b).terms == target
                    assert phisym.product_ssecond(a, b).terms == target


def test_phi_coproduct_constants_equal_dual_basis_constants():
    # the natural basis is a coalgebra isomorph of the dual basis: identical
    # coefficient arrays on both sides, degree <= 4
    for n in range(1, 5):
        for sigma in permutations(n):
            assert (
                phisym.coproduct_phi(sigma).terms
                == sgqsym.coproduct_S(sigma).terms
            ), sigma


def test_ssecond_coproduct_constants_match_dual_basis():
    for n in range(1, 5):
        for sigma in permutations(n):
            assert (
                phisym.coproduct_ssecond(sigma).terms
                == sgqsym.coproduct_S(sigma).terms
            ), sigma


def test_sprime_coproduct_exception_at_4231():
    # the first multiplicative basis is an algebra isomorph only: its
    # coproduct develops one extra correction term in degree 4
    mismatches = []
    for sigma in permutations(4):
        if phisym.coproduct_sprime(sigma).terms != sgqsym.coproduct_S(sigma).terms:
            mismatches.append(sigma)
    assert mismatches == [W("4231")]
    diff = phisym.coproduct_sprime(W("4231")) - LinComb(
        "phisym:Sp(x)phisym:Sp", sgqsym.coproduct_S(W("4231")).terms
    )
    assert diff.terms == {(W("21"), W("21")): -2}


def test_y_products_golden():
    assert phisym.product_Y((1, 1), (2,)).terms == {(2, 1, 1): 1, (3, 1): 4}
    assert phisym.product_Y((1, 1), (1, 1)).terms == {
        (1, 1, 1, 1): 1, (2, 2): 2, (2, 1, 1): 4
    }
    assert phisym.product_Y((1,), (4,)).terms == {(4, 1): 1, (5,): 4}
    assert phisym.product_Y((3,), (2,)).terms == {(3, 2): 1, (5,): 12}


def test_y_representative_independence():
    assert phisym.y_representative_independent(5)


def test_y_to_sym_is_algebra_morphism():
    assert phisym.y_iso_check(5)


def test_biword_oracle_small():
    for i in range(1, 3):
        for j in range(1, 4 - i):
            for a in permutations(i):
                for b in permutations(j):
                    assert phisym.biword_product_check(a, b), (a, b)


def test_biword_classification_is_total_and_consistent():
    from hopfcomb.realize import classify_biword, realize_phi

    n_trunc = 3
    for sigma in permutations(3):
        for (top, bottom) in realize_phi(sigma, n_trunc).terms:
            assert classify_biword(top, bottom) == sigma
    total = 0
    for top in itertools.product((1, 2, 3), repeat=2):
        for bottom in itertools.product((1, 2, 3), repeat=2):
            sigma = classify_biword(top, bottom)
            assert len(sigma) == 2
            total += 1
    assert total == 81


def test_hopf_axioms_degree_4():
    report = hopf_check(phisym.algebra(), 4)
    assert report.passed
    assert report.cocommutative and not report.commutative
