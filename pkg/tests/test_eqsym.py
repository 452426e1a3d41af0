import math

import pytest

from conftest import lc, tensor_terms
from hopfcomb import eqsym
from hopfcomb.axioms import duality_check, hopf_check
from hopfcomb.lincomb import LinComb, pairing, tensor
from hopfcomb.words import endofunctions, word_from_text as W

M = "eqsym:M"
S = "eqsym:S"


def test_product_golden_examples():
    assert eqsym.product_M(W("1"), W("22")) == lc(M, ("133", 1), ("323", 1), ("223", 1))
    assert eqsym.product_M(W("1"), W("331")) == lc(
        M, ("1442", 1), ("4241", 1), ("4431", 1), ("3314", 1)
    )
    assert eqsym.product_M(W("12"), W("21")) == lc(
        M, ("1243", 1), ("1432", 1), ("4231", 1), ("1324", 1), ("3214", 1), ("2134", 1)
    )
    assert eqsym.product_M(W("12"), W("22")) == lc(
        M, ("1244", 1), ("1434", 1), ("4234", 1), ("1334", 1), ("3234", 1), ("2234", 1)
    )
    assert eqsym.product_M(W("12"), W("133")) == lc(
        M,
        ("12355", 3), ("12445", 2), ("12545", 2),
        ("13345", 1), ("14345", 1), ("15345", 1),
    )


def test_coproduct_golden_examples():
    assert eqsym.coproduct_M(W("626124")) == tensor_terms(
        M, ("626124", "()", 1), ("()", "626124", 1)
    )
    assert eqsym.coproduct_M(W("4232277")) == tensor_terms(
        M, ("4232277", "()", 1), ("42322", "22", 1), ("()", "4232277", 1)
    )
    assert eqsym.coproduct_M(()) == tensor_terms(M, ("()", "()", 1))


def test_dual_product_is_shifted_concatenation():
    assert eqsym.product_S(W("12"), W("21")) == lc(S, ("1243", 1))
    assert eqsym.product_S((), W("22")) == lc(S, ("22", 1))


def test_dual_coproduct_transposes_the_product():
    # <Delta S^h, M_f (x) M_g> = coefficient of M_h in M_f M_g, degree <= 4
    for total in range(2, 5):
        for i in range(1, total):
            for f in endofunctions(i):
                for g in endofunctions(total - i):
                    prod = eqsym.product_M(f, g)
                    left = tensor(LinComb.basis(M, f), LinComb.basis(M, g))
                    for h in endofunctions(total):
                        cop = LinComb(f"{M}(x){M}", eqsym.coproduct_S(h).terms)
                        assert prod[h] == pairing(left, cop), (f, g, h)


def test_dual_coproduct_example():
    assert eqsym.coproduct_S(W("133"))[(W("1"), W("22"))] == 1


def test_commutativity_small():
    for f, g in [(W("12"), W("22")), (W("1"), W("331")), (W("21"), W("11"))]:
        assert eqsym.product_M(f, g) == eqsym.product_M(g, f)


def test_total_mass_binomial():
    for i in range(1, 6):
        for j in range(1, 7 - i):
            for f in list(endofunctions(i))[:8]:
                for g in list(endofunctions(j))[:8]:
                    total = sum(eqsym.product_M(f, g).terms.values())
                    assert total == math.comb(i + j, i)


def test_connected_series():
    assert [eqsym.connected_count(n) for n in range(1, 7)] == [1, 3, 20, 197, 2511, 38924]
    assert eqsym.connected_count(8) == 14769175


def test_free_lie_dimensions():
    assert [eqsym.lie_dims(n) for n in range(1, 7)] == [1, 3, 23, 223, 2800, 42576]
    assert eqsym.lie_dims(8) == 15734388


def test_connected_series_matches_brute_force():
    for n in range(1, 6):
        assert eqsym.brute_connected_count(n) == eqsym.connected_count(n)


def test_freeness_dimension_identity():
    assert eqsym.free_generation_check(8)


def test_oracle_examples():
    assert eqsym.oracle_check(W("1"), W("22"), 5)
    assert eqsym.oracle_check(W("12"), W("21"), 6)
    assert eqsym.oracle_check((), W("22"), 4)
    with pytest.raises(ValueError):
        eqsym.oracle_check(W("12"), W("21"), 3)


def test_oracle_all_pairs_total_degree_4():
    for i in range(1, 4):
        for j in range(1, 5 - i):
            for f in endofunctions(i):
                for g in endofunctions(j):
                    assert eqsym.oracle_check(f, g)


def test_hopf_axioms_degree_4():
    report = hopf_check(eqsym.algebra(), 4)
    assert report.passed
    assert report.commutative and not report.cocommutative
    dual = hopf_check(eqsym.dual_algebra(), 4)
    assert dual.passed
    assert dual.cocommutative and not dual.commutative


def test_duality_degree_3():
    res = duality_check(
        eqsym.algebra(),
        eqsym.coproduct_S,
        3,
        dual_product=eqsym.product_S,
        primal_coproduct=eqsym.coproduct_M,
    )
    assert res.passed, res
