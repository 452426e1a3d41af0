import itertools

import pytest

from conftest import lc, tensor_terms
from hopfcomb import eqsym, parkfunc
from hopfcomb.axioms import duality_check, hopf_check
from hopfcomb.lincomb import LinComb
from hopfcomb.words import (
    endofunctions,
    nondecreasing_parking_functions,
    parking_functions,
    word_from_text as W,
)

MPA = "cpqsym:Mpa"


def test_product_golden_examples():
    assert parkfunc.product_Mpa(W("1"), W("11")) == lc(
        MPA, ("122", 1), ("121", 1), ("113", 1)
    )
    assert parkfunc.product_Mpa(W("1"), W("221")) == lc(
        MPA, ("1332", 1), ("3231", 1), ("2231", 1), ("2214", 1)
    )
    assert parkfunc.product_Mpa(W("12"), W("21")) == lc(
        MPA, ("1243", 1), ("1432", 1), ("4231", 1), ("1324", 1), ("3214", 1), ("2134", 1)
    )


def test_coproduct_golden_examples():
    assert parkfunc.coproduct_Mpa(W("525124")) == tensor_terms(
        MPA, ("525124", "()", 1), ("()", "525124", 1)
    )
    assert parkfunc.coproduct_Mpa(W("4131166")) == tensor_terms(
        MPA, ("4131166", "()", 1), ("41311", "11", 1), ("()", "4131166", 1)
    )


def test_parking_functions_closed_under_product():
    assert parkfunc.parking_closure_check(5)


def test_unlabelled_counts():
    assert [parkfunc.unlabelled_count(n) for n in range(7)] == [1, 1, 3, 7, 19, 47, 130]


def test_parking_and_endofunction_certificates_coincide():
    for n in range(1, 6):
        assert set(parkfunc.unlabelled_certificates(n)) == set(
            parkfunc.endofunction_certificates(n)
        )


def test_certificates_decide_graph_isomorphism():
    def isomorphic(p, q):
        n = len(p)
        return any(
            all(phi[p[i - 1] - 1] == q[phi[i - 1] - 1] for i in range(1, n + 1))
            for phi in itertools.permutations(range(1, n + 1))
        )

    for n in (2, 3, 4):
        pfs = list(parking_functions(n))
        for p in pfs:
            for q in pfs:
                same = parkfunc.graph_certificate(p) == parkfunc.graph_certificate(q)
                assert same == isomorphic(p, q), (p, q)


def test_unlabelled_product_matches_brute_expansion():
    certs = [
        parkfunc.graph_certificate(W("1")),
        parkfunc.graph_certificate(W("11")),
        parkfunc.graph_certificate(W("21")),
        parkfunc.graph_certificate(W("121")),
    ]
    for a in certs:
        for b in certs:
            if parkfunc.cert_size(a) + parkfunc.cert_size(b) > 5:
                continue
            assert parkfunc.unlabelled_product(a, b) == parkfunc.unlabelled_product_brute(a, b)


def test_unlabelled_coproduct_matches_brute_expansion():
    def brute(cert):
        n = parkfunc.cert_size(cert)
        by_pair: dict = {}
        for h in endofunctions(n):
            if parkfunc.graph_certificate(h) != cert:
                continue
            for (a, b), c in eqsym.coproduct_M(h).terms.items():
                key = (parkfunc.graph_certificate(a), parkfunc.graph_certificate(b))
                by_pair[key] = by_pair.get(key, 0) + c
        out = {}
        for (ca, cb), total in by_pair.items():
            size = parkfunc.endofunction_certificates(parkfunc.cert_size(ca)).get(ca, 1)
            size *= parkfunc.endofunction_certificates(parkfunc.cert_size(cb)).get(cb, 1)
            assert total % size == 0
            out[(ca, cb)] = total // size
        return out

    for n in (2, 3, 4):
        for cert in parkfunc.endofunction_certificates(n):
            assert dict(parkfunc.unlabelled_coproduct(cert).terms) == brute(cert), cert


def test_unlabelled_graphs_form_polynomial_algebra():
    assert parkfunc.free_polynomial_check(6)


def test_ccqsym_product_kills_the_ideal():
    r = parkfunc.cc_product(W("1"), W("11"))
    assert r.terms == {W("122"): 1, W("113"): 1}
    with pytest.raises(ValueError):
        parkfunc.cc_product(W("21"), W("1"))


def test_ideal_is_stable():
    assert parkfunc.cc_ideal_check(4)


def test_catalan_dimensions():
    assert [
        sum(1 for _ in nondecreasing_parking_functions(n)) for n in range(1, 5)
    ] == [1, 2, 5, 14]


def test_ccqsym_dual_freeness():
    assert parkfunc.cc_freeness_check(7)
    assert [parkfunc.connected_nondecreasing_count(n) for n in range(1, 5)] == [1, 1, 2, 5]


def test_ccqsym_duality():
    res = duality_check(
        parkfunc.cc_algebra(),
        parkfunc.cc_dual_coproduct,
        4,
        dual_product=parkfunc.cc_dual_product,
        primal_coproduct=parkfunc.cc_coproduct,
    )
    assert res.passed, res


def test_reordering_sums_do_not_close():
    witness = parkfunc.reordering_not_subalgebra_example(3)
    assert witness is not None


def test_forest_product_single_node_squared():
    f1 = parkfunc.forest_certificate(W("1"))
    r = parkfunc.forest_product(f1, f1)
    two_roots = parkfunc.forest_certificate(W("12"))
    assert r == LinComb.basis("forest:M", two_roots, 2)


def test_forest_unit():
    f1 = parkfunc.forest_certificate(W("1"))
    assert parkfunc.forest_product((), f1) == LinComb.basis("forest:M", f1, 1)


def test_forest_sums_close_up_to_degree_5():
    forests_by_size: dict[int, set] = {}
    for n in range(1, 5):
        forests_by_size[n] = {
            parkfunc.forest_certificate(p) for p in nondecreasing_parking_functions(n)
        }
    for n in range(1, 4):
        for m in range(1, min(5 - n, 4) + 1):
            for f1 in forests_by_size[n]:
                for f2 in forests_by_size[m]:
                    parkfunc.forest_product(f1, f2)  # raises if sums do not close


def test_forest_certificate_requires_nondecreasing():
    with pytest.raises(ValueError):
        parkfunc.forest_certificate(W("21"))


def test_hopf_axioms_degree_4():
    report = hopf_check(parkfunc.algebra(), 4)
    assert report.passed and report.commutative
    report = hopf_check(parkfunc.cc_algebra(), 4)
    assert report.passed and report.commutative


def test_certificate_texts_are_faithful():
    certs = set(parkfunc.endofunction_certificates(4))
    assert len({parkfunc.certificate_text(c) for c in certs}) == len(certs)
    forests = {
        parkfunc.forest_certificate(p) for p in nondecreasing_parking_functions(4)
    }
    assert len(forests) == 9  # rooted forests on four nodes
    assert len({parkfunc.forest_text(f) for f in forests}) == len(forests)
