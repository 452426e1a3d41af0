"""The commutative parking-function algebra, its graph and forest structures.

Parking functions are closed under the endofunction product and coproduct;
summing over labellings of functional graphs yields a polynomial algebra on
connected unlabelled graphs, and killing the non-nondecreasing labels yields
a quotient with Catalan-many classes per degree whose class sums over
support forests close into a Hopf algebra of rooted forests.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from . import eqsym
from .axioms import GradedBasis
from .lincomb import LinComb, tensor_kind
from .words import (
    Word,
    cut_points,
    enumerate_family,
    is_nondecreasing,
    is_parking,
    nondecreasing_parking_functions,
    parking_functions,
    unshift,
)

MPA_KIND = "cpqsym:Mpa"
CC_KIND = "ccqsym:Mpa"
CC_DUAL_KIND = "ccqsym:S"
GRAPH_KIND = "parkgraph:N"
FOREST_KIND = "forest:M"


# ---------------------------------------------------------------------------
# cpqsym: restriction of the endofunction structure

def product_Mpa(p: Word, q: Word) -> LinComb:
    out = eqsym.product_M(p, q)
    return LinComb(MPA_KIND, out.terms)


def coproduct_Mpa(p: Word) -> LinComb:
    return LinComb(tensor_kind(MPA_KIND), eqsym.coproduct_M(p).terms)


def parking_closure_check(degree_bound: int) -> bool:
    """Every term of a product of parking labels is again a parking label."""
    for n in range(1, degree_bound):
        for m in range(1, degree_bound - n + 1):
            for p in parking_functions(n):
                for q in parking_functions(m):
                    if any(not is_parking(h) for h in product_Mpa(p, q).terms):
                        return False
    return True


def algebra() -> GradedBasis:
    return GradedBasis(MPA_KIND, (), len, parking_functions, product_Mpa, coproduct_Mpa)


# ---------------------------------------------------------------------------
# functional-graph certificates

def _cyclic_nodes(p: Word) -> set[int]:
    n = len(p)
    landing = set()
    for start in range(1, n + 1):
        cur = start
        for _ in range(n):
            cur = p[cur - 1]
        landing.add(cur)
    return landing


def _tree_canons(p: Word, cyclic: set[int]) -> dict[int, tuple]:
    n = len(p)
    children: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u in range(1, n + 1):
        if u not in cyclic:
            children[p[u - 1]].append(u)

    canon: dict[int, tuple] = {}

    def visit(v: int) -> tuple:
        if v not in canon:
            canon[v] = tuple(sorted(visit(u) for u in children[v]))
        return canon[v]

    for v in range(1, n + 1):
        visit(v)
    return canon


def graph_certificate(p: Word) -> tuple:
    """Canonical form of the functional graph up to relabelling.

    Components are directed cycles of rooted trees; trees canonize as nested
    sorted tuples and each cycle takes its lexicographically minimal rotation.
    """
    cyclic = _cyclic_nodes(p)
    canon = _tree_canons(p, cyclic)
    seen: set[int] = set()
    components = []
    for v in sorted(cyclic):
        if v in seen:
            continue
        orbit = [v]
        seen.add(v)
        cur = p[v - 1]
        while cur != v:
            orbit.append(cur)
            seen.add(cur)
            cur = p[cur - 1]
        seq = tuple(canon[u] for u in orbit)
        rotations = [seq[k:] + seq[:k] for k in range(len(seq))]
        components.append(min(rotations))
    return tuple(sorted(components))


def certificate_text(cert: tuple) -> str:
    def tree_text(t: tuple) -> str:
        return "(" + "".join(tree_text(c) for c in t) + ")"

    return "".join("<" + ",".join(tree_text(t) for t in comp) + ">" for comp in cert)


def is_connected_graph(cert: tuple) -> bool:
    return len(cert) == 1


@lru_cache(maxsize=None)
def unlabelled_certificates(n: int) -> dict[tuple, int]:
    """Certificates of parking functions of size n with class sizes."""
    census: dict[tuple, int] = {}
    for p in enumerate_family("parking", n):
        cert = graph_certificate(p)
        census[cert] = census.get(cert, 0) + 1
    return census


@lru_cache(maxsize=None)
def endofunction_certificates(n: int) -> dict[tuple, int]:
    """Certificates over all endofunctions: the labelling classes summed by
    the unlabelled basis."""
    census: dict[tuple, int] = {}
    for f in enumerate_family("endofunctions", n):
        cert = graph_certificate(f)
        census[cert] = census.get(cert, 0) + 1
    return census


def unlabelled_count(n: int) -> int:
    if n == 0:
        return 1
    return len(unlabelled_certificates(n))


def graph_representative(cert: tuple, n: int) -> Word:
    for p in enumerate_family("parking", n):
        if graph_certificate(p) == cert:
            return p
    raise ValueError("no parking function realizes the certificate")


def cert_size(cert: tuple) -> int:
    def tree_size(t: tuple) -> int:
        return 1 + sum(tree_size(c) for c in t)

    return sum(sum(tree_size(t) for t in comp) for comp in cert)


def unlabelled_product(cert1: tuple, cert2: tuple) -> LinComb:
    """Product of labelling sums: a multiple of the disjoint union.

    The multiplicity counts complementary stable splits of one representative
    whose standardized halves realize the two factors.
    """
    n, m = cert_size(cert1), cert_size(cert2)
    from .words import shifted_concat

    h = shifted_concat(graph_representative(cert1, n), graph_representative(cert2, m))
    target = tuple(sorted(cert1 + cert2))
    kappa = 0
    for subset, complement in eqsym.stable_splits(h):
        if len(subset) != n:
            continue
        left = eqsym.restrict_std(h, subset)
        right = eqsym.restrict_std(h, complement)
        if graph_certificate(left) == cert1 and graph_certificate(right) == cert2:
            kappa += 1
    return LinComb.basis(GRAPH_KIND, target, kappa)


def unlabelled_product_brute(cert1: tuple, cert2: tuple) -> LinComb:
    """Full expansion over both endofunction labelling classes, regrouped."""
    n, m = cert_size(cert1), cert_size(cert2)
    by_cert: dict[tuple, int] = {}
    from .words import endofunctions

    for p in endofunctions(n):
        if graph_certificate(p) != cert1:
            continue
        for q in endofunctions(m):
            if graph_certificate(q) != cert2:
                continue
            for h, c in eqsym.product_M(p, q).terms.items():
                cert = graph_certificate(h)
                by_cert[cert] = by_cert.get(cert, 0) + c
    out: dict[tuple, int] = {}
    for cert, total in by_cert.items():
        size = endofunction_certificates(cert_size(cert)).get(cert, 0)
        if total % size:
            raise AssertionError("labelling sum is not a multiple of the class sum")
        out[cert] = total // size
    return LinComb(GRAPH_KIND, out)


def unlabelled_coproduct(cert: tuple) -> LinComb:
    """Unshuffle of connected components: every distinct multiset split once.

    Labelled pieces pair off bijectively with (labelled graph, cut) pairs, so
    the class-sum coefficients are all 1.
    """
    components = list(cert)
    distinct = sorted(set(components))
    mult = {c: components.count(c) for c in distinct}
    terms: dict[tuple, int] = {}
    for counts in itertools.product(*(range(mult[c] + 1) for c in distinct)):
        left: list = []
        right: list = []
        for c, k in zip(distinct, counts):
            left += [c] * k
            right += [c] * (mult[c] - k)
        terms[(tuple(sorted(left)), tuple(sorted(right)))] = 1
    return LinComb(tensor_kind(GRAPH_KIND), terms)


def connected_graph_counts(bound: int) -> list[int]:
    return [
        sum(1 for cert in unlabelled_certificates(n) if is_connected_graph(cert))
        for n in range(1, bound + 1)
    ]


def free_polynomial_check(bound: int) -> bool:
    """Unlabelled dimensions match multisets of connected generators."""
    conn = connected_graph_counts(bound)
    dims = [1] + [0] * bound
    for k, count in enumerate(conn, start=1):
        # multiply by 1/(1 - t^k)^count
        for _ in range(count):
            for d in range(k, bound + 1):
                dims[d] += dims[d - k]
    return all(dims[n] == unlabelled_count(n) for n in range(bound + 1))


# ---------------------------------------------------------------------------
# ccqsym: quotient by the non-nondecreasing ideal

def cc_product(p: Word, q: Word) -> LinComb:
    """Product of nondecreasing classes; non-nondecreasing terms vanish."""
    if not (is_nondecreasing(p) and is_nondecreasing(q)):
        raise ValueError("class labels must be nondecreasing parking functions")
    out: dict[Word, int] = {}
    for h, c in product_Mpa(p, q).terms.items():
        if is_nondecreasing(h):
            out[h] = out.get(h, 0) + c
    return LinComb(CC_KIND, out)


def cc_coproduct(p: Word) -> LinComb:
    return LinComb(tensor_kind(CC_KIND), eqsym.coproduct_M(p).terms)


def cc_ideal_check(degree_bound: int) -> bool:
    """Products against a non-nondecreasing label stay in the ideal."""
    for n in range(1, degree_bound):
        for m in range(1, degree_bound - n + 1):
            for p in parking_functions(n):
                if is_nondecreasing(p):
                    continue
                for q in parking_functions(m):
                    for h in product_Mpa(p, q).terms:
                        if is_nondecreasing(h):
                            return False
                    for h in product_Mpa(q, p).terms:
                        if is_nondecreasing(h):
                            return False
    return True


def cc_dual_product(p: Word, q: Word) -> LinComb:
    """Dual-side class product: shifted concatenation of nondecreasing labels."""
    from .words import shifted_concat

    return LinComb.basis(CC_DUAL_KIND, shifted_concat(p, q))


def cc_dual_coproduct(p: Word) -> LinComb:
    """Dual-side coproduct: stable splits, which stay nondecreasing."""
    cop = eqsym.coproduct_S(p)
    for (a, b) in cop.terms:
        if not (is_nondecreasing(a) and is_nondecreasing(b)):
            raise AssertionError("stable split left the nondecreasing labels")
    return LinComb(tensor_kind(CC_DUAL_KIND), cop.terms)


def connected_nondecreasing_count(n: int) -> int:
    return sum(
        1
        for p in nondecreasing_parking_functions(n)
        if cut_points(p) == [0, n]
    )


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def cc_freeness_check(bound: int) -> bool:
    """Catalan dimensions match words in connected nondecreasing generators."""
    conn = [connected_nondecreasing_count(k) for k in range(1, bound + 1)]
    dims = [1] + [0] * bound
    for n in range(1, bound + 1):
        dims[n] = sum(conn[k - 1] * dims[n - k] for k in range(1, n + 1))
    return all(dims[n] == catalan(n) for n in range(bound + 1))


def cc_algebra() -> GradedBasis:
    return GradedBasis(
        CC_KIND, (), len, nondecreasing_parking_functions, cc_product, cc_coproduct
    )


def reordering_not_subalgebra_example(degree_bound: int = 4):
    """Search for sums over rearrangement classes whose product leaves the span.

    Returns a witness pair of nondecreasing labels, or None if the sums close
    at these degrees.
    """
    for n in range(1, degree_bound):
        for m in range(1, degree_bound - n + 1):
            for p in nondecreasing_parking_functions(n):
                for q in nondecreasing_parking_functions(m):
                    total = LinComb.zero(MPA_KIND)
                    for pp in set(itertools.permutations(p)):
                        for qq in set(itertools.permutations(q)):
                            total = total + product_Mpa(pp, qq)
                    by_class: dict[Word, dict[Word, int]] = {}
                    for h, c in total.terms.items():
                        key = tuple(sorted(h))
                        by_class.setdefault(key, {})[h] = c
                    for key, coeffs in by_class.items():
                        class_words = {
                            w
                            for w in set(itertools.permutations(key))
                            if is_parking(w)
                        }
                        values = {coeffs.get(w, 0) for w in class_words}
                        if len(values) > 1:
                            return (p, q)
    return None


# ---------------------------------------------------------------------------
# rooted forests from nondecreasing parking functions

def forest_certificate(p: Word) -> tuple:
    """Support forest: edges to the image, roots at loops, canonized."""
    if not (is_nondecreasing(p) and is_parking(p)):
        raise ValueError("forest supports require nondecreasing parking functions")
    n = len(p)
    children: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    roots = []
    for i in range(1, n + 1):
        if p[i - 1] == i:
            roots.append(i)
        else:
            children[p[i - 1]].append(i)

    def canon(v: int) -> tuple:
        return tuple(sorted(canon(u) for u in children[v]))

    return tuple(sorted(canon(r) for r in roots))


def forest_text(cert: tuple) -> str:
    def tree_text(t: tuple) -> str:
        return "(" + "".join(tree_text(c) for c in t) + ")"

    return "".join(tree_text(t) for t in cert) or "()"


def forest_size(cert: tuple) -> int:
    def tree_size(t: tuple) -> int:
        return 1 + sum(tree_size(c) for c in t)

    return sum(tree_size(t) for t in cert)


def forest_members(cert: tuple) -> list[Word]:
    n = forest_size(cert)
    return [
        p
        for p in nondecreasing_parking_functions(n)
        if forest_certificate(p) == cert
    ]


def forest_product(cert1: tuple, cert2: tuple) -> LinComb:
    """Product of forest class sums, regrouped over forests.

    Raises if the expansion fails to be constant on forest classes (it never
    does at tested degrees; closure is part of the test suite).
    """
    total: dict[Word, int] = {}
    for p in forest_members(cert1):
        for q in forest_members(cert2):
            for h, c in cc_product(p, q).terms.items():
                total[h] = total.get(h, 0) + c
    out: dict[tuple, int] = {}
    for h, c in total.items():
        cert = forest_certificate(h)
        if cert in out and out[cert] != c:
            raise AssertionError("forest sums do not close")
        out[cert] = c
    for cert, c in out.items():
        for member in forest_members(cert):
            if total.get(member, 0) != c:
                raise AssertionError("forest sums do not close")
    return LinComb(FOREST_KIND, out)
