"""The commutative Hopf algebra of permutations and its sub/quotient structures.

Permutations carry the restriction of the endofunction structure; on top of
that live the orbit algebra on set partitions (dual to word symmetric
functions), the quasi-symmetric and symmetric embeddings, the involution
subalgebra, and the quotient of word symmetric functions with its Bell
polynomial combinatorics.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from . import eqsym, symfunc
from .axioms import GradedBasis
from .lincomb import LinComb, tensor_kind
from .realize import (
    diagonal_weighted_sum,
    realize_lincomb,
    trace_power,
)
from .words import (
    Composition,
    IntegerPartition,
    SetPartition,
    Word,
    block_composition,
    canonical_set_partition,
    cycle_supports,
    cycle_type,
    cycles,
    from_cycles,
    is_involution,
    ordered_cycle_type,
    partition_multiplicities,
    partition_of_word,
    permutations,
    relabel_partition,
    restrict_partition,
    set_partitions,
    shuffle,
    sort_composition,
    standardize,
)

M_KIND = "sgqsym:M"
S_KIND = "sgqsym:S"
UPI_KIND = "piqsym:upi"
MW_KIND = "wsym:Mw"
UQ_KIND = "qsym:uq"
UL_KIND = "sym:ul"
V_KIND = "ncsf:V"


# ---------------------------------------------------------------------------
# the M basis on permutations: three routes to the same product

def product_M(alpha: Word, beta: Word) -> LinComb:
    """Shuffle-conjugation product, restricted from endofunctions."""
    return LinComb(M_KIND, eqsym.product_M(alpha, beta).terms)


def product_M_splitting(alpha: Word, beta: Word) -> LinComb:
    """Second route: push the cycles into a set split of [n+m]."""
    n, m = len(alpha), len(beta)
    terms: dict[Word, int] = {}
    ground = range(1, n + m + 1)
    for chosen in itertools.combinations(ground, n):
        complement = tuple(i for i in ground if i not in set(chosen))
        relabeled = [tuple(chosen[a - 1] for a in c) for c in cycles(alpha)]
        relabeled += [tuple(complement[a - 1] for a in c) for c in cycles(beta)]
        gamma = from_cycles(relabeled, n + m)
        terms[gamma] = terms.get(gamma, 0) + 1
    return LinComb(M_KIND, terms)


def _cycle_subset_std(sigma_cycles: Sequence, chosen: Sequence[int]) -> Word:
    support = sorted(a for i in chosen for a in sigma_cycles[i])
    rank = {a: i for i, a in enumerate(support, start=1)}
    return from_cycles(
        [tuple(rank[a] for a in sigma_cycles[i]) for i in chosen], len(support)
    )


def product_M_dual_count(alpha: Word, beta: Word) -> LinComb:
    """Third route: count complementary cycle subsets standardizing to the pair."""
    n, m = len(alpha), len(beta)
    terms: dict[Word, int] = {}
    for gamma in permutations(n + m):
        cyc = cycles(gamma)
        count = 0
        for size in range(len(cyc) + 1):
            for chosen in itertools.combinations(range(len(cyc)), size):
                if sum(len(cyc[i]) for i in chosen) != n:
                    continue
                rest = tuple(i for i in range(len(cyc)) if i not in chosen)
                if (
                    _cycle_subset_std(cyc, chosen) == alpha
                    and _cycle_subset_std(cyc, rest) == beta
                ):
                    count += 1
        if count:
            terms[gamma] = count
    return LinComb(M_KIND, terms)


def coproduct_M(sigma: Word) -> LinComb:
    return LinComb(tensor_kind(M_KIND), eqsym.coproduct_M(sigma).terms)


def product_S(alpha: Word, beta: Word) -> LinComb:
    return LinComb(S_KIND, eqsym.product_S(alpha, beta).terms)


def coproduct_S(sigma: Word) -> LinComb:
    return LinComb(tensor_kind(S_KIND), eqsym.coproduct_S(sigma).terms)


# ---------------------------------------------------------------------------
# circular standardization

def min_rotation(word: Sequence) -> tuple:
    word = tuple(word)
    return min(word[k:] + word[:k] for k in range(len(word)))


def cstd(circular_words: Iterable[Sequence]) -> Word:
    """Standardize a product of circular words and read the factors as cycles.

    Words are first rotated to their lexicographic minimal representatives and
    sorted; the concatenation is standardized and re-cut into factors, each
    factor read as a cycle word of the resulting permutation.
    """
    reps = sorted(min_rotation(w) for w in circular_words)
    flat = tuple(a for w in reps for a in w)
    std = standardize(flat)
    out_cycles = []
    pos = 0
    for w in reps:
        out_cycles.append(std[pos : pos + len(w)])
        pos += len(w)
    return from_cycles(out_cycles, len(flat))


# ---------------------------------------------------------------------------
# PiQSym: orbit sums indexed by set partitions (dual word symmetric functions)

def upi_expand(pi: SetPartition) -> LinComb:
    """uπ as a sum of M over permutations with the given cycle supports."""
    n = sum(len(b) for b in pi)
    terms = {
        sigma: 1 for sigma in permutations(n) if cycle_supports(sigma) == pi
    }
    return LinComb(M_KIND, terms)


def product_upi(pi1: SetPartition, pi2: SetPartition) -> LinComb:
    n = sum(len(b) for b in pi1)
    m = sum(len(b) for b in pi2)
    terms: dict[SetPartition, int] = {}
    ground = range(1, n + m + 1)
    for chosen in itertools.combinations(ground, n):
        complement = tuple(i for i in ground if i not in set(chosen))
        merged = canonical_set_partition(
            relabel_partition(pi1, chosen) + relabel_partition(pi2, complement)
        )
        terms[merged] = terms.get(merged, 0) + 1
    return LinComb(UPI_KIND, terms)


def coproduct_upi(pi: SetPartition) -> LinComb:
    """Cuts of the ground set into an initial and final interval of blocks."""
    n = sum(len(b) for b in pi)
    terms: dict[tuple[SetPartition, SetPartition], int] = {}
    for k in range(n + 1):
        left = [b for b in pi if all(a <= k for a in b)]
        right = [b for b in pi if all(a > k for a in b)]
        if sum(len(b) for b in left) != k:
            continue
        key = (
            canonical_set_partition(left),
            restrict_partition(canonical_set_partition(right), range(k + 1, n + 1)),
        )
        terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(UPI_KIND), terms)


# ---------------------------------------------------------------------------
# WSym: word symmetric functions by orbit sums

def product_Mw(pi1: SetPartition, pi2: SetPartition) -> LinComb:
    """Merge blocks across the two factors by partial matchings."""
    n = sum(len(b) for b in pi1)
    shifted = tuple(tuple(a + n for a in b) for b in pi2)
    b1 = list(relabel_partition(pi1, range(1, n + 1)))
    terms: dict[SetPartition, int] = {}
    k_max = min(len(b1), len(shifted))
    for k in range(k_max + 1):
        for left in itertools.combinations(range(len(b1)), k):
            rest_left = [b1[i] for i in range(len(b1)) if i not in left]
            for right in itertools.permutations(range(len(shifted)), k):
                merged = [tuple(sorted(b1[i] + shifted[j])) for i, j in zip(left, right)]
                rest_right = [
                    shifted[j] for j in range(len(shifted)) if j not in set(right)
                ]
                pi = canonical_set_partition(merged + rest_left + rest_right)
                terms[pi] = terms.get(pi, 0) + 1
    return LinComb(MW_KIND, terms)


def coproduct_Mw(pi: SetPartition) -> LinComb:
    """Ordered alphabet-sum coproduct: blocks split into two standardized groups."""
    terms: dict[tuple[SetPartition, SetPartition], int] = {}
    blocks = list(pi)
    for size in range(len(blocks) + 1):
        for chosen in itertools.combinations(range(len(blocks)), size):
            inside = [blocks[i] for i in chosen]
            outside = [blocks[i] for i in range(len(blocks)) if i not in chosen]
            left = restrict_partition(
                canonical_set_partition(inside), [a for b in inside for a in b]
            )
            right = restrict_partition(
                canonical_set_partition(outside), [a for b in outside for a in b]
            )
            key = (left, right)
            terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(MW_KIND), terms)


def mw_words(pi: SetPartition, n_letters: int) -> list[Word]:
    """The orbit of words whose equal-letter positions realize the partition."""
    n = sum(len(b) for b in pi)
    return [
        w
        for w in itertools.product(range(1, n_letters + 1), repeat=n)
        if partition_of_word(w) == pi
    ]


def mw_word_product_check(pi1: SetPartition, pi2: SetPartition) -> bool:
    """Compare the matching rule with the concatenation of realized orbits."""
    n = sum(len(b) for b in pi1)
    m = sum(len(b) for b in pi2)
    n_letters = n + m
    expected: dict[Word, int] = {}
    for u in mw_words(pi1, n_letters):
        for v in mw_words(pi2, n_letters):
            w = u + v
            expected[w] = expected.get(w, 0) + 1
    combined: dict[Word, int] = {}
    for pi, c in product_Mw(pi1, pi2).terms.items():
        for w in mw_words(pi, n_letters):
            combined[w] = combined.get(w, 0) + c
    return combined == expected


# ---------------------------------------------------------------------------
# QSym embedding on compositions

def uq_expand(comp: Composition) -> LinComb:
    n = sum(comp)
    terms = {
        sigma: 1 for sigma in permutations(n) if ordered_cycle_type(sigma) == comp
    }
    return LinComb(M_KIND, terms)


def product_uq(comp1: Composition, comp2: Composition) -> LinComb:
    terms: dict[Composition, int] = {}
    for comp in shuffle(tuple(comp1), tuple(comp2)):
        terms[comp] = terms.get(comp, 0) + 1
    return LinComb(UQ_KIND, terms)


def coproduct_uq(comp: Composition) -> LinComb:
    terms: dict[tuple[Composition, Composition], int] = {}
    for k in range(len(comp) + 1):
        key = (comp[:k], comp[k:])
        terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(UQ_KIND), terms)


# ---------------------------------------------------------------------------
# Sym embedding on integer partitions

def ul_expand(lam: IntegerPartition) -> LinComb:
    n = sum(lam)
    terms = {sigma: 1 for sigma in permutations(n) if cycle_type(sigma) == lam}
    return LinComb(M_KIND, terms)


def product_ul(lam1: IntegerPartition, lam2: IntegerPartition) -> LinComb:
    union = tuple(sorted(lam1 + lam2, reverse=True))
    m1 = partition_multiplicities(lam1)
    mu = partition_multiplicities(union)
    coeff = 1
    for part, mult in mu.items():
        coeff *= comb(mult, m1.get(part, 0))
    return LinComb.basis(UL_KIND, union, coeff)


def coproduct_ul(lam: IntegerPartition) -> LinComb:
    """Every distinct ordered multiset split of the parts, each once.

    Matches the cut coproduct of the class sums: a pair of labels arises from
    exactly one (permutation, cut) pair per labelled pair.
    """
    mult = partition_multiplicities(lam)
    parts = sorted(mult)
    terms: dict[tuple[IntegerPartition, IntegerPartition], int] = {}
    for counts in itertools.product(*(range(mult[p] + 1) for p in parts)):
        left: list[int] = []
        right: list[int] = []
        for p, c in zip(parts, counts):
            left += [p] * c
            right += [p] * (mult[p] - c)
        terms[(sort_composition(left), sort_composition(right))] = 1
    return LinComb(tensor_kind(UL_KIND), terms)


# ---------------------------------------------------------------------------
# the embedding j of ordinary symmetric functions, checked in the oracle ring

def sign_of(sigma: Word) -> int:
    return -1 if (len(sigma) - len(cycles(sigma))) % 2 else 1


@lru_cache(maxsize=None)
def character(lam: IntegerPartition, mu: IntegerPartition) -> int:
    """Irreducible character value: coefficient of the Schur function indexed
    by lam in the power-sum product of mu."""
    value = symfunc.convert(symfunc.basis_in_m("p", mu), "s")[lam]
    frac = Fraction(value)
    if frac.denominator != 1:
        raise AssertionError("character value is not integral")
    return int(frac)


def j_power_sum_check(n: int, n_trunc: int) -> bool:
    """tr(X^n) equals n times the realization of the full-cycle class sum."""
    lhs = trace_power(n, n_trunc)
    rhs = realize_lincomb(ul_expand((n,)), n_trunc).scale(n)
    return lhs == rhs


def j_elementary_check(n: int, n_trunc: int) -> bool:
    """Sum of diagonal minors equals the signed sum over all permutations."""
    lhs = diagonal_weighted_sum(n, n_trunc, sign_of)
    signed = LinComb(M_KIND, {sigma: sign_of(sigma) for sigma in permutations(n)})
    return lhs == realize_lincomb(signed, n_trunc)


def j_complete_check(n: int, n_trunc: int) -> bool:
    """Permanent minors equal the plain sum over all permutations."""
    lhs = diagonal_weighted_sum(n, n_trunc, lambda sigma: 1)
    full = LinComb(M_KIND, {sigma: 1 for sigma in permutations(n)})
    return lhs == realize_lincomb(full, n_trunc)


def j_schur_check(lam: IntegerPartition, n_trunc: int) -> bool:
    """Diagonal immanants of a hook or two-row shape match the character sum."""
    lam = tuple(sorted(lam, reverse=True))
    n = sum(lam)
    is_hook = len(lam) <= 1 or all(p == 1 for p in lam[1:])
    if not (is_hook or len(lam) <= 2) or n > 4:
        raise ValueError("immanant check is limited to hook/two-row shapes of weight <= 4")
    lhs = diagonal_weighted_sum(n, n_trunc, lambda s: character(lam, cycle_type(s)))
    weighted = LinComb(
        M_KIND, {s: character(lam, cycle_type(s)) for s in permutations(n)}
    )
    return lhs == realize_lincomb(weighted, n_trunc)


# ---------------------------------------------------------------------------
# subalgebra closure

def subalgebra_closure_check(predicate: Callable, degree_bound: int) -> bool:
    """Whether products and coproducts of predicate-satisfying permutations
    expand only over predicate-satisfying labels, up to the degree bound."""
    for n in range(1, degree_bound + 1):
        for sigma in permutations(n):
            if not predicate(sigma):
                continue
            for (a, b), _ in coproduct_M(sigma).terms.items():
                if (a and not predicate(a)) or (b and not predicate(b)):
                    return False
    for i in range(1, degree_bound):
        for j in range(1, degree_bound - i + 1):
            for alpha in permutations(i):
                if not predicate(alpha):
                    continue
                for beta in permutations(j):
                    if not predicate(beta):
                        continue
                    if any(
                        not predicate(gamma)
                        for gamma in product_M(alpha, beta).terms
                    ):
                        return False
    return True


# ---------------------------------------------------------------------------
# the quotient of WSym and Bell polynomials

def composition_class(pi: SetPartition) -> Composition:
    return block_composition(pi)


def canonical_partition_of_composition(comp: Composition) -> SetPartition:
    blocks = []
    start = 1
    for part in comp:
        blocks.append(tuple(range(start, start + part)))
        start += part
    return canonical_set_partition(blocks)


def project_V(x: LinComb) -> LinComb:
    """Push a WSym element into the quotient basis indexed by compositions."""
    terms: dict[Composition, int] = {}
    for pi, c in x.terms.items():
        comp = composition_class(pi)
        terms[comp] = terms.get(comp, 0) + c
    return LinComb(V_KIND, {k: v for k, v in terms.items() if v})


def product_V(comp1: Composition, comp2: Composition) -> LinComb:
    return project_V(
        product_Mw(
            canonical_partition_of_composition(comp1),
            canonical_partition_of_composition(comp2),
        )
    )


def quotient_well_defined(degree_bound: int) -> bool:
    """Class products are independent of the representative set partitions."""
    for n in range(1, degree_bound):
        for m in range(1, degree_bound - n + 1):
            for pi1 in set_partitions(n):
                for pi2 in set_partitions(m):
                    expected = product_V(composition_class(pi1), composition_class(pi2))
                    if project_V(product_Mw(pi1, pi2)) != expected:
                        return False
    return True


def bell_polynomial(n: int) -> dict[IntegerPartition, int]:
    """Coefficients c_lam of the n-th power of the one-block class."""
    power = LinComb.basis(MW_KIND, ((1,),))
    for _ in range(n - 1):
        out = LinComb.zero(MW_KIND)
        for pi, c in power.terms.items():
            out = out + product_Mw(pi, ((1,),)).scale(c)
        power = out
    coeffs: dict[IntegerPartition, int] = {}
    for pi, c in power.terms.items():
        lam = sort_composition(block_composition(pi))
        coeffs[lam] = coeffs.get(lam, 0) + c
    return coeffs


def bell_series_oracle(n: int) -> dict[IntegerPartition, int]:
    """Coefficient of t^n/n! in exp(sum_k x_k t^k / k!), by series expansion."""
    # polynomials: partition label -> Fraction, graded by sum of parts
    exp_series: dict[IntegerPartition, Fraction] = {(): Fraction(1)}
    term: dict[IntegerPartition, Fraction] = {(): Fraction(1)}
    gens = {(k,): Fraction(1, factorial(k)) for k in range(1, n + 1)}
    for j in range(1, n + 1):
        nxt: dict[IntegerPartition, Fraction] = {}
        for lam, c in term.items():
            if sum(lam) >= n + 1:
                continue
            for (k,), ck in gens.items():
                if sum(lam) + k > n:
                    continue
                merged = sort_composition(lam + (k,))
                nxt[merged] = nxt.get(merged, Fraction(0)) + c * ck / j
        term = nxt
        for lam, c in term.items():
            exp_series[lam] = exp_series.get(lam, Fraction(0)) + c
    out: dict[IntegerPartition, int] = {}
    for lam, c in exp_series.items():
        if sum(lam) == n:
            value = c * factorial(n)
            if value.denominator != 1:
                raise AssertionError("Bell series coefficient is not integral")
            if value:
                out[lam] = int(value)
    return out


def bell_check(n: int) -> bool:
    return bell_polynomial(n) == bell_series_oracle(n)


def commutative_image_coeff(lam: IntegerPartition) -> int:
    """Multiplier making the commutative image of an orbit sum a monomial."""
    out = 1
    for mult in partition_multiplicities(lam).values():
        out *= factorial(mult)
    return out


def full_cycle_S_primitive(n: int) -> bool:
    """Dual-side primitivity of the classes of full cycles."""
    for sigma in permutations(n):
        if len(cycles(sigma)) == 1:
            cop = coproduct_S(sigma)
            expected = {(sigma, ()): 1, ((), sigma): 1}
            if cop.terms != expected:
                return False
    return True


# ---------------------------------------------------------------------------
# algebra adapters

def algebra() -> GradedBasis:
    return GradedBasis(M_KIND, (), len, permutations, product_M, coproduct_M)


def dual_algebra() -> GradedBasis:
    return GradedBasis(S_KIND, (), len, permutations, product_S, coproduct_S)


def piqsym_algebra() -> GradedBasis:
    return GradedBasis(
        UPI_KIND,
        (),
        lambda pi: sum(len(b) for b in pi),
        set_partitions,
        product_upi,
        coproduct_upi,
    )


def wsym_algebra() -> GradedBasis:
    return GradedBasis(
        MW_KIND,
        (),
        lambda pi: sum(len(b) for b in pi),
        set_partitions,
        product_Mw,
        coproduct_Mw,
    )


def compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def qsym_algebra() -> GradedBasis:
    return GradedBasis(UQ_KIND, (), sum, compositions, product_uq, coproduct_uq)


def sym_algebra() -> GradedBasis:
    return GradedBasis(UL_KIND, (), sum, symfunc.partitions, product_ul, coproduct_ul)
