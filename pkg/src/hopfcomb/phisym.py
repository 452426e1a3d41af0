"""The cocommutative Hopf algebra of permutations built on cycle structure.

Products merge cycles through the matching (Wick-style) product of cyclic
shuffles; the coproduct unshuffles cycles.  Two multiplicative bases are
provided, both triangular over the natural one by cycle count, together
with the quotient by cycle type, isomorphic to ordinary symmetric functions.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import symfunc
from .axioms import GradedBasis
from .lincomb import LinComb, bilinear, tensor_kind
from .realize import biword_mul, realize_phi
from .words import (
    Cycle,
    CycleSet,
    IntegerPartition,
    Word,
    canonical_cycle,
    connected_factorization,
    cycle_from_word,
    cycle_type,
    cycle_words,
    cycles,
    from_cycles,
    partition_multiplicities,
    permutations,
    shuffle,
)

PHI_KIND = "phisym:phi"
SPRIME_KIND = "phisym:Sp"
SSECOND_KIND = "phisym:Ss"
Y_KIND = "phisym:Y"


def cyclic_shuffle(c1: Cycle, c2: Cycle) -> frozenset[Cycle]:
    """All cycles whose cycle words shuffle the cycle words of the arguments.

    >>> sorted(cyclic_shuffle((1,), (2,)))
    [(1, 2)]
    """
    if set(c1) & set(c2):
        raise ValueError("cyclic shuffle requires disjoint supports")
    out = set()
    for w1 in cycle_words(c1):
        for w2 in cycle_words(c2):
            for u in shuffle(w1, w2):
                out.add(cycle_from_word(u))
    return frozenset(out)


def canonical_cycle_set(cycle_set) -> CycleSet:
    return tuple(sorted((tuple(c) for c in cycle_set), key=lambda c: c[0]))


def matching_product(c_set1, c_set2) -> set[CycleSet]:
    """Union over partial pairings of the two cycle sets of all cyclic merges."""
    c1 = list(c_set1)
    c2 = list(c_set2)
    out: set[CycleSet] = set()
    for k in range(min(len(c1), len(c2)) + 1):
        for left in itertools.combinations(range(len(c1)), k):
            rest1 = [c1[i] for i in range(len(c1)) if i not in left]
            for right in itertools.permutations(range(len(c2)), k):
                rest2 = [c2[j] for j in range(len(c2)) if j not in set(right)]
                merge_options = [
                    sorted(cyclic_shuffle(c1[i], c2[j])) for i, j in zip(left, right)
                ]
                for merged in itertools.product(*merge_options):
                    out.add(canonical_cycle_set(list(merged) + rest1 + rest2))
    return out


def product_phi(sigma: Word, tau: Word) -> LinComb:
    """All permutations whose cycle decomposition lies in the matching product
    of the two (shifted-apart) cycle sets; every coefficient is 0 or 1."""
    n = len(sigma)
    shifted = tuple(tuple(a + n for a in c) for c in cycles(tau))
    terms = {
        from_cycles(cs, n + len(tau)): 1
        for cs in matching_product(cycles(sigma), shifted)
    }
    return LinComb(PHI_KIND, terms)


def _std_cycle_subset(cycle_list, chosen) -> Word:
    support = sorted(a for i in chosen for a in cycle_list[i])
    rank = {a: i for i, a in enumerate(support, start=1)}
    return from_cycles(
        [tuple(rank[a] for a in cycle_list[i]) for i in chosen], len(support)
    )


def coproduct_phi(sigma: Word) -> LinComb:
    """Unshuffle the cycles: split the cycle set, renumbering both parts."""
    cyc = cycles(sigma)
    terms: dict[tuple[Word, Word], int] = {}
    for size in range(len(cyc) + 1):
        for chosen in itertools.combinations(range(len(cyc)), size):
            rest = tuple(i for i in range(len(cyc)) if i not in chosen)
            key = (_std_cycle_subset(cyc, chosen), _std_cycle_subset(cyc, rest))
            terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(PHI_KIND), terms)


# ---------------------------------------------------------------------------
# the multiplicative bases

def phi_elem(sigma: Word) -> LinComb:
    return LinComb.basis(PHI_KIND, sigma)


def sprime_expand(sigma: Word) -> LinComb:
    """Expansion of the first multiplicative basis: the product of the natural
    basis elements of the connected factors."""
    out = phi_elem(())
    for factor in connected_factorization(sigma):
        out = bilinear(out, phi_elem(factor), product_phi)
    return out


def ssecond_expand(sigma: Word) -> LinComb:
    """Expansion of the second multiplicative basis: the iterated matching
    product of the individual cycles."""
    cyc = cycles(sigma)
    if not cyc:
        return phi_elem(())
    state: set[CycleSet] = {canonical_cycle_set([cyc[0]])}
    for c in cyc[1:]:
        state = {
            result
            for cs in state
            for result in matching_product(cs, [c])
        }
    n = len(sigma)
    return LinComb(PHI_KIND, {from_cycles(cs, n): 1 for cs in state})


def _triangular_convert(x: LinComb, expand, target_kind: str) -> LinComb:
    """Invert a unitriangular (by cycle count) basis expansion exactly."""
    work = LinComb(PHI_KIND, dict(x.terms))
    out: dict[Word, object] = {}
    while work:
        sigma = max(work.terms, key=lambda s: (len(cycles(s)), s))
        c = work.terms[sigma]
        out[sigma] = out.get(sigma, 0) + c
        work = work - expand(sigma).scale(c)
    return LinComb(target_kind, out)


def phi_to_sprime(x: LinComb) -> LinComb:
    return _triangular_convert(x, sprime_expand, SPRIME_KIND)


def phi_to_ssecond(x: LinComb) -> LinComb:
    return _triangular_convert(x, ssecond_expand, SSECOND_KIND)


def sprime_to_phi(x: LinComb) -> LinComb:
    out = LinComb.zero(PHI_KIND)
    for sigma, c in x.terms.items():
        out = out + sprime_expand(sigma).scale(c)
    return out


def ssecond_to_phi(x: LinComb) -> LinComb:
    out = LinComb.zero(PHI_KIND)
    for sigma, c in x.terms.items():
        out = out + ssecond_expand(sigma).scale(c)
    return out


def product_sprime(alpha: Word, beta: Word) -> LinComb:
    """Product in the first multiplicative basis, computed through phi."""
    prod = bilinear(sprime_expand(alpha), sprime_expand(beta), product_phi)
    return phi_to_sprime(prod)


def coproduct_sprime(sigma: Word) -> LinComb:
    cop = coproduct_phi_lifted(sprime_expand(sigma))
    return _convert_tensor(cop, phi_to_sprime, SPRIME_KIND)


def product_ssecond(alpha: Word, beta: Word) -> LinComb:
    prod = bilinear(ssecond_expand(alpha), ssecond_expand(beta), product_phi)
    return phi_to_ssecond(prod)


def coproduct_ssecond(sigma: Word) -> LinComb:
    cop = coproduct_phi_lifted(ssecond_expand(sigma))
    return _convert_tensor(cop, phi_to_ssecond, SSECOND_KIND)


def coproduct_phi_lifted(x: LinComb) -> LinComb:
    return x.apply(coproduct_phi, kind=tensor_kind(PHI_KIND))


def _convert_tensor(t: LinComb, convert, target_kind: str) -> LinComb:
    out: dict[tuple[Word, Word], object] = {}
    for (a, b), c in t.terms.items():
        left = convert(LinComb.basis(PHI_KIND, a))
        right = convert(LinComb.basis(PHI_KIND, b))
        for la, ca in left.terms.items():
            for lb, cb in right.terms.items():
                key = (la, lb)
                value = out.get(key, 0) + c * ca * cb
                if value:
                    out[key] = value
                else:
                    out.pop(key, None)
    return LinComb(tensor_kind(target_kind), out)


# ---------------------------------------------------------------------------
# quotient by cycle type

def type_representative(lam: IntegerPartition) -> Word:
    """Consecutive-cycle permutation of the given cycle type."""
    out_cycles = []
    start = 1
    for part in lam:
        out_cycles.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(out_cycles, sum(lam))


def project_Y(x: LinComb) -> LinComb:
    terms: dict[IntegerPartition, int] = {}
    for sigma, c in x.terms.items():
        lam = cycle_type(sigma)
        terms[lam] = terms.get(lam, 0) + c
    return LinComb(Y_KIND, {k: v for k, v in terms.items() if v})


def product_Y(lam1: IntegerPartition, lam2: IntegerPartition) -> LinComb:
    return project_Y(product_phi(type_representative(lam1), type_representative(lam2)))


def coproduct_Y(lam: IntegerPartition) -> LinComb:
    cop = coproduct_phi(type_representative(lam))
    terms: dict[tuple[IntegerPartition, IntegerPartition], int] = {}
    for (a, b), c in cop.terms.items():
        key = (cycle_type(a), cycle_type(b))
        terms[key] = terms.get(key, 0) + c
    return LinComb(tensor_kind(Y_KIND), terms)


def y_representative_independent(degree_bound: int) -> bool:
    for n in range(1, degree_bound):
        for m in range(1, degree_bound - n + 1):
            for sigma in permutations(n):
                for tau in permutations(m):
                    expected = product_Y(cycle_type(sigma), cycle_type(tau))
                    if project_Y(product_phi(sigma, tau)) != expected:
                        return False
    return True


def y_to_sym(lam: IntegerPartition) -> LinComb:
    """Image of a cycle-type class in monomial symmetric functions."""
    numerator = 1
    for mult in partition_multiplicities(lam).values():
        numerator *= factorial(mult)
    denominator = 1
    for part in lam:
        denominator *= factorial(part - 1)
    return symfunc.sym("m", lam, Fraction(numerator, denominator))


def y_iso_check(degree_bound: int) -> bool:
    """The cycle-type quotient maps to Sym as an algebra morphism."""
    lams = [
        (l1, l2)
        for n in range(1, degree_bound)
        for m in range(1, degree_bound - n + 1)
        for l1 in symfunc.partitions(n)
        for l2 in symfunc.partitions(m)
    ]
    for l1, l2 in lams:
        image = LinComb.zero(symfunc.kind("m"))
        for lam, c in product_Y(l1, l2).terms.items():
            image = image + y_to_sym(lam).scale(c)
        direct = symfunc.m_mul(y_to_sym(l1), y_to_sym(l2))
        if image != direct:
            return False
    return True


# ---------------------------------------------------------------------------
# biword oracle

@lru_cache(maxsize=None)
def _realized(sigma: Word, n_trunc: int) -> LinComb:
    return realize_phi(sigma, n_trunc)


def biword_product_check(sigma: Word, tau: Word, n_trunc: int | None = None) -> bool:
    """The concatenated biword realization equals the matching-product rule."""
    if n_trunc is None:
        n_trunc = len(sigma) + len(tau)
    lhs = biword_mul(_realized(sigma, n_trunc), _realized(tau, n_trunc))
    rhs = LinComb.zero("biword")
    for gamma, c in product_phi(sigma, tau).terms.items():
        rhs = rhs + _realized(gamma, n_trunc).scale(c)
    return lhs == rhs


def algebra() -> GradedBasis:
    return GradedBasis(PHI_KIND, (), len, permutations, product_phi, coproduct_phi)
