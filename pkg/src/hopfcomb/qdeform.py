"""One-parameter deformations: twisted coproducts, q-congruences, q=0 limit.

The deformation never touches the products; coproducts acquire powers of q
counted by crossing inversions, and comultiplicativity holds for the tensor
product twisted by q^(deg x deg).  Two q-rewriting systems give quotients
with class censuses by descent compositions and by binary trees.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .coeffs import QPoly
from .lincomb import LinComb, bilinear, tensor_kind, tensor_mul, tensor_swap, twisted_tensor_mul
from .limits import guard
from .realize import qvar_mul, realize_fundamental
from .words import (
    Composition,
    Word,
    connected_factorization,
    descent_composition,
    inversions,
    permutations,
    shifted_shuffle,
    standardize,
)

F_KIND = "fqsym-q:F"
QM_KIND = "qsym-q:M"
QF_KIND = "qsym-q:F"
NS_KIND = "ncsf-q:S"


def chi(deg_left: int, deg_right: int) -> QPoly:
    return QPoly.monomial(deg_left * deg_right)


def chi_len(b: Word, a: Word) -> QPoly:
    return chi(len(b), len(a))


def chi_sum(b: Composition, a: Composition) -> QPoly:
    return chi(sum(b), sum(a))


# ---------------------------------------------------------------------------
# QSym_q and NCSF_q on compositions

def coproduct_q_M(comp: Composition) -> LinComb:
    terms = {
        (comp[:k], comp[k:]): QPoly.const(1) for k in range(len(comp) + 1)
    }
    return LinComb(tensor_kind(QM_KIND), terms)


def product_S_ncsf(comp1: Composition, comp2: Composition) -> LinComb:
    return LinComb.basis(NS_KIND, comp1 + comp2, QPoly.const(1))


def coproduct_q_S_generator(n: int) -> LinComb:
    terms = {
        ((i,) if i else (), (n - i,) if n - i else ()): QPoly.monomial(i * (n - i))
        for i in range(n + 1)
    }
    return LinComb(tensor_kind(NS_KIND), terms)


def coproduct_q_S(comp: Composition) -> LinComb:
    """Twisted-multiplicative extension over the parts of the composition."""
    out = LinComb.basis(tensor_kind(NS_KIND), ((), ()), QPoly.const(1))
    for part in comp:
        out = twisted_tensor_mul(
            out, coproduct_q_S_generator(part), product_S_ncsf, chi_sum
        )
    return out


def ncsf_twisted_morphism_check(comp1: Composition, comp2: Composition) -> bool:
    lhs = coproduct_q_S(comp1 + comp2)
    rhs = twisted_tensor_mul(
        coproduct_q_S(comp1), coproduct_q_S(comp2), product_S_ncsf, chi_sum
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# FQSym_q

def product_F(alpha: Word, beta: Word) -> LinComb:
    terms = {sigma: QPoly.const(1) for sigma in shifted_shuffle(alpha, beta)}
    return LinComb(F_KIND, terms)


def crossing_inversions(sigma: Word, k: int) -> int:
    return sum(
        1
        for i in range(k)
        for j in range(k, len(sigma))
        if sigma[i] > sigma[j]
    )


def coproduct_q_F(sigma: Word) -> LinComb:
    terms: dict[tuple[Word, Word], QPoly] = {}
    for k in range(len(sigma) + 1):
        key = (standardize(sigma[:k]), standardize(sigma[k:]))
        power = QPoly.monomial(crossing_inversions(sigma, k))
        prev = terms.get(key)
        terms[key] = power if prev is None else prev + power
    return LinComb(tensor_kind(F_KIND), terms)


def fqsym_twisted_morphism_check(alpha: Word, beta: Word) -> bool:
    lhs = product_F(alpha, beta).apply(coproduct_q_F, kind=tensor_kind(F_KIND))
    rhs = twisted_tensor_mul(
        coproduct_q_F(alpha), coproduct_q_F(beta), product_F, chi_len
    )
    return lhs == rhs


def coproduct_q1_F(sigma: Word) -> LinComb:
    """Specialization q = 1: the ordinary unshifted coproduct."""
    return coproduct_q_F(sigma).map_coeffs(lambda c: QPoly.coerce(c).subs(1))


def ordinary_coproduct_F(sigma: Word) -> LinComb:
    terms: dict[tuple[Word, Word], int] = {}
    for k in range(len(sigma) + 1):
        key = (standardize(sigma[:k]), standardize(sigma[k:]))
        terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(F_KIND), terms)


# ---------------------------------------------------------------------------
# the morphism to quantum quasi-symmetric functions

def phi_map(sigma: Word) -> LinComb:
    """Image q^(inversions) times the fundamental of the descent composition."""
    return LinComb.basis(
        QF_KIND, descent_composition(sigma), QPoly.monomial(inversions(sigma))
    )


def phi_lincomb(x: LinComb) -> LinComb:
    out = LinComb.zero(QF_KIND)
    for sigma, c in x.terms.items():
        out = out + phi_map(sigma).scale(c)
    return out


def phi_realized(x: LinComb, n_trunc: int) -> LinComb:
    """Evaluate an image of phi in the ring of q-commuting variables."""
    out = LinComb.zero("qring")
    for comp, c in x.terms.items():
        out = out + realize_fundamental(comp, n_trunc).scale(QPoly.coerce(c))
    return out


def phi_morphism_check(alpha: Word, beta: Word, n_trunc: int | None = None) -> bool:
    """phi(F_alpha F_beta) = phi(F_alpha) phi(F_beta) at a faithful truncation."""
    if n_trunc is None:
        n_trunc = len(alpha) + len(beta) + 1
    lhs = phi_realized(phi_lincomb(product_F(alpha, beta)), n_trunc)
    rhs = qvar_mul(
        phi_realized(phi_map(alpha), n_trunc),
        phi_realized(phi_map(beta), n_trunc),
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# q-congruences: rewriting to canonical forms

def _qh_applicable(w: Word, i: int) -> bool:
    c, a = w[i], w[i + 1]
    if a >= c:
        return False
    if any(a < w[s] <= c for s in range(i)):
        return True
    return any(a <= w[t] < c for t in range(i + 2, len(w)))


def _qs_applicable(w: Word, i: int) -> bool:
    c, a = w[i], w[i + 1]
    if a >= c:
        return False
    return any(a <= w[t] < c for t in range(i + 2, len(w)))


_SYSTEMS = {"qH": _qh_applicable, "qS": _qs_applicable}


def rewrite_steps(w: Word, system: str) -> list[Word]:
    applicable = _SYSTEMS[system]
    return [
        w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        for i in range(len(w) - 1)
        if applicable(w, i)
    ]


def q_rewrite(w: Word, system: str) -> tuple[Word, int]:
    """Normal form with the accumulated q exponent (one per swap)."""
    if system not in _SYSTEMS:
        raise ValueError(f"unknown rewriting system {system!r}")
    guard("rewrite_length", len(w))
    exponent = 0
    current = tuple(w)
    while True:
        steps = rewrite_steps(current, system)
        if not steps:
            return current, exponent
        current = steps[0]
        exponent += 1


def confluence_check(system: str, length: int, n_letters: int) -> tuple[bool, Word | None]:
    """All rewriting orders reach one normal form, on all words of the size."""
    for w in itertools.product(range(1, n_letters + 1), repeat=length):
        seen = {w}
        frontier = [w]
        normal_forms = set()
        while frontier:
            current = frontier.pop()
            steps = rewrite_steps(current, system)
            if not steps:
                normal_forms.add(current)
                continue
            for nxt in steps:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        if len(normal_forms) != 1:
            return False, w
    return True, None


def class_census(system: str, n: int) -> int:
    """Number of rewriting classes of permutations, forgetting q powers."""
    return len({q_rewrite(sigma, system)[0] for sigma in permutations(n)})


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# the q=0 cocommutative specialization

def _primitive(sigma: Word) -> LinComb:
    terms = {
        (sigma, ()): 1,
        ((), sigma): 1,
    }
    return LinComb(tensor_kind(F_KIND), terms)


def product_F_plain(alpha: Word, beta: Word) -> LinComb:
    return LinComb(F_KIND, {s: 1 for s in shifted_shuffle(alpha, beta)})


def q0_coproduct(sigma: Word) -> LinComb:
    """Primitive on connected factors, extended as an algebra morphism."""
    out = LinComb.basis(tensor_kind(F_KIND), ((), ()), 1)
    for factor in connected_factorization(sigma):
        out = tensor_mul(out, _primitive(factor), product_F_plain)
    return out


def cocommutativity_check(degree_bound: int) -> bool:
    for n in range(1, degree_bound + 1):
        for sigma in permutations(n):
            cop = q0_coproduct(sigma)
            if tensor_swap(cop) != cop:
                return False
    return True
