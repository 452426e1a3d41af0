"""The commutative Hopf algebra of endofunctions and its free graded dual.

The M basis is indexed by endofunction words.  Products conjugate the
shifted concatenation by shuffle permutations; coproducts cut at shifted
concatenation boundaries.  The dual S basis multiplies by shifted
concatenation, with coproduct given by splitting the ground set into two
complementary stable subsets.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .axioms import GradedBasis
from .lincomb import LinComb, tensor_kind
from .realize import oracle_product_check, realize_endofunction
from .words import (
    Word,
    cut_points,
    endofunctions,
    inverse,
    is_connected,
    shifted_concat,
    shuffle,
    standardize,
    unshift,
)

M_KIND = "eqsym:M"
S_KIND = "eqsym:S"


def compose(u: Word, v: Word) -> Word:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def conjugates(f: Word, g: Word):
    """Stream tau^{-1} o (f.g) o tau over shuffles tau of the index intervals."""
    n, m = len(f), len(g)
    fg = shifted_concat(f, g)
    for tau in shuffle(tuple(range(1, n + 1)), tuple(range(n + 1, n + m + 1))):
        yield compose(inverse(tau), compose(fg, tau))


def product_M(f: Word, g: Word) -> LinComb:
    """M_f M_g as a sum of M_h with shuffle-conjugation multiplicities."""
    terms: dict[Word, int] = {}
    for h in conjugates(f, g):
        terms[h] = terms.get(h, 0) + 1
    return LinComb(M_KIND, terms)


def coproduct_M(h: Word) -> LinComb:
    terms: dict[tuple[Word, Word], int] = {}
    for k in cut_points(h) or [0]:
        key = (h[:k], unshift(h, k))
        terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(M_KIND), terms)


def product_S(f: Word, g: Word) -> LinComb:
    return LinComb.basis(S_KIND, shifted_concat(f, g))


def stable_splits(h: Word):
    """Complementary pairs of h-stable subsets with their standardized parts."""
    n = len(h)
    ground = range(1, n + 1)
    for size in range(n + 1):
        for subset in itertools.combinations(ground, size):
            inside = set(subset)
            if any(h[i - 1] not in inside for i in subset):
                continue
            complement = tuple(i for i in ground if i not in inside)
            if any(h[i - 1] in inside for i in complement):
                continue
            yield subset, complement


def restrict_std(h: Word, subset: tuple[int, ...]) -> Word:
    """Relabel h restricted to a stable subset through the increasing bijection."""
    rank = {p: i for i, p in enumerate(subset, start=1)}
    return tuple(rank[h[p - 1]] for p in subset)


def coproduct_S(h: Word) -> LinComb:
    terms: dict[tuple[Word, Word], int] = {}
    for subset, complement in stable_splits(h):
        key = (restrict_std(h, subset), restrict_std(h, complement))
        terms[key] = terms.get(key, 0) + 1
    return LinComb(tensor_kind(S_KIND), terms)


# ---------------------------------------------------------------------------
# generating series

@lru_cache(maxsize=None)
def _endofunction_series(bound: int) -> tuple[int, ...]:
    return tuple(n**n if n else 1 for n in range(bound + 1))


def _series_inverse(series: tuple[int, ...]) -> list[Fraction]:
    inv = [Fraction(1)]
    for n in range(1, len(series)):
        inv.append(-sum(Fraction(series[k]) * inv[n - k] for k in range(1, n + 1)))
    return inv

def connected_count(n: int) -> int:
    """Number of connected endofunctions of degree n, from C(t) = 1 - 1/E(t)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    inv = _series_inverse(_endofunction_series(n))
    value = -inv[n]
    if value.denominator != 1:
        raise AssertionError("connected-count series is not integral")
    return int(value)


def lie_dims(n: int) -> int:
    """Dimensions of the free Lie algebra graded by connected endofunctions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    series = _endofunction_series(n)
    # log E(t), truncated
    log = [Fraction(0)] * (n + 1)
    power = [Fraction(0)] + [Fraction(c) for c in series[1:]]  # E - 1
    term = power[:]
    sign = 1
    for j in range(1, n + 1):
        for d in range(n + 1):
            log[d] += Fraction(sign, j) * term[d]
        nxt = [Fraction(0)] * (n + 1)
        for a in range(1, n + 1):
            if term[a]:
                for b in range(1, n + 1 - a):
                    nxt[a + b] += term[a] * power[b]
        term = nxt
        sign = -sign
    dims: dict[int, Fraction] = {}
    for d in range(1, n + 1):
        acc = log[d]
        for k in range(1, d):
            if d % k == 0 and k in dims:
                acc -= dims[k] / (d // k)
        dims[d] = acc
    if dims[n].denominator != 1:
        raise AssertionError("free-Lie dimension series is not integral")
    return int(dims[n])


def free_generation_check(bound: int) -> bool:
    """n^n = sum over compositions into connected degrees of the products."""
    conn = {k: connected_count(k) for k in range(1, bound + 1)}
    dims = [1] + [0] * bound
    for n in range(1, bound + 1):
        dims[n] = sum(conn[k] * dims[n - k] for k in range(1, n + 1))
    return all(dims[n] == (n**n if n else 1) for n in range(bound + 1))


def brute_connected_count(n: int) -> int:
    return sum(1 for f in endofunctions(n) if is_connected(f))


# ---------------------------------------------------------------------------
# oracle plumbing

def oracle_realize(f: Word, n_trunc: int) -> LinComb:
    return realize_endofunction(f, n_trunc)


def oracle_check(f: Word, g: Word, n_trunc: int | None = None) -> bool:
    if n_trunc is None:
        n_trunc = len(f) + len(g)
    return oracle_product_check(f, g, n_trunc, product_M(f, g))


def algebra() -> GradedBasis:
    return GradedBasis(
        kind=M_KIND,
        unit_label=(),
        degree=len,
        basis=endofunctions,
        product=product_M,
        coproduct=coproduct_M,
    )


def dual_algebra() -> GradedBasis:
    return GradedBasis(
        kind=S_KIND,
        unit_label=(),
        degree=len,
        basis=endofunctions,
        product=product_S,
        coproduct=coproduct_S,
    )
