"""Words, endofunctions, permutations, cycles, and the partition-like labels.

Conventions used throughout the package:

- Words are tuples of positive integers (1-indexed values).  An endofunction
  ``f`` of ``[n]`` is stored as the word ``(f(1), ..., f(n))``; permutations
  are the bijective endofunctions.  The empty tuple is the degree-0 object.
- A cycle is stored as a tuple beginning with its minimal element, reading
  successive images: ``(1, 3, 5, 2)`` sends 1 to 3, 3 to 5, 5 to 2, 2 to 1.
- A set partition is a tuple of blocks, each block a sorted tuple, with the
  blocks sorted lexicographically by their increasing word (equivalently, by
  their minima).
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .limits import Limits, guard

Word = tuple[int, ...]
Cycle = tuple[int, ...]
CycleSet = tuple[Cycle, ...]
SetPartition = tuple[tuple[int, ...], ...]
Composition = tuple[int, ...]
IntegerPartition = tuple[int, ...]


# ---------------------------------------------------------------------------
# predicates

def is_endofunction(w: Sequence[int]) -> bool:
    n = len(w)
    return all(1 <= a <= n for a in w)


def is_permutation(w: Sequence[int]) -> bool:
    return is_endofunction(w) and len(set(w)) == len(w)


def is_parking(w: Sequence[int]) -> bool:
    """Whether the nondecreasing reordering u satisfies u_i <= i.

    >>> is_parking((3, 1, 1)), is_parking((2, 3, 3))
    (True, False)
    """
    return all(a <= i for i, a in enumerate(sorted(w), start=1)) and all(a >= 1 for a in w)


def is_nondecreasing(w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def is_initial(w: Sequence[int]) -> bool:
    """Whether every letter below the maximum also appears."""
    return set(w) == set(range(1, max(w) + 1)) if w else True


def is_involution(w: Sequence[int]) -> bool:
    return is_permutation(w) and all(w[w[i] - 1] == i + 1 for i in range(len(w)))


# ---------------------------------------------------------------------------
# basic operations

def standardize(w: Sequence[int]) -> Word:
    """The unique permutation with the same relative order, ties left to right.

    >>> standardize((1, 1, 2, 1, 2, 1, 3, 1, 3, 2))
    (1, 2, 6, 3, 7, 4, 9, 5, 10, 8)
    >>> standardize(())
    ()
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    std = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        std[i] = rank
    return tuple(std)


def inverse(sigma: Sequence[int]) -> Word:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descent_composition(sigma: Sequence[int]) -> Composition:
    """Composition recording the descent positions of a word.

    >>> descent_composition((2, 1))
    (1, 1)
    >>> descent_composition((1, 2, 3))
    (3,)
    """
    if not sigma:
        return ()
    parts = []
    run = 1
    for a, b in zip(sigma, sigma[1:]):
        if a > b:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def shifted_concat(f: Sequence[int], g: Sequence[int]) -> Word:
    """Place g after f with all letters of g shifted by len(f).

    >>> shifted_concat((4, 2, 3, 2, 2), (2, 2))
    (4, 2, 3, 2, 2, 7, 7)
    """
    n = len(f)
    return tuple(f) + tuple(a + n for a in g)


def cut_points(h: Sequence[int]) -> list[int]:
    """Positions k where h splits as a shifted concatenation of length-k and rest.

    Includes the trivial cuts 0 and len(h).
    """
    n = len(h)
    cuts = [0]
    for k in range(1, n):
        if all(h[i] <= k for i in range(k)) and all(h[i] > k for i in range(k, n)):
            cuts.append(k)
    if n > 0:
        cuts.append(n)
    return cuts


def unshift(h: Sequence[int], k: int) -> Word:
    """The suffix of h starting after position k, shifted back to an endofunction."""
    return tuple(a - k for a in h[k:])


def connected_factorization(h: Sequence[int]) -> list[Word]:
    """The unique maximal factorization into connected endofunctions.

    >>> connected_factorization((4, 2, 3, 2, 2, 7, 7))
    [(4, 2, 3, 2, 2), (2, 2)]
    >>> connected_factorization((1, 2, 4, 3))
    [(1,), (1,), (2, 1)]
    """
    cuts = cut_points(h)
    return [unshift(h[: cuts[i + 1]], cuts[i]) for i in range(len(cuts) - 1)]


def is_connected(h: Sequence[int]) -> bool:
    return len(h) > 0 and cut_points(h) == [0, len(h)]


# ---------------------------------------------------------------------------
# cycles

def canonical_cycle(orbit: Iterable[int], successor: dict[int, int] | None = None) -> Cycle:
    """Rotate a cycle word so its minimal element comes first."""
    word = tuple(orbit)
    if successor is not None:
        start = min(word)
        out = [start]
        while successor[out[-1]] != start:
            out.append(successor[out[-1]])
        return tuple(out)
    k = word.index(min(word))
    return word[k:] + word[:k]


def cycles(sigma: Sequence[int]) -> CycleSet:
    """Disjoint cycle decomposition, each cycle minimal-element-first.

    >>> cycles((3, 1, 5, 4, 2))
    ((1, 3, 5, 2), (4,))
    """
    seen = [False] * len(sigma)
    out = []
    for start in range(1, len(sigma) + 1):
        if seen[start - 1]:
            continue
        orbit = [start]
        seen[start - 1] = True
        nxt = sigma[start - 1]
        while nxt != start:
            orbit.append(nxt)
            seen[nxt - 1] = True
            nxt = sigma[nxt - 1]
        out.append(tuple(orbit))
    return tuple(out)


def from_cycles(cycle_set: Iterable[Cycle], n: int | None = None) -> Word:
    """Recompose a permutation from disjoint cycles; inverse of :func:`cycles`."""
    cycle_list = [tuple(c) for c in cycle_set]
    support = [a for c in cycle_list for a in c]
    if n is None:
        n = max(support, default=0)
    if len(set(support)) != len(support):
        raise ValueError("cycles are not disjoint")
    word = [0] * n
    for c in cycle_list:
        for i, a in enumerate(c):
            word[a - 1] = c[(i + 1) % len(c)]
    if 0 in word:
        raise ValueError("cycles do not cover 1..n")
    return tuple(word)


def cycle_words(c: Cycle) -> list[Cycle]:
    """All rotations of a cycle word."""
    return [c[k:] + c[:k] for k in range(len(c))]


def cycle_from_word(w: Sequence[int]) -> Cycle:
    """Read a word as a cycle sending each letter to the next, cyclically."""
    return canonical_cycle(w, {w[i]: w[(i + 1) % len(w)] for i in range(len(w))})


def relabel_cycle(c: Cycle, mapping: dict[int, int]) -> Cycle:
    return canonical_cycle(tuple(mapping[a] for a in c))


def standardize_cycle(c: Cycle) -> Cycle:
    support = sorted(c)
    return relabel_cycle(c, {a: i for i, a in enumerate(support, start=1)})


def cycle_supports(sigma: Sequence[int]) -> SetPartition:
    """Set partition whose blocks are the supports of the cycles."""
    return canonical_set_partition(cycles(sigma))


def ordered_cycle_type(sigma: Sequence[int]) -> Composition:
    """Block sizes of the cycle supports in canonical (lexicographic) block order."""
    return tuple(len(b) for b in cycle_supports(sigma))


def cycle_type(sigma: Sequence[int]) -> IntegerPartition:
    return tuple(sorted((len(c) for c in cycles(sigma)), reverse=True))


# ---------------------------------------------------------------------------
# set partitions, compositions

def canonical_set_partition(blocks: Iterable[Iterable[int]]) -> SetPartition:
    """Sort each block and order blocks lexicographically by increasing word."""
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def partition_of_word(w: Sequence[int]) -> SetPartition:
    """Positions grouped by equal letters.

    >>> partition_of_word((1, 2, 1, 3, 3, 1))
    ((1, 3, 6), (2,), (4, 5))
    """
    blocks: dict[int, list[int]] = {}
    for i, a in enumerate(w, start=1):
        blocks.setdefault(a, []).append(i)
    return canonical_set_partition(blocks.values())


def restrict_partition(pi: SetPartition, positions: Sequence[int]) -> SetPartition:
    """Standardize the restriction of a partition to a subset of its ground set."""
    rank = {p: i for i, p in enumerate(sorted(positions), start=1)}
    keep = set(positions)
    blocks = [tuple(rank[a] for a in b if a in keep) for b in pi]
    return canonical_set_partition(b for b in blocks if b)


def relabel_partition(pi: SetPartition, positions: Sequence[int]) -> SetPartition:
    """Push a partition of [n] into an n-subset via the increasing bijection."""
    target = sorted(positions)
    return canonical_set_partition(tuple(target[a - 1] for a in b) for b in pi)


def block_composition(pi: SetPartition) -> Composition:
    """Sizes of the blocks in canonical block order."""
    return tuple(len(b) for b in pi)


def sort_composition(parts: Sequence[int]) -> IntegerPartition:
    return tuple(sorted(parts, reverse=True))


def partition_multiplicities(lam: Sequence[int]) -> dict[int, int]:
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    return mult


# ---------------------------------------------------------------------------
# shuffles

def shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """All interleavings preserving the relative order of each argument.

    Returned as a list: multiplicities matter when u and v share letters.

    >>> shuffle((1,), (2,))
    [(1, 2), (2, 1)]
    """
    out = []
    for positions in itertools.combinations(range(len(u) + len(v)), len(u)):
        word = [0] * (len(u) + len(v))
        pos = set(positions)
        iu = iter(u)
        iv = iter(v)
        for i in range(len(word)):
            word[i] = next(iu) if i in pos else next(iv)
        out.append(tuple(word))
    return out


def shifted_shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """Shuffle of u with v shifted by len(u)."""
    return shuffle(tuple(u), tuple(a + len(u) for a in v))


# ---------------------------------------------------------------------------
# enumeration

def endofunctions(n: int) -> Iterator[Word]:
    return itertools.product(range(1, n + 1), repeat=n) if n else iter([()])


def permutations(n: int) -> Iterator[Word]:
    return itertools.permutations(range(1, n + 1))


def parking_functions(n: int) -> Iterator[Word]:
    return (w for w in endofunctions(n) if is_parking(w))


def nondecreasing_parking_functions(n: int) -> Iterator[Word]:
    def rec(prefix: list[int]) -> Iterator[Word]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        for a in range(lo, len(prefix) + 2):
            prefix.append(a)
            yield from rec(prefix)
            prefix.pop()

    return rec([])


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n], in a deterministic order."""

    def rec(i: int, blocks: list[list[int]]) -> Iterator[SetPartition]:
        if i > n:
            yield canonical_set_partition(blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    return rec(1, [])


def initial_words(n: int) -> Iterator[Word]:
    return (w for w in endofunctions(n) if is_initial(w))


def involutions(n: int) -> Iterator[Word]:
    return (w for w in permutations(n) if is_involution(w))


_FAMILIES = {
    "endofunctions": endofunctions,
    "permutations": permutations,
    "parking": parking_functions,
    "nondecreasing_parking": nondecreasing_parking_functions,
    "set_partitions": set_partitions,
    "initial_words": initial_words,
    "involutions": involutions,
}


def enumerate_family(kind: str, n: int, limits: Limits | None = None) -> Iterator:
    """Stream every object of the family exactly once, guarded by size limits."""
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    guard(kind, n, limits)
    return _FAMILIES[kind](n)


# ---------------------------------------------------------------------------
# text encodings (parsers and printers round-trip)

def word_to_text(w: Sequence[int]) -> str:
    if not w:
        return "()"
    if max(w) <= 9:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def word_from_text(text: str) -> Word:
    text = text.strip()
    if text in ("()", ""):
        return ()
    if text.startswith("("):
        return from_cycles(_cycles_from_text(text))
    if "," in text:
        return tuple(int(a) for a in text.split(","))
    return tuple(int(ch) for ch in text)


def cycles_to_text(cycle_set: Iterable[Cycle]) -> str:
    parts = []
    for c in sorted(tuple(x) for x in cycle_set):
        inner = ",".join(str(a) for a in c) if max(c) > 9 else "".join(str(a) for a in c)
        parts.append(f"({inner})")
    return "".join(parts) if parts else "()"


def _cycles_from_text(text: str) -> list[Cycle]:
    out = []
    for chunk in text.replace(")(", ")|(").split("|"):
        inner = chunk.strip()[1:-1]
        if not inner:
            continue
        if "," in inner:
            out.append(tuple(int(a) for a in inner.split(",")))
        else:
            out.append(tuple(int(ch) for ch in inner))
    return out


def set_partition_to_text(pi: SetPartition) -> str:
    return "{" + "|".join(",".join(str(a) for a in b) for b in pi) + "}"


def set_partition_from_text(text: str) -> SetPartition:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"not a set partition: {text!r}")
    inner = text[1:-1]
    if not inner:
        return ()
    blocks = [tuple(int(a) for a in chunk.split(",")) for chunk in inner.split("|")]
    return canonical_set_partition(blocks)


def composition_to_text(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in parts) + ")"


def composition_from_text(text: str) -> Composition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"not a composition: {text!r}")
    inner = text[1:-1]
    if not inner:
        return ()
    return tuple(int(a) for a in inner.split(","))
