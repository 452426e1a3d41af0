"""Sparse formal linear combinations of basis labels, with exact coefficients.

A :class:`LinComb` maps hashable canonical labels to nonzero coefficients
(ints, :class:`~hopfcomb.coeffs.QPoly`, or Fractions) and carries a ``kind``
tag naming the basis it lives in; mixing kinds is rejected.  Tensor squares
and cubes reuse the same container with tuple labels and a derived kind.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator


class LinComb:
    __slots__ = ("kind", "terms")

    def __init__(self, kind: str, terms: dict | None = None):
        self.kind = kind
        self.terms = {label: c for label, c in (terms or {}).items() if c}

    @staticmethod
    def basis(kind: str, label, coeff=1) -> "LinComb":
        return LinComb(kind, {label: coeff})

    @staticmethod
    def zero(kind: str) -> "LinComb":
        return LinComb(kind)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __getitem__(self, label):
        return self.terms.get(label, 0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinComb)
            and self.kind == other.kind
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("LinComb is mutable-dict backed; not hashable")

    def _check(self, other: "LinComb") -> None:
        if self.kind != other.kind:
            raise ValueError(f"mixing label kinds {self.kind!r} and {other.kind!r}")

    def __add__(self, other: "LinComb") -> "LinComb":
        self._check(other)
        terms = dict(self.terms)
        for label, c in other.terms.items():
            new = terms.get(label, 0) + c
            if new:
                terms[label] = new
            else:
                terms.pop(label, None)
        return LinComb(self.kind, terms)

    def __neg__(self) -> "LinComb":
        return LinComb(self.kind, {label: -c for label, c in self.terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, scalar) -> "LinComb":
        if not scalar:
            return LinComb.zero(self.kind)
        return LinComb(self.kind, {label: scalar * c for label, c in self.terms.items()})

    def __rmul__(self, scalar) -> "LinComb":
        return self.scale(scalar)

    def map_coeffs(self, fn: Callable) -> "LinComb":
        return LinComb(self.kind, {label: fn(c) for label, c in self.terms.items()})

    def apply(self, rule: Callable, kind: str | None = None) -> "LinComb":
        """Linear extension of a basis-level map ``label -> LinComb``."""
        out: LinComb | None = None
        for label, c in self.terms.items():
            piece = rule(label).scale(c)
            out = piece if out is None else out + piece
        if out is None:
            return LinComb.zero(kind if kind is not None else self.kind)
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return f"LinComb({self.kind}: 0)"
        body = " + ".join(f"{c}*{label}" for label, c in sorted(self.terms.items(), key=lambda t: repr(t[0])))
        return f"LinComb({self.kind}: {body})"


def bilinear(x: LinComb, y: LinComb, rule: Callable, kind: str | None = None) -> LinComb:
    """Bilinear extension of a basis-level rule ``(label, label) -> LinComb``."""
    x._check(y)
    out: LinComb | None = None
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            piece = rule(a, b).scale(ca * cb)
            out = piece if out is None else out + piece
    if out is None:
        return LinComb.zero(kind if kind is not None else x.kind)
    return out


def pairing(x: LinComb, y: LinComb):
    """Bilinear pairing extending <B, B*> = delta on labels."""
    total = 0
    small, big = (x.terms, y.terms) if len(x.terms) <= len(y.terms) else (y.terms, x.terms)
    for label, c in small.items():
        if label in big:
            total = total + c * big[label]
    return total


# ---------------------------------------------------------------------------
# tensors: labels are tuples of component labels

def tensor_kind(kind: str, factors: int = 2) -> str:
    return "(x)".join([kind] * factors)


def tensor(x: LinComb, y: LinComb) -> LinComb:
    """Plain tensor product x (x) y as a LinComb over pairs."""
    kind = tensor_kind(x.kind)
    terms: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            terms[(a, b)] = terms.get((a, b), 0) + ca * cb
    return LinComb(kind, terms)


def tensor_swap(t: LinComb) -> LinComb:
    return LinComb(t.kind, {(b, a): c for (a, b), c in t.terms.items()})


def tensor_mul(t1: LinComb, t2: LinComb, product: Callable) -> LinComb:
    """Componentwise product of tensors: (a(x)b)(a'(x)b') = aa' (x) bb'."""
    return twisted_tensor_mul(t1, t2, product, chi=None)


def twisted_tensor_mul(
    t1: LinComb,
    t2: LinComb,
    product: Callable,
    chi: Callable | None,
) -> LinComb:
    """Tensor product twisted by a bicharacter on homogeneous labels.

    ``(a (x) b) (a' (x) b') = chi(b, a') (a a' (x) b b')`` extended
    bilinearly; ``chi=None`` means the untwisted componentwise product.
    ``product(label, label) -> LinComb`` is the component product rule.
    """
    t1._check(t2)
    out = LinComb.zero(t1.kind)
    for (a, b), c1 in t1.terms.items():
        for (a2, b2), c2 in t2.terms.items():
            coeff = c1 * c2
            if chi is not None:
                coeff = coeff * chi(b, a2)
            left = product(a, a2)
            right = product(b, b2)
            terms: dict = {}
            for la, cla in left.terms.items():
                for lb, clb in right.terms.items():
                    key = (la, lb)
                    terms[key] = terms.get(key, 0) + coeff * cla * clb
            out = out + LinComb(t1.kind, terms)
    return out


def tensor_apply(t: LinComb, slot: int, rule: Callable) -> LinComb:
    """Apply a label -> LinComb map inside one slot of a tensor, flattening.

    Used to form (Delta (x) id) Delta and friends; the result has labels one
    tuple-entry longer at ``slot``.
    """
    out_terms: dict = {}
    kind = None
    for label, c in t.terms.items():
        expanded = rule(label[slot])
        kind = expanded.kind
        for inner, ci in expanded.terms.items():
            new_label = label[:slot] + inner + label[slot + 1 :]
            out_terms[new_label] = out_terms.get(new_label, 0) + c * ci
    base = kind.split("(x)")[0] if kind else t.kind.split("(x)")[0]
    factors = t.kind.count("(x)") + 2
    out = LinComb(tensor_kind(base, factors))
    out.terms = {k: v for k, v in out_terms.items() if v}
    return out


def lincomb_to_json_terms(
    x: LinComb,
    label_text: Callable,
    degree: Callable,
) -> list[dict]:
    """Deterministic JSON form: graded, then lexicographic on label encoding."""
    items = sorted(x.terms.items(), key=lambda t: (degree(t[0]), label_text(t[0])))
    return [{"label": label_text(label), "coeff": str(c)} for label, c in items]


def format_lincomb(
    x: LinComb,
    symbol: str,
    label_text: Callable,
    degree: Callable,
) -> str:
    """Text form like ``M[133] + 2*M[223]``, graded then lexicographic."""
    if not x.terms:
        return "0"
    items = sorted(x.terms.items(), key=lambda t: (degree(t[0]), label_text(t[0])))
    chunks = []
    for label, c in items:
        body = f"{symbol}[{label_text(label)}]"
        if c == 1:
            chunks.append(body)
        elif isinstance(c, int):
            chunks.append(f"{c}*{body}" if c >= 0 else f"({c})*{body}")
        else:
            chunks.append(f"({c})*{body}")
    return " + ".join(chunks)
