"""Exhaustive Hopf-axiom verification for graded bases at desk-scale degrees.

An algebra is described by a :class:`GradedBasis`: enumeration of basis
labels per degree plus basis-level product and coproduct rules.  The checker
verifies each axiom on all basis elements up to a degree bound and reports
the first counterexample found.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .lincomb import (
    LinComb,
    bilinear,
    pairing,
    tensor,
    tensor_apply,
    tensor_kind,
    tensor_mul,
    tensor_swap,
)


@dataclass(frozen=True)
class GradedBasis:
    kind: str
    unit_label: object
    degree: Callable
    basis: Callable          # n -> iterable of labels
    product: Callable        # (label, label) -> LinComb
    coproduct: Callable      # label -> LinComb over pairs

    def element(self, label) -> LinComb:
        return LinComb.basis(self.kind, label)

    def labels_upto(self, bound: int, start: int = 1) -> dict[int, list]:
        return {n: list(self.basis(n)) for n in range(start, bound + 1)}


@dataclass
class CheckResult:
    passed: bool
    counterexample: tuple | None = None


@dataclass
class HopfReport:
    algebra: str
    degree_bound: int
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        required = ("associativity", "coassociativity", "unit", "counit", "compatibility")
        return all(self.checks[name].passed for name in required if name in self.checks)

    @property
    def commutative(self) -> bool:
        return self.checks["commutativity"].passed

    @property
    def cocommutative(self) -> bool:
        return self.checks["cocommutativity"].passed

    def lines(self) -> list[str]:
        out = []
        for name, result in self.checks.items():
            if name in ("commutativity", "cocommutativity"):
                out.append(f"{name}: {'yes' if result.passed else 'no'}")
            else:
                status = "ok" if result.passed else f"FAIL at {result.counterexample}"
                out.append(f"{name}: {status}")
        return out


def _counit_sides(alg: GradedBasis, label) -> tuple[LinComb, LinComb]:
    cop = alg.coproduct(label)
    left = LinComb.zero(alg.kind)
    right = LinComb.zero(alg.kind)
    for (u, v), c in cop.terms.items():
        if u == alg.unit_label:
            left = left + LinComb.basis(alg.kind, v, c)
        if v == alg.unit_label:
            right = right + LinComb.basis(alg.kind, u, c)
    return left, right


def hopf_check(alg: GradedBasis, degree_bound: int) -> HopfReport:
    """Verify associativity, coassociativity, unit/counit, compatibility,
    and record (co)commutativity, exhaustively up to the degree bound."""
    report = HopfReport(alg.kind, degree_bound)
    by_degree = alg.labels_upto(degree_bound)

    def labels(n: int) -> list:
        return by_degree.get(n, [])

    # associativity: (ab)c = a(bc)
    counter = None
    for i in range(1, degree_bound - 1):
        for j in range(1, degree_bound - i):
            for k in range(1, degree_bound - i - j + 1):
                for a in labels(i):
                    for b in labels(j):
                        ab = alg.product(a, b)
                        for c in labels(k):
                            lhs = ab.apply(lambda l: alg.product(l, c))
                            rhs = alg.product(b, c).apply(lambda l: alg.product(a, l))
                            if lhs != rhs:
                                counter = (a, b, c)
                                break
                        if counter:
                            break
                    if counter:
                        break
                if counter:
                    break
            if counter:
                break
        if counter:
            break
    report.checks["associativity"] = CheckResult(counter is None, counter)

    # unit: 1 * a = a * 1 = a
    counter = None
    for n in range(1, degree_bound + 1):
        for a in labels(n):
            e = alg.element(a)
            if alg.product(alg.unit_label, a) != e or alg.product(a, alg.unit_label) != e:
                counter = (a,)
                break
        if counter:
            break
    report.checks["unit"] = CheckResult(counter is None, counter)

    # coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    counter = None
    for n in range(1, degree_bound + 1):
        for a in labels(n):
            cop = alg.coproduct(a)
            if tensor_apply(cop, 0, alg.coproduct) != tensor_apply(cop, 1, alg.coproduct):
                counter = (a,)
                break
        if counter:
            break
    report.checks["coassociativity"] = CheckResult(counter is None, counter)

    # counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    counter = None
    for n in range(1, degree_bound + 1):
        for a in labels(n):
            left, right = _counit_sides(alg, a)
            if left != alg.element(a) or right != alg.element(a):
                counter = (a,)
                break
        if counter:
            break
    report.checks["counit"] = CheckResult(counter is None, counter)

    # bialgebra compatibility: Delta(ab) = Delta(a) Delta(b)
    counter = None
    for i in range(1, degree_bound):
        for j in range(1, degree_bound - i + 1):
            for a in labels(i):
                da = alg.coproduct(a)
                for b in labels(j):
                    lhs = alg.product(a, b).apply(
                        alg.coproduct, kind=tensor_kind(alg.kind)
                    )
                    rhs = tensor_mul(da, alg.coproduct(b), alg.product)
                    if lhs != rhs:
                        counter = (a, b)
                        break
                if counter:
                    break
            if counter:
                break
        if counter:
            break
    report.checks["compatibility"] = CheckResult(counter is None, counter)

    # commutativity / cocommutativity (informational)
    counter = None
    for i in range(1, degree_bound):
        for j in range(1, degree_bound - i + 1):
            for a in labels(i):
                for b in labels(j):
                    if alg.product(a, b) != alg.product(b, a):
                        counter = (a, b)
                        break
                if counter:
                    break
            if counter:
                break
        if counter:
            break
    report.checks["commutativity"] = CheckResult(counter is None, counter)

    counter = None
    for n in range(1, degree_bound + 1):
        for a in labels(n):
            cop = alg.coproduct(a)
            if tensor_swap(cop) != cop:
                counter = (a,)
                break
        if counter:
            break
    report.checks["cocommutativity"] = CheckResult(counter is None, counter)

    return report


def duality_check(
    primal: GradedBasis,
    dual_coproduct: Callable,
    degree_bound: int,
    dual_product: Callable | None = None,
    primal_coproduct: Callable | None = None,
) -> CheckResult:
    """Check <x y, z> = <x (x) y, Delta* z> for all basis triples up to the bound.

    Labels of the dual are identified with primal labels (dual bases pair by
    delta).  When ``dual_product`` is supplied, the transposed law
    <Delta x, z (x) w> = <x, z w> is verified as well.
    """
    by_degree = primal.labels_upto(degree_bound)
    for total in range(2, degree_bound + 1):
        for i in range(1, total):
            j = total - i
            for a in by_degree.get(i, []):
                for b in by_degree.get(j, []):
                    prod = primal.product(a, b)
                    left_tensor = tensor(primal.element(a), primal.element(b))
                    for z in by_degree.get(total, []):
                        lhs = prod[z]
                        rhs = pairing(left_tensor, dual_coproduct(z))
                        if lhs != rhs:
                            return CheckResult(False, (a, b, z))
    if dual_product is not None and primal_coproduct is not None:
        for total in range(2, degree_bound + 1):
            for i in range(1, total):
                j = total - i
                for z in by_degree.get(i, []):
                    for w in by_degree.get(j, []):
                        prod = dual_product(z, w)
                        for x in by_degree.get(total, []):
                            lhs = pairing(
                                primal_coproduct(x),
                                tensor(primal.element(z), primal.element(w)),
                            )
                            rhs = prod[x]
                            if lhs != rhs:
                                return CheckResult(False, (z, w, x))
    return CheckResult(True, None)
