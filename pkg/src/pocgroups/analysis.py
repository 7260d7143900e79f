"""Perfect-order-classes checks and the Hamiltonian classification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bruteforce import DEFAULT_CAP, brute_force_order_counts
from .closedform import OrderClassTable, hamiltonian_order_counts
from .groupspec import (
    GroupSpec,
    HamiltonianSpec,
    cyclic,
    enumerate_hamiltonian,
    render_spec,
    to_hamiltonian,
)
from .numtheory import factorize

__all__ = [
    "AuditResult",
    "ClassificationReport",
    "DivisibilityVerdict",
    "GroupRow",
    "PocVerdict",
    "audit_poc_hamiltonian",
    "classify_poc_hamiltonian",
    "is_perfect_order_classes",
    "necessary_divisibility_conditions",
    "theorem_predicted_set",
]

DEFAULT_VERIFY_BRUTE = 5000


@dataclass(frozen=True)
class PocVerdict:
    is_poc: bool
    witnesses: tuple[tuple[int, int], ...] = ()


def is_perfect_order_classes(table: OrderClassTable) -> PocVerdict:
    """A group has perfect order classes when every non-zero #(k) divides |G|."""
    witnesses = tuple((k, c) for k, c in table if table.group_order % c)
    return PocVerdict(not witnesses, witnesses)


@dataclass(frozen=True)
class DivisibilityVerdict:
    ok: bool
    primes: tuple[int, ...]
    failures: tuple[str, ...] = ()


def necessary_divisibility_conditions(table: OrderClassTable) -> DivisibilityVerdict:
    """Conditions any POC group must meet: (p - 1) | |G| for every prime p
    dividing |G|, and |G| even unless G is trivial.

    Meant for tables that already passed :func:`is_perfect_order_classes`; a
    failure means the POC verdict upstream is wrong.
    """
    n = table.group_order
    primes = factorize(n).primes
    failures = [f"{p - 1} does not divide {n} (p = {p})" for p in primes if n % (p - 1)]
    if n > 1 and n % 2:
        failures.append(f"non-trivial group of odd order {n}")
    return DivisibilityVerdict(not failures, primes, tuple(failures))


def theorem_predicted_set(max_order: int) -> list[HamiltonianSpec]:
    """Q x C_{3^k} and Q x C2 x C_{3^k} (k >= 1) with order <= ``max_order``."""
    out = []
    k = 1
    while 8 * 3**k <= max_order:
        for e in (0, 1):
            h = HamiltonianSpec(e, cyclic(3**k))
            if h.order <= max_order:
                out.append(h)
        k += 1
    out.sort()
    return out


@dataclass(frozen=True)
class GroupRow:
    spec: HamiltonianSpec
    verdict: PocVerdict
    predicted: bool
    brute_checked: bool
    brute_agrees: bool | None

    @property
    def order(self) -> int:
        return self.spec.order


@dataclass
class ClassificationReport:
    max_order: int
    examined: int
    poc_groups: list[HamiltonianSpec]
    theorem_set: list[HamiltonianSpec]
    match: bool
    brute_verified: int = 0
    brute_mismatches: list[HamiltonianSpec] = field(default_factory=list)
    rows: list[GroupRow] = field(default_factory=list)


def classify_poc_hamiltonian(
    max_order: int,
    verify_brute: int = DEFAULT_VERIFY_BRUTE,
    cap: int = DEFAULT_CAP,
) -> ClassificationReport:
    """Find every Hamiltonian group of order <= ``max_order`` with perfect
    order classes and compare with the predicted families.

    Groups of order <= ``verify_brute`` are re-checked with the brute-force
    table; ``brute_mismatches`` lists any whose table differs.
    """
    predicted = theorem_predicted_set(max_order)
    predicted_set = set(predicted)
    rows = []
    poc = []
    mismatches = []
    verified = 0
    for h in enumerate_hamiltonian(max_order):
        table = hamiltonian_order_counts(h)
        verdict = is_perfect_order_classes(table)
        agrees = None
        if h.order <= min(verify_brute, cap):
            agrees = brute_force_order_counts(h.to_group(), cap) == table
            verified += 1
            if not agrees:
                mismatches.append(h)
        rows.append(GroupRow(h, verdict, h in predicted_set, agrees is not None, agrees))
        if verdict.is_poc:
            poc.append(h)
    return ClassificationReport(
        max_order=max_order,
        examined=len(rows),
        poc_groups=poc,
        theorem_set=predicted,
        match=set(poc) == predicted_set,
        brute_verified=verified,
        brute_mismatches=mismatches,
        rows=rows,
    )


AUDIT_CHECKS = (
    "order_divisible_by_3",
    "no_prime_above_3",
    "cyclic_3_part",
    "e_at_most_1",
)


@dataclass
class AuditResult:
    passed: dict[str, int]
    failed: dict[str, list[str]]

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())


def _audit_one(spec: GroupSpec) -> dict[str, bool]:
    primes = factorize(spec.order).primes
    h = to_hamiltonian(spec)
    return {
        "order_divisible_by_3": spec.order % 3 == 0,
        "no_prime_above_3": all(p <= 3 for p in primes),
        "cyclic_3_part": spec.abelian.rank(3) == 1,
        "e_at_most_1": h.e <= 1,
    }


def audit_poc_hamiltonian(report: ClassificationReport) -> AuditResult:
    """Structural checks on every POC group in ``report``."""
    passed = dict.fromkeys(AUDIT_CHECKS, 0)
    failed: dict[str, list[str]] = {name: [] for name in AUDIT_CHECKS}
    for h in report.poc_groups:
        g = h.to_group()
        for name, ok in _audit_one(g).items():
            if ok:
                passed[name] += 1
            else:
                failed[name].append(render_spec(g))
    return AuditResult(passed, failed)
