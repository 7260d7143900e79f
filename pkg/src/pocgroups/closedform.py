"""Order-class tables computed from formulas rather than by enumeration.

Two independent routes are provided for Hamiltonian groups: the generic
``lcm_convolve`` engine applied factor by factor, and
``hamiltonian_order_counts`` which uses the d / 2d / 4d counting rule
directly.  Tests compare them against each other and against the
brute-force oracle.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Mapping

from .groupspec import AbelianSpec, GroupSpec, HamiltonianSpec
from .numtheory import divisors, euler_phi

__all__ = [
    "OrderClassTable",
    "abelian_order_counts",
    "coprime_product_counts",
    "cyclic_order_counts",
    "group_order_counts",
    "hamiltonian_order_counts",
    "lcm_convolve",
    "quaternion_order_counts",
]


@dataclass(frozen=True)
class OrderClassTable:
    """Number of elements of each order in a group of ``group_order`` elements.

    Only non-zero counts are stored; ``table[k]`` is 0 for absent orders.
    """

    group_order: int
    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, group_order: int, counts: Mapping[int, int]) -> OrderClassTable:
        return cls(group_order, tuple(sorted((k, c) for k, c in counts.items() if c)))

    def __getitem__(self, k: int) -> int:
        for order, count in self.entries:
            if order == k:
                return count
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    def validate(self) -> None:
        """Raise ``ValueError`` if any structural invariant fails."""
        if sum(c for _, c in self.entries) != self.group_order:
            raise ValueError(f"counts sum to {sum(c for _, c in self.entries)}, "
                             f"not {self.group_order}")
        if self[1] != 1:
            raise ValueError("identity order class must have exactly one element")
        for k, c in self.entries:
            if self.group_order % k:
                raise ValueError(f"order {k} does not divide {self.group_order}")
            if c % euler_phi(k):
                raise ValueError(f"#({k}) = {c} is not a multiple of phi({k})")


def cyclic_order_counts(n: int) -> OrderClassTable:
    return OrderClassTable.from_counts(n, {d: euler_phi(d) for d in divisors(n)})


def quaternion_order_counts() -> OrderClassTable:
    return OrderClassTable(8, ((1, 1), (2, 1), (4, 6)))


def _prime_part_counts(p: int, exps: tuple[int, ...]) -> dict[int, int]:
    # Elements with order dividing p^j number p^(sum of min(e_i, j)).
    top = max(exps, default=0)
    dividing = [p ** sum(min(e, j) for e in exps) for j in range(top + 1)]
    counts = {1: 1}
    for j in range(1, top + 1):
        counts[p**j] = dividing[j] - dividing[j - 1]
    return counts


def abelian_order_counts(spec: AbelianSpec) -> OrderClassTable:
    table = OrderClassTable(1, ((1, 1),))
    for p in spec.primes:
        part = spec.exponents(p)
        order = p ** sum(part)
        table = coprime_product_counts(
            table, OrderClassTable.from_counts(order, _prime_part_counts(p, part))
        )
    return table


def lcm_convolve(a: OrderClassTable, b: OrderClassTable) -> OrderClassTable:
    """Table of A x B from the tables of A and B."""
    counts: dict[int, int] = defaultdict(int)
    for d, x in a:
        for e, y in b:
            counts[math.lcm(d, e)] += x * y
    return OrderClassTable.from_counts(a.group_order * b.group_order, counts)


def coprime_product_counts(a: OrderClassTable, b: OrderClassTable) -> OrderClassTable:
    """Table of A x B when |A| and |B| are coprime: #(ab) = #_A(a) #_B(b)."""
    if math.gcd(a.group_order, b.group_order) != 1:
        raise ValueError(
            f"orders {a.group_order} and {b.group_order} are not coprime"
        )
    counts = {d * e: x * y for d, x in a for e, y in b}
    return OrderClassTable.from_counts(a.group_order * b.group_order, counts)


def hamiltonian_order_counts(h: HamiltonianSpec) -> OrderClassTable:
    """Table of Q x C2^e x A from the table of A alone.

    For each order d occurring in A: #(d) = #_A(d), #(2d) = (2^(e+1) - 1) #_A(d)
    and #(4d) = 3 * 2^(e+1) * #_A(d).
    """
    odd = abelian_order_counts(h.odd_part)
    involutions = 2 ** (h.e + 1) - 1
    order_four = 3 * 2 ** (h.e + 1)
    counts = {}
    for d, c in odd:
        counts[d] = c
        counts[2 * d] = involutions * c
        counts[4 * d] = order_four * c
    return OrderClassTable.from_counts(h.order, counts)


def group_order_counts(spec: GroupSpec) -> OrderClassTable:
    """Generic route: ``lcm_convolve`` folded over Q and each cyclic factor."""
    table = quaternion_order_counts() if spec.has_quaternion else OrderClassTable(1, ((1, 1),))
    for size in spec.abelian.sizes():
        table = lcm_convolve(table, cyclic_order_counts(size))
    return table
