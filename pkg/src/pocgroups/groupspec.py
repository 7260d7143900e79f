"""Isomorphism-class descriptions of groups of the form (Q x) A, A abelian.

An abelian group is stored by its primary decomposition: a sorted tuple of
prime-power cyclic factors ``(p, k)`` meaning C_{p^k}.  Together with a flag
for a single quaternion factor this is a complete isomorphism invariant for
the family, which is all the Hamiltonian groups plus all abelian groups.

Text form (also accepted by :func:`parse_spec`)::

    spec    := [ "Q" ] | [ "Q" "x" ] factor ( "x" factor )*
    factor  := "C" <n>  |  "C2^" <e>

``C<n>`` with composite n is split into prime-power factors, ``C1`` is the
trivial group.  Matching is case-insensitive and whitespace is rejected.
:func:`render_spec` emits the canonical form, e.g. ``QxC2^2xC3xC9``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .numtheory import factorize, is_prime

__all__ = [
    "AbelianSpec",
    "GroupSpec",
    "HamiltonianSpec",
    "NotHamiltonian",
    "SpecParseError",
    "TRIVIAL",
    "QUATERNION",
    "abelian_specs_of_order",
    "cyclic",
    "direct_product",
    "enumerate_hamiltonian",
    "make_abelian",
    "parse_spec",
    "partitions",
    "render_spec",
    "to_hamiltonian",
]


class SpecParseError(ValueError):
    """Malformed spec string; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class NotHamiltonian(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AbelianSpec:
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for p, k in self.factors:
            if not is_prime(p):
                raise ValueError(f"factor base {p} is not prime")
            if k < 1:
                raise ValueError(f"factor C{p}^{k} needs exponent >= 1")
        if list(self.factors) != sorted(self.factors):
            raise ValueError("factors must be in canonical order; use make_abelian")

    @property
    def order(self) -> int:
        return math.prod(p**k for p, k in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({p for p, _ in self.factors}))

    def rank(self, p: int) -> int:
        """Number of cyclic factors in the p-primary part."""
        return sum(1 for q, _ in self.factors if q == p)

    def exponents(self, p: int) -> tuple[int, ...]:
        return tuple(k for q, k in self.factors if q == p)

    def sizes(self) -> tuple[int, ...]:
        """Cyclic factor orders, in canonical order."""
        return tuple(p**k for p, k in self.factors)

    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        return math.lcm(1, *self.sizes())

    def part(self, primes: Iterable[int]) -> AbelianSpec:
        keep = set(primes)
        return AbelianSpec(tuple(f for f in self.factors if f[0] in keep))


def make_abelian(factors: Iterable[tuple[int, int]]) -> AbelianSpec:
    """Canonical spec from prime-power factors given in any order."""
    return AbelianSpec(tuple(sorted((int(p), int(k)) for p, k in factors)))


def cyclic(n: int) -> AbelianSpec:
    """C_n in primary form (``cyclic(12)`` is C4 x C3)."""
    return AbelianSpec(tuple(factorize(n)))


@dataclass(frozen=True)
class GroupSpec:
    has_quaternion: bool = False
    abelian: AbelianSpec = field(default_factory=AbelianSpec)

    @property
    def order(self) -> int:
        return (8 if self.has_quaternion else 1) * self.abelian.order

    def sort_key(self):
        return (self.order, self.has_quaternion, self.abelian.factors)

    def __lt__(self, other: GroupSpec) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render_spec(self)


TRIVIAL = GroupSpec()
QUATERNION = GroupSpec(True)


@dataclass(frozen=True)
class HamiltonianSpec:
    """Q x C2^e x A with A abelian of odd order."""

    e: int
    odd_part: AbelianSpec = field(default_factory=AbelianSpec)

    def __post_init__(self):
        if self.e < 0:
            raise ValueError(f"e must be non-negative, got {self.e}")
        if 2 in self.odd_part.primes:
            raise ValueError("odd part has a factor of even order")

    @property
    def order(self) -> int:
        return 2 ** (self.e + 3) * self.odd_part.order

    def to_group(self) -> GroupSpec:
        return GroupSpec(True, make_abelian([(2, 1)] * self.e + list(self.odd_part.factors)))

    def sort_key(self):
        return self.to_group().sort_key()

    def __lt__(self, other: HamiltonianSpec) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render_spec(self.to_group())


def direct_product(a: GroupSpec, b: GroupSpec) -> GroupSpec:
    if a.has_quaternion and b.has_quaternion:
        raise ValueError("only a single quaternion factor is supported")
    return GroupSpec(
        a.has_quaternion or b.has_quaternion,
        make_abelian(a.abelian.factors + b.abelian.factors),
    )


def to_hamiltonian(spec: GroupSpec) -> HamiltonianSpec:
    """Hamiltonian decomposition of ``spec``; raises :class:`NotHamiltonian`."""
    if not spec.has_quaternion:
        raise NotHamiltonian(f"{render_spec(spec)} has no quaternion factor (abelian)")
    two = spec.abelian.exponents(2)
    if any(k != 1 for k in two):
        raise NotHamiltonian(
            f"{render_spec(spec)}: 2-part is not elementary abelian "
            f"(factor C{2 ** max(two)})"
        )
    odd = AbelianSpec(tuple(f for f in spec.abelian.factors if f[0] != 2))
    return HamiltonianSpec(len(two), odd)


# -- enumeration ------------------------------------------------------------


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def abelian_specs_of_order(n: int) -> list[AbelianSpec]:
    """One spec per isomorphism class of abelian groups of order ``n``."""
    per_prime = [
        [[(p, k) for k in part] for part in partitions(e)] for p, e in factorize(n)
    ]
    out = [make_abelian([])]
    for choices in per_prime:
        out = [make_abelian(a.factors + tuple(c)) for a in out for c in choices]
    return sorted(out)


def enumerate_hamiltonian(max_order: int) -> list[HamiltonianSpec]:
    """Every Hamiltonian group of order <= ``max_order``, up to isomorphism,
    sorted by order and then canonically."""
    out = []
    for n in range(1, max_order // 8 + 1, 2):
        for odd in abelian_specs_of_order(n):
            e = 0
            while 2 ** (e + 3) * n <= max_order:
                out.append(HamiltonianSpec(e, odd))
                e += 1
    out.sort()
    return out


# -- text form --------------------------------------------------------------


def render_spec(spec: GroupSpec | HamiltonianSpec | AbelianSpec) -> str:
    if isinstance(spec, HamiltonianSpec):
        spec = spec.to_group()
    elif isinstance(spec, AbelianSpec):
        spec = GroupSpec(False, spec)
    tokens = ["Q"] if spec.has_quaternion else []
    counts = Counter(spec.abelian.factors)
    for p, k in sorted(counts):
        if (p, k) == (2, 1) and counts[p, k] > 1:
            tokens.append(f"C2^{counts[p, k]}")
        else:
            tokens.extend([f"C{p ** k}"] * counts[p, k])
    if not tokens:
        return "C1"
    return "x".join(tokens)


_TOKEN = re.compile(r"(q)|c([0-9]+)(\^([0-9]+))?", re.IGNORECASE)


def parse_spec(text: str) -> GroupSpec:
    """Parse the spec grammar in the module docstring."""
    if not text:
        raise SpecParseError("empty spec", text, 0)
    for i, ch in enumerate(text):
        if ch.isspace():
            raise SpecParseError("whitespace is not allowed", text, i)
    has_q = False
    factors: list[tuple[int, int]] = []
    pos = 0
    first = True
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SpecParseError("expected 'Q' or 'C<n>'", text, pos)
        if m.group(1):
            if not first:
                raise SpecParseError("'Q' may only appear as the first factor", text, pos)
            has_q = True
        else:
            n = int(m.group(2))
            if n < 1:
                raise SpecParseError("cyclic order must be >= 1", text, m.start(2))
            if m.group(3):
                if n != 2:
                    raise SpecParseError("'^' shorthand is only defined for C2", text, m.start(3))
                e = int(m.group(4))
                if e < 1:
                    raise SpecParseError("C2^e needs e >= 1", text, m.start(4))
                factors.extend([(2, 1)] * e)
            else:
                factors.extend(factorize(n))
        first = False
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] not in "xX":
            raise SpecParseError("expected 'x' between factors", text, pos)
        pos += 1
        if pos == len(text):
            raise SpecParseError("trailing 'x'", text, pos)
    return GroupSpec(has_q, make_abelian(factors))
