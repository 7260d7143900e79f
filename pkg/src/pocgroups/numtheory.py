"""Elementary number theory: totient, divisors, factorization, and a
finite-window solver for p^m - 1 = q^n with p, q prime."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "PowerCase",
    "PrimePowerSolution",
    "divisors",
    "euler_phi",
    "factorize",
    "is_prime",
    "prime_power_base",
    "solve_consecutive_prime_powers",
]

# Deterministic Miller-Rabin witnesses for every n < 3.3e24 (covers 64-bit).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((prime, exponent), ...)`` sorted by prime."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, k in self.pairs:
            if p <= last or not is_prime(p):
                raise ValueError(f"bad prime {p} in factorization {self.pairs}")
            if k < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {k}")
            last = p

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        return math.prod(p**k for p, k in self.pairs)


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division (6k +/- 1 wheel)."""
    _require_positive(n)
    pairs = []
    for p in (2, 3):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            pairs.append((p, k))
    p, step = 5, 2
    while p * p <= n:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            pairs.append((p, k))
        p += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    _require_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _require_positive(n)
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**j for d in divs for j in range(k + 1)]
    return sorted(divs)


def prime_power_base(n: int) -> tuple[int, int] | None:
    """Return ``(q, k)`` when ``n == q**k`` for a prime ``q`` and ``k >= 1``."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    return f[0]


class PowerCase(str, enum.Enum):
    CATALAN = "CATALAN"
    MERSENNE = "MERSENNE"
    FERMAT = "FERMAT"


@dataclass(frozen=True, order=True)
class PrimePowerSolution:
    """A solution of p**m - 1 == q**n with p, q prime, tagged by its case."""

    p: int
    m: int
    q: int
    n: int
    case: PowerCase

    def __post_init__(self):
        if self.p**self.m - 1 != self.q**self.n:
            raise ValueError(f"{self.p}^{self.m} - 1 != {self.q}^{self.n}")
        if self.case is not classify_power_case(self.p, self.m, self.q, self.n):
            raise ValueError(f"wrong case tag {self.case} for {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.m, self.q, self.n)


def matching_cases(p: int, m: int, q: int, n: int) -> list[PowerCase]:
    """Every case whose defining pattern matches ``(p, m, q, n)``."""
    found = []
    if (p, m, q, n) == (3, 2, 2, 3):
        found.append(PowerCase.CATALAN)
    if n == 1 and p == 2:
        found.append(PowerCase.MERSENNE)
    if m == 1 and q == 2:
        found.append(PowerCase.FERMAT)
    return found


def classify_power_case(p: int, m: int, q: int, n: int) -> PowerCase:
    cases = matching_cases(p, m, q, n)
    if len(cases) != 1:
        raise ValueError(
            f"({p},{m},{q},{n}) matches {len(cases)} cases, expected exactly one"
        )
    return cases[0]


def _prime_powers_upto(limit: int) -> list[tuple[int, int, int]]:
    """``(p**m, p, m)`` for every prime power 2 <= p**m <= limit."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    out = []
    for p in range(2, limit + 1):
        if not sieve[p]:
            continue
        v, m = p, 1
        while v <= limit:
            out.append((v, p, m))
            v *= p
            m += 1
    out.sort()
    return out


def solve_consecutive_prime_powers(limit: int) -> list[PrimePowerSolution]:
    """All (p, m, q, n) with p**m - 1 == q**n and p**m <= limit.

    Solutions are sorted by p**m, then by p.
    """
    _require_positive(limit, "limit")
    solutions = []
    for value, p, m in _prime_powers_upto(limit):
        base = prime_power_base(value - 1)
        if base is None:
            continue
        q, n = base
        solutions.append(
            PrimePowerSolution(p, m, q, n, classify_power_case(p, m, q, n))
        )
    return solutions
