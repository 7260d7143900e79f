"""Brute-force oracle: enumerate every element and tally element orders.

Nothing here uses the counting formulas of :mod:`pocgroups.closedform`.  Each
element is a tuple of components (a quaternion symbol and one residue per
cyclic factor), and its order is the lcm of the component orders.  The
quaternion component only needs its fixed order table, since Q commutes
with the other direct factors.

The enumeration loop runs in the compiled ``_tally`` extension when it is
built and falls back to ``_tally_py`` otherwise.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import _tally_py
from .closedform import OrderClassTable
from .groupspec import GroupSpec, render_spec
from .numtheory import divisors

try:
    from . import _tally as _tally_ext
except ImportError:  # extension not built
    _tally_ext = None

__all__ = [
    "BACKEND",
    "DEFAULT_CAP",
    "CapExceeded",
    "Element",
    "HallVerdict",
    "QUATERNION_SYMBOLS",
    "available_backends",
    "brute_force_order_counts",
    "element_order",
    "elements",
    "hall_projection_check",
]

DEFAULT_CAP = 10_000_000

QUATERNION_SYMBOLS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
_QUATERNION_ORDERS = {"1": 1, "-1": 2, "i": 4, "-i": 4, "j": 4, "-j": 4, "k": 4, "-k": 4}

_KERNELS = {"python": _tally_py.tally_orders}
if _tally_ext is not None:
    _KERNELS["cython"] = _tally_ext.tally_orders

BACKEND = "cython" if "cython" in _KERNELS else "python"


def available_backends() -> list[str]:
    return sorted(_KERNELS)


class CapExceeded(RuntimeError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds the brute-force cap {cap}")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class Element:
    q_part: str | None
    residues: tuple[int, ...]

    @classmethod
    def identity(cls, spec: GroupSpec) -> Element:
        return cls("1" if spec.has_quaternion else None, (0,) * len(spec.abelian.factors))

    def is_identity(self) -> bool:
        return self.q_part in (None, "1") and not any(self.residues)


def _check_element(el: Element, spec: GroupSpec) -> None:
    if spec.has_quaternion:
        if el.q_part not in _QUATERNION_ORDERS:
            raise ValueError(f"bad quaternion component {el.q_part!r}")
    elif el.q_part is not None:
        raise ValueError(f"{render_spec(spec)} has no quaternion factor")
    sizes = spec.abelian.sizes()
    if len(el.residues) != len(sizes):
        raise ValueError(f"expected {len(sizes)} residues, got {len(el.residues)}")
    for r, m in zip(el.residues, sizes):
        if not 0 <= r < m:
            raise ValueError(f"residue {r} out of range for C{m}")


def element_order(el: Element, spec: GroupSpec) -> int:
    _check_element(el, spec)
    orders = [m // math.gcd(m, r) for r, m in zip(el.residues, spec.abelian.sizes())]
    if el.q_part is not None:
        orders.append(_QUATERNION_ORDERS[el.q_part])
    return math.lcm(1, *orders)


def elements(spec: GroupSpec) -> Iterator[Element]:
    """Every element of ``spec``, in mixed-radix order."""
    ranges = [range(m) for m in spec.abelian.sizes()]
    qs = QUATERNION_SYMBOLS if spec.has_quaternion else (None,)
    for q in qs:
        for residues in product(*ranges):
            yield Element(q, residues)


def _component_orders(spec: GroupSpec) -> list[list[int]]:
    arrays = [[m // math.gcd(m, r) for r in range(m)] for m in spec.abelian.sizes()]
    if spec.has_quaternion:
        arrays.append([_QUATERNION_ORDERS[s] for s in QUATERNION_SYMBOLS])
    # Largest component leads so the work splits evenly across workers.
    arrays.sort(key=len, reverse=True)
    return arrays or [[1]]


def _run_slice(args):
    backend, arrays, start, stop, values = args
    return _KERNELS[backend](arrays, start, stop, values)


def brute_force_order_counts(
    spec: GroupSpec,
    cap: int = DEFAULT_CAP,
    *,
    backend: str | None = None,
    workers: int = 1,
) -> OrderClassTable:
    """Order-class table of ``spec`` by full enumeration.

    Raises :class:`CapExceeded` when ``spec.order > cap``.  ``workers > 1``
    splits the enumeration across processes; the result does not depend on
    the split.
    """
    if spec.order > cap:
        raise CapExceeded(spec.order, cap)
    backend = backend or BACKEND
    if backend not in _KERNELS:
        raise ValueError(f"unknown backend {backend!r}; available: {available_backends()}")
    if spec.order >= 2**62:
        raise OverflowError("group order too large for the enumeration kernel")
    arrays = _component_orders(spec)
    # Every element order divides the lcm of the component sizes.
    values = divisors(math.lcm(*(len(a) for a in arrays)))
    lead = len(arrays[0])
    workers = max(1, min(workers, lead))
    bounds = [lead * i // workers for i in range(workers + 1)]
    jobs = [(backend, arrays, lo, hi, values) for lo, hi in zip(bounds, bounds[1:])]
    if workers == 1:
        parts = [_run_slice(jobs[0])]
    else:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_slice, jobs))
    counts: dict[int, int] = {}
    for part in parts:
        for k, c in part.items():
            counts[k] = counts.get(k, 0) + c
    return OrderClassTable.from_counts(spec.order, counts)


# -- Hall subgroups -----------------------------------------------------------


@dataclass(frozen=True)
class HallVerdict:
    """Result of checking A inside A x B for coprime |A|, |B|.

    ``contained``: every element of A x B whose order divides |A| lies in A.
    ``counts_agree``: #(d) in A x B equals #(d) in A for each d dividing |A|.
    """

    passed: bool
    contained: bool
    counts_agree: bool
    counts_product: dict[int, int]
    counts_factor: dict[int, int]
    counterexample: tuple[Element, Element] | None = None
    mismatched_orders: tuple[int, ...] = ()


def hall_projection_check(a: GroupSpec, b: GroupSpec, cap: int = DEFAULT_CAP) -> HallVerdict:
    """Enumerate A x B and test A as a normal Hall subgroup of it."""
    n_a, n_b = a.order, b.order
    if math.gcd(n_a, n_b) != 1:
        raise ValueError(f"|A| = {n_a} and |B| = {n_b} are not coprime")
    if n_a * n_b > cap:
        raise CapExceeded(n_a * n_b, cap)
    a_elems = [(x, element_order(x, a)) for x in elements(a)]
    b_elems = [(y, element_order(y, b)) for y in elements(b)]
    factor_counts: dict[int, int] = {}
    for _, o in a_elems:
        factor_counts[o] = factor_counts.get(o, 0) + 1
    product_counts: dict[int, int] = {}
    counterexample = None
    for x, ox in a_elems:
        for y, oy in b_elems:
            order = math.lcm(ox, oy)
            if n_a % order:
                continue
            product_counts[order] = product_counts.get(order, 0) + 1
            if counterexample is None and not y.is_identity():
                counterexample = (x, y)
    mismatched = tuple(
        d for d in divisors(n_a) if product_counts.get(d, 0) != factor_counts.get(d, 0)
    )
    contained = counterexample is None
    return HallVerdict(
        passed=contained and not mismatched,
        contained=contained,
        counts_agree=not mismatched,
        counts_product=dict(sorted(product_counts.items())),
        counts_factor=dict(sorted(factor_counts.items())),
        counterexample=counterexample,
        mismatched_orders=mismatched,
    )
