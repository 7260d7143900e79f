"""Pure-Python element-order tally (fallback for the compiled ``_tally``).

An element of C_1 x ... x C_r (components of any kind) is a tuple of
component indices.  ``order_arrays[c][i]`` is the order of the i-th element
of component c.  Because the components commute, the order of a tuple is
the lcm of its component orders.

``tally_orders`` enumerates every tuple whose leading index lies in
``[lead_start, lead_stop)`` and returns ``{order: count}``.  Splitting the
leading range gives disjoint slices whose tallies add up to the whole.
``order_values`` lists every order that can occur; the compiled kernel
needs it for its fixed-size tally, here it is only checked.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import product, starmap


def tally_orders(order_arrays, lead_start, lead_stop, order_values):
    if not order_arrays or lead_start >= lead_stop:
        return {}
    lead = order_arrays[0][lead_start:lead_stop]
    counts = Counter(starmap(math.lcm, product(lead, *order_arrays[1:])))
    unexpected = set(counts) - set(order_values)
    if unexpected:
        raise ValueError(f"orders {sorted(unexpected)} not in order_values")
    return dict(counts)
