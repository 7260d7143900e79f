"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_tally.py [--repeat N]
"""

import argparse
import time

from pocgroups.bruteforce import available_backends, brute_force_order_counts
from pocgroups.groupspec import parse_spec

SPECS = [
    "QxC3",
    "QxC2xC3xC5xC7",
    "QxC2^3xC27xC5",
    "C16xC9xC25xC7",
    "QxC2xC81xC125",
    "QxC2xC9xC25xC49xC11",
]


def best_time(spec, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        table = brute_force_order_counts(spec, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    print(f"{'spec':<18}{'order':>10}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for text in SPECS:
        spec = parse_spec(text)
        times, tables = {}, {}
        for b in backends:
            times[b], tables[b] = best_time(spec, b, args.repeat)
        assert len(set(tables.values())) == 1, f"kernels disagree on {text}"
        row = f"{text:<18}{spec.order:>10}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"   {times['python'] / times['cython']:.1f}x"
        print(row)


if __name__ == "__main__":
    main()
