#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Usage:
    python benchmarks/bench_kernels.py [--repeat N] [--full]

--full adds the larger cases (order-10 carrier materialization) that take
tens of seconds on the pure backend.
"""

import argparse
import time
from collections import Counter

from powmon import _pure
from powmon.iso import refine_colors
from powmon.monoid import cyclic_group, dihedral_group, direct_product, quaternion_group
from powmon.powerset import reduced_power_monoid

try:
    from powmon import _core
except ImportError:
    _core = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_cases(full):
    q8 = quaternion_group()
    pm128 = reduced_power_monoid(q8)
    carrier = pm128.carrier
    masks128 = pm128.masks

    z6 = cyclic_group(6)
    z23 = direct_product(cyclic_group(2), cyclic_group(3))
    c1, c2 = refine_colors([reduced_power_monoid(z6).carrier,
                            reduced_power_monoid(z23).carrier])
    sizes = Counter(c1)
    order = sorted(range(32), key=lambda a: (sizes[c1[a]], a))
    t1 = reduced_power_monoid(z6).carrier.flat
    t2 = reduced_power_monoid(z23).carrier.flat

    d4 = dihedral_group(4)

    cases = [
        ("assoc_witness, 128-element carrier",
         lambda k: k.assoc_witness(carrier.flat, 128)),
        ("power_table, quaternion base (carrier 128)",
         lambda k: k.power_table(q8.flat, 8, masks128)),
        ("setwise_product, dihedral 4, all 255^2 pairs",
         lambda k: [k.setwise_product(d4.flat, 8, x, y)
                    for x in range(1, 256) for y in range(1, 256)]),
        ("iso_search, P(Z6) vs P(Z2xZ3) first witness",
         lambda k: k.iso_search(t1, t2, 32, c1, c2, order, 10 ** 7, 1)),
        ("enumerate_tables(4)", lambda k: k.enumerate_tables(4)),
        ("enumerate_tables(5)", lambda k: k.enumerate_tables(5)),
    ]
    if full:
        z10 = cyclic_group(10)
        pm512 = reduced_power_monoid(z10)
        cases.append(("power_table, cyclic 10 base (carrier 512)",
                      lambda k: k.power_table(z10.flat, 10, pm512.masks)))
        cases.append(("assoc_witness, 512-element carrier",
                      lambda k: k.assoc_witness(pm512.carrier.flat, 512)))
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--full", action="store_true")
    args = ap.parse_args()

    if _core is None:
        print("compiled backend not built; run: python setup.py build_ext --inplace")
    print(f"{'case':<48} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in bench_cases(args.full):
        tp = timed(lambda: fn(_pure), args.repeat)
        if _core is not None:
            # sanity: identical results before timing
            assert fn(_pure) == fn(_core), name
            tc = timed(lambda: fn(_core), args.repeat)
            print(f"{name:<48} {tp * 1e3:>8.1f}ms {tc * 1e3:>8.1f}ms {tp / tc:>7.1f}x")
        else:
            print(f"{name:<48} {tp * 1e3:>8.1f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
