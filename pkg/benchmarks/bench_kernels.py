#!/usr/bin/env python3
"""Benchmark the compiled scalar kernels against the pure-Python twin.

Times the hot paths of the verification harness: cross-ratio/Cartan
evaluation of quadruples and the variety closed forms.  Run after an
editable install:

    python benchmarks/bench_kernels.py [--n 200000] [--seed 0]
"""

import argparse
import importlib
import time

import numpy as np


def _load_backends():
    backends = {}
    from crvariety import _kernels_py

    backends["py"] = _kernels_py
    try:
        _kernels_c = importlib.import_module("crvariety._kernels_c")
        backends["c"] = _kernels_c
    except ImportError:
        pass
    return backends


def _sample_quadruples(n, seed):
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 99])))
    quads = []
    for _ in range(n):
        a = rng.uniform(-3.0, 3.0, size=6)
        quads.append(
            (
                complex(a[0], a[1]), float(a[2]), False,
                0j, 0.0, True,
                0j, 0.0, False,
                complex(a[3], a[4]), float(a[5]), False,
            )
        )
    return quads


def _time(fn, args_list):
    t0 = time.perf_counter()
    acc = 0.0
    for args in args_list:
        out = fn(*args)
        acc += abs(out[0])
    t1 = time.perf_counter()
    return t1 - t0, acc


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = _load_backends()
    quads = _sample_quadruples(args.n, args.seed)
    triples = []
    for q in quads:
        x1, x2, x3 = backends["py"].quad_cross_ratios(*q)
        triples.append((x1, x2, x3))

    rows = []
    for name, mod in backends.items():
        t_x, acc_x = _time(mod.quad_cross_ratios, quads)
        t_a, acc_a = _time(mod.quad_cartans, quads)
        t_m, acc_m = _time(mod.variety_minors, triples)
        t_l, acc_l = _time(mod.levi_forms, triples)
        rows.append((name, t_x, t_a, t_m, t_l, acc_x + acc_a + acc_m + acc_l))

    print(f"{args.n} evaluations per kernel")
    print(f"{'backend':>8} {'cross_ratios':>14} {'cartans':>12} {'minors':>12} {'levi':>12}")
    for name, t_x, t_a, t_m, t_l, _ in rows:
        print(
            f"{name:>8} {t_x:>12.3f} s {t_a:>10.3f} s {t_m:>10.3f} s {t_l:>10.3f} s"
        )
    if len(rows) == 2:
        py = next(r for r in rows if r[0] == "py")
        cc = next(r for r in rows if r[0] == "c")
        for label, i in (("cross_ratios", 1), ("cartans", 2), ("minors", 3), ("levi", 4)):
            print(f"speedup {label}: {py[i] / cc[i]:.1f}x")


if __name__ == "__main__":
    main()
