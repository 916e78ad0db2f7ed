"""Compare the compiled and pure-Python kernels on oracle-sized workloads.

    python benchmarks/bench_kernels.py [--m 8] [--s 2] [--k 3] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from ppicod import _pycore
from ppicod.gf2 import gaussian_binomial, pivot_patterns
from ppicod.instance import Instance

try:
    from ppicod import _core
except ImportError:
    _core = None


def scan_all(mod, inst: Instance, k: int) -> int:
    total = 0
    for pat in pivot_patterns(inst.m, k):
        total += mod.scan_pattern(inst.m, pat, inst.side_masks, False)[2]
    return total


def decode_batch(mod, inst: Instance, codes: list[list[int]]) -> int:
    n = 0
    for rows in codes:
        n += sum(mod.decodable_masks(rows, inst.side_masks, inst.m)) & 1
    return n


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=8)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--codes", type=int, default=20000)
    args = ap.parse_args()

    inst = Instance(args.m, args.s)
    rng = random.Random(0)
    codes = [[rng.randrange(1, 1 << args.m) for _ in range(rng.randint(1, args.m))] for _ in range(args.codes)]
    backends = [("python", _pycore)] + ([("cython", _core)] if _core else [])

    print(f"instance m={args.m} s={args.s}: {gaussian_binomial(args.m, args.k)} subspaces of dimension {args.k}, "
          f"{args.codes} random generators")
    print(f"{'backend':8s} {'subspace scan':>14s} {'decodable sets':>15s}")
    times = {}
    for name, mod in backends:
        t_scan, valid = best_of(lambda: scan_all(mod, inst, args.k), args.repeat)
        t_dec, _ = best_of(lambda: decode_batch(mod, inst, codes), args.repeat)
        times[name] = (t_scan, t_dec)
        print(f"{name:8s} {t_scan:13.3f}s {t_dec:14.3f}s   (valid codes: {valid})")
    if len(times) == 2:
        (ps, pd), (cs, cd) = times["python"], times["cython"]
        print(f"speedup  {ps / cs:13.1f}x {pd / cd:14.1f}x")
    else:
        print("compiled extension not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
