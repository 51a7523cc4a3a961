"""Compare the compiled edit-distance kernel against the pure-Python one.

Usage: python benchmarks/bench_editdist.py [--pairs N] [--length L]
"""

from __future__ import annotations

import argparse
import random
import time

from devaime.editdist import HAS_C_KERNEL, edit_distance_py

try:
    from devaime._speedups import edit_distance as edit_distance_c
except ImportError:
    edit_distance_c = None

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _pairs(n: int, length: int, rng: random.Random) -> list[tuple[str, str]]:
    make = lambda: "".join(rng.choice(ALPHABET) for _ in range(rng.randint(1, length)))
    return [(make(), make()) for _ in range(n)]


def _run(fn, pairs) -> tuple[float, int]:
    t0 = time.perf_counter()
    acc = 0
    for a, b in pairs:
        acc += fn(a, b)
    return time.perf_counter() - t0, acc


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=20000)
    parser.add_argument("--length", type=int, default=24)
    parser.add_argument("--seed", type=int, default=20240801)
    args = parser.parse_args()

    pairs = _pairs(args.pairs, args.length, random.Random(args.seed))
    py_time, py_acc = _run(edit_distance_py, pairs)
    print(f"pure python : {py_time:8.3f} s  ({args.pairs} pairs, checksum {py_acc})")
    if edit_distance_c is None:
        print("compiled    :   not built (pip install -e . rebuilds it)")
        return 0
    c_time, c_acc = _run(edit_distance_c, pairs)
    assert c_acc == py_acc, "kernels disagree"
    print(f"compiled    : {c_time:8.3f} s  ({args.pairs} pairs, checksum {c_acc})")
    print(f"speedup     : {py_time / c_time:8.1f}x  (HAS_C_KERNEL={HAS_C_KERNEL})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
