#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Runs suffix tree construction, repeated tree queries, and the four classical
matchers on seeded DNA text at a few sizes, then prints per-operation timings
for both backends and the speedup. Data is identical across backends, so the
comparison is apples to apples.

Usage:
    python benchmarks/compare_backends.py [--sizes 10000,100000,1000000] [--seed 7]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import strsearch
from strsearch import (
    bm_find_all,
    build_suffix_tree,
    kmp_find_all,
    naive_find_all,
    rk_find_all,
    sample_patterns,
)
from strsearch.datagen import DNA_UNIFORM, GenSpec, generate_text


def time_once(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench_backend(backend: str, text, pattern, query_reps: int):
    rows = {}
    rows["stree build"] = time_once(lambda: build_suffix_tree(text.body, backend=backend))
    index = build_suffix_tree(text.body, backend=backend)
    rows[f"stree find_all x{query_reps}"] = time_once(
        lambda: [index.find_all(pattern) for _ in range(query_reps)]
    )
    for name, fn in (
        ("naive", naive_find_all),
        ("kmp", kmp_find_all),
        ("rk", rk_find_all),
        ("bm", bm_find_all),
    ):
        rows[f"{name} find_all"] = time_once(lambda fn=fn: fn(text, pattern, backend=backend))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="10000,100000,1000000")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--pattern-len", type=int, default=10)
    parser.add_argument("--query-reps", type=int, default=1000)
    args = parser.parse_args()

    if not strsearch.has_native_backend():
        print("native kernel not built; nothing to compare (pip install -e . first)")
        return 1

    sizes = [int(s) for s in args.sizes.split(",")]
    for size in sizes:
        text = generate_text(GenSpec(alphabet=DNA_UNIFORM, length=size, seed=args.seed))
        pattern = sample_patterns(text, 1, args.pattern_len, args.pattern_len, seed=args.seed)[0]
        py = bench_backend("py", text, pattern, args.query_reps)
        c = bench_backend("c", text, pattern, args.query_reps)
        print(f"\nn = {size}  (pattern length {args.pattern_len}, seed {args.seed})")
        print(f"  {'operation':<24} {'pure':>10} {'native':>10} {'speedup':>8}")
        for op in py:
            ratio = py[op] / c[op] if c[op] > 0 else float("inf")
            print(f"  {op:<24} {py[op] * 1e3:>8.2f}ms {c[op] * 1e3:>8.2f}ms {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
