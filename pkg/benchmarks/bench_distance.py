"""Benchmark the edit-distance kernels and whole-pipeline throughput.

Usage: python benchmarks/bench_distance.py [--repeats N]

Compares the compiled kernel against the pure-Python fallback on
realistic suggestion workloads (short Ethiopic keys), then times
encode() and suggest() end to end. Self-contained; if the compiled
extension is missing it reports that and benchmarks the fallback alone.
"""

import argparse
import random
import statistics
import time

from amharic_metaphone import _distance_py
from amharic_metaphone.encoder import encode
from amharic_metaphone.ethiopic import data_dir, default_tables
from amharic_metaphone.lexicon import build_index, load_lexicon, suggest

try:
    from amharic_metaphone import _speedups
except ImportError:
    _speedups = None


def make_pairs(count: int, rng: random.Random) -> list[tuple[str, str]]:
    alphabet = sorted(default_tables().by_char)
    pairs = []
    for _ in range(count):
        a = "".join(rng.choices(alphabet, k=rng.randint(2, 9)))
        # half the pairs are near-misses of each other, like real queries
        if rng.random() < 0.5:
            b = list(a)
            b[rng.randrange(len(b))] = rng.choice(alphabet)
            b = "".join(b)
        else:
            b = "".join(rng.choices(alphabet, k=rng.randint(2, 9)))
        pairs.append((a, b))
    return pairs


def best_of(repeats: int, fn) -> float:
    return min(timeit_once(fn) for _ in range(repeats))


def timeit_once(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--pairs", type=int, default=20000)
    args = parser.parse_args()

    rng = random.Random(1234)
    pairs = make_pairs(args.pairs, rng)

    def run(impl):
        def go():
            for a, b in pairs:
                impl(a, b)
        return go

    pure = best_of(args.repeats, run(_distance_py.levenshtein))
    print(f"pure-python levenshtein: {args.pairs} pairs in {pure * 1000:8.1f} ms "
          f"({args.pairs / pure:,.0f} pairs/s)")

    if _speedups is None:
        print("compiled extension not built; skipping the comparison")
    else:
        fast = best_of(args.repeats, run(_speedups.levenshtein))
        print(f"compiled   levenshtein: {args.pairs} pairs in {fast * 1000:8.1f} ms "
              f"({args.pairs / fast:,.0f} pairs/s)")
        print(f"speedup: {pure / fast:.1f}x")
        mismatches = sum(
            _speedups.levenshtein(a, b) != _distance_py.levenshtein(a, b)
            for a, b in pairs[:2000]
        )
        print(f"agreement check on 2000 pairs: {'ok' if mismatches == 0 else mismatches}")

    words = [a for a, _ in pairs[:2000]]
    encode_time = best_of(args.repeats, lambda: [encode(w) for w in words])
    print(f"encode(): {len(words)} words in {encode_time * 1000:8.1f} ms "
          f"({len(words) / encode_time:,.0f} words/s)")

    lexicon = load_lexicon(data_dir() / "lexicon.txt")
    index = build_index(lexicon)
    queries = words[:500]
    suggest_time = best_of(
        args.repeats, lambda: [suggest(q, index) for q in queries]
    )
    print(f"suggest() over {len(lexicon)}-word lexicon: {len(queries)} queries in "
          f"{suggest_time * 1000:8.1f} ms ({len(queries) / suggest_time:,.0f} queries/s)")

    median_keys = statistics.median(len(encode(w).keys()) for w in words)
    print(f"median encodings per word: {median_keys:.0f}")


if __name__ == "__main__":
    main()
