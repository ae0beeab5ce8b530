#!/usr/bin/env python3
"""Smoke benchmark: match a five-piece pattern against random DNA.

Generates an in-memory random A/C/G/T text (10 MB by default), runs the
streaming matcher once, and prints elapsed time and throughput.  This is
a sanity check that large inputs complete in seconds, not a pass/fail
test; expect single-digit seconds for the default size.
"""

from __future__ import annotations

import argparse
import random
import time

from vlgmatch.matcher import MatcherState
from vlgmatch.pattern import parse_pattern

DEFAULT_PATTERN = "ACG.{2,9}TGC.{0,5}GG.{3,8}TTA.{1,6}CA"


def random_dna(size: int, seed: int) -> bytes:
    rng = random.Random(seed)
    return bytes(rng.choices(b"ACGT", k=size))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size-mb", type=float, default=10.0,
                        help="text size in megabytes (default 10)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-p", "--pattern", default=DEFAULT_PATTERN)
    args = parser.parse_args()

    pattern = parse_pattern(args.pattern)
    size = int(args.size_mb * 1_000_000)
    print(f"generating {args.size_mb:g} MB of random DNA (seed {args.seed})")
    text = random_dna(size, args.seed)

    state = MatcherState(pattern)
    started = time.perf_counter()
    ends = state.scan(text)
    elapsed = time.perf_counter() - started

    counters = state.counters
    mb_per_s = size / 1_000_000 / elapsed if elapsed else float("inf")
    print(f"pattern: {args.pattern}")
    print(f"  k={pattern.num_subpatterns} m={pattern.literal_length} "
          f"A={pattern.min_gap_sum} B={pattern.max_gap_sum}")
    print(f"scan: {elapsed:.2f} s  ({mb_per_s:.1f} MB/s)")
    print(f"occurrences: {counters.occurrences}  matches: {len(ends)}")
    if ends:
        print(f"first match ends at {ends[0]}, last at {ends[-1]}")


if __name__ == "__main__":
    main()
