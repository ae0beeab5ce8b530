#!/usr/bin/env python3
"""Print the matcher's stored range lists around every occurrence event.

A readable walkthrough of the purge/merge mechanics on a small input:
for each event the layers it carries, then each layer's interval list
before and after processing.  Defaults to the worked DNA example.
"""

from __future__ import annotations

import argparse

from vlgmatch.matcher import find_endpoints
from vlgmatch.pattern import parse_pattern

DEFAULT_TEXT = "ATCGGCTCCAGACCAGTACCCGTTCCGTGGT"
DEFAULT_PATTERN = "A.{6,7}CC.{2,6}GT"


def fmt_lists(lists: dict[int, list]) -> str:
    parts = []
    for layer in sorted(lists):
        body = ",".join(
            f"[{start},{'*' if end is None else end}]"
            for start, end in lists[layer])
        parts.append(f"L{layer}={body or '[]'}")
    return "  ".join(parts)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-p", "--pattern", default=DEFAULT_PATTERN)
    parser.add_argument("-t", "--text", default=DEFAULT_TEXT,
                        help="text given literally on the command line")
    args = parser.parse_args()

    pattern = parse_pattern(args.pattern)

    def observer(phase, event, lists):
        if phase == "before":
            layers = ",".join(map(str, event.layers))
            print(f"pos {event.position:>3}  layers {layers}")
        print(f"    {phase:<6}  {fmt_lists(lists)}")

    ends = find_endpoints(pattern, args.text, observer=observer)
    print(f"match end positions: {ends}")


if __name__ == "__main__":
    main()
