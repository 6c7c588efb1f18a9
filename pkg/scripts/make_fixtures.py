"""Regenerate the committed .dmap fixtures.

The optimal-length mappings with degree distribution (w ones, m-w twos)
at n = 2m - w are found by maximum matching and written in block-sorted
form.  The largest one is a long run; pass --small to skip it.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from domap import DominationGraph, save_mapping, verify_mapping
from domap.constructions import example_342
from domap.matching import decide_graph

FIXDIR = Path(__file__).resolve().parent.parent / "src" / "domap" / "fixtures"

TRIPLES = [(9, 15, 3), (12, 20, 4), (15, 25, 5)]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--small", action="store_true", help="skip (15, 25, 5)")
    args = parser.parse_args()

    FIXDIR.mkdir(parents=True, exist_ok=True)
    save_mapping(example_342(), FIXDIR / "example_3_4_2.dmap")
    print("wrote example_3_4_2.dmap")

    for m, n, w in TRIPLES:
        if args.small and m == 15:
            continue
        degrees = (1,) * w + (2,) * (m - w)
        graph = DominationGraph.from_degrees(degrees)
        t = time.time()
        exists, mapping = decide_graph(graph, w, max_edges=200_000_000)
        if not exists:
            print(f"({m},{n},{w}): no mapping found", file=sys.stderr)
            return 1
        assert verify_mapping(mapping).ok
        path = FIXDIR / f"optimal_{m}_{n}_{w}.dmap"
        save_mapping(mapping, path)
        print(f"wrote {path.name} in {time.time() - t:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
