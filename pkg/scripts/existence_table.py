#!/usr/bin/env python3
"""Reproduce the existence table for the four forest kinds over all
digraphs of a small even order, grouped by connectivity class:

  - perfect out-forests may or may not exist in every class;
  - the other three kinds always exist on a single initial component
    and coincide with each other everywhere.

Usage: python3 scripts/existence_table.py [--n 4]
"""

import argparse
from collections import Counter

from outforest import (
    ConnectivityClass,
    ForestKind,
    OracleBudget,
    classify,
    enumerate_digraphs,
    oracle_forest,
)

KINDS = (
    ForestKind.PERFECT,
    ForestKind.ALMOST_PERFECT,
    ForestKind.WEAK_PERFECT,
    ForestKind.EVEN,
)

CLASSES = (
    ConnectivityClass.STRONGLY_CONNECTED_EVEN,
    ConnectivityClass.SINGLE_INITIAL_EVEN,
    ConnectivityClass.CONNECTED_EVEN,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4, help="even order, exhaustive")
    args = ap.parse_args()
    budget = OracleBudget(max_vertices=max(args.n, 10))

    totals = Counter()
    exists = Counter()
    for d in enumerate_digraphs(args.n, classes=CLASSES):
        cls = classify(d)
        totals[cls] += 1
        for kind in KINDS:
            if oracle_forest(d, kind, budget) is not None:
                exists[(cls, kind)] += 1

    header = f"{'kind':<16}" + "".join(f"{c.value:>24}" for c in CLASSES)
    print(f"n = {args.n}, digraphs per class: "
          + ", ".join(f"{c.value}={totals[c]}" for c in CLASSES))
    print(header)
    for kind in KINDS:
        row = f"{kind.value:<16}"
        for cls in CLASSES:
            row += f"{exists[(cls, kind)]:>18}/{totals[cls]:<5}"
        print(row)


if __name__ == "__main__":
    main()
