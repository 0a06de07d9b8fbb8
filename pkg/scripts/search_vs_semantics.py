"""Run proof search and bounded countermodel search side by side.

For each goal and each system, prints whether search found a derivation
and whether the matching class has a small countermodel.  A derivation
together with a countermodel would be a soundness bug; the script exits 1
if it sees one.

    python3 scripts/search_vs_semantics.py --depth 6 --max-worlds 3
"""

from __future__ import annotations

import argparse
import sys

from relsem.consequence import SYSTEM_CLASS, Countermodel, semantic_consequence
from relsem.search import SearchConfig, prove
from relsem.sequents import SYSTEMS, check_derivation, parse_sequent

GOALS = [
    "; p -> p",
    "p, p -> q ; q",
    "p -> q, q -> r ; p -> r",
    "p -> q ; (_|_ -> _|_) -> (p -> q)",
    "; p -> (q -> p)",
    "p ; ((p -> _|_) -> _|_) -> p",
    "p ; (_|_ -> _|_) -> p",
    "; p & q -> q & p",
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--max-worlds", type=int, default=3)
    ap.add_argument("goals", nargs="*", help="sequents to try instead of the built-in list")
    args = ap.parse_args()

    goals = args.goals or GOALS
    tags = list(SYSTEMS)
    width = max(map(len, goals)) + 2
    print("".ljust(width) + "".join(t.rjust(7) for t in tags))
    bugs = 0
    for text in goals:
        s = parse_sequent(text)
        cells = []
        for tag in tags:
            d = prove(s, SearchConfig(tag, max_depth=args.depth))
            cm = isinstance(semantic_consequence(s, SYSTEM_CLASS[tag], args.max_worlds), Countermodel)
            if d is not None:
                check_derivation(d, tag)
            bugs += d is not None and cm
            # P: proved, C: countermodel, ?: neither within the bounds
            cells.append("P" if d is not None else "C" if cm else "?")
        print(text.ljust(width) + "".join(c.rjust(7) for c in cells))
    print("\nP proved   C countermodel   ? open at these bounds")
    if bugs:
        print(f"{bugs} proved goals have countermodels", file=sys.stderr)
    return 1 if bugs else 0


if __name__ == "__main__":
    sys.exit(main())
