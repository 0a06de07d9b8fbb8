"""Verdict matrix: characteristic sequents against every model class.

Each cell is ``valid<=N`` when no countermodel with at most N worlds exists,
otherwise the size of the first countermodel found.

    python3 scripts/separations.py --max-worlds 3
"""

from __future__ import annotations

import argparse
import time

from relsem.classes import ModelClass
from relsem.consequence import Countermodel, semantic_consequence
from relsem.sequents import parse_sequent

SEQUENTS = {
    "Refl": "p, p -> q ; q",
    "Tran": "p -> q ; (_|_ -> _|_) -> (p -> q)",
    "PropMinus": "p ; ((_|_ -> _|_) -> _|_) -> p",
    "PropTr": "p ; (_|_ -> _|_) -> p",
    "PropSy": "p ; ((p -> _|_) -> _|_) -> p",
    "K-persist": "; p -> (q -> p)",
    "DNE": "; ((p -> _|_) -> _|_) -> p",
    "Contrapos": "p -> q ; (q -> _|_) -> (p -> _|_)",
}

CLASSES = [c for c in ModelClass if c not in (ModelClass.Pminus, ModelClass.Re)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-worlds", type=int, default=3)
    args = ap.parse_args()

    start = time.perf_counter()
    width = max(map(len, SEQUENTS)) + 2
    print("".ljust(width) + "".join(c.value.rjust(10) for c in CLASSES))
    for name, text in SEQUENTS.items():
        s = parse_sequent(text)
        cells = []
        for c in CLASSES:
            v = semantic_consequence(s, c, args.max_worlds)
            cells.append(f"cm@{v.model.size}" if isinstance(v, Countermodel) else f"valid<={v.max_worlds}")
        print(name.ljust(width) + "".join(x.rjust(10) for x in cells))
    print(f"\n{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
