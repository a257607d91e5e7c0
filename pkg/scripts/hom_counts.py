"""Hom-set sizes of the weights between one-letter words with n and m occurrences.

    python3 scripts/hom_counts.py --max 3
"""
from __future__ import annotations

import argparse

from weights import words as W
from weights.theory import hom_w, weight, weight_object

TAGS = ["monoid", "comonoid", "cmonoid", "bimonoid"]


def main() -> None:
    ap = argparse.ArgumentParser(description="weight hom counts")
    ap.add_argument("--max", type=int, default=3, help="largest occurrence count")
    ap.add_argument("--bound", type=int, default=3, help="apex bound for bimonoid cells")
    args = ap.parse_args()
    rep = {}
    for w in W.words_up_to_depth((1,), 3):
        rep.setdefault(W.occurrences(w), w)
    sizes = range(args.max + 1)
    for tag in TAGS:
        wt = weight(tag)
        print(f"{tag} (rows n, columns m)")
        for n in sizes:
            counts = [len(hom_w(wt, weight_object(rep[n]), weight_object(rep[m]), args.bound)) for m in sizes]
            print("  " + " ".join(f"{c:5d}" for c in counts))


if __name__ == "__main__":
    main()
