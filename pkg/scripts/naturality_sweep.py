"""How deep must the naturality check go before it agrees with the cone laws?

For every candidate (M, mul, unit) in a fixture, compare the cone-law verdict
with truncated naturality at depths 0..max.

    python3 scripts/naturality_sweep.py nonthin --max-depth 3
"""
from __future__ import annotations

import argparse
from itertools import product

from weights.cli import fixture_path
from weights.fincat import load_monoidal
from weights.limits import check_cone_laws, naturality_failures, point_cone


def main() -> None:
    ap = argparse.ArgumentParser(description="cone laws vs truncated naturality")
    ap.add_argument("fixture", nargs="+")
    ap.add_argument("--max-depth", type=int, default=2)
    args = ap.parse_args()
    for name in args.fixture:
        C, _ = load_monoidal(fixture_path(name))
        candidates = [(M, mul, unit) for M in C.base.objects
                      for mul, unit in product(C.base.hom(C.t(M, M), M), C.base.hom(C.unit, M))]
        laws = [check_cone_laws(C, point_cone(C, *c)) for c in candidates]
        print(f"{name}: {len(candidates)} candidates, {sum(laws)} satisfy the cone laws")
        for depth in range(args.max_depth + 1):
            natural = [not naturality_failures(C, *c, depth) for c in candidates]
            false_pos = sum(n and not law for n, law in zip(natural, laws))
            false_neg = sum(law and not n for n, law in zip(natural, laws))
            print(f"  depth {depth}: {sum(natural)} natural, {false_pos} accepted wrongly, {false_neg} rejected wrongly")


if __name__ == "__main__":
    main()
