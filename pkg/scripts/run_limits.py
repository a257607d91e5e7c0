"""Weighted limits against the enumerated oracles, for every bundled fixture and weight.

    python3 scripts/run_limits.py [--csv out.csv]
"""
from __future__ import annotations

import argparse
import csv
import sys
import time

from weights.cli import bundled_fixtures, fixture_path
from weights.fincat import load_monoidal, self_action
from weights.limits import LimitError, oracle_comparison, weighted_limit
from weights.oracles import OracleError, oracle

TAGS = ["monoid", "comonoid", "cmonoid", "bimonoid", "action"]


def run(name: str, tag: str) -> dict:
    C, action = load_monoidal(fixture_path(name))
    if tag == "action" and action is None and C.symmetric:
        action = self_action(C)
    row = {"fixture": name, "weight": tag}
    t0 = time.perf_counter()
    try:
        L = weighted_limit(C, tag, action)
        O = oracle(tag, C, action)
    except (LimitError, OracleError) as exc:
        return {**row, "status": f"skipped ({exc})"}
    ok, why = oracle_comparison(L, O)
    return {**row, "limit": f"{len(L.objects)}/{len(L.homs)}",
            "oracle": f"{len(O.objects)}/{len(O.morphisms)}",
            "status": "iso" if ok else f"MISMATCH {why}", "seconds": f"{time.perf_counter() - t0:.2f}"}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--csv", help="also write the table to this file")
    args = ap.parse_args()
    rows = [run(name, tag) for name in bundled_fixtures() for tag in TAGS]
    cols = ["fixture", "weight", "limit", "oracle", "status", "seconds"]
    widths = {c: max(len(c), *(len(r.get(c, "")) for r in rows)) for c in cols}
    print("  ".join(c.ljust(widths[c]) for c in cols))
    for r in rows:
        print("  ".join(r.get(c, "").ljust(widths[c]) for c in cols))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, cols)
            w.writeheader()
            w.writerows(rows)
    return 1 if any(r["status"].startswith("MISMATCH") for r in rows) else 0


if __name__ == "__main__":
    sys.exit(main())
