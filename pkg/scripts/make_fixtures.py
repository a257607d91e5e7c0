"""Regenerate the bundled category files in src/weights/fixtures.

    python3 scripts/make_fixtures.py
"""
from __future__ import annotations

import argparse
import json
from itertools import product
from pathlib import Path

from weights.fincat import load_monoidal

OUT = Path(__file__).resolve().parents[1] / "src" / "weights" / "fixtures"


def _skeleton(name, objects, morphisms, compose, tensor_obj, tensor_mor, unit):
    """morphisms: {id: (src, dst)}; compose(g, f) and tensor_mor(f, g) return ids."""
    ids = {x: next(f for f, (s, d) in morphisms.items() if s == x and d == x and compose(f, f) == f
                   and all(compose(f, g) == g for g, (s2, _) in morphisms.items() if morphisms[g][1] == x))
           for x in objects}
    comp = [[g, f, compose(g, f)] for f, g in product(morphisms, repeat=2)
            if morphisms[f][1] == morphisms[g][0]]
    return {
        "name": name,
        "objects": objects,
        "morphisms": [{"id": f, "src": s, "dst": d} for f, (s, d) in morphisms.items()],
        "identities": ids,
        "composition": comp,
        "tensor_obj": [[x, y, tensor_obj(x, y)] for x, y in product(objects, repeat=2)],
        "tensor_mor": [[f, g, tensor_mor(f, g)] for f, g in product(morphisms, repeat=2)],
        "unit": unit,
    }


def chain(name: str, op, unit: int, n: int = 3) -> dict:
    objs = [str(i) for i in range(n)]
    mors = {f"{x}->{y}": (str(x), str(y)) for x in range(n) for y in range(n) if x <= y}

    def ends(f):
        return tuple(int(v) for v in f.split("->"))

    def compose(g, f):
        return f"{ends(f)[0]}->{ends(g)[1]}"

    def tm(f, g):
        (a, b), (c, d) = ends(f), ends(g)
        return f"{op(a, c)}->{op(b, d)}"

    doc = _skeleton(name, objs, mors, compose, lambda x, y: str(op(int(x), int(y))), tm, str(unit))
    doc["strict"] = True
    doc["symmetry"] = [[x, y, f"{op(int(x), int(y))}->{op(int(x), int(y))}"] for x, y in product(objs, repeat=2)]
    return doc


def z2() -> dict:
    objs = ["0", "1"]
    mors = {"id0": ("0", "0"), "id1": ("1", "1")}
    doc = _skeleton("z2", objs, mors, lambda g, f: f, lambda x, y: str((int(x) + int(y)) % 2),
                    lambda f, g: f"id{(int(f[-1]) + int(g[-1])) % 2}", "0")
    doc["strict"] = True
    doc["symmetry"] = [[x, y, f"id{(int(x) + int(y)) % 2}"] for x, y in product(objs, repeat=2)]
    return doc


def nonthin() -> dict:
    """Chain 0<=1<=2<=3 with two parallel arrows x->y labelled by Z/2, tensor = max."""
    n = 4
    objs = [str(i) for i in range(n)]
    mors = {f"{x}->{y}:{b}": (str(x), str(y)) for x in range(n) for y in range(n) if x <= y for b in (0, 1)}

    def parts(f):
        ends, b = f.split(":")
        x, y = ends.split("->")
        return int(x), int(y), int(b)

    def compose(g, f):
        x, _, a = parts(f)
        _, z, b = parts(g)
        return f"{x}->{z}:{(a + b) % 2}"

    def tm(f, g):
        x, y, a = parts(f)
        u, v, b = parts(g)
        return f"{max(x, u)}->{max(y, v)}:{(a + b) % 2}"

    doc = _skeleton("nonthin", objs, mors, compose, lambda x, y: str(max(int(x), int(y))), tm, "0")
    doc["strict"] = True
    doc["symmetry"] = [[x, y, f"{max(int(x), int(y))}->{max(int(x), int(y))}:0"]
                       for x, y in product(objs, repeat=2)]
    return doc


def z2_cocycle() -> dict:
    """Z/2-graded lines with automorphisms +-1 and associator (-1)^(abc)."""
    objs = ["0", "1"]
    mors = {f"{x}:{s}": (str(x), str(x)) for x in (0, 1) for s in (0, 1)}

    def compose(g, f):
        x, a = f.split(":")
        _, b = g.split(":")
        return f"{x}:{(int(a) + int(b)) % 2}"

    def tm(f, g):
        x, a = f.split(":")
        y, b = g.split(":")
        return f"{(int(x) + int(y)) % 2}:{(int(a) + int(b)) % 2}"

    doc = _skeleton("z2-cocycle", objs, mors, compose, lambda x, y: str((int(x) + int(y)) % 2), tm, "0")
    doc["strict"] = False
    doc["associator"] = [[x, y, z, f"{(int(x) + int(y) + int(z)) % 2}:{int(x) * int(y) * int(z)}"]
                         for x, y, z in product(objs, repeat=3)]
    doc["unitors"] = {"left": {x: f"{x}:0" for x in objs}, "right": {x: f"{x}:0" for x in objs}}
    return doc


def build_all() -> dict[str, dict]:
    docs = {
        "z2": z2(),
        "chain-max": chain("chain-max", max, 0),
        "chain-min": chain("chain-min", min, 2),
        "nonthin": nonthin(),
        "z2-cocycle": z2_cocycle(),
    }
    docs["chain-max"]["action"] = {"space": "self"}
    return docs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, doc in build_all().items():
        path = args.out / f"{name}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        M, action = load_monoidal(path)
        print(f"{path.name}: {len(M.base.objects)} objects, {len(M.base.morphisms)} morphisms,"
              f" strict={M.strict}, symmetric={M.symmetric}, action={'yes' if action else 'no'}")


if __name__ == "__main__":
    main()
