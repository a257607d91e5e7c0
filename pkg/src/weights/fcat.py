"""The category F_A of finite sets and operad-labelled functions.

A morphism (n] -> (m] is a function f together with, for every i in (m],
an operation of A whose carrier is the fibre of f over i.  Composition
multiplies labels in the operad.

For a two-coloured operad, objects are pairs (n0, n1) and the underlying
set is (n0 + n1], colour-0 block first.  Labels then carry the colours of
their inputs (from the domain blocks) and their output colour (the block of
the point they lie over).  Uncoloured objects are stored as 1-tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from . import finset
from .finset import FinFunction
from . import words as W
from .operad import (Operad, OperadOp, act_bijection, apply_morphism,
                     enumerate_ops, make_op, multiply, parse_op, render_op, unit)

Obj = tuple[int, ...]


def as_obj(n: int | Sequence[int], operad: Operad | None = None) -> Obj:
    if isinstance(n, int):
        if operad is not None and operad.colored:
            raise ValueError("coloured operads need a pair of sizes")
        return (n,)
    return tuple(n)


def size(obj: Obj) -> int:
    return sum(obj)


def colors_of(obj: Obj) -> tuple[int, ...]:
    """Colour of every element of (sum obj], in order."""
    return tuple(c for c, k in enumerate(obj) for _ in range(k))


def color_of(obj: Obj, x: int) -> int:
    acc = 0
    for c, k in enumerate(obj):
        acc += k
        if x <= acc:
            return c
    raise ValueError(f"{x} is outside {obj}")


class FAError(ValueError):
    pass


@dataclass(frozen=True)
class FAMorphism:
    operad: Operad
    dom: Obj
    cod: Obj
    f: FinFunction
    labels: tuple[OperadOp, ...]

    def __post_init__(self) -> None:
        if len(self.dom) != self.operad.ncolors or len(self.cod) != self.operad.ncolors:
            raise FAError(f"objects {self.dom}, {self.cod} do not match {self.operad}")
        if self.f.dom != size(self.dom) or self.f.cod != size(self.cod):
            raise FAError("function does not match the objects")
        if len(self.labels) != self.f.cod:
            raise FAError("need one label per codomain element")
        dcols = colors_of(self.dom)
        ccols = colors_of(self.cod)
        for i, (fib, lab) in enumerate(zip(finset.fibers(self.f), self.labels), 1):
            if lab.operad is not self.operad:
                raise FAError(f"label {lab!r} is not in {self.operad}")
            if lab.carrier != fib:
                raise FAError(f"label over {i} has carrier {lab.carrier}, fibre is {fib}")
            if self.operad.colored:
                if lab.colors != tuple(dcols[x - 1] for x in fib) or lab.out != ccols[i - 1]:
                    raise FAError(f"label over {i} has the wrong colour profile")

    def __repr__(self) -> str:
        labs = ", ".join(render_op(a) for a in self.labels)
        return f"FA[{self.operad}]({self.dom}->{self.cod}: {list(self.f.images)} | {labs})"

    @property
    def images(self) -> tuple[int, ...]:
        return self.f.images

    def label(self, i: int) -> OperadOp:
        return self.labels[i - 1]


def fa_morphism(operad: Operad, dom, cod, images: Sequence[int],
                labels: Sequence[OperadOp]) -> FAMorphism:
    d, c = as_obj(dom, operad), as_obj(cod, operad)
    return FAMorphism(operad, d, c, FinFunction(size(d), size(c), tuple(images)), tuple(labels))


def identity_fa(operad: Operad, n) -> FAMorphism:
    obj = as_obj(n, operad)
    cols = colors_of(obj)
    k = size(obj)
    labels = tuple(unit(operad, i, cols[i - 1]) for i in range(1, k + 1))
    return FAMorphism(operad, obj, obj, finset.identity(k), labels)


def compose_fa(first: FAMorphism, second: FAMorphism) -> FAMorphism:
    """second . first; the label over j multiplies second's label with first's."""
    if first.operad is not second.operad:
        raise FAError("operad mismatch")
    if first.cod != second.dom:
        raise FAError(f"cannot compose {first.cod} -> with {second.dom} ->")
    f, g = first.f, second.f
    labels = []
    for b in second.labels:
        labels.append(multiply(b, {i: first.labels[i - 1] for i in b.carrier}))
    return FAMorphism(first.operad, first.dom, second.cod, finset.compose(f, g), tuple(labels))


def compose_colored_fa(first: FAMorphism, second: FAMorphism) -> FAMorphism:
    """Composition in the coloured F_A; labels carry colour profiles along."""
    if not first.operad.colored:
        raise FAError(f"{first.operad} is not coloured")
    return compose_fa(first, second)


def colored_sum(a: Obj, b: Obj) -> tuple[Obj, list[int], list[int]]:
    """Blockwise sum of coloured objects with the two element injections."""
    total = tuple(x + y for x, y in zip(a, b))
    inj_a, inj_b = [], []
    offset = 0
    for c in range(len(a)):
        inj_a.extend(range(offset + 1, offset + a[c] + 1))
        inj_b.extend(range(offset + a[c] + 1, offset + a[c] + b[c] + 1))
        offset += a[c] + b[c]
    return total, inj_a, inj_b


def tensor_fa(x: FAMorphism, y: FAMorphism) -> FAMorphism:
    if x.operad is not y.operad:
        raise FAError("operad mismatch")
    dom, dx, dy = colored_sum(x.dom, y.dom)
    cod, cx, cy = colored_sum(x.cod, y.cod)
    images = [0] * size(dom)
    for k, fk in enumerate(x.f.images):
        images[dx[k] - 1] = cx[fk - 1]
    for k, fk in enumerate(y.f.images):
        images[dy[k] - 1] = cy[fk - 1]
    labels: list[OperadOp | None] = [None] * size(cod)
    for i, lab in enumerate(x.labels):
        labels[cx[i] - 1] = act_bijection(lab, {p: dx[p - 1] for p in lab.carrier})
    for i, lab in enumerate(y.labels):
        labels[cy[i] - 1] = act_bijection(lab, {p: dy[p - 1] for p in lab.carrier})
    return FAMorphism(x.operad, dom, cod, FinFunction(size(dom), size(cod), tuple(images)),
                      tuple(labels))  # type: ignore[arg-type]


def pi_a(x: FAMorphism) -> FinFunction:
    return x.f


def map_fa(target: Operad, x: FAMorphism) -> FAMorphism:
    """Push every label along the operad morphism x.operad -> target."""
    if target is x.operad:
        return x
    return FAMorphism(target, x.dom, x.cod, x.f,
                      tuple(apply_morphism(x.operad, target, a) for a in x.labels))


def is_color_preserving(x: FAMorphism) -> bool:
    dc, cc = colors_of(x.dom), colors_of(x.cod)
    return all(dc[k] == cc[fk - 1] for k, fk in enumerate(x.f.images))


def enumerate_fa(operad: Operad, dom, cod, bound: int = 0,
                 functions: Sequence[FinFunction] | None = None) -> Iterator[FAMorphism]:
    """All morphisms dom -> cod (BTR/ACT labels limited to ``bound`` units)."""
    d, c = as_obj(dom, operad), as_obj(cod, operad)
    dcols, ccols = colors_of(d), colors_of(c)
    fs = functions if functions is not None else finset.all_functions(size(d), size(c))
    for f in fs:
        choices = []
        for i, fib in enumerate(finset.fibers(f), 1):
            cols = [dcols[x - 1] for x in fib] if operad.colored else None
            choices.append(enumerate_ops(operad, fib, bound, cols, ccols[i - 1] if operad.colored else 0))
            if not choices[-1]:
                break
        else:
            for labels in product(*choices):
                yield FAMorphism(operad, d, c, f, tuple(labels))


# -- text form: "k->n: i1 ... ik | label_1 ; ... ; label_n" ---------------------

def render_fa(x: FAMorphism) -> str:
    if x.operad.colored:
        raise FAError("text form covers uncoloured operads")
    head = f"{size(x.dom)}->{size(x.cod)}: {' '.join(map(str, x.f.images))}"
    if x.operad in (Operad.TOP, Operad.BOT):
        return head
    return head + " | " + " ; ".join(render_op(a) or "-" for a in x.labels)


def _default_label(operad: Operad, fib: tuple[int, ...]) -> OperadOp:
    if operad in (Operad.TOP, Operad.BOT):
        return make_op(operad, fib)
    if operad is Operad.LO:
        return make_op(operad, fib, fib)
    return make_op(operad, fib, W.right_assoc(list(fib)))


def parse_fa(operad: Operad, text: str) -> FAMorphism:
    """Inverse of ``render_fa``; missing labels default to the increasing order
    (or the right-nested word)."""
    try:
        head, _, labs = text.partition("|")
        sizes, _, imgs = head.partition(":")
        k, n = (int(t) for t in sizes.split("->"))
        images = tuple(int(t) for t in imgs.split())
        f = FinFunction(k, n, images)
    except ValueError as exc:
        raise FAError(f"cannot read {text!r}: {exc}") from None
    fibs = finset.fibers(f)
    parts = [p.strip() for p in labs.split(";")] if labs.strip() else [None] * n
    if len(parts) != n:
        raise FAError(f"need {n} labels, got {len(parts)}")
    labels = []
    for fib, p in zip(fibs, parts):
        if p is None or operad in (Operad.TOP, Operad.BOT):
            labels.append(_default_label(operad, fib))
        else:
            labels.append(parse_op(operad, fib, "" if p == "-" else p))
    return FAMorphism(operad, (k,), (n,), f, tuple(labels))
