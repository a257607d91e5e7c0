"""2-categories of 2-spans built from a 2x2 array of operads.

    [ A1  B1 ]
    [ A0  B0 ]

Objects are naturals (pairs for the coloured array), 1-cells are spans of
[A0 B0] and a 2-cell between parallel 1-cells

    s  = (n <-d10- k -c10-> m)      s' = (n <-d11- l -c11-> m)

is an inner span  k <-d2- q -c2-> l  of [A1 B1] such that

    d10 . alpha0(d2) = d11 . beta0(c2)    in F_A0
    c10 . alpha1(d2) = c11 . beta1(c2)    in F_B0

where alpha0, alpha1, beta0, beta1 are the unique operad morphisms
A1 -> A0, A1 -> B0, B1 -> A0, B1 -> B0.  Inner spans are taken up to
bijections of q; the outer apexes k, l are fixed by the 1-cell
representatives, so automorphisms of a 1-cell remain visible as 2-cells.

1-cells are handled as concrete representatives.  Composition of
representatives (``compose_raw``) is strictly associative and unital, which
makes whiskering and horizontal composition strict.

For the coloured array the F_A0 condition is only imposed at elements of q
whose colour is kept by c2: an action map sends a colour-0 input into a
colour-1 output, and the left legs are colour preserving, so the equation
cannot hold there.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import finset
from .fcat import (FAMorphism, colors_of, compose_fa, enumerate_fa, identity_fa,
                   is_color_preserving, map_fa, size)
from .finset import FinFunction
from .operad import Operad, morphism_exists, transport
from .span import SpanMorphism, apexes, compose_raw, identity_span, span


class TwoSpanError(ValueError):
    pass


@dataclass(frozen=True)
class OperadArray:
    a1: Operad
    b1: Operad
    a0: Operad
    b0: Operad

    def __post_init__(self) -> None:
        for src, dst in ((self.a1, self.a0), (self.a1, self.b0), (self.b1, self.a0), (self.b1, self.b0)):
            if not morphism_exists(src, dst):
                raise TwoSpanError(f"no operad morphism {src} -> {dst} in {self}")

    @property
    def colored(self) -> bool:
        return self.a0.colored

    def __str__(self) -> str:
        return f"[{self.a1} {self.b1} / {self.a0} {self.b0}]"


MONOID = OperadArray(Operad.BOT, Operad.LO, Operad.TOP, Operad.LO)
COMONOID = OperadArray(Operad.LO, Operad.BOT, Operad.TOP, Operad.LO)
CMONOID = OperadArray(Operad.BOT, Operad.TOP, Operad.TOP, Operad.TOP)
BIMONOID = OperadArray(Operad.LO, Operad.LO, Operad.TOP, Operad.TOP)
ACTION = OperadArray(Operad.BOT2, Operad.LO2, Operad.TOP2, Operad.LO2)


@dataclass(frozen=True)
class TwoSpanCell:
    array: OperadArray
    src: SpanMorphism
    dst: SpanMorphism
    inner: SpanMorphism

    @property
    def d2(self) -> FAMorphism:
        return self.inner.left

    @property
    def c2(self) -> FAMorphism:
        return self.inner.right

    def __repr__(self) -> str:
        return f"Cell{self.array}({list(self.d2.f.images)} | {list(self.c2.f.images)}; {self.inner!r})"


def _check_1cell(array: OperadArray, s: SpanMorphism) -> None:
    if s.operads != (array.a0, array.b0):
        raise TwoSpanError(f"1-cell lives in [{s.operads[0]} {s.operads[1]}], not [{array.a0} {array.b0}]")


def is_two_cell(array: OperadArray, src: SpanMorphism, dst: SpanMorphism,
                d2: FAMorphism, c2: FAMorphism) -> bool:
    if (src.src, src.dst) != (dst.src, dst.dst):
        return False
    if d2.cod != src.apex or c2.cod != dst.apex or d2.dom != c2.dom:
        return False
    rhs_b = compose_fa(map_fa(array.b0, c2), dst.right)
    lhs_b = compose_fa(map_fa(array.b0, d2), src.right)
    if lhs_b != rhs_b:
        return False
    if not array.colored:
        return compose_fa(map_fa(array.a0, d2), src.left) == compose_fa(map_fa(array.a0, c2), dst.left)
    qcols = colors_of(d2.dom)
    lcols = colors_of(c2.cod)
    for y in range(1, size(d2.dom) + 1):
        if qcols[y - 1] != lcols[c2.f(y) - 1]:
            continue
        if src.left.f(d2.f(y)) != dst.left.f(c2.f(y)):
            return False
    return True


def make_cell(array: OperadArray, src: SpanMorphism, dst: SpanMorphism,
              d2: FAMorphism, c2: FAMorphism) -> TwoSpanCell:
    _check_1cell(array, src)
    _check_1cell(array, dst)
    if (d2.operad, c2.operad) != (array.a1, array.b1):
        raise TwoSpanError("inner legs are not in [A1 B1]")
    if not is_two_cell(array, src, dst, d2, c2):
        raise TwoSpanError("the 2-span triangles do not commute")
    return TwoSpanCell(array, src, dst, span(d2, c2))


def identity_cell(array: OperadArray, s: SpanMorphism) -> TwoSpanCell:
    _check_1cell(array, s)
    return TwoSpanCell(array, s, s, identity_span(array.a1, array.b1, s.apex))


def vertical_compose(u: TwoSpanCell, v: TwoSpanCell) -> TwoSpanCell:
    """v . u : u.src => v.dst."""
    if u.array != v.array:
        raise TwoSpanError("array mismatch")
    if u.dst != v.src:
        raise TwoSpanError("the cells do not share a middle 1-cell")
    left, right, _ = compose_raw(u.inner, v.inner)
    return TwoSpanCell(u.array, u.src, v.dst, span(left, right))


def compose_1cells(s: SpanMorphism, t: SpanMorphism) -> SpanMorphism:
    """t . s on representatives (apex numbered by lexicographic pullback pairs)."""
    left, right, _ = compose_raw(s, t)
    return SpanMorphism(left, right)


def _pair_index(s: SpanMorphism, t: SpanMorphism) -> dict[tuple[int, int], int]:
    pairs = finset.pullback_pairs(s.right.f, t.left.f)
    return {pr: i for i, pr in enumerate(pairs, 1)}


def _leg(operad: Operad, dom_cols: dict[int, int], qsize: int, cod, images: list[int],
         pieces: list) -> FAMorphism:
    """Assemble an FA morphism from images and, per target, (label, sigma, out colour)."""
    cod_size = size(cod)
    labels = []
    for lab, sigma, out in pieces:
        labels.append(transport(lab, sigma, dom_cols, out))
    dom = _obj_from_colors(dom_cols, qsize, len(cod))
    return FAMorphism(operad, dom, cod, FinFunction(qsize, cod_size, tuple(images)), tuple(labels))


def _obj_from_colors(cols: dict[int, int], n: int, ncolors: int) -> tuple[int, ...]:
    counts = [0] * ncolors
    for x in range(1, n + 1):
        counts[cols[x]] += 1
    return tuple(counts)


def _checked(array: OperadArray, src: SpanMorphism, dst: SpanMorphism,
             d2: FAMorphism, c2: FAMorphism) -> TwoSpanCell:
    # Substituting into a cell whose right leg merges points reindexes the
    # fibres lexicographically, which a linear order need not survive.
    if not is_two_cell(array, src, dst, d2, c2):
        raise TwoSpanError("no whiskered cell: the reindexed labels break the right triangle")
    return TwoSpanCell(array, src, dst, span(d2, c2))


def whisker_post(u: TwoSpanCell, t: SpanMorphism) -> TwoSpanCell:
    """t . u : t.s => t.s' for u: s => s' and a 1-cell t out of their codomain."""
    _check_1cell(u.array, t)
    s, s2 = u.src, u.dst
    p_index = _pair_index(s, t)
    p2_index = _pair_index(s2, t)
    d2, c2 = u.d2, u.c2
    qcols = colors_of(d2.dom)
    # Q = {(y, z) : c10(d2(y)) = t.left(z)}
    qpairs = [(y, z) for y in range(1, size(d2.dom) + 1)
              for z in range(1, size(t.apex) + 1)
              if s.right.f(d2.f(y)) == t.left.f(z)]
    q_index = {pr: i for i, pr in enumerate(qpairs, 1)}
    new_cols = {i: qcols[y - 1] for (y, _), i in q_index.items()}

    def leg(inner: FAMorphism, idx: dict[tuple[int, int], int], cod) -> FAMorphism:
        images = [idx[(inner.f(y), z)] for y, z in qpairs]
        codcols = colors_of(cod)
        pieces: list = [None] * size(cod)
        for (x, z), i in idx.items():
            lab = inner.labels[x - 1]
            pieces[i - 1] = (lab, {y: q_index[(y, z)] for y in lab.carrier}, codcols[i - 1])
        return _leg(inner.operad, new_cols, len(qpairs), cod, images, pieces)

    src = compose_1cells(s, t)
    dst = compose_1cells(s2, t)
    try:
        nd2 = leg(d2, p_index, src.apex)
        nc2 = leg(c2, p2_index, dst.apex)
    except KeyError as exc:
        raise TwoSpanError("whiskering leaves the pullback") from exc
    return _checked(u.array, src, dst, nd2, nc2)


def whisker_pre(s: SpanMorphism, v: TwoSpanCell) -> TwoSpanCell:
    """v . s : t.s => t'.s for v: t => t' and a 1-cell s into their domain."""
    _check_1cell(v.array, s)
    t, t2 = v.src, v.dst
    p_index = _pair_index(s, t)
    p2_index = _pair_index(s, t2)
    d2, c2 = v.d2, v.c2
    scols = colors_of(s.apex)
    qpairs = [(x, y) for x in range(1, size(s.apex) + 1)
              for y in range(1, size(d2.dom) + 1)
              if s.right.f(x) == t.left.f(d2.f(y))]
    q_index = {pr: i for i, pr in enumerate(qpairs, 1)}
    new_cols = {i: scols[x - 1] for (x, _), i in q_index.items()}

    def leg(inner: FAMorphism, idx: dict[tuple[int, int], int], cod) -> FAMorphism:
        images = [idx[(x, inner.f(y))] for x, y in qpairs]
        codcols = colors_of(cod)
        pieces: list = [None] * size(cod)
        for (x, z), i in idx.items():
            lab = inner.labels[z - 1]
            sigma = {y: q_index[(x, y)] for y in lab.carrier}
            pieces[i - 1] = (lab, sigma, codcols[i - 1])
        return _leg(inner.operad, new_cols, len(qpairs), cod, images, pieces)

    src = compose_1cells(s, t)
    dst = compose_1cells(s, t2)
    try:
        nd2 = leg(d2, p_index, src.apex)
        nc2 = leg(c2, p2_index, dst.apex)
    except KeyError as exc:
        raise TwoSpanError("whiskering leaves the pullback") from exc
    return _checked(v.array, src, dst, nd2, nc2)


def horizontal_compose(u: TwoSpanCell, v: TwoSpanCell) -> TwoSpanCell:
    """v * u for u: s => s' (n -> m) and v: t => t' (m -> k)."""
    if u.array != v.array:
        raise TwoSpanError("array mismatch")
    if u.src.dst != v.src.src:
        raise TwoSpanError("middle objects differ")
    return vertical_compose(whisker_post(u, v.src), whisker_pre(u.dst, v))


def _is_bot(op: Operad) -> bool:
    return op in (Operad.BOT, Operad.BOT2)


def local_hom(array: OperadArray, src: SpanMorphism, dst: SpanMorphism, bound: int = 3) -> list[TwoSpanCell]:
    """All 2-cells src => dst whose inner apex (and e-budget) is at most ``bound``."""
    _check_1cell(array, src)
    _check_1cell(array, dst)
    if (src.src, src.dst) != (dst.src, dst.dst):
        raise TwoSpanError("1-cells are not parallel")
    k, l = src.apex, dst.apex
    seen: dict[SpanMorphism, TwoSpanCell] = {}

    def consider(d2: FAMorphism, c2: FAMorphism) -> None:
        if array.colored and not is_color_preserving(d2):
            return
        if is_two_cell(array, src, dst, d2, c2):
            inner = span(d2, c2)
            seen.setdefault(inner, TwoSpanCell(array, src, dst, inner))

    if _is_bot(array.a1):
        d2 = identity_fa(array.a1, k)
        for c2 in _function_filtered(array.b1, k, l, bound, src, dst):
            consider(d2, c2)
    elif _is_bot(array.b1):
        c2 = identity_fa(array.b1, l)
        for d2 in enumerate_fa(array.a1, l, k, bound):
            consider(d2, c2)
    else:
        for q in apexes(array.a1, bound):
            for fd, fc in product(finset.all_functions(size(q), size(k)),
                                  finset.all_functions(size(q), size(l))):
                if not _functions_commute(array, src, dst, fd, fc):
                    continue
                for d2 in enumerate_fa(array.a1, q, k, bound, [fd]):
                    for c2 in enumerate_fa(array.b1, q, l, bound, [fc]):
                        consider(d2, c2)
    return list(seen.values())


def _function_filtered(operad: Operad, k, l, bound: int, src: SpanMorphism,
                       dst: SpanMorphism) -> Iterator[FAMorphism]:
    fs = [f for f in finset.all_functions(size(k), size(l))
          if all(src.right.f(x) == dst.right.f(f(x)) for x in range(1, size(k) + 1))]
    return enumerate_fa(operad, k, l, bound, fs)


def _functions_commute(array: OperadArray, src: SpanMorphism, dst: SpanMorphism,
                       fd: FinFunction, fc: FinFunction) -> bool:
    for y in range(1, fd.dom + 1):
        if src.right.f(fd(y)) != dst.right.f(fc(y)):
            return False
        if not array.colored and src.left.f(fd(y)) != dst.left.f(fc(y)):
            return False
    return True


def is_identity_cell(u: TwoSpanCell) -> bool:
    return u.src == u.dst and u == identity_cell(u.array, u.src)
