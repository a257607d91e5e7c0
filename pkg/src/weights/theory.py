"""The 2-theory M of monoids, its weight W and the variant weights.

1-cells (n] -> (m] of M are m-tuples of binary words over (n]; composition is
substitution.  Between parallel 1-cells there is at most one 2-cell, and it
exists exactly when the words have equal types.

The weight W = WMon((1], -) sends (n] to the category whose objects are
n-tuples of binary words over {1} and whose morphisms are tuples of monotone
maps between occurrence chains.  The variant weights compute their hom
categories from the 2-span array of their tag.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Sequence

from . import words as W
from .fcat import FAMorphism, colors_of, fa_morphism, map_fa
from .operad import Operad, OperadOp, make_op
from .span import SpanMorphism
from .twospan import (ACTION, BIMONOID, CMONOID, COMONOID, MONOID, OperadArray,
                      TwoSpanCell, local_hom, whisker_post)
from .words import ActNode, BinWord, Leaf, Node, TypeWord


class TheoryError(ValueError):
    pass


# -- the 2-theory M -----------------------------------------------------------

@dataclass(frozen=True)
class MOneCell:
    dom: int
    words: tuple[BinWord, ...]

    def __post_init__(self) -> None:
        for w in self.words:
            for x in W.type_of(w):
                if not 1 <= x <= self.dom:
                    raise TheoryError(f"leaf {x} of {W.render(w)} is outside (1..{self.dom})")

    @property
    def cod(self) -> int:
        return len(self.words)

    def render(self) -> str:
        return ";".join(W.render(w) for w in self.words)

    def __repr__(self) -> str:
        return f"M({self.dom}->{self.cod}: {self.render()})"


@dataclass(frozen=True)
class MTwoCell:
    dom: MOneCell
    cod: MOneCell


def one_cell(dom: int, text: str | Sequence[BinWord]) -> MOneCell:
    """Build a 1-cell from ``"w1;w2;..."`` (or ``","``-separated) or a word list."""
    if isinstance(text, str):
        parts = [p for p in text.replace(",", ";").split(";")] if text.strip() else []
        return MOneCell(dom, tuple(W.parse(p) for p in parts))
    return MOneCell(dom, tuple(text))


def identity_m(n: int) -> MOneCell:
    return MOneCell(n, tuple(Leaf(i) for i in range(1, n + 1)))


def compose_m(f: MOneCell, g: MOneCell) -> MOneCell:
    """g . f: substitute f's words into g's leaves."""
    if f.cod != g.dom:
        raise TheoryError(f"cannot compose {f!r} with {g!r}")
    return MOneCell(f.dom, tuple(W.substitute(u, f.words) for u in g.words))


def product_m(n: int, m: int) -> tuple[int, MOneCell, MOneCell]:
    p1 = MOneCell(n + m, tuple(Leaf(i) for i in range(1, n + 1)))
    p2 = MOneCell(n + m, tuple(Leaf(i) for i in range(n + 1, n + m + 1)))
    return n + m, p1, p2


def pairing_m(f: MOneCell, g: MOneCell) -> MOneCell:
    if f.dom != g.dom:
        raise TheoryError("pairing needs a common domain")
    return MOneCell(f.dom, f.words + g.words)


def terminal_m(n: int) -> MOneCell:
    return MOneCell(n, ())


def types(c: MOneCell) -> tuple[TypeWord, ...]:
    return tuple(W.type_of(w) for w in c.words)


def two_cell_m(f: MOneCell, g: MOneCell) -> MTwoCell | None:
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise TheoryError("1-cells are not parallel")
    return MTwoCell(f, g) if types(f) == types(g) else None


UNIT_M = MOneCell(0, (W.E,))
MULT_M = MOneCell(2, (Node(Leaf(1), Leaf(2)),))


def projection_m(m: int, i: int) -> MOneCell:
    return MOneCell(m, (Leaf(i),))


def generators_m() -> dict[str, object]:
    """Projections into (1], e, (1*2) and the associator and unitor 2-cells."""
    one, two, three = Leaf(1), Leaf(2), Leaf(3)
    gens: dict[str, object] = {
        "e": UNIT_M,
        "mult": MULT_M,
        "assoc": MTwoCell(MOneCell(3, (Node(one, Node(two, three)),)),
                          MOneCell(3, (Node(Node(one, two), three),))),
        "lunit": MTwoCell(MOneCell(1, (Node(W.E, one),)), identity_m(1)),
        "runit": MTwoCell(MOneCell(1, (Node(one, W.E),)), identity_m(1)),
    }
    for m in range(1, 4):
        for i in range(1, m + 1):
            gens[f"proj{m}_{i}"] = projection_m(m, i)
    return gens


# -- M inside the span calculus ------------------------------------------------

def occurrence_table(c: MOneCell) -> list[tuple[int, int]]:
    """(word index, letter) for every leaf occurrence, in reading order."""
    return [(j, x) for j, w in enumerate(c.words, 1) for x in W.type_of(w)]


def encode_btr(c: MOneCell) -> SpanMorphism:
    """The 1-cell as a span (n] <- occurrences -> (m] of [top BTr]."""
    occ = occurrence_table(c)
    r = len(occ)
    left_images = [x for _, x in occ]
    left_labels = [OperadOp(Operad.TOP, tuple(k for k, (_, x) in enumerate(occ, 1) if x == i))
                   for i in range(1, c.dom + 1)]
    right_images = [j for j, _ in occ]
    right_labels = []
    k = 0
    for j, w in enumerate(c.words, 1):
        n_leaves = len(W.type_of(w))
        renumber = iter(range(k + 1, k + n_leaves + 1))
        term = _renumber_leaves(w, renumber)
        right_labels.append(make_op(Operad.BTR, tuple(range(k + 1, k + n_leaves + 1)), term))
        k += n_leaves
    left = fa_morphism(Operad.TOP, r, c.dom, left_images, left_labels)
    right = fa_morphism(Operad.BTR, r, c.cod, right_images, right_labels)
    return SpanMorphism(left, right)


def _renumber_leaves(w: BinWord, it) -> BinWord:
    if isinstance(w, Leaf):
        return Leaf(next(it))
    if isinstance(w, Node):
        left = _renumber_leaves(w.left, it)
        return Node(left, _renumber_leaves(w.right, it))
    if isinstance(w, ActNode):
        left = _renumber_leaves(w.left, it)
        return ActNode(left, _renumber_leaves(w.right, it))
    return w


def decode_btr(s: SpanMorphism) -> MOneCell:
    if s.operads != (Operad.TOP, Operad.BTR):
        raise TheoryError("expected a span of [top BTr]")
    (n,) = s.src
    words = tuple(W.relabel(lab.payload, {k: s.left.f(k) for k in lab.carrier})  # type: ignore[arg-type]
                  for lab in s.right.labels)
    return MOneCell(n, words)


def image_span(c: MOneCell, target: Operad) -> SpanMorphism:
    """Image of the 1-cell in [top target] for target in {BTR, LO, TOP}."""
    s = encode_btr(c)
    return SpanMorphism(s.left, map_fa(target, s.right))


# -- weights -------------------------------------------------------------------

@dataclass(frozen=True)
class WeightId:
    tag: str
    array: OperadArray
    generator: Operad = field(default=Operad.BTR)


WEIGHTS = {
    "monoid": WeightId("monoid", MONOID),
    "comonoid": WeightId("comonoid", COMONOID),
    "cmonoid": WeightId("cmonoid", CMONOID),
    "bimonoid": WeightId("bimonoid", BIMONOID),
    "action": WeightId("action", ACTION, Operad.ACT),
}


def weight(tag: str) -> WeightId:
    try:
        return WEIGHTS[tag.lower()]
    except KeyError:
        raise TheoryError(f"unknown weight {tag!r}; choose from {sorted(WEIGHTS)}") from None


@dataclass(frozen=True)
class WMonTwoCell:
    """A morphism of W(n]: one monotone map per component, as image tuples."""
    dom: MOneCell
    cod: MOneCell
    maps: tuple[tuple[int, ...], ...]


def weight_object(*ws: BinWord | str) -> MOneCell:
    """An object of W(n]: a tuple of words over {1}, i.e. a 1-cell (1] -> (n]."""
    return MOneCell(1, tuple(W.parse(w) if isinstance(w, str) else w for w in ws))


def monotone_maps(n: int, m: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    return list(combinations_with_replacement(range(1, m + 1), n))


def _check_parallel(w: MOneCell, u: MOneCell) -> None:
    if (w.dom, w.cod) != (u.dom, u.cod):
        raise TheoryError("objects live in different W(n]")


def hom_monoid(w: MOneCell, u: MOneCell) -> list[WMonTwoCell]:
    """W(n](w, u) from its closed form: tuples of monotone maps."""
    _check_parallel(w, u)
    per = [monotone_maps(W.occurrences(a), W.occurrences(b)) for a, b in zip(w.words, u.words)]
    return [WMonTwoCell(w, u, maps) for maps in product(*per)]


def one_cell_image(wt: WeightId, c: MOneCell | "ACOneCell") -> SpanMorphism:
    """The 1-cell as a span of the bottom row of the weight's array."""
    if isinstance(c, ACOneCell):
        if wt.tag != "action":
            raise TheoryError("coloured 1-cells need the action weight")
        s = encode_act(c)
        return SpanMorphism(s.left, map_fa(Operad.LO2, s.right))
    if wt.tag == "action":
        raise TheoryError("the action weight needs coloured 1-cells")
    return image_span(c, wt.array.b0)


def hom_cells(wt: WeightId, w, u, bound: int = 3) -> list[TwoSpanCell]:
    """Hom of the weight computed from canonical 2-spans of the array."""
    return local_hom(wt.array, one_cell_image(wt, w), one_cell_image(wt, u), bound)


def hom_w(wt: WeightId, w, u, bound: int = 3) -> list:
    if wt.tag == "monoid":
        return hom_monoid(w, u)
    return hom_cells(wt, w, u, bound)


def cell_to_monotone(cell: TwoSpanCell, w: MOneCell, u: MOneCell) -> WMonTwoCell:
    """Read a 2-cell of the monoid array as a tuple of occurrence maps.

    Positions are read off the linear orders on the 1-cell representatives,
    so any apex numbering (for instance a whiskered one) is accepted.
    """
    if cell.array != MONOID:
        raise TheoryError("only monoid-array cells are monotone-map tuples")
    d2, c2 = cell.d2, cell.c2

    def position(s: SpanMorphism, x: int) -> tuple[int, int]:
        j = s.right.f(x)
        return j, s.right.labels[j - 1].order.index(x) + 1

    inv = {d2.f(y): y for y in range(1, d2.f.dom + 1)}
    maps = [[0] * W.occurrences(a) for a in w.words]
    for x in range(1, d2.f.cod + 1):
        j, pos = position(cell.src, x)
        j2, pos2 = position(cell.dst, c2.f(inv[x]))
        if j2 != j:
            raise TheoryError("cell mixes components")
        maps[j - 1][pos - 1] = pos2
    return WMonTwoCell(w, u, tuple(tuple(m) for m in maps))


def objects_w(n: int, depth: int) -> list[MOneCell]:
    ws = W.words_up_to_depth((1,), depth)
    return [MOneCell(1, combo) for combo in product(ws, repeat=n)]


# -- the weight on 1-cells and 2-cells of M -----------------------------------

def weight_on_object(c: MOneCell, v: MOneCell) -> MOneCell:
    """W(c)(v) = c . v, substitution of the words of v into c."""
    return compose_m(v, c)


def weight_on_morphism(c: MOneCell, h: WMonTwoCell) -> WMonTwoCell:
    """W(c) on a morphism: blockwise maps along the leaves of each word of c."""
    if h.dom.cod != c.dom:
        raise TheoryError("morphism does not live in the domain of c")
    counts_dom = [W.occurrences(a) for a in h.dom.words]
    counts_cod = [W.occurrences(b) for b in h.cod.words]
    maps = []
    for w in c.words:
        out: list[int] = []
        offset = 0
        for leaf_letter in W.type_of(w):
            f = h.maps[leaf_letter - 1]
            out.extend(offset + y for y in f)
            offset += counts_cod[leaf_letter - 1]
        maps.append(tuple(out))
        assert len(out) == sum(counts_dom[x - 1] for x in W.type_of(w))
    return WMonTwoCell(weight_on_object(c, h.dom), weight_on_object(c, h.cod), tuple(maps))


def weight_on_cell(wt: WeightId, c, cell: TwoSpanCell) -> TwoSpanCell:
    """W(c) on a 2-span morphism: post-whiskering with the image of c."""
    return whisker_post(cell, one_cell_image(wt, c))


def weight_on_two_cell(alpha: MTwoCell, v: MOneCell) -> WMonTwoCell:
    """Component at v of W(alpha): the identity on occurrences."""
    if two_cell_m(alpha.dom, alpha.cod) is None:
        raise TheoryError("no 2-cell between these 1-cells")
    src, dst = weight_on_object(alpha.dom, v), weight_on_object(alpha.cod, v)
    maps = tuple(tuple(range(1, W.occurrences(w) + 1)) for w in src.words)
    return WMonTwoCell(src, dst, maps)


def compose_wmon(h: WMonTwoCell, k: WMonTwoCell) -> WMonTwoCell:
    """k . h in W(n]."""
    if h.cod != k.dom:
        raise TheoryError("morphisms are not composable")
    maps = tuple(tuple(g[x - 1] for x in f) for f, g in zip(h.maps, k.maps))
    return WMonTwoCell(h.dom, k.cod, maps)


def identity_wmon(v: MOneCell) -> WMonTwoCell:
    return WMonTwoCell(v, v, tuple(tuple(range(1, W.occurrences(w) + 1)) for w in v.words))


# -- the coloured theory of actions -------------------------------------------

@dataclass(frozen=True)
class ACOneCell:
    """1-cell (n0, n1) -> (m0, m1): m0 plain words then m1 action terms.

    Variables 1..n0 have colour 0 and n0+1..n0+n1 colour 1.
    """
    dom: tuple[int, int]
    cod: tuple[int, int]
    words: tuple[BinWord, ...]

    def __post_init__(self) -> None:
        n0, n1 = self.dom
        if len(self.words) != sum(self.cod):
            raise TheoryError("need one term per output")
        cols = {x: (0 if x <= n0 else 1) for x in range(1, n0 + n1 + 1)}
        for j, w in enumerate(self.words):
            want = 0 if j < self.cod[0] else 1
            if _act_color(w, cols) != want:
                raise TheoryError(f"term {W.render(w)} does not have colour {want}")

    def render(self) -> str:
        return ";".join(W.render(w) for w in self.words)


def _act_color(w: BinWord, cols: dict[int, int]) -> int:
    if isinstance(w, W.Unit):
        return 0
    if isinstance(w, Leaf):
        if w.x not in cols:
            raise TheoryError(f"leaf {w.x} is not a variable")
        return cols[w.x]
    left, right = _act_color(w.left, cols), _act_color(w.right, cols)
    if isinstance(w, Node) and (left, right) == (0, 0):
        return 0
    if isinstance(w, ActNode) and (left, right) == (0, 1):
        return 1
    raise TheoryError(f"ill-coloured term {W.render(w)}")


def action_object(text: str) -> ACOneCell:
    """An object of W_a(0,1): an action term over 1 (colour 0) and 2 (colour 1)."""
    return ACOneCell((1, 1), (0, 1), (W.parse(text),))


def encode_act(c: ACOneCell) -> SpanMorphism:
    """The coloured 1-cell as a span of [top2 Act]; colour-0 occurrences first."""
    n0, n1 = c.dom
    dom_cols = {x: (0 if x <= n0 else 1) for x in range(1, n0 + n1 + 1)}
    occ = [(j, x) for j, w in enumerate(c.words, 1) for x in W.type_of(w)]
    order = sorted(range(len(occ)), key=lambda i: (dom_cols[occ[i][1]], i))
    index = {old: new for new, old in enumerate(order, 1)}
    apex = (sum(1 for _, x in occ if dom_cols[x] == 0), sum(1 for _, x in occ if dom_cols[x] == 1))
    apex_cols = colors_of(apex)
    left_images = [occ[i][1] for i in order]
    left_labels = []
    for x in range(1, n0 + n1 + 1):
        carrier = tuple(sorted(index[i] for i, (_, y) in enumerate(occ) if y == x))
        left_labels.append(OperadOp(Operad.TOP2, carrier, None, (dom_cols[x],) * len(carrier), dom_cols[x]))
    right_images = [occ[i][0] for i in order]
    right_labels = []
    k = 0
    for j, w in enumerate(c.words, 1):
        n_leaves = len(W.type_of(w))
        new_ids = [index[i] for i in range(k, k + n_leaves)]
        term = _renumber_leaves(w, iter(new_ids))
        carrier = tuple(sorted(new_ids))
        out = 0 if j <= c.cod[0] else 1
        right_labels.append(make_op(Operad.ACT, carrier, term,
                                    tuple(apex_cols[y - 1] for y in carrier), out))
        k += n_leaves
    left = fa_morphism(Operad.TOP2, apex, c.dom, left_images, left_labels)
    right = fa_morphism(Operad.ACT, apex, c.cod, right_images, right_labels)
    return SpanMorphism(left, right)


def compose_ac(f: ACOneCell, g: ACOneCell) -> ACOneCell:
    if f.cod != g.dom:
        raise TheoryError("cannot compose")
    return ACOneCell(f.dom, g.cod, tuple(W.substitute(u, f.words) for u in g.words))
