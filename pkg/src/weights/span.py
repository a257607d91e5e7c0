"""Span categories [A B]: spans with left leg in F_A and right leg in F_B.

Spans are identified up to a bijection of the apex that commutes with both
legs and transports the labels.  Every span is kept in a canonical form:
apex elements are sorted by (colour, left image, right image, position in
the left label, position in the right label).  That key is invariant under
apex bijections, and two elements with the same key are interchangeable, so
the sorted representative is unique for each class.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from . import finset
from .fcat import (FAMorphism, Obj, as_obj, colors_of, compose_fa,
                   enumerate_fa, identity_fa, is_color_preserving, map_fa, size,
                   tensor_fa)
from .finset import FinFunction
from .operad import Operad, OperadOp, act_bijection, morphism_exists, transport


class SpanError(ValueError):
    pass


@dataclass(frozen=True)
class SpanMorphism:
    left: FAMorphism
    right: FAMorphism

    def __post_init__(self) -> None:
        if self.left.dom != self.right.dom:
            raise SpanError("legs do not share an apex")
        if self.left.operad.colored != self.right.operad.colored:
            raise SpanError("cannot mix coloured and uncoloured legs")
        if self.left.operad.colored and not is_color_preserving(self.left):
            raise SpanError("the left leg of a coloured span must preserve colours")

    @property
    def apex(self) -> Obj:
        return self.left.dom

    @property
    def src(self) -> Obj:
        return self.left.cod

    @property
    def dst(self) -> Obj:
        return self.right.cod

    @property
    def operads(self) -> tuple[Operad, Operad]:
        return self.left.operad, self.right.operad

    def __repr__(self) -> str:
        return f"Span({self.left!r} <- . -> {self.right!r})"


def _position(leg: FAMorphism, k: int) -> int:
    lab = leg.labels[leg.f.images[k - 1] - 1]
    order = lab.order
    return order.index(k) if order else 0


def relabel_apex(leg: FAMorphism, sigma: dict[int, int]) -> FAMorphism:
    """Rename apex element k to sigma[k] (sigma a bijection of the apex)."""
    images = [0] * len(sigma)
    for k, fk in enumerate(leg.f.images, 1):
        images[sigma[k] - 1] = fk
    labels = tuple(act_bijection(a, {x: sigma[x] for x in a.carrier}) for a in leg.labels)
    return FAMorphism(leg.operad, leg.dom, leg.cod, FinFunction(leg.f.dom, leg.f.cod, tuple(images)),
                      labels)


def canonical_order(left: FAMorphism, right: FAMorphism) -> list[int]:
    cols = colors_of(left.dom)
    keys = {k: (cols[k - 1], left.f.images[k - 1], right.f.images[k - 1],
                _position(left, k), _position(right, k))
            for k in range(1, left.f.dom + 1)}
    return sorted(keys, key=keys.__getitem__)


def canonicalize(left: FAMorphism, right: FAMorphism) -> tuple[SpanMorphism, dict[int, int]]:
    """Canonical representative and the renaming old apex element -> new one."""
    if left.dom != right.dom:
        raise SpanError("legs do not share an apex")
    order = canonical_order(left, right)
    sigma = {old: new for new, old in enumerate(order, 1)}
    return SpanMorphism(relabel_apex(left, sigma), relabel_apex(right, sigma)), sigma


def span(left: FAMorphism, right: FAMorphism) -> SpanMorphism:
    return canonicalize(left, right)[0]


def is_canonical(s: SpanMorphism) -> bool:
    return canonical_order(s.left, s.right) == list(range(1, size(s.apex) + 1))


def equivalent(s: SpanMorphism, t: SpanMorphism) -> bool:
    return span(s.left, s.right) == span(t.left, t.right)


def identity_span(op_a: Operad, op_b: Operad, n) -> SpanMorphism:
    return SpanMorphism(identity_fa(op_a, n), identity_fa(op_b, n))


def pullback_legs(g: FAMorphism, f2: FAMorphism) -> tuple[FAMorphism, FAMorphism, list[tuple[int, int]]]:
    """The (A,B)-square over the cospan g: (r] -> (m] (in F_B), f2: (s] -> (m] (in F_A).

    Returns the pulled-back legs (p] -> (r] in F_A and (p] -> (s] in F_B and
    the lexicographically ordered pairs enumerating (p].
    """
    if g.cod != f2.cod:
        raise SpanError(f"middle objects differ: {g.cod} vs {f2.cod}")
    pairs = finset.pullback_pairs(g.f, f2.f)
    index = {pr: i for i, pr in enumerate(pairs, 1)}
    rcols = colors_of(g.dom)
    scols = colors_of(f2.dom)
    pcount = [0] * len(g.dom)
    for u, _ in pairs:
        pcount[rcols[u - 1]] += 1
    apex = tuple(pcount)
    pcols = {i: rcols[u - 1] for i, (u, _) in enumerate(pairs, 1)}
    a_labels: list[OperadOp] = []
    for u in range(1, g.f.dom + 1):
        a = f2.labels[g.f.images[u - 1] - 1]
        sigma = {v: index[(u, v)] for v in a.carrier}
        a_labels.append(transport(a, sigma, pcols, rcols[u - 1]))
    b_labels: list[OperadOp] = []
    for v in range(1, f2.f.dom + 1):
        b = g.labels[f2.f.images[v - 1] - 1]
        sigma = {u: index[(u, v)] for u in b.carrier}
        b_labels.append(transport(b, sigma, pcols, scols[v - 1]))
    p = len(pairs)
    f_pb = FAMorphism(f2.operad, apex, g.dom, FinFunction(p, g.f.dom, tuple(u for u, _ in pairs)),
                      tuple(a_labels))
    g_pb = FAMorphism(g.operad, apex, f2.dom, FinFunction(p, f2.f.dom, tuple(v for _, v in pairs)),
                      tuple(b_labels))
    return f_pb, g_pb, pairs


def compose_raw(s1: SpanMorphism, s2: SpanMorphism) -> tuple[FAMorphism, FAMorphism, list[tuple[int, int]]]:
    if s1.operads != s2.operads:
        raise SpanError("operad mismatch")
    f_pb, g_pb, pairs = pullback_legs(s1.right, s2.left)
    return compose_fa(f_pb, s1.left), compose_fa(g_pb, s2.right), pairs


def compose_span(s1: SpanMorphism, s2: SpanMorphism) -> SpanMorphism:
    """s2 . s1 (first s1: n -> m, then s2: m -> k)."""
    left, right, _ = compose_raw(s1, s2)
    return span(left, right)


def tensor_span(s1: SpanMorphism, s2: SpanMorphism) -> SpanMorphism:
    if s1.operads != s2.operads:
        raise SpanError("operad mismatch")
    return span(tensor_fa(s1.left, s2.left), tensor_fa(s1.right, s2.right))


def dual_span(s: SpanMorphism) -> SpanMorphism:
    """The same span read backwards, a morphism of [B A]."""
    return span(s.right, s.left)


def map_span(s: SpanMorphism, op_a: Operad, op_b: Operad) -> SpanMorphism:
    """Image under the functor [A B] -> [A' B'] induced by operad morphisms."""
    a, b = s.operads
    if not (morphism_exists(a, op_a) and morphism_exists(b, op_b)):
        raise SpanError(f"no functor [{a} {b}] -> [{op_a} {op_b}]")
    return span(map_fa(op_a, s.left), map_fa(op_b, s.right))


def apexes(operad: Operad, bound: int) -> Iterator[Obj]:
    if operad.colored:
        for total in range(bound + 1):
            for r0 in range(total, -1, -1):
                yield (r0, total - r0)
    else:
        for r in range(bound + 1):
            yield (r,)


def enumerate_spans(op_a: Operad, op_b: Operad, n, m, bound: int,
                    unit_bound: int | None = None) -> list[SpanMorphism]:
    """Canonical spans n -> m with apex size <= bound, duplicate free."""
    src, dst = as_obj(n, op_a), as_obj(m, op_b)
    ub = bound if unit_bound is None else unit_bound
    seen: dict[SpanMorphism, None] = {}
    for apex in apexes(op_a, bound):
        lefts = list(enumerate_fa(op_a, apex, src, ub))
        if op_a.colored:
            lefts = [x for x in lefts if is_color_preserving(x)]
        if not lefts:
            continue
        rights = list(enumerate_fa(op_b, apex, dst, ub))
        for left, right in product(lefts, rights):
            seen.setdefault(span(left, right), None)
    return list(seen)


# -- the special isomorphisms of span categories -----------------------------

SPECIAL_ISOS = ("BotA_to_FA", "TopTop_to_SpanF", "BotTop_to_F", "BotBot_to_B")


def _bot_span_as_fa(s: SpanMorphism) -> FAMorphism:
    sigma = s.left.f
    inv = finset.inverse(sigma)
    g = finset.compose(inv, s.right.f)
    labels = tuple(act_bijection(b, {x: sigma(x) for x in b.carrier}) for b in s.right.labels)
    return FAMorphism(s.right.operad, s.src, s.dst, g, labels)


def special_iso(which: str, s: SpanMorphism):
    a, b = s.operads
    if which == "BotA_to_FA":
        if a is not Operad.BOT:
            raise SpanError("source category must be [bot A]")
        return _bot_span_as_fa(s)
    if which == "TopTop_to_SpanF":
        if (a, b) != (Operad.TOP, Operad.TOP):
            raise SpanError("source category must be [top top]")
        return size(s.apex), s.left.f, s.right.f
    if which == "BotTop_to_F":
        if (a, b) != (Operad.BOT, Operad.TOP):
            raise SpanError("source category must be [bot top]")
        return _bot_span_as_fa(s).f
    if which == "BotBot_to_B":
        if (a, b) != (Operad.BOT, Operad.BOT):
            raise SpanError("source category must be [bot bot]")
        return _bot_span_as_fa(s).f
    raise SpanError(f"unknown comparison {which!r}")


def fa_as_bot_span(x: FAMorphism) -> SpanMorphism:
    """Inverse of BotA_to_FA: the span with an identity left leg."""
    bot = Operad.BOT2 if x.operad.colored else Operad.BOT
    return span(identity_fa(bot, x.dom), x)


def spanf_as_top_span(apex: int, f: FinFunction, g: FinFunction) -> SpanMorphism:
    """Inverse of TopTop_to_SpanF."""
    def leg(h: FinFunction) -> FAMorphism:
        labels = tuple(OperadOp(Operad.TOP, fib) for fib in finset.fibers(h))
        return FAMorphism(Operad.TOP, (apex,), (h.cod,), h, labels)
    return span(leg(f), leg(g))


def projection_span(op_b: Operad, n: int, m: int, which: int) -> SpanMorphism:
    """Product projection (n+m] -> (n] (which=0) or -> (m] (which=1) in [top B]."""
    total, i1, i2 = finset.coproduct(n, m)
    inj = i1 if which == 0 else i2
    k = inj.dom
    labels = tuple(OperadOp(Operad.TOP, fib) for fib in finset.fibers(inj))
    left = FAMorphism(Operad.TOP, (k,), (total,), inj, labels)
    return span(left, identity_fa(op_b, k))


def pairing_span(s1: SpanMorphism, s2: SpanMorphism) -> SpanMorphism:
    """<s1, s2>: k -> n+m in [top B], the apex is the disjoint union of apexes."""
    if s1.src != s2.src:
        raise SpanError("pairing needs a common domain")
    (k,) = s1.src
    (r1,), (r2,) = s1.apex, s2.apex
    total = r1 + r2
    images = s1.left.f.images + s2.left.f.images
    f = FinFunction(total, k, images)
    left = FAMorphism(Operad.TOP, (total,), (k,), f,
                      tuple(OperadOp(Operad.TOP, fib) for fib in finset.fibers(f)))
    right = tensor_fa(s1.right, s2.right)
    return span(left, right)
