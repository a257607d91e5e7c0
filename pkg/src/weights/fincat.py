"""Finite categories, functors, natural transformations and finite monoidal
categories, together with the evaluation of M's cells in a monoidal category.

Identifiers of objects and morphisms are arbitrary hashables (strings for
file-loaded categories, tuples for products).  Composition is stored as a
table keyed by (g, f) meaning g . f, f applied first.

The associator is oriented alpha: (x*y)*z -> x*(y*z); unitors are
l: I*x -> x and r: x*I -> x.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from pathlib import Path
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from . import words as W
from .words import BinWord, Leaf, Node

Id = Hashable


class CategoryError(ValueError):
    pass


# -- finite categories ---------------------------------------------------------

@dataclass(eq=False)
class FinCategory:
    objects: tuple
    src: dict
    dst: dict
    identities: dict
    comp: dict
    name: str = ""

    def __post_init__(self) -> None:
        problems = category_violations(self)
        if problems:
            raise CategoryError(f"{self.name or 'category'}: " + "; ".join(problems[:5]))

    @cached_property
    def morphisms(self) -> tuple:
        return tuple(self.src)

    @cached_property
    def _homs(self) -> dict:
        table: dict = {(x, y): [] for x in self.objects for y in self.objects}
        for f in self.src:
            table[(self.src[f], self.dst[f])].append(f)
        return {k: tuple(v) for k, v in table.items()}

    def hom(self, x, y) -> tuple:
        return self._homs[(x, y)]

    def id(self, x):
        return self.identities[x]

    def compose(self, g, f):
        """g . f"""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise CategoryError(f"{g!r} . {f!r} is not defined") from None

    def seq(self, *fs):
        """Composite of a path given in order of application."""
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(f, out)
        return out

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def inverse(self, f):
        cache = self.__dict__.setdefault("_inv", {})
        if f not in cache:
            x, y = self.src[f], self.dst[f]
            cache[f] = next((g for g in self.hom(y, x)
                             if self.compose(g, f) == self.id(x) and self.compose(f, g) == self.id(y)), None)
        return cache[f]

    def __repr__(self) -> str:
        return f"FinCategory({self.name!r}: {len(self.objects)} objects, {len(self.src)} morphisms)"


def category_violations(c: FinCategory) -> list[str]:
    out: list[str] = []
    objs = set(c.objects)
    if len(objs) != len(c.objects):
        out.append("duplicate objects")
    for f in c.src:
        if c.src[f] not in objs or c.dst.get(f) not in objs:
            out.append(f"morphism {f!r} has unknown endpoints")
    if out:
        return out
    for x in c.objects:
        i = c.identities.get(x)
        if i is None or c.src.get(i) != x or c.dst.get(i) != x:
            out.append(f"bad identity at {x!r}")
    if out:
        return out
    for f in c.src:
        for g in c.src:
            if c.dst[f] != c.src[g]:
                continue
            h = c.comp.get((g, f))
            if h is None:
                out.append(f"missing composite {g!r} . {f!r}")
            elif c.src.get(h) != c.src[f] or c.dst.get(h) != c.dst[g]:
                out.append(f"composite {g!r} . {f!r} has the wrong type")
    if out:
        return out
    for f in c.src:
        if c.comp[(f, c.identities[c.src[f]])] != f or c.comp[(c.identities[c.dst[f]], f)] != f:
            out.append(f"identity law fails at {f!r}")
    by_src: dict = {}
    for g in c.src:
        by_src.setdefault(c.src[g], []).append(g)
    for f in c.src:
        for g in by_src.get(c.dst[f], ()):
            gf = c.comp[(g, f)]
            for h in by_src.get(c.dst[g], ()):
                if c.comp[(h, gf)] != c.comp[(c.comp[(h, g)], f)]:
                    out.append(f"associativity fails at {h!r}, {g!r}, {f!r}")
    return out


def make_category(objects: Iterable, morphisms: Iterable[tuple], identities: Mapping,
                  composition: Iterable[tuple], name: str = "") -> FinCategory:
    """Build from (id, src, dst) triples; identity composites are filled in."""
    objs = tuple(objects)
    src, dst = {}, {}
    for f, x, y in morphisms:
        src[f], dst[f] = x, y
    for x in objs:
        i = identities[x]
        src.setdefault(i, x)
        dst.setdefault(i, x)
    comp = {(g, f): h for g, f, h in composition}
    for f in src:
        comp.setdefault((f, identities[src[f]]), f)
        comp.setdefault((identities[dst[f]], f), f)
    return FinCategory(objs, src, dst, dict(identities), comp, name)


def thin_category(objects: Sequence, leq, name: str = "") -> FinCategory:
    """Preorder category with a morphism (x, y) whenever leq(x, y)."""
    mors = [((x, y), x, y) for x in objects for y in objects if leq(x, y)]
    ids = {x: (x, x) for x in objects}
    comp = [((y, z), (x, y), (x, z)) for (x, y), _, _ in mors for (y2, z), _, _ in mors if y2 == y]
    return make_category(objects, mors, ids, comp, name)


def discrete_category(objects: Sequence, name: str = "") -> FinCategory:
    return thin_category(objects, lambda x, y: x == y, name)


def terminal_category() -> FinCategory:
    return discrete_category(["*"], "1")


def empty_category() -> FinCategory:
    return make_category([], [], {}, [], "0")


def product_category(cats: Sequence[FinCategory]) -> FinCategory:
    objs = tuple(product(*(c.objects for c in cats)))
    mors = tuple(product(*(c.morphisms for c in cats)))
    src = {f: tuple(c.src[fi] for c, fi in zip(cats, f)) for f in mors}
    dst = {f: tuple(c.dst[fi] for c, fi in zip(cats, f)) for f in mors}
    ids = {x: tuple(c.id(xi) for c, xi in zip(cats, x)) for x in objs}
    comp = {}
    for f in mors:
        for g in mors:
            if dst[f] == src[g]:
                comp[(g, f)] = tuple(c.compose(gi, fi) for c, gi, fi in zip(cats, g, f))
    name = " x ".join(c.name for c in cats) if cats else "1"
    return FinCategory(objs, src, dst, ids, comp, name)


@lru_cache(maxsize=64)
def power_category(c: FinCategory, n: int) -> FinCategory:
    """C^n; objects and morphisms are n-tuples, C^0 is terminal."""
    return product_category([c] * n)


def opposite(c: FinCategory) -> FinCategory:
    comp = {(f, g): h for (g, f), h in c.comp.items()}
    return FinCategory(c.objects, dict(c.dst), dict(c.src), dict(c.identities), comp, c.name + "^op")


# -- functors and natural transformations --------------------------------------

@dataclass(eq=False)
class FinFunctor:
    source: FinCategory
    target: FinCategory
    obj: dict
    mor: dict

    def __call__(self, f):
        return self.mor[f]

    def key(self) -> tuple:
        return (tuple(self.obj[x] for x in self.source.objects),
                tuple(self.mor[f] for f in self.source.morphisms))

    def __eq__(self, other) -> bool:
        return isinstance(other, FinFunctor) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def functor_violations(F: FinFunctor) -> list[str]:
    s, t = F.source, F.target
    out = []
    for f in s.morphisms:
        g = F.mor.get(f)
        if g is None or t.src[g] != F.obj[s.src[f]] or t.dst[g] != F.obj[s.dst[f]]:
            out.append(f"{f!r} is sent to a morphism of the wrong type")
    if out:
        return out
    for x in s.objects:
        if F.mor[s.id(x)] != t.id(F.obj[x]):
            out.append(f"identity at {x!r} not preserved")
    for (g, f), h in s.comp.items():
        if F.mor[h] != t.compose(F.mor[g], F.mor[f]):
            out.append(f"composite {g!r} . {f!r} not preserved")
    return out


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects}, {f: f for f in c.morphisms})


def compose_functors(F: FinFunctor, G: FinFunctor) -> FinFunctor:
    """G . F"""
    return FinFunctor(F.source, G.target, {x: G.obj[F.obj[x]] for x in F.source.objects},
                      {f: G.mor[F.mor[f]] for f in F.source.morphisms})


def enumerate_functors(source: FinCategory, target: FinCategory) -> list[FinFunctor]:
    """All functors, by search over object maps and hom-wise morphism choices."""
    non_id = [f for f in source.morphisms if f not in set(source.identities.values())]
    result = []
    for objs in product(target.objects, repeat=len(source.objects)):
        omap = dict(zip(source.objects, objs))
        choices = [target.hom(omap[source.src[f]], omap[source.dst[f]]) for f in non_id]
        for pick in product(*choices):
            mmap = {source.id(x): target.id(omap[x]) for x in source.objects}
            mmap.update(zip(non_id, pick))
            F = FinFunctor(source, target, omap, mmap)
            if all(mmap[h] == target.compose(mmap[g], mmap[f]) for (g, f), h in source.comp.items()):
                result.append(F)
    return result


@dataclass(eq=False)
class FinNatTrans:
    source: FinFunctor
    target: FinFunctor
    components: dict

    def __getitem__(self, x):
        return self.components[x]

    def key(self) -> tuple:
        return tuple(self.components[x] for x in self.source.source.objects)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinNatTrans) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def nat_violations(t: FinNatTrans) -> list[str]:
    F, G = t.source, t.target
    C, D = F.source, F.target
    out = []
    for x in C.objects:
        a = t.components[x]
        if D.src[a] != F.obj[x] or D.dst[a] != G.obj[x]:
            out.append(f"component at {x!r} has the wrong type")
    if out:
        return out
    for f in C.morphisms:
        x, y = C.src[f], C.dst[f]
        if D.compose(t.components[y], F.mor[f]) != D.compose(G.mor[f], t.components[x]):
            out.append(f"naturality fails at {f!r}")
    return out


def is_natural(t: FinNatTrans) -> bool:
    return not nat_violations(t)


# -- monoidal categories -------------------------------------------------------

@dataclass(eq=False)
class FinMonoidalCategory:
    base: FinCategory
    tensor_obj: dict
    tensor_mor: dict
    unit: Id
    strict: bool = False
    assoc: dict = field(default_factory=dict)
    lunit: dict = field(default_factory=dict)
    runit: dict = field(default_factory=dict)
    symmetry: dict | None = None
    name: str = ""

    def __post_init__(self) -> None:
        C = self.base
        if self.strict:
            for x, y, z in product(C.objects, repeat=3):
                self.assoc.setdefault((x, y, z), C.id(self.t(self.t(x, y), z)))
            for x in C.objects:
                self.lunit.setdefault(x, C.id(x))
                self.runit.setdefault(x, C.id(x))
        if not self.name:
            self.name = C.name

    @property
    def symmetric(self) -> bool:
        return self.symmetry is not None

    def t(self, x, y):
        return self.tensor_obj[(x, y)]

    def tm(self, f, g):
        return self.tensor_mor[(f, g)]

    def id(self, x):
        return self.base.id(x)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def seq(self, *fs):
        return self.base.seq(*fs)

    def alpha(self, x, y, z):
        return self.assoc[(x, y, z)]

    def alpha_inv(self, x, y, z):
        return self.base.inverse(self.assoc[(x, y, z)])

    def l(self, x):
        return self.lunit[x]

    def r(self, x):
        return self.runit[x]

    def s(self, x, y):
        if self.symmetry is None:
            raise CategoryError(f"{self.name} has no symmetry")
        return self.symmetry[(x, y)]

    def __repr__(self) -> str:
        return f"FinMonoidalCategory({self.name!r}, unit={self.unit!r}, strict={self.strict})"


def validate_monoidal(M: FinMonoidalCategory) -> list[str]:
    """Functoriality of the tensor, coherence data, pentagon, triangle, symmetry."""
    C = M.base
    out: list[str] = []
    if M.unit not in C.objects:
        return [f"unit {M.unit!r} is not an object"]
    for x, y in product(C.objects, repeat=2):
        if M.tensor_obj.get((x, y)) not in C.objects:
            out.append(f"tensor of objects {x!r}, {y!r} undefined")
    if out:
        return out
    for f, g in product(C.morphisms, repeat=2):
        h = M.tensor_mor.get((f, g))
        if h is None or C.src.get(h) != M.t(C.src[f], C.src[g]) or C.dst.get(h) != M.t(C.dst[f], C.dst[g]):
            out.append(f"tensor of {f!r}, {g!r} missing or ill-typed")
    if out:
        return out
    for x, y in product(C.objects, repeat=2):
        if M.tm(C.id(x), C.id(y)) != C.id(M.t(x, y)):
            out.append(f"tensor does not preserve identities at {x!r}, {y!r}")
    pairs = [(g, f) for (g, f) in C.comp]
    for (g, f), (g2, f2) in product(pairs, repeat=2):
        lhs = M.tm(C.compose(g, f), C.compose(g2, f2))
        if lhs != C.compose(M.tm(g, g2), M.tm(f, f2)):
            out.append(f"interchange fails at {g!r}.{f!r} x {g2!r}.{f2!r}")
            break
    if out:
        return out
    out += _coherence_violations(M)
    if M.symmetry is not None and not out:
        out += _symmetry_violations(M)
    return out


def _coherence_violations(M: FinMonoidalCategory) -> list[str]:
    C = M.base
    out = []
    t, I = M.t, M.unit
    for x, y, z in product(C.objects, repeat=3):
        a = M.assoc.get((x, y, z))
        if a is None or C.src.get(a) != t(t(x, y), z) or C.dst.get(a) != t(x, t(y, z)) or not C.is_iso(a):
            out.append(f"associator at {x!r}, {y!r}, {z!r} missing, ill-typed or not invertible")
    for x in C.objects:
        a, b = M.lunit.get(x), M.runit.get(x)
        if a is None or C.src.get(a) != t(I, x) or C.dst.get(a) != x or not C.is_iso(a):
            out.append(f"left unitor at {x!r} is not an isomorphism I*x -> x")
        if b is None or C.src.get(b) != t(x, I) or C.dst.get(b) != x or not C.is_iso(b):
            out.append(f"right unitor at {x!r} is not an isomorphism x*I -> x")
    if out:
        return out
    mors = C.morphisms
    for f, g, h in product(mors, repeat=3):
        x, y, z = C.src[f], C.src[g], C.src[h]
        x2, y2, z2 = C.dst[f], C.dst[g], C.dst[h]
        if C.compose(M.alpha(x2, y2, z2), M.tm(M.tm(f, g), h)) != C.compose(M.tm(f, M.tm(g, h)), M.alpha(x, y, z)):
            out.append(f"associator not natural at {f!r}, {g!r}, {h!r}")
            return out
    for f in mors:
        x, y = C.src[f], C.dst[f]
        if C.compose(M.l(y), M.tm(C.id(I), f)) != C.compose(f, M.l(x)):
            out.append(f"left unitor not natural at {f!r}")
        if C.compose(M.r(y), M.tm(f, C.id(I))) != C.compose(f, M.r(x)):
            out.append(f"right unitor not natural at {f!r}")
    for w, x, y, z in product(C.objects, repeat=4):
        lhs = C.seq(M.alpha(t(w, x), y, z), M.alpha(w, x, t(y, z)))
        rhs = C.seq(M.tm(M.alpha(w, x, y), C.id(z)), M.alpha(w, t(x, y), z), M.tm(C.id(w), M.alpha(x, y, z)))
        if lhs != rhs:
            out.append(f"pentagon fails at {w!r}, {x!r}, {y!r}, {z!r}")
    for x, y in product(C.objects, repeat=2):
        if C.seq(M.alpha(x, I, y), M.tm(C.id(x), M.l(y))) != M.tm(M.r(x), C.id(y)):
            out.append(f"triangle fails at {x!r}, {y!r}")
    return out


def _symmetry_violations(M: FinMonoidalCategory) -> list[str]:
    C = M.base
    t = M.t
    out = []
    for x, y in product(C.objects, repeat=2):
        s = M.symmetry.get((x, y))  # type: ignore[union-attr]
        if s is None or C.src.get(s) != t(x, y) or C.dst.get(s) != t(y, x):
            return [f"symmetry at {x!r}, {y!r} missing or ill-typed"]
    for f, g in product(C.morphisms, repeat=2):
        x, y, x2, y2 = C.src[f], C.src[g], C.dst[f], C.dst[g]
        if C.compose(M.s(x2, y2), M.tm(f, g)) != C.compose(M.tm(g, f), M.s(x, y)):
            out.append(f"symmetry not natural at {f!r}, {g!r}")
            return out
    for x, y in product(C.objects, repeat=2):
        if C.compose(M.s(y, x), M.s(x, y)) != C.id(t(x, y)):
            out.append(f"symmetry is not involutive at {x!r}, {y!r}")
    for x, y, z in product(C.objects, repeat=3):
        lhs = C.seq(M.alpha(x, y, z), M.s(x, t(y, z)), M.alpha(y, z, x))
        rhs = C.seq(M.tm(M.s(x, y), C.id(z)), M.alpha(y, x, z), M.tm(C.id(y), M.s(x, z)))
        if lhs != rhs:
            out.append(f"hexagon fails at {x!r}, {y!r}, {z!r}")
    for x in C.objects:
        if C.compose(M.l(x), M.s(x, M.unit)) != M.r(x):
            out.append(f"symmetry incompatible with unitors at {x!r}")
    return out


def opposite_monoidal(M: FinMonoidalCategory) -> FinMonoidalCategory:
    """Same tensor on C^op; coherence cells are the inverses of the originals."""
    C = M.base
    op = opposite(C)
    assoc = {k: C.inverse(a) for k, a in M.assoc.items()}
    lunit = {k: C.inverse(a) for k, a in M.lunit.items()}
    runit = {k: C.inverse(a) for k, a in M.runit.items()}
    sym = None if M.symmetry is None else {(x, y): C.inverse(M.symmetry[(x, y)]) for x, y in M.symmetry}
    return FinMonoidalCategory(op, M.tensor_obj, M.tensor_mor, M.unit, False, assoc, lunit, runit, sym,
                               M.name + "^op")


# -- evaluating M in a monoidal category ---------------------------------------

def eval_word_obj(M: FinMonoidalCategory, w: BinWord, xs: Sequence):
    if isinstance(w, W.Unit):
        return M.unit
    if isinstance(w, Leaf):
        return xs[w.x - 1]
    return M.t(eval_word_obj(M, w.left, xs), eval_word_obj(M, w.right, xs))


def eval_word_mor(M: FinMonoidalCategory, w: BinWord, fs: Sequence):
    if isinstance(w, W.Unit):
        return M.id(M.unit)
    if isinstance(w, Leaf):
        return fs[w.x - 1]
    return M.tm(eval_word_mor(M, w.left, fs), eval_word_mor(M, w.right, fs))


def phi_eval_one_cell(M: FinMonoidalCategory, c) -> FinFunctor:
    """The functor C^n -> C^m of a 1-cell of M (leaf i: projection, e: I, *: tensor)."""
    src = power_category(M.base, c.dom)
    dst = power_category(M.base, c.cod)
    obj = {xs: tuple(eval_word_obj(M, w, xs) for w in c.words) for xs in src.objects}
    mor = {fs: tuple(eval_word_mor(M, w, fs) for w in c.words) for fs in src.morphisms}
    return FinFunctor(src, dst, obj, mor)


def _right_normal(M: FinMonoidalCategory, xs: Sequence):
    if not xs:
        return M.unit
    if len(xs) == 1:
        return xs[0]
    return M.t(xs[0], _right_normal(M, xs[1:]))


def _left_normal(M: FinMonoidalCategory, xs: Sequence):
    if not xs:
        return M.unit
    if len(xs) == 1:
        return xs[0]
    return M.t(_left_normal(M, xs[:-1]), xs[-1])


def _merge_right(M: FinMonoidalCategory, la: tuple, lb: tuple):
    """N(la) * N(lb) -> N(la + lb) for the right-associated normal form N."""
    C = M.base
    if not la:
        return M.l(_right_normal(M, lb))
    if not lb:
        return M.r(_right_normal(M, la))
    if len(la) == 1:
        return C.id(M.t(la[0], _right_normal(M, lb)))
    x, rest = la[0], la[1:]
    a = M.alpha(x, _right_normal(M, rest), _right_normal(M, lb))
    return C.compose(M.tm(C.id(x), _merge_right(M, rest, lb)), a)


def _merge_left(M: FinMonoidalCategory, la: tuple, lb: tuple):
    """NL(la) * NL(lb) -> NL(la + lb) for the left-associated normal form NL."""
    C = M.base
    if not la:
        return M.l(_left_normal(M, lb))
    if not lb:
        return M.r(_left_normal(M, la))
    if len(lb) == 1:
        return C.id(M.t(_left_normal(M, la), lb[0]))
    rest, y = lb[:-1], lb[-1]
    a = M.alpha_inv(_left_normal(M, la), _left_normal(M, rest), y)
    return C.compose(M.tm(_merge_left(M, la, rest), C.id(y)), a)


def normalize(M: FinMonoidalCategory, w: BinWord, xs: Sequence, side: str = "right"):
    """The structural isomorphism from the value of w to its e-free normal form."""
    merge = _merge_right if side == "right" else _merge_left

    def go(t: BinWord) -> tuple[object, tuple]:
        if isinstance(t, W.Unit):
            return M.id(M.unit), ()
        if isinstance(t, Leaf):
            return M.id(xs[t.x - 1]), (xs[t.x - 1],)
        fa, la = go(t.left)
        fb, lb = go(t.right)
        return M.compose(merge(M, la, lb), M.tm(fa, fb)), la + lb

    return go(w)[0]


def coherence_cell(M: FinMonoidalCategory, w: BinWord, u: BinWord, xs: Sequence, side: str = "right"):
    """The canonical isomorphism value(w) -> value(u) for words of equal type."""
    if W.type_of(w) != W.type_of(u):
        raise CategoryError(f"no coherence cell {W.render(w)} => {W.render(u)}")
    nu = normalize(M, u, xs, side)
    inv = M.base.inverse(nu)
    if inv is None:
        raise CategoryError("structural map is not invertible; coherence data is broken")
    return M.compose(inv, normalize(M, w, xs, side))


def phi_eval_two_cell(M: FinMonoidalCategory, alpha, side: str = "right") -> FinNatTrans:
    F = phi_eval_one_cell(M, alpha.dom)
    G = phi_eval_one_cell(M, alpha.cod)
    comps = {}
    for xs in F.source.objects:
        comps[xs] = tuple(coherence_cell(M, w, u, xs, side) for w, u in zip(alpha.dom.words, alpha.cod.words))
    return FinNatTrans(F, G, comps)


# -- lax monoidal functors and actions -----------------------------------------

@dataclass(eq=False)
class LaxMonoidalFunctor:
    source: FinMonoidalCategory
    target: FinMonoidalCategory
    functor: FinFunctor
    phi: dict
    phibar: Id


def lax_violations(L: LaxMonoidalFunctor) -> list[str]:
    C, D, F = L.source, L.target, L.functor
    out = functor_violations(F)
    if out:
        return out
    Cb, Db = C.base, D.base
    Fo = F.obj
    for x, y in product(Cb.objects, repeat=2):
        p = L.phi.get((x, y))
        if p is None or Db.src.get(p) != D.t(Fo[x], Fo[y]) or Db.dst.get(p) != Fo[C.t(x, y)]:
            out.append(f"phi at {x!r}, {y!r} missing or ill-typed")
    if Db.src.get(L.phibar) != D.unit or Db.dst.get(L.phibar) != Fo[C.unit]:
        out.append("phibar must be a morphism I' -> F(I)")
    if out:
        return out
    for f, g in product(Cb.morphisms, repeat=2):
        x, y, x2, y2 = Cb.src[f], Cb.src[g], Cb.dst[f], Cb.dst[g]
        if D.compose(L.phi[(x2, y2)], D.tm(F(f), F(g))) != D.compose(F(C.tm(f, g)), L.phi[(x, y)]):
            out.append(f"phi not natural at {f!r}, {g!r}")
            return out
    for x, y, z in product(Cb.objects, repeat=3):
        lhs = Db.seq(D.tm(L.phi[(x, y)], D.id(Fo[z])), L.phi[(C.t(x, y), z)], F(C.alpha(x, y, z)))
        rhs = Db.seq(D.alpha(Fo[x], Fo[y], Fo[z]), D.tm(D.id(Fo[x]), L.phi[(y, z)]), L.phi[(x, C.t(y, z))])
        if lhs != rhs:
            out.append(f"lax associativity fails at {x!r}, {y!r}, {z!r}")
    for x in Cb.objects:
        if Db.seq(D.tm(L.phibar, D.id(Fo[x])), L.phi[(C.unit, x)], F(C.l(x))) != D.l(Fo[x]):
            out.append(f"left lax unit law fails at {x!r}")
        if Db.seq(D.tm(D.id(Fo[x]), L.phibar), L.phi[(x, C.unit)], F(C.r(x))) != D.r(Fo[x]):
            out.append(f"right lax unit law fails at {x!r}")
    return out


def identity_lax(M: FinMonoidalCategory) -> LaxMonoidalFunctor:
    C = M.base
    phi = {(x, y): C.id(M.t(x, y)) for x, y in product(C.objects, repeat=2)}
    return LaxMonoidalFunctor(M, M, identity_functor(C), phi, C.id(M.unit))


def compose_lax(L: LaxMonoidalFunctor, K: LaxMonoidalFunctor) -> LaxMonoidalFunctor:
    """K . L with phi = K(phi_L) . phi_K."""
    C, E = L.source, K.target
    Eb = E.base
    F = compose_functors(L.functor, K.functor)
    phi = {}
    for x, y in product(C.base.objects, repeat=2):
        fx, fy = L.functor.obj[x], L.functor.obj[y]
        phi[(x, y)] = Eb.compose(K.functor(L.phi[(x, y)]), K.phi[(fx, fy)])
    phibar = Eb.compose(K.functor(L.phibar), K.phibar)
    return LaxMonoidalFunctor(C, E, F, phi, phibar)


@dataclass(eq=False)
class ActionDatum:
    """A monoidal category C acting on a category D through act: C x D -> D.

    chi: (m*n).x -> m.(n.x) and iota: I.x -> x are natural isomorphisms.
    """
    acting: FinMonoidalCategory
    space: FinCategory
    act_obj: dict
    act_mor: dict
    chi: dict
    iota: dict
    name: str = ""

    def a(self, m, x):
        return self.act_obj[(m, x)]

    def am(self, f, g):
        return self.act_mor[(f, g)]


def action_violations(A: ActionDatum) -> list[str]:
    M, D = A.acting, A.space
    C = M.base
    out = []
    for m, x in product(C.objects, D.objects):
        if A.act_obj.get((m, x)) not in D.objects:
            return [f"action on objects undefined at {m!r}, {x!r}"]
    for f, g in product(C.morphisms, D.morphisms):
        h = A.act_mor.get((f, g))
        if h is None or D.src.get(h) != A.a(C.src[f], D.src[g]) or D.dst.get(h) != A.a(C.dst[f], D.dst[g]):
            return [f"action on {f!r}, {g!r} missing or ill-typed"]
    for m, x in product(C.objects, D.objects):
        if A.am(C.id(m), D.id(x)) != D.id(A.a(m, x)):
            out.append(f"action does not preserve identities at {m!r}, {x!r}")
    for (g, f), (g2, f2) in product(list(C.comp), list(D.comp)):
        if A.am(C.compose(g, f), D.compose(g2, f2)) != D.compose(A.am(g, g2), A.am(f, f2)):
            out.append("action is not a bifunctor")
            return out
    for m, n, x in product(C.objects, C.objects, D.objects):
        c = A.chi.get((m, n, x))
        if c is None or D.src.get(c) != A.a(M.t(m, n), x) or D.dst.get(c) != A.a(m, A.a(n, x)) or not D.is_iso(c):
            out.append(f"chi at {m!r}, {n!r}, {x!r} is not an isomorphism")
    for x in D.objects:
        i = A.iota.get(x)
        if i is None or D.src.get(i) != A.a(M.unit, x) or D.dst.get(i) != x or not D.is_iso(i):
            out.append(f"iota at {x!r} is not an isomorphism")
    if out:
        return out
    for m, n, p, x in product(C.objects, C.objects, C.objects, D.objects):
        lhs = D.seq(A.chi[(M.t(m, n), p, x)], A.chi[(m, n, A.a(p, x))])
        rhs = D.seq(A.am(M.alpha(m, n, p), D.id(x)), A.chi[(m, M.t(n, p), x)],
                    A.am(C.id(m), A.chi[(n, p, x)]))
        if lhs != rhs:
            out.append(f"action pentagon fails at {m!r}, {n!r}, {p!r}, {x!r}")
    for m, x in product(C.objects, D.objects):
        if D.seq(A.chi[(m, M.unit, x)], A.am(C.id(m), A.iota[x])) != A.am(M.r(m), D.id(x)):
            out.append(f"action right unit law fails at {m!r}, {x!r}")
        if D.seq(A.chi[(M.unit, m, x)], A.iota[A.a(m, x)]) != A.am(M.l(m), D.id(x)):
            out.append(f"action left unit law fails at {m!r}, {x!r}")
    return out


def self_action(M: FinMonoidalCategory) -> ActionDatum:
    """C acting on itself by the tensor."""
    C = M.base
    return ActionDatum(M, C, dict(M.tensor_obj), dict(M.tensor_mor), dict(M.assoc), dict(M.lunit),
                       M.name + " on itself")


# -- category files --------------------------------------------------------------

def _category_from(doc: Mapping, name: str) -> FinCategory:
    objects = list(doc["objects"])
    morphisms = [(m["id"], m["src"], m["dst"]) for m in doc["morphisms"]]
    identities = dict(doc["identities"])
    composition = [tuple(t) for t in doc.get("composition", [])]
    return make_category(objects, morphisms, identities, composition, name)


def monoidal_from_dict(doc: Mapping) -> FinMonoidalCategory:
    name = doc.get("name", "")
    C = _category_from(doc, name)
    tensor_obj = {(x, y): z for x, y, z in doc["tensor_obj"]}
    tensor_mor = {(f, g): h for f, g, h in doc["tensor_mor"]}
    assoc = {(x, y, z): a for x, y, z, a in doc.get("associator", [])}
    unitors = doc.get("unitors", {})
    lunit = dict(unitors.get("left", {}))
    runit = dict(unitors.get("right", {}))
    sym = None
    if "symmetry" in doc:
        sym = {(x, y): s for x, y, s in doc["symmetry"]}
    M = FinMonoidalCategory(C, tensor_obj, tensor_mor, doc["unit"], bool(doc.get("strict", False)),
                            assoc, lunit, runit, sym, name)
    problems = validate_monoidal(M)
    if problems:
        raise CategoryError(f"{name}: " + "; ".join(problems[:5]))
    return M


def action_from_dict(M: FinMonoidalCategory, doc: Mapping) -> ActionDatum:
    if doc.get("space", "self") == "self":
        D = M.base
        defaults = self_action(M)
    else:
        D = _category_from(doc["space"], doc["space"].get("name", ""))
        defaults = None
    act_obj = {(m, x): y for m, x, y in doc["act_obj"]} if "act_obj" in doc else dict(defaults.act_obj)  # type: ignore[union-attr]
    act_mor = {(f, g): h for f, g, h in doc["act_mor"]} if "act_mor" in doc else dict(defaults.act_mor)  # type: ignore[union-attr]
    if doc.get("strict", False):
        chi = {(m, n, x): D.id(act_obj[(M.t(m, n), x)])
               for m, n, x in product(M.base.objects, M.base.objects, D.objects)}
        iota = {x: D.id(x) for x in D.objects}
    elif "chi" in doc:
        chi = {(m, n, x): c for m, n, x, c in doc["chi"]}
        iota = dict(doc["iota"])
    else:
        chi, iota = dict(defaults.chi), dict(defaults.iota)  # type: ignore[union-attr]
    A = ActionDatum(M, D, act_obj, act_mor, chi, iota, doc.get("name", M.name + " action"))
    problems = action_violations(A)
    if problems:
        raise CategoryError("; ".join(problems[:5]))
    return A


def load_monoidal(path: str | Path) -> tuple[FinMonoidalCategory, ActionDatum | None]:
    doc = json.loads(Path(path).read_text())
    M = monoidal_from_dict(doc)
    action = action_from_dict(M, doc["action"]) if "action" in doc else None
    return M, action


def monoidal_to_dict(M: FinMonoidalCategory) -> dict:
    C = M.base
    doc: dict = {
        "name": M.name,
        "objects": list(C.objects),
        "morphisms": [{"id": f, "src": C.src[f], "dst": C.dst[f]} for f in C.morphisms],
        "identities": dict(C.identities),
        "composition": [[g, f, h] for (g, f), h in C.comp.items()],
        "tensor_obj": [[x, y, z] for (x, y), z in M.tensor_obj.items()],
        "tensor_mor": [[f, g, h] for (f, g), h in M.tensor_mor.items()],
        "unit": M.unit,
        "strict": M.strict,
    }
    if not M.strict:
        doc["associator"] = [[x, y, z, a] for (x, y, z), a in M.assoc.items()]
        doc["unitors"] = {"left": dict(M.lunit), "right": dict(M.runit)}
    if M.symmetry is not None:
        doc["symmetry"] = [[x, y, s] for (x, y), s in M.symmetry.items()]
    return doc


def iter_objects_n(M: FinMonoidalCategory, n: int) -> Iterator[tuple]:
    return product(M.base.objects, repeat=n)
