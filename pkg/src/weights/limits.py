"""Weighted limits of a finite monoidal category through the (f, mu, eta)
normal form of cones.

A cone for the monoid weight with vertex X is a functor f: X -> C with
transformations mu: f*f => f and eta: I => f satisfying the monoid laws
pointwise.  Every such triple extends to a transformation from the weight
into Cat(X, C^(-)); ``check_naturality_truncated`` rebuilds that extension
on a finite truncation of the weight and checks it directly.

Variant weights use law tables written in a small expression language and
evaluated in C.  Expressions are tuples:

    objects    "M", "X", "I", ("t", a, b) tensor, ("a", a, b) action
    morphisms  ("gen", name), ("id", obj), ("seq", e1, e2, ...) in order of
               application, ("t", e1, e2), ("act", e1, e2), and the
               structure cells ("alpha", a, b, c), ("alpha_inv", ...),
               ("l", a), ("l_inv", a), ("r", a), ("r_inv", a), ("s", a, b),
               ("chi", a, b, x), ("iota", x)
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping

from . import words as W
from .fincat import (ActionDatum, CategoryError, FinCategory, FinFunctor, FinMonoidalCategory,
                     coherence_cell, enumerate_functors, eval_word_obj, make_category, normalize)
from .theory import compose_wmon, identity_wmon, monotone_maps, weight_on_morphism, MULT_M, WMonTwoCell
from .words import BinWord, Leaf, Node


class LimitError(ValueError):
    pass


# -- structures ----------------------------------------------------------------

@dataclass(frozen=True)
class Structure:
    """An object of a weighted limit: carrier(s) plus named structure maps."""
    tag: str
    carrier: object
    ops: tuple[tuple[str, object], ...]
    space: object = None

    def __getitem__(self, name: str):
        for k, v in self.ops:
            if k == name:
                return v
        raise KeyError(name)

    def data(self) -> tuple:
        """Forgetful data used to compare with the brute-force oracles."""
        head = (self.carrier,) if self.space is None else (self.carrier, self.space)
        return head + tuple(v for _, v in self.ops)


def monoid_object(carrier, mul, unit) -> Structure:
    return Structure("monoid", carrier, (("mul", mul), ("unit", unit)))


# -- law tables -----------------------------------------------------------------

M, X, I = "M", "X", "I"
MM = ("t", M, M)
MMM_L = ("t", MM, M)


def _gen(name: str) -> tuple:
    return ("gen", name)


def _monoid_laws() -> list[tuple[str, tuple, tuple]]:
    return [
        ("associativity", ("seq", ("t", _gen("mul"), ("id", M)), _gen("mul")),
         ("seq", ("alpha", M, M, M), ("t", ("id", M), _gen("mul")), _gen("mul"))),
        ("left unit", ("seq", ("t", _gen("unit"), ("id", M)), _gen("mul")), ("l", M)),
        ("right unit", ("seq", ("t", ("id", M), _gen("unit")), _gen("mul")), ("r", M)),
    ]


def _comonoid_laws() -> list[tuple[str, tuple, tuple]]:
    return [
        ("coassociativity", ("seq", _gen("comul"), ("t", _gen("comul"), ("id", M)), ("alpha", M, M, M)),
         ("seq", _gen("comul"), ("t", ("id", M), _gen("comul")))),
        ("left counit", ("seq", _gen("comul"), ("t", _gen("counit"), ("id", M))), ("l_inv", M)),
        ("right counit", ("seq", _gen("comul"), ("t", ("id", M), _gen("counit"))), ("r_inv", M)),
    ]


def _middle_swap(a, b, c, d) -> tuple:
    """(a*b)*(c*d) -> (a*c)*(b*d) built from the associator and the symmetry."""
    return ("seq", ("alpha", a, b, ("t", c, d)),
            ("t", ("id", a), ("alpha_inv", b, c, d)),
            ("t", ("id", a), ("t", ("s", b, c), ("id", d))),
            ("t", ("id", a), ("alpha", c, b, d)),
            ("alpha_inv", a, c, ("t", b, d)))


def _bimonoid_laws() -> list[tuple[str, tuple, tuple]]:
    return _monoid_laws() + _comonoid_laws() + [
        ("comultiplication is multiplicative", ("seq", _gen("mul"), _gen("comul")),
         ("seq", ("t", _gen("comul"), _gen("comul")), _middle_swap(M, M, M, M), ("t", _gen("mul"), _gen("mul")))),
        ("counit is multiplicative", ("seq", _gen("mul"), _gen("counit")),
         ("seq", ("t", _gen("counit"), _gen("counit")), ("l", I))),
        ("comultiplication is unital", ("seq", _gen("unit"), _gen("comul")),
         ("seq", ("l_inv", I), ("t", _gen("unit"), _gen("unit")))),
        ("counit is unital", ("seq", _gen("unit"), _gen("counit")), ("id", I)),
    ]


def _action_laws() -> list[tuple[str, tuple, tuple]]:
    return _monoid_laws() + [
        ("action associativity", ("seq", ("act", _gen("mul"), ("id", X)), _gen("act")),
         ("seq", ("chi", M, M, X), ("act", ("id", M), _gen("act")), _gen("act"))),
        ("action unit", ("seq", ("act", _gen("unit"), ("id", X)), _gen("act")), ("iota", X)),
    ]


GENERATORS: dict[str, list[tuple[str, object, object]]] = {
    "monoid": [("mul", MM, M), ("unit", I, M)],
    "comonoid": [("comul", M, MM), ("counit", M, I)],
    "cmonoid": [("mul", MM, M), ("unit", I, M)],
    "bimonoid": [("mul", MM, M), ("unit", I, M), ("comul", M, MM), ("counit", M, I)],
    "action": [("mul", MM, M), ("unit", I, M), ("act", ("a", M, X), X)],
}

LAWS: dict[str, list[tuple[str, tuple, tuple]]] = {
    "monoid": _monoid_laws(),
    "comonoid": _comonoid_laws(),
    "cmonoid": _monoid_laws() + [("commutativity", ("seq", ("s", M, M), _gen("mul")), _gen("mul"))],
    "bimonoid": _bimonoid_laws(),
    "action": _action_laws(),
}

NEEDS_SYMMETRY = {"cmonoid", "bimonoid"}


@dataclass
class Env:
    C: FinMonoidalCategory
    carrier: object
    gens: Mapping[str, object]
    action: ActionDatum | None = None
    space: object = None


def eval_obj(e, env: Env):
    if e == "M":
        return env.carrier
    if e == "X":
        return env.space
    if e == "I":
        return env.C.unit
    kind, a, b = e
    if kind == "t":
        return env.C.t(eval_obj(a, env), eval_obj(b, env))
    if kind == "a":
        return env.action.a(eval_obj(a, env), eval_obj(b, env))  # type: ignore[union-attr]
    raise LimitError(f"bad object expression {e!r}")


def eval_mor(e, env: Env):
    C = env.C
    kind = e[0]
    if kind == "gen":
        return env.gens[e[1]]
    if kind == "id":
        return C.id(eval_obj(e[1], env)) if not _in_space(e[1]) else env.action.space.id(eval_obj(e[1], env))  # type: ignore[union-attr]
    if kind == "seq":
        cat = env.action.space if _seq_in_space(e, env) else C.base  # type: ignore[union-attr]
        return cat.seq(*(eval_mor(x, env) for x in e[1:]))
    if kind == "t":
        return C.tm(eval_mor(e[1], env), eval_mor(e[2], env))
    if kind == "act":
        return env.action.am(eval_mor(e[1], env), eval_mor(e[2], env))  # type: ignore[union-attr]
    objs = [eval_obj(x, env) for x in e[1:]]
    if kind == "alpha":
        return C.alpha(*objs)
    if kind == "alpha_inv":
        return C.alpha_inv(*objs)
    if kind == "l":
        return C.l(objs[0])
    if kind == "l_inv":
        return C.base.inverse(C.l(objs[0]))
    if kind == "r":
        return C.r(objs[0])
    if kind == "r_inv":
        return C.base.inverse(C.r(objs[0]))
    if kind == "s":
        return C.s(*objs)
    if kind == "chi":
        return env.action.chi[tuple(objs)]  # type: ignore[union-attr]
    if kind == "iota":
        return env.action.iota[objs[0]]  # type: ignore[union-attr]
    raise LimitError(f"bad morphism expression {e!r}")


def _in_space(o) -> bool:
    if o == "X":
        return True
    return isinstance(o, tuple) and o[0] == "a"


def _mor_in_space(e) -> bool:
    kind = e[0]
    if kind == "gen":
        return e[1] == "act"
    if kind == "id":
        return _in_space(e[1])
    if kind in ("act", "chi", "iota"):
        return True
    if kind == "seq":
        return _mor_in_space(e[1])
    return False


def _seq_in_space(e, env: Env) -> bool:
    return env.action is not None and _mor_in_space(e)


def failed_laws(tag: str, env: Env) -> list[str]:
    bad = []
    for name, lhs, rhs in LAWS[tag]:
        try:
            if eval_mor(lhs, env) != eval_mor(rhs, env):
                bad.append(name)
        except (CategoryError, KeyError):
            bad.append(name)
    return bad


# -- candidate enumeration and the limit category -------------------------------

def _check_tag(tag: str, C: FinMonoidalCategory, action: ActionDatum | None) -> None:
    if tag not in LAWS:
        raise LimitError(f"unknown weight {tag!r}")
    if tag in NEEDS_SYMMETRY and not C.symmetric:
        raise LimitError(f"the {tag} weight needs a symmetric monoidal category")
    if tag == "action" and action is None:
        raise LimitError("the action weight needs an action datum")


def candidates(tag: str, C: FinMonoidalCategory, action: ActionDatum | None = None) -> Iterator[Env]:
    """Every assignment of carriers and generator morphisms of the right types."""
    _check_tag(tag, C, action)
    spaces = action.space.objects if tag == "action" else (None,)  # type: ignore[union-attr]
    for carrier, space in product(C.base.objects, spaces):
        env = Env(C, carrier, {}, action, space)
        homs = []
        for name, s, t in GENERATORS[tag]:
            cat = action.space if name == "act" else C.base  # type: ignore[union-attr]
            homs.append(cat.hom(eval_obj(s, env), eval_obj(t, env)))
        for pick in product(*homs):
            gens = {name: f for (name, _, _), f in zip(GENERATORS[tag], pick)}
            yield Env(C, carrier, gens, action, space)


def structure_of(tag: str, env: Env) -> Structure:
    return Structure(tag, env.carrier, tuple((n, env.gens[n]) for n, _, _ in GENERATORS[tag]),
                     env.space)


def env_of(st: Structure, C: FinMonoidalCategory, action: ActionDatum | None = None) -> Env:
    return Env(C, st.carrier, dict(st.ops), action, st.space)


def lift(o, h, hx, env_src: Env, env_dst: Env):
    """Apply a candidate hom (h on M, hx on X) to an object expression."""
    C = env_src.C
    if o == "M":
        return h
    if o == "X":
        return hx
    if o == "I":
        return C.id(C.unit)
    kind, a, b = o
    if kind == "t":
        return C.tm(lift(a, h, hx, env_src, env_dst), lift(b, h, hx, env_src, env_dst))
    return env_src.action.am(lift(a, h, hx, env_src, env_dst), lift(b, h, hx, env_src, env_dst))  # type: ignore[union-attr]


def is_hom(tag: str, s: Structure, t: Structure, h, hx, C: FinMonoidalCategory,
           action: ActionDatum | None = None) -> bool:
    """h commutes with every generator: h_dst . g = g' . h_src."""
    e1, e2 = env_of(s, C, action), env_of(t, C, action)
    for name, so, to in GENERATORS[tag]:
        cat = action.space if name == "act" else C.base  # type: ignore[union-attr]
        lhs = cat.compose(lift(to, h, hx, e1, e2), e1.gens[name])
        rhs = cat.compose(e2.gens[name], lift(so, h, hx, e1, e2))
        if lhs != rhs:
            return False
    return True


def _homs_between(tag: str, s: Structure, t: Structure, C: FinMonoidalCategory,
                  action: ActionDatum | None) -> list[tuple]:
    out = []
    xs = action.space.hom(s.space, t.space) if tag == "action" else (None,)  # type: ignore[union-attr]
    for h, hx in product(C.base.hom(s.carrier, t.carrier), xs):
        if is_hom(tag, s, t, h, hx, C, action):
            out.append((h, hx))
    return out


@dataclass(eq=False)
class WeightedLimit:
    tag: str
    C: FinMonoidalCategory
    category: FinCategory
    action: ActionDatum | None = None

    @property
    def objects(self) -> tuple:
        return self.category.objects

    @property
    def homs(self) -> tuple:
        return self.category.morphisms

    def forget(self, f) -> tuple:
        """Underlying morphism data (h, hx) of a limit morphism."""
        return f[2]


def structures(tag: str, C: FinMonoidalCategory, action: ActionDatum | None = None) -> list[Structure]:
    found = [structure_of(tag, env) for env in candidates(tag, C, action) if not failed_laws(tag, env)]
    return sorted(set(found), key=repr)


def weighted_limit(C: FinMonoidalCategory, tag: str = "monoid",
                   action: ActionDatum | None = None) -> WeightedLimit:
    """The limit as a category: structures and their structure-preserving maps."""
    objs = structures(tag, C, action)
    mors, ids = [], {}
    for s, t in product(objs, repeat=2):
        for hh in _homs_between(tag, s, t, C, action):
            mors.append(((s, t, hh), s, t))
    for s in objs:
        hx = action.space.id(s.space) if tag == "action" else None  # type: ignore[union-attr]
        ids[s] = (s, s, (C.id(s.carrier), hx))
    comp = []
    for (f, fs, ft), (g, gs, gt) in product(mors, repeat=2):
        if ft != gs:
            continue
        h = C.compose(g[2][0], f[2][0])
        hx = None if tag != "action" else action.space.compose(g[2][1], f[2][1])  # type: ignore[union-attr]
        comp.append((g, f, (fs, gt, (h, hx))))
    cat = make_category(objs, mors, ids, comp, f"{tag} limit of {C.name}")
    return WeightedLimit(tag, C, cat, action)


# -- cones with an arbitrary vertex ---------------------------------------------

@dataclass(eq=False)
class WCone:
    vertex: FinCategory
    f: FinFunctor
    mu: dict
    eta: dict

    def key(self) -> tuple:
        return (self.f.key(), tuple(self.mu[x] for x in self.vertex.objects),
                tuple(self.eta[x] for x in self.vertex.objects))

    def __eq__(self, other) -> bool:
        return isinstance(other, WCone) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def cone_is_natural(C: FinMonoidalCategory, cone: WCone) -> bool:
    X, f = cone.vertex, cone.f
    for g in X.morphisms:
        x, y = X.src[g], X.dst[g]
        fg = f(g)
        if C.compose(cone.mu[y], C.tm(fg, fg)) != C.compose(fg, cone.mu[x]):
            return False
        if cone.eta[y] != C.compose(fg, cone.eta[x]):
            return False
    return True


def check_cone_laws(C: FinMonoidalCategory, cone: WCone) -> bool:
    """Associativity and both unit laws at every object of the vertex."""
    for x in cone.vertex.objects:
        env = Env(C, cone.f.obj[x], {"mul": cone.mu[x], "unit": cone.eta[x]})
        if failed_laws("monoid", env):
            return False
    return True


def point_cone(C: FinMonoidalCategory, carrier, mul, unit) -> WCone:
    """The cone with terminal vertex given by a candidate (M, mu, eta)."""
    from .fincat import terminal_category
    T = terminal_category()
    (x,) = T.objects
    f = FinFunctor(T, C.base, {x: carrier}, {T.id(x): C.id(carrier)})
    return WCone(T, f, {x: mul}, {x: unit})


def cone_from_monoid(C: FinMonoidalCategory, m: Structure) -> WCone:
    if failed_laws("monoid", env_of(m, C)):
        raise LimitError(f"{m!r} is not a monoid")
    return point_cone(C, m.carrier, m["mul"], m["unit"])


def enumerate_cones(C: FinMonoidalCategory, X: FinCategory) -> list[WCone]:
    """All (f, mu, eta) with vertex X that are natural and satisfy the monoid laws."""
    out = []
    for f in enumerate_functors(X, C.base):
        objs = X.objects
        mus = [C.base.hom(C.t(f.obj[x], f.obj[x]), f.obj[x]) for x in objs]
        etas = [C.base.hom(C.unit, f.obj[x]) for x in objs]
        for mu_pick in product(*mus):
            for eta_pick in product(*etas):
                cone = WCone(X, f, dict(zip(objs, mu_pick)), dict(zip(objs, eta_pick)))
                if cone_is_natural(C, cone) and check_cone_laws(C, cone):
                    out.append(cone)
    return out


def cone_morphisms(C: FinMonoidalCategory, a: WCone, b: WCone) -> list[dict]:
    """Modifications a -> b: natural families of monoid homomorphisms."""
    X = a.vertex
    choices = [C.base.hom(a.f.obj[x], b.f.obj[x]) for x in X.objects]
    out = []
    for pick in product(*choices):
        theta = dict(zip(X.objects, pick))
        ok = all(C.compose(b.f(g), theta[X.src[g]]) == C.compose(theta[X.dst[g]], a.f(g)) for g in X.morphisms)
        ok = ok and all(
            C.compose(theta[x], a.mu[x]) == C.compose(b.mu[x], C.tm(theta[x], theta[x]))
            and C.compose(theta[x], a.eta[x]) == b.eta[x] for x in X.objects)
        if ok:
            out.append(theta)
    return out


def comparison_psi(C: FinMonoidalCategory, cone: WCone, lim: WeightedLimit) -> FinFunctor:
    """The functor X -> Lim picking the monoid (f x, mu_x, eta_x) at each x."""
    if lim.tag != "monoid":
        raise LimitError("comparison is defined for the monoid weight")
    if not (cone_is_natural(C, cone) and check_cone_laws(C, cone)):
        raise LimitError("not a valid cone")
    X = cone.vertex
    obj = {x: monoid_object(cone.f.obj[x], cone.mu[x], cone.eta[x]) for x in X.objects}
    mor = {g: (obj[X.src[g]], obj[X.dst[g]], (cone.f(g), None)) for g in X.morphisms}
    return FinFunctor(X, lim.category, obj, mor)


def psi_on_morphism(theta: dict, F: FinFunctor, G: FinFunctor) -> dict:
    return {x: (F.obj[x], G.obj[x], (theta[x], None)) for x in F.source.objects}


def universal_cone(lim: WeightedLimit) -> WCone:
    """(u, mu_C, eta_C) on the limit category itself."""
    L = lim.category
    f = FinFunctor(L, lim.C.base, {m: m.carrier for m in L.objects}, {g: g[2][0] for g in L.morphisms})
    return WCone(L, f, {m: m["mul"] for m in L.objects}, {m: m["unit"] for m in L.objects})


def cone_along(lim: WeightedLimit, G: FinFunctor) -> WCone:
    """The universal cone restricted along G: X -> Lim."""
    u = universal_cone(lim)
    X = G.source
    f = FinFunctor(X, lim.C.base, {x: u.f.obj[G.obj[x]] for x in X.objects},
                   {g: u.f(G.mor[g]) for g in X.morphisms})
    return WCone(X, f, {x: u.mu[G.obj[x]] for x in X.objects}, {x: u.eta[G.obj[x]] for x in X.objects})


# -- the cone on a truncation of the weight -------------------------------------

def _right_assoc_words(items: list[BinWord]) -> BinWord:
    if not items:
        return W.E
    if len(items) == 1:
        return items[0]
    return Node(items[0], _right_assoc_words(items[1:]))


class TruncatedCone:
    """tau_(1] on objects and morphisms of the weight, for one (M, mu, eta)."""

    def __init__(self, C: FinMonoidalCategory, carrier, mul, unit):
        self.C, self.M, self.mul, self.unit = C, carrier, mul, unit
        self._norm: dict = {}
        self._core: dict = {}
        self._tau: dict = {}

    def obj(self, w: BinWord):
        return eval_word_obj(self.C, w, [self.M] * max(W.type_of(w) or (1,)))

    def norm(self, w: BinWord):
        if w not in self._norm:
            k = W.occurrences(w)
            self._norm[w] = normalize(self.C, w, [self.M] * max(k, 1))
        return self._norm[w]

    def mu_k(self, k: int):
        C = self.C
        if k == 0:
            return self.unit
        if k == 1:
            return C.id(self.M)
        return C.compose(self.mul, C.tm(C.id(self.M), self.mu_k(k - 1)))

    def core(self, k: int, phi: tuple[int, ...], m: int):
        """Normal form of k copies -> normal form of m copies along a monotone map."""
        key = (k, phi, m)
        if key not in self._core:
            C = self.C
            blocks = [[i for i in range(1, k + 1) if phi[i - 1] == j] for j in range(1, m + 1)]
            src_word = W.right_assoc(list(range(1, k + 1)))
            mid_word = _right_assoc_words([W.right_assoc(b) for b in blocks])
            xs = [self.M] * max(k, 1)
            coh = coherence_cell(C, src_word, mid_word, xs)
            parts = [self.mu_k(len(b)) for b in blocks]
            tensor = C.id(C.unit) if not parts else parts[-1]
            for p in reversed(parts[:-1]):
                tensor = C.tm(p, tensor)
            self._core[key] = C.compose(tensor, coh)
        return self._core[key]

    def tau(self, w: BinWord, u: BinWord, phi: tuple[int, ...]):
        key = (w, u, phi)
        if key not in self._tau:
            C = self.C
            inv = C.base.inverse(self.norm(u))
            k, m = W.occurrences(w), W.occurrences(u)
            self._tau[key] = C.seq(self.norm(w), self.core(k, phi, m), inv)
        return self._tau[key]


def _truncation(depth: int) -> list[BinWord]:
    return list(W.words_up_to_depth((1,), depth))


@lru_cache(maxsize=None)
def _morphisms(depth: int) -> tuple:
    ws = _truncation(depth)
    occ = {w: W.occurrences(w) for w in ws}
    return tuple((w, u, phi) for w in ws for u in ws for phi in monotone_maps(occ[w], occ[u]))


def naturality_failures(C: FinMonoidalCategory, carrier, mul, unit, depth: int = 2,
                        stop_early: bool = True) -> list[str]:
    """Check the extension of (M, mu, eta) to the weight on a truncation.

    Covers functoriality on words of depth <= depth, compatibility with the
    product 1-cell (1*2) on words of depth < depth, and the associator and
    unitor 2-cells (and all equal-type pairs of words) at objects of
    depth < depth.
    """
    if depth <= 0:
        return []
    try:
        return _naturality_failures(C, carrier, mul, unit, depth, stop_early)
    except CategoryError as exc:
        return [f"evaluation failed: {exc}"]


def _naturality_failures(C, carrier, mul, unit, depth, stop_early) -> list[str]:
    T = TruncatedCone(C, carrier, mul, unit)
    out: list[str] = []
    mors = _morphisms(depth)
    ws = _truncation(depth)
    index = {w: i for i, w in enumerate(ws)}
    # words are hashed once here; the loops below only see integer ids
    table = {(index[w], index[u], phi): T.tau(w, u, phi) for w, u, phi in mors}
    by_src: dict = {}
    for (wi, ui, phi) in table:
        by_src.setdefault(wi, []).append((ui, phi))
    for i, w in enumerate(ws):
        k = W.occurrences(w)
        if table[(i, i, tuple(range(1, k + 1)))] != C.id(T.obj(w)):
            out.append(f"identity at {W.render(w)}")
            if stop_early:
                return out
    compose = C.compose
    for (wi, ui, phi), t1 in table.items():
        for vi, psi in by_src[ui]:
            comp = tuple(psi[i - 1] for i in phi)
            if table[(wi, vi, comp)] != compose(table[(ui, vi, psi)], t1):
                out.append(f"composition {W.render(ws[wi])} -> {W.render(ws[ui])} -> {W.render(ws[vi])}")
                if stop_early:
                    return out
    # the product 1-cell
    small = [m for m in mors if W.depth(m[0]) < depth and W.depth(m[1]) < depth]
    for (w1, u1, p1), (w2, u2, p2) in product(small, repeat=2):
        h = WMonTwoCell(_obj1(w1, w2), _obj1(u1, u2), (p1, p2))
        img = weight_on_morphism(MULT_M, h)
        lhs = T.tau(img.dom.words[0], img.cod.words[0], img.maps[0])
        if lhs != C.tm(T.tau(w1, u1, p1), T.tau(w2, u2, p2)):
            out.append(f"tensor of {W.render(w1)}->{W.render(u1)} and {W.render(w2)}->{W.render(u2)}")
            if stop_early:
                return out
    # 2-cells
    small_ws = [w for w in ws if W.depth(w) < depth]
    one, two, three = Leaf(1), Leaf(2), Leaf(3)
    gens = [((Node(one, Node(two, three))), (Node(Node(one, two), three)), 3),
            ((Node(Node(one, two), three)), (Node(one, Node(two, three))), 3),
            (Node(W.E, one), one, 1), (Node(one, W.E), one, 1),
            (one, Node(W.E, one), 1), (one, Node(one, W.E), 1)]
    for c, c2, n in gens:
        for vs in product(small_ws, repeat=n):
            if _two_cell_fails(C, T, c, c2, vs):
                out.append(f"2-cell {W.render(c)} => {W.render(c2)} at {[W.render(v) for v in vs]}")
                if stop_early:
                    return out
    for c in ws:
        for c2 in ws:
            if c != c2 and W.type_of(c) == W.type_of(c2):
                for v in small_ws:
                    if _two_cell_fails(C, T, c, c2, (v,)):
                        out.append(f"2-cell {W.render(c)} => {W.render(c2)} at {W.render(v)}")
                        if stop_early:
                            return out
    return out


def _obj1(*ws: BinWord):
    from .theory import MOneCell
    return MOneCell(1, tuple(ws))


def _two_cell_fails(C, T: TruncatedCone, c: BinWord, c2: BinWord, vs) -> bool:
    src = W.substitute(c, list(vs))
    dst = W.substitute(c2, list(vs))
    k = W.occurrences(src)
    via_weight = T.tau(src, dst, tuple(range(1, k + 1)))
    values = [T.obj(v) for v in vs]
    via_c = coherence_cell(C, c, c2, values)
    return via_weight != via_c


def check_naturality_truncated(C: FinMonoidalCategory, cone: WCone, depth: int = 2) -> bool:
    """The full transformation induced by the cone is 2-natural on the truncation."""
    if not cone_is_natural(C, cone):
        return False
    for x in cone.vertex.objects:
        if naturality_failures(C, cone.f.obj[x], cone.mu[x], cone.eta[x], depth):
            return False
    return True


def eval_cone(C: FinMonoidalCategory, cone: WCone, w: BinWord) -> FinFunctor:
    """The functor X -> C obtained from w by replacing 1 by f, e by I and * by the tensor."""
    X = cone.vertex
    obj = {x: eval_word_obj(C, w, [cone.f.obj[x]] * max(W.type_of(w) or (1,))) for x in X.objects}

    def on(g):
        from .fincat import eval_word_mor
        return eval_word_mor(C, w, [cone.f(g)] * max(W.type_of(w) or (1,)))

    return FinFunctor(X, C.base, obj, {g: on(g) for g in X.morphisms})


def eval_cone_morphism(C: FinMonoidalCategory, cone: WCone, w: BinWord, u: BinWord,
                       phi: tuple[int, ...]) -> dict:
    """Components of the transformation assigned to a monotone map w -> u."""
    out = {}
    for x in cone.vertex.objects:
        T = TruncatedCone(C, cone.f.obj[x], cone.mu[x], cone.eta[x])
        out[x] = T.tau(w, u, phi)
    return out


# -- soundness of the monoid law table in the weight ---------------------------

def law_in_weight(expr) -> WMonTwoCell:
    """Interpret a monoid law expression as a morphism of W(1]."""
    from .theory import MOneCell

    def obj(o) -> BinWord:
        if o == "M":
            return Leaf(1)
        if o == "I":
            return W.E
        return Node(obj(o[1]), obj(o[2]))

    def one(w: BinWord) -> MOneCell:
        return MOneCell(1, (w,))

    def ident(w: BinWord) -> WMonTwoCell:
        return identity_wmon(one(w))

    def relabel(src: BinWord, dst: BinWord) -> WMonTwoCell:
        return WMonTwoCell(one(src), one(dst), (tuple(range(1, W.occurrences(src) + 1)),))

    def go(e) -> WMonTwoCell:
        kind = e[0]
        if kind == "gen":
            if e[1] == "mul":
                return WMonTwoCell(one(Node(Leaf(1), Leaf(1))), one(Leaf(1)), ((1, 1),))
            if e[1] == "unit":
                return WMonTwoCell(one(W.E), one(Leaf(1)), ((),))
            raise LimitError("only monoid generators live in the monoid weight")
        if kind == "id":
            return ident(obj(e[1]))
        if kind == "seq":
            out = go(e[1])
            for x in e[2:]:
                out = compose_wmon(out, go(x))
            return out
        if kind == "t":
            a, b = go(e[1]), go(e[2])
            h = WMonTwoCell(MOneCell(1, (a.dom.words[0], b.dom.words[0])),
                            MOneCell(1, (a.cod.words[0], b.cod.words[0])), (a.maps[0], b.maps[0]))
            return weight_on_morphism(MULT_M, h)
        objs = [obj(x) for x in e[1:]]
        if kind == "alpha":
            a, b, c = objs
            return relabel(Node(Node(a, b), c), Node(a, Node(b, c)))
        if kind == "l":
            return relabel(Node(W.E, objs[0]), objs[0])
        if kind == "r":
            return relabel(Node(objs[0], W.E), objs[0])
        raise LimitError(f"{kind} has no meaning in the monoid weight")

    return go(expr)


def iter_tags() -> Iterable[str]:
    return LAWS.keys()


# -- comparison with an independently enumerated category ----------------------

def oracle_comparison(lim: WeightedLimit, cat: FinCategory) -> tuple[bool, str]:
    """Check the forgetful data gives an isomorphism of categories lim -> cat."""
    paired = lim.tag == "action"
    obj = {s: s.data() for s in lim.objects}

    def mor(f):
        h, hx = f[2]
        return (obj[f[0]], obj[f[1]], (h, hx) if paired else h)

    if sorted(map(repr, obj.values())) != sorted(map(repr, cat.objects)) or len(set(obj.values())) != len(obj):
        return False, f"objects differ: limit {len(obj)}, oracle {len(cat.objects)}"
    images = {f: mor(f) for f in lim.homs}
    if set(images.values()) != set(cat.morphisms) or len(set(images.values())) != len(images):
        return False, f"homs differ: limit {len(images)}, oracle {len(cat.morphisms)}"
    L = lim.category
    for (g, f), h in L.comp.items():
        if cat.compose(images[g], images[f]) != images[h]:
            return False, f"composition not preserved at {g!r} . {f!r}"
    for x in L.objects:
        if images[L.id(x)] != cat.id(obj[x]):
            return False, f"identity not preserved at {x!r}"
    return True, "isomorphic over the forgetful data"
