"""Brute-force enumeration of algebraic structures in small monoidal categories.

Each enumerator writes its defining diagrams out by hand, independently of
the law tables used by ``weights.limits``.  Objects are plain tuples
(carrier, structure maps...) and morphisms are (src, dst, h) triples, so the
results can be compared directly with the weighted limits.
"""
from __future__ import annotations

from itertools import product

from .fincat import (ActionDatum, FinCategory, FinFunctor, FinMonoidalCategory, LaxMonoidalFunctor,
                     action_violations, lax_violations, make_category, opposite_monoidal)


class OracleError(ValueError):
    pass


def _is_monoid(C: FinMonoidalCategory, M, mul, unit) -> bool:
    c, t = C.compose, C.tm
    i = C.id(M)
    assoc = c(mul, t(mul, i)) == c(mul, c(t(i, mul), C.alpha(M, M, M)))
    left = c(mul, t(unit, i)) == C.l(M)
    right = c(mul, t(i, unit)) == C.r(M)
    return assoc and left and right


def _is_comonoid(C: FinMonoidalCategory, M, comul, counit) -> bool:
    c, t = C.compose, C.tm
    i = C.id(M)
    coassoc = c(C.alpha(M, M, M), c(t(comul, i), comul)) == c(t(i, comul), comul)
    left = c(t(counit, i), comul) == C.base.inverse(C.l(M))
    right = c(t(i, counit), comul) == C.base.inverse(C.r(M))
    return coassoc and left and right


def _shuffle(C: FinMonoidalCategory, a, b, x, y):
    """(a*b)*(x*y) -> (a*x)*(b*y)."""
    c, t = C.compose, C.tm
    step1 = C.alpha(a, b, C.t(x, y))
    step2 = t(C.id(a), C.alpha_inv(b, x, y))
    step3 = t(C.id(a), t(C.s(b, x), C.id(y)))
    step4 = t(C.id(a), C.alpha(x, b, y))
    step5 = C.alpha_inv(a, x, C.t(b, y))
    return c(step5, c(step4, c(step3, c(step2, step1))))


def _bimonoid_compatible(C: FinMonoidalCategory, M, mul, unit, comul, counit) -> bool:
    c, t = C.compose, C.tm
    I = C.unit
    d1 = c(comul, mul) == c(t(mul, mul), c(_shuffle(C, M, M, M, M), t(comul, comul)))
    d2 = c(counit, mul) == c(C.l(I), t(counit, counit))
    d3 = c(comul, unit) == c(t(unit, unit), C.base.inverse(C.l(I)))
    d4 = c(counit, unit) == C.id(I)
    return d1 and d2 and d3 and d4


def _category(objs: list, homs, name: str, C: FinCategory, fx=None) -> FinCategory:
    """Assemble the category of structures; homs(s, t) lists underlying maps."""
    objs = sorted(set(objs), key=repr)
    mors, ids, comp = [], {}, []
    by_pair = {}
    for s in objs:
        for t in objs:
            by_pair[(s, t)] = [(s, t, h) for h in homs(s, t)]
            mors.extend((m, s, t) for m in by_pair[(s, t)])
    for s in objs:
        ident = (s, s, _identity(C, s, fx))
        if ident not in by_pair[(s, s)]:
            raise OracleError(f"identity is not a homomorphism at {s!r}")
        ids[s] = ident
    for (f, fs, ft) in mors:
        for (g, gs, gt) in mors:
            if ft == gs:
                h = _compose(C, g[2], f[2], fx)
                if (fs, gt, h) not in by_pair[(fs, gt)]:
                    raise OracleError("composite of homomorphisms is not a homomorphism")
                comp.append((g, f, (fs, gt, h)))
    return make_category(objs, mors, ids, comp, name)


def _identity(C: FinCategory, s, fx):
    if fx is None:
        return C.id(s[0])
    return (C.id(s[0]), fx.id(s[1]))


def _compose(C: FinCategory, g, f, fx):
    if fx is None:
        return C.compose(g, f)
    return (C.compose(g[0], f[0]), fx.compose(g[1], f[1]))


def enumerate_monoids(C: FinMonoidalCategory) -> FinCategory:
    objs = []
    for M in C.base.objects:
        for mul in C.base.hom(C.t(M, M), M):
            for unit in C.base.hom(C.unit, M):
                if _is_monoid(C, M, mul, unit):
                    objs.append((M, mul, unit))

    def homs(s, t):
        return [h for h in C.base.hom(s[0], t[0])
                if C.compose(h, s[1]) == C.compose(t[1], C.tm(h, h)) and C.compose(h, s[2]) == t[2]]

    return _category(objs, homs, f"monoids in {C.name}", C.base)


def enumerate_comonoids(C: FinMonoidalCategory) -> FinCategory:
    objs = []
    for M in C.base.objects:
        for comul in C.base.hom(M, C.t(M, M)):
            for counit in C.base.hom(M, C.unit):
                if _is_comonoid(C, M, comul, counit):
                    objs.append((M, comul, counit))

    def homs(s, t):
        return [h for h in C.base.hom(s[0], t[0])
                if C.compose(t[1], h) == C.compose(C.tm(h, h), s[1]) and C.compose(t[2], h) == s[2]]

    return _category(objs, homs, f"comonoids in {C.name}", C.base)


def comonoids_via_opposite(C: FinMonoidalCategory) -> FinCategory:
    """Monoids in the opposite monoidal category, with homs turned around."""
    return enumerate_monoids(opposite_monoidal(C))


def _need_symmetry(C: FinMonoidalCategory) -> None:
    if not C.symmetric:
        raise OracleError(f"{C.name} has no symmetry")


def enumerate_commutative_monoids(C: FinMonoidalCategory) -> FinCategory:
    _need_symmetry(C)
    mons = enumerate_monoids(C)
    objs = [m for m in mons.objects if C.compose(m[1], C.s(m[0], m[0])) == m[1]]

    def homs(s, t):
        return [f[2] for f in mons.hom(s, t)]

    return _category(objs, homs, f"commutative monoids in {C.name}", C.base)


def enumerate_bimonoids(C: FinMonoidalCategory) -> FinCategory:
    _need_symmetry(C)
    objs = []
    for M in C.base.objects:
        MM = C.t(M, M)
        for mul, unit, comul, counit in product(C.base.hom(MM, M), C.base.hom(C.unit, M),
                                                C.base.hom(M, MM), C.base.hom(M, C.unit)):
            if (_is_monoid(C, M, mul, unit) and _is_comonoid(C, M, comul, counit)
                    and _bimonoid_compatible(C, M, mul, unit, comul, counit)):
                objs.append((M, mul, unit, comul, counit))

    def homs(s, t):
        out = []
        for h in C.base.hom(s[0], t[0]):
            ok = (C.compose(h, s[1]) == C.compose(t[1], C.tm(h, h)) and C.compose(h, s[2]) == t[2]
                  and C.compose(t[3], h) == C.compose(C.tm(h, h), s[3]) and C.compose(t[4], h) == s[4])
            if ok:
                out.append(h)
        return out

    return _category(objs, homs, f"bimonoids in {C.name}", C.base)


def enumerate_actions(A: ActionDatum) -> FinCategory:
    """Objects (M, X, mul, unit, act) with act: M.X -> X a unital associative action."""
    problems = action_violations(A)
    if problems:
        raise OracleError("; ".join(problems[:3]))
    C, D = A.acting, A.space
    objs = []
    for m in enumerate_monoids(C).objects:
        M, mul, unit = m
        for X in D.objects:
            for act in D.hom(A.a(M, X), X):
                assoc = D.compose(act, A.am(mul, D.id(X))) == D.seq(A.chi[(M, M, X)], A.am(C.id(M), act), act)
                unital = D.compose(act, A.am(unit, D.id(X))) == A.iota[X]
                if assoc and unital:
                    objs.append((M, X, mul, unit, act))

    def homs(s, t):
        out = []
        for h, k in product(C.base.hom(s[0], t[0]), D.hom(s[1], t[1])):
            ok = (C.compose(h, s[2]) == C.compose(t[2], C.tm(h, h)) and C.compose(h, s[3]) == t[3]
                  and D.compose(k, s[4]) == D.compose(t[4], A.am(h, k)))
            if ok:
                out.append((h, k))
        return out

    return _category(objs, homs, f"actions of monoids in {C.name}", C.base, fx=D)


ENUMERATORS = {
    "monoid": enumerate_monoids,
    "comonoid": enumerate_comonoids,
    "cmonoid": enumerate_commutative_monoids,
    "bimonoid": enumerate_bimonoids,
}


def oracle(tag: str, C: FinMonoidalCategory, action: ActionDatum | None = None) -> FinCategory:
    if tag == "action":
        if action is None:
            raise OracleError("the action oracle needs an action datum")
        return enumerate_actions(action)
    try:
        return ENUMERATORS[tag](C)
    except KeyError:
        raise OracleError(f"unknown structure {tag!r}") from None


# -- lax monoidal functors ------------------------------------------------------

def induced_on_monoids(F: LaxMonoidalFunctor, src: FinCategory | None = None,
                       dst: FinCategory | None = None) -> FinFunctor:
    """(M, mul, unit) -> (FM, F(mul) . phi_{M,M}, F(unit) . phibar), h -> Fh."""
    problems = lax_violations(F)
    if problems:
        raise OracleError("; ".join(problems[:3]))
    C, E, G = F.source, F.target, F.functor
    src = src or enumerate_monoids(C)
    dst = dst or enumerate_monoids(E)
    obj = {}
    for M, mul, unit in src.objects:
        image = (G.obj[M], E.compose(G(mul), F.phi[(M, M)]), E.compose(G(unit), F.phibar))
        if image not in dst.objects:
            raise OracleError(f"image of {(M, mul, unit)!r} is not a monoid")
        obj[(M, mul, unit)] = image
    mor = {f: (obj[f[0]], obj[f[1]], G(f[2])) for f in src.morphisms}
    return FinFunctor(src, dst, obj, mor)


def collapse_to_top(C: FinMonoidalCategory, top) -> LaxMonoidalFunctor:
    """The constant functor at ``top`` on a thin category, with its forced lax structure.

    Lax structure maps top*top -> top and I -> top exist when top absorbs
    the tensor and receives a map from the unit.
    """
    B = C.base
    obj = {x: top for x in B.objects}
    mor = {f: B.id(top) for f in B.morphisms}
    G = FinFunctor(B, B, obj, mor)
    tt = C.t(top, top)
    phi_hom = B.hom(tt, top)
    unit_hom = B.hom(C.unit, top)
    if len(phi_hom) != 1 or len(unit_hom) != 1:
        raise OracleError("collapse needs unique maps top*top -> top and I -> top")
    phi = {(x, y): phi_hom[0] for x in B.objects for y in B.objects}
    return LaxMonoidalFunctor(C, C, G, phi, unit_hom[0])


def forgetful(cat: FinCategory, C: FinCategory, paired: bool = False) -> FinFunctor:
    """Structures -> carriers; ``paired`` for action categories, whose maps are (h, k)."""
    return FinFunctor(cat, C, {s: s[0] for s in cat.objects},
                      {f: f[2][0] if paired else f[2] for f in cat.morphisms})
