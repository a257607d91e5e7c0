from functools import lru_cache
from itertools import product

import pytest

from conftest import load
from weights import words as W
from weights.fincat import (FinNatTrans, discrete_category, empty_category, enumerate_functors,
                            identity_functor, is_natural, self_action, terminal_category, thin_category)
from weights.limits import (LAWS, LimitError, TruncatedCone, WCone, check_cone_laws,
                            check_naturality_truncated, comparison_psi, cone_along, cone_from_monoid,
                            cone_morphisms, enumerate_cones, eval_cone, eval_cone_morphism, law_in_weight,
                            monoid_object, naturality_failures, oracle_comparison, point_cone,
                            psi_on_morphism, universal_cone, weighted_limit)
from weights.oracles import oracle

NAMES = ["z2", "chain-max", "chain-min", "nonthin", "z2-cocycle"]
VERTICES = {
    "empty": empty_category(),
    "point": terminal_category(),
    "two points": discrete_category(["a", "b"]),
    "arrow": thin_category(["a", "b"], lambda x, y: x <= y),
}


@lru_cache(maxsize=None)
def cat(name):
    return load(name)


@lru_cache(maxsize=None)
def lim(name, tag="monoid"):
    C, action = cat(name)
    if tag == "action" and action is None:
        action = self_action(C)
    return weighted_limit(C, tag, action)


def nat_transformations(F, G):
    X = F.source
    choices = [G.target.hom(F.obj[x], G.obj[x]) for x in X.objects]
    return [t for pick in product(*choices)
            if is_natural(t := FinNatTrans(F, G, dict(zip(X.objects, pick))))]


# -- the limit against the oracle ---------------------------------------------

EXPECTED = {
    ("z2", "monoid"): (1, 1), ("chain-max", "monoid"): (3, 6), ("chain-min", "monoid"): (1, 1),
    ("nonthin", "monoid"): (8, 40), ("z2-cocycle", "monoid"): (2, 4),
    ("chain-max", "comonoid"): (1, 1), ("chain-max", "cmonoid"): (3, 6), ("chain-max", "bimonoid"): (1, 1),
    ("chain-min", "comonoid"): (3, 6), ("nonthin", "comonoid"): (2, 4), ("nonthin", "bimonoid"): (2, 4),
    ("chain-max", "action"): (6, 20), ("z2", "action"): (2, 2), ("z2-cocycle", "action"): (4, 16),
}


@pytest.mark.parametrize("name,tag", sorted(EXPECTED), ids=lambda v: str(v))
def test_limit_matches_oracle(name, tag):
    L = lim(name, tag)
    C, action = cat(name)
    if tag == "action" and action is None:
        action = self_action(C)
    ok, why = oracle_comparison(L, oracle(tag, C, action))
    assert ok, why
    assert (len(L.objects), len(L.homs)) == EXPECTED[(name, tag)]


def test_symmetry_is_required():
    C, _ = cat("z2-cocycle")
    with pytest.raises(LimitError):
        weighted_limit(C, "cmonoid")
    with pytest.raises(LimitError):
        weighted_limit(C, "action")


def test_oracle_comparison_detects_mismatch():
    C, _ = cat("chain-max")
    ok, why = oracle_comparison(lim("chain-max"), oracle("comonoid", C))
    assert not ok and "objects" in why


# -- cones -----------------------------------------------------------------------

def test_cone_law_examples():
    C, _ = cat("chain-max")
    assert check_cone_laws(C, point_cone(C, "1", "1->1", "0->1"))
    Z, _ = cat("z2")
    assert Z.base.hom(Z.unit, "1") == ()
    assert check_cone_laws(Z, point_cone(Z, "0", "id0", "id0"))
    N, _ = cat("nonthin")
    assert not check_cone_laws(N, point_cone(N, "1", "1->1:1", "0->1:0"))


def test_cone_from_monoid():
    C, _ = cat("chain-max")
    cone = cone_from_monoid(C, monoid_object("2", "2->2", "0->2"))
    assert list(cone.f.obj.values()) == ["2"]
    (only,) = lim("chain-min").objects
    assert only.carrier == "2"
    N, _ = cat("nonthin")
    with pytest.raises(LimitError):
        cone_from_monoid(N, monoid_object("1", "1->1:1", "0->1:0"))


@pytest.mark.parametrize("name,expected", [("chain-max", 3), ("z2", 1), ("nonthin", 8)])
def test_cones_with_a_point(name, expected):
    C, _ = cat(name)
    assert len(enumerate_cones(C, terminal_category())) == expected
    assert len(enumerate_cones(C, empty_category())) == 1


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("vertex", list(VERTICES))
def test_psi_is_bijective(name, vertex):
    C, _ = cat(name)
    X = VERTICES[vertex]
    L = lim(name)
    cones = enumerate_cones(C, X)
    functors = enumerate_functors(X, L.category)
    images = [comparison_psi(C, c, L) for c in cones]
    assert len(set(images)) == len(cones) == len(functors)
    assert set(images) == set(functors)
    for a, Fa in zip(cones, images):
        assert cone_along(L, Fa) == a
    # on morphisms, for a few pairs
    for (a, Fa), (b, Fb) in list(product(zip(cones, images), repeat=2))[:16]:
        mods = cone_morphisms(C, a, b)
        nats = nat_transformations(Fa, Fb)
        assert len(mods) == len(nats)
        assert {tuple(psi_on_morphism(t, Fa, Fb)[x] for x in X.objects) for t in mods} == \
            {tuple(n[x] for x in X.objects) for n in nats}


def test_universal_cone_maps_to_identity():
    L = lim("chain-max")
    u = universal_cone(L)
    assert comparison_psi(L.C, u, L) == identity_functor(L.category)


def test_psi_rejects_invalid_cones():
    N, _ = cat("nonthin")
    with pytest.raises(LimitError):
        comparison_psi(N, point_cone(N, "1", "1->1:1", "0->1:0"), lim("nonthin"))


# -- evaluation and truncated naturality -----------------------------------------

def test_eval_cone():
    C, _ = cat("chain-max")
    cone = point_cone(C, "1", "1->1", "0->1")
    assert eval_cone(C, cone, W.parse("1")).obj == cone.f.obj
    assert list(eval_cone(C, cone, W.parse("(1*1)")).obj.values()) == [C.t("1", "1")]
    (x,) = cone.vertex.objects
    assert eval_cone_morphism(C, cone, W.parse("(1*1)"), W.parse("1"), (1, 1))[x] == cone.mu[x]
    assert eval_cone_morphism(C, cone, W.E, W.parse("1"), ())[x] == cone.eta[x]


def _all_candidates(C):
    for M in C.base.objects:
        for mul, unit in product(C.base.hom(C.t(M, M), M), C.base.hom(C.unit, M)):
            yield M, mul, unit


@pytest.mark.parametrize("name", ["chain-max", "z2-cocycle"])
def test_cone_laws_agree_with_truncated_naturality(name):
    C, _ = cat(name)
    for M, mul, unit in _all_candidates(C):
        laws = check_cone_laws(C, point_cone(C, M, mul, unit))
        assert laws == (not naturality_failures(C, M, mul, unit, 2)), (M, mul, unit)


def test_seeded_defect_fails_both():
    N, _ = cat("nonthin")
    good = point_cone(N, "2", "2->2:0", "0->2:0")
    assert check_cone_laws(N, good) and check_naturality_truncated(N, good, 2)
    (x,) = good.vertex.objects
    bad = WCone(good.vertex, good.f, {x: "2->2:1"}, dict(good.eta))
    assert not check_cone_laws(N, bad)
    assert not check_naturality_truncated(N, bad, 2)
    assert naturality_failures(N, "2", "2->2:1", "0->2:0", 0) == []


def test_truncated_cone_pieces():
    C, _ = cat("z2-cocycle")
    T = TruncatedCone(C, "0", "0:0", "0:0")
    assert T.obj(W.parse("((1*1)*1)")) == "0"
    assert T.tau(W.parse("1"), W.parse("1"), (1,)) == C.id("0")


@pytest.mark.parametrize("law", LAWS["monoid"], ids=lambda law: law[0])
def test_monoid_laws_hold_in_the_weight(law):
    _, lhs, rhs = law
    assert law_in_weight(lhs) == law_in_weight(rhs)


def test_law_in_weight_rejects_other_generators():
    with pytest.raises(LimitError):
        law_in_weight(LAWS["comonoid"][0][1])
