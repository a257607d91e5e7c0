import copy
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import load
from weights import words as W
from weights.fincat import (CategoryError, action_violations, FinFunctor, LaxMonoidalFunctor, coherence_cell, compose_functors,
                            compose_lax, discrete_category, empty_category, enumerate_functors,
                            identity_functor, identity_lax, lax_violations, monoidal_from_dict,
                            monoidal_to_dict, normalize, phi_eval_one_cell, phi_eval_two_cell,
                            power_category, self_action, thin_category,
                            validate_monoidal)
from weights.oracles import collapse_to_top
from weights.theory import MOneCell, compose_m, generators_m, identity_m, one_cell, product_m, two_cell_m

NAMES = ["z2", "chain-max", "chain-min", "nonthin", "z2-cocycle"]


@lru_cache(maxsize=None)
def cat(name):
    return load(name)[0]


def test_power_category():
    C = cat("chain-max").base
    P = power_category(C, 2)
    assert len(P.objects) == 9 and len(P.morphisms) == 36
    T = power_category(C, 0)
    assert len(T.objects) == 1 and len(T.morphisms) == 1
    # projections are functors and jointly determine each morphism
    for i in range(2):
        F = FinFunctor(P, C, {x: x[i] for x in P.objects}, {f: f[i] for f in P.morphisms})
        assert F.source is P
    assert len({(f[0], f[1]) for f in P.morphisms}) == len(P.morphisms)


def test_small_categories():
    assert len(thin_category([0, 1, 2], lambda a, b: a <= b).morphisms) == 6
    assert len(discrete_category(["a", "b"]).morphisms) == 2
    assert enumerate_functors(empty_category(), cat("z2").base) != []
    two = thin_category([0, 1], lambda a, b: a <= b)
    assert len(enumerate_functors(two, cat("chain-max").base)) == 6


@pytest.mark.parametrize("name", ["chain-max", "chain-min"])
def test_chains_are_valid(name):
    M = cat(name)
    assert validate_monoidal(M) == [] and M.strict and M.symmetric


def test_broken_tensor_is_reported():
    doc = monoidal_to_dict(cat("chain-max"))
    broken = copy.deepcopy(doc)
    for row in broken["tensor_mor"]:
        if row[:2] == ["0->1", "0->0"]:
            row[2] = "0->2"
    with pytest.raises(CategoryError):
        monoidal_from_dict(broken)
    assert monoidal_from_dict(doc).base.objects == cat("chain-max").base.objects


def test_broken_associator_is_reported():
    doc = monoidal_to_dict(cat("z2-cocycle"))
    # flipping one sign off the (1,1,1) corner breaks the pentagon
    doc["associator"] = [[x, y, z, f"{a.split(':')[0]}:1" if (x, y, z) == ("0", "0", "1") else a]
                         for x, y, z, a in doc["associator"]]
    with pytest.raises(CategoryError):
        monoidal_from_dict(doc)


def test_phi_one_cell_examples():
    M = cat("chain-max")
    ident = phi_eval_one_cell(M, identity_m(1))
    assert all(ident.obj[x] == x for x in ident.source.objects)
    tensor = phi_eval_one_cell(M, one_cell(2, "(1*2)"))
    for (x, y), v in tensor.obj.items():
        assert v == (M.t(x, y),)
    unit = phi_eval_one_cell(M, MOneCell(0, (W.E,)))
    assert list(unit.obj.values()) == [(M.unit,)]


CELL_WORDS = W.words_up_to_depth((1, 2), 2)


@st.composite
def cells(draw, dom, cod):
    return MOneCell(dom, tuple(draw(st.sampled_from(CELL_WORDS if dom == 2 else W.words_up_to_depth((1,), 2)))
                               for _ in range(cod)))


@given(st.sampled_from(["z2", "chain-max", "z2-cocycle", "nonthin"]), cells(2, 2), cells(2, 1))
def test_phi_is_functorial(name, f, g):
    M = cat(name)
    lhs = phi_eval_one_cell(M, compose_m(f, g))
    rhs = compose_functors(phi_eval_one_cell(M, f), phi_eval_one_cell(M, g))
    assert lhs == rhs


@pytest.mark.parametrize("name", NAMES)
def test_phi_preserves_products(name):
    M = cat(name)
    n, p1, p2 = product_m(1, 1)
    P1, P2 = phi_eval_one_cell(M, p1), phi_eval_one_cell(M, p2)
    for x in P1.source.objects:
        assert (P1.obj[x][0], P2.obj[x][0]) == x
    assert phi_eval_one_cell(M, identity_m(2)) == identity_functor(power_category(M.base, 2))


@pytest.mark.parametrize("name", ["z2", "chain-max", "chain-min", "nonthin"])
def test_strict_two_cells_are_identities(name):
    M = cat(name)
    # the cube of the 20-morphism fixture is large; its unitors suffice
    for g in ("lunit", "runit") if name == "nonthin" else ("assoc", "lunit", "runit"):
        alpha = generators_m()[g]
        t = phi_eval_two_cell(M, alpha)
        for xs, comp in t.components.items():
            assert all(c == M.id(M.base.src[c]) for c in comp)


def test_cocycle_two_cells():
    M = cat("z2-cocycle")
    gens = generators_m()
    assoc = phi_eval_two_cell(M, gens["assoc"])
    for x, y, z in product(M.base.objects, repeat=3):
        # (1*(2*3)) => ((1*2)*3) is the inverse associator
        assert assoc.components[(x, y, z)] == (M.alpha_inv(x, y, z),)
    assert assoc.components[("1", "1", "1")] == ("1:1",)
    lunit = phi_eval_two_cell(M, gens["lunit"])
    runit = phi_eval_two_cell(M, gens["runit"])
    for x in M.base.objects:
        assert lunit.components[(x,)] == (M.l(x),) and runit.components[(x,)] == (M.r(x),)


def _canon(M, w, xs):
    """normR(w) . normL(w)^-1, which must depend only on the type of w."""
    right = normalize(M, w, xs, "right")
    left = normalize(M, w, xs, "left")
    return M.compose(right, M.base.inverse(left))


@pytest.mark.parametrize("alphabet,depth", [((1,), 3), ((1, 2), 2), ((1, 2, 3), 2)])
def test_coherence_is_path_independent(alphabet, depth):
    M = cat("z2-cocycle")
    words = W.words_up_to_depth(alphabet, depth)
    for xs in product(M.base.objects, repeat=len(alphabet)):
        seen = {}
        for w in words:
            k = _canon(M, w, xs)
            assert seen.setdefault(W.type_of(w), k) == k, W.render(w)


def test_coherence_cells_compose():
    M = cat("z2-cocycle")
    a, b, c = (W.parse(t) for t in ("((1*2)*(3*e))", "(1*(2*3))", "(((1*2)*3)*e)"))
    for xs in product(M.base.objects, repeat=3):
        ab, bc, ac = (coherence_cell(M, p, q, xs) for p, q in ((a, b), (b, c), (a, c)))
        assert M.compose(bc, ab) == ac
        assert coherence_cell(M, a, a, xs) == M.id(M.base.src[ab])
    with pytest.raises(CategoryError):
        coherence_cell(M, a, W.parse("(1*2)"), ("0", "0", "0"))


def test_lax_functors():
    M = cat("chain-max")
    assert lax_violations(identity_lax(M)) == []
    top = collapse_to_top(M, "2")
    assert lax_violations(top) == []
    both = compose_lax(identity_lax(M), top)
    assert lax_violations(both) == []
    assert both.functor == top.functor
    bad = LaxMonoidalFunctor(M, M, top.functor, dict(top.phi), "0->0")
    assert lax_violations(bad)


def test_lax_functor_needs_natural_phi():
    M = cat("nonthin")
    base = identity_lax(M)
    phi = dict(base.phi)
    x = ("1", "2")
    phi[x] = "2->2:1"
    assert lax_violations(LaxMonoidalFunctor(M, M, base.functor, phi, base.phibar))


def test_self_actions_are_valid():
    for name in NAMES:
        assert action_violations(self_action(cat(name))) == []
    _, action = load("chain-max")
    assert action is not None and action.a("1", "2") == "2"


def test_two_cell_needed():
    with pytest.raises(CategoryError):
        phi_eval_two_cell(cat("z2-cocycle"), type(generators_m()["assoc"])(one_cell(1, "1"), one_cell(1, "(1*1)")))
    assert two_cell_m(one_cell(1, "1"), one_cell(1, "(1*1)")) is None
