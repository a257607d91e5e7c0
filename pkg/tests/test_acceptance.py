"""The acceptance suite: one PASS/FAIL line per criterion, printed at the end of the run."""
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import HealthCheck, settings

import test_fcat
import test_fincat
import test_operad
import test_span
import test_twospan
from conftest import load
from test_limits import VERTICES, nat_transformations
from test_span import _count_spans_of_functions
from weights import words as W
from weights.fincat import (compose_functors, enumerate_functors, functor_violations, identity_functor,
                            identity_lax, self_action)
from weights.limits import (WCone, check_cone_laws, check_naturality_truncated, comparison_psi, cone_along,
                            cone_morphisms, enumerate_cones, oracle_comparison, point_cone, psi_on_morphism,
                            weighted_limit)
from weights.operad import Operad
from weights.oracles import collapse_to_top, forgetful, induced_on_monoids, oracle
from weights.span import enumerate_spans
from weights.theory import (MOneCell, cell_to_monotone, hom_cells, hom_monoid, image_span, projection_m,
                            two_cell_m, weight, weight_object, weight_on_morphism, weight_on_object)
from weights.twospan import BIMONOID

RESULTS: dict[int, tuple[bool, str]] = {}
TITLES = {
    1: "monoid weight vs oracle on z2, chain-max, chain-min, nonthin",
    2: "comonoid, commutative monoid and bimonoid weights vs oracles on chain-max",
    3: "action weight vs oracle, chain-max acting on itself",
    4: "psi is bijective on cones and cone morphisms",
    5: "cone laws agree with depth-2 naturality, seeded defect fails both",
    6: "M has unique 2-cells by type, W(1] hom counts, W(2] ~ W(1]^2",
    7: "span hom counts [bot bot], [bot top], [top top] for n, m <= 3",
    8: "algebraic-law property suites, 200 cases each",
    9: "lax functor transport to categories of monoids",
}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"[{'PASS' if ok else 'FAIL'}] {n}. {TITLES[n]}: {detail}")


def _limit(name, tag):
    C, action = load(name)
    if tag == "action" and action is None:
        action = self_action(C)
    L = weighted_limit(C, tag, action)
    ok, why = oracle_comparison(L, oracle(tag, C, action))
    return L, ok, why


def _vs_oracle(n, cases):
    notes, good = [], True
    for name, tag, expected in cases:
        L, ok, why = _limit(name, tag)
        got = (len(L.objects), len(L.homs))
        fine = ok and (expected is None or got[:len(expected)] == expected)
        good &= fine
        notes.append(f"{name}/{tag} {got[0]}/{got[1]}" + ("" if fine else f" ({why or 'expected ' + str(expected)})"))
    record(n, good, "; ".join(notes))
    assert good


def test_1_monoid_weight():
    _vs_oracle(1, [("z2", "monoid", (1, 1)), ("chain-max", "monoid", (3, 6)),
                   ("chain-min", "monoid", (1, 1)), ("nonthin", "monoid", None)])


def test_2_variant_weights():
    _vs_oracle(2, [("chain-max", "comonoid", (1,)), ("chain-max", "cmonoid", (3,)),
                   ("chain-max", "bimonoid", (1,))])


def test_3_action_weight():
    _vs_oracle(3, [("chain-max", "action", (6,))])


def test_4_psi():
    checked_cones = checked_pairs = 0
    bad = []
    for name in ["z2", "chain-max", "chain-min", "nonthin", "z2-cocycle"]:
        C, _ = load(name)
        L = weighted_limit(C, "monoid")
        for vname, X in VERTICES.items():
            cones = enumerate_cones(C, X)
            images = [comparison_psi(C, c, L) for c in cones]
            functors = enumerate_functors(X, L.category)
            if not (len(set(images)) == len(cones) == len(functors) and set(images) == set(functors)):
                bad.append(f"{name}/{vname} objects")
                continue
            if any(cone_along(L, Fa) != a for a, Fa in zip(cones, images)):
                bad.append(f"{name}/{vname} inverse")
            for (a, Fa), (b, Fb) in product(zip(cones, images), repeat=2):
                got = {tuple(psi_on_morphism(t, Fa, Fb)[x] for x in X.objects) for t in cone_morphisms(C, a, b)}
                want = {tuple(t[x] for x in X.objects) for t in nat_transformations(Fa, Fb)}
                checked_pairs += 1
                if got != want or len(got) != len(cone_morphisms(C, a, b)):
                    bad.append(f"{name}/{vname} morphisms")
                    break
            checked_cones += len(cones)
    record(4, not bad, f"{checked_cones} cones, {checked_pairs} cone pairs" + (f"; broken: {bad}" if bad else ""))
    assert not bad


def test_5_cone_laws_vs_naturality():
    total, disagree = 0, []
    for name in ["chain-max", "nonthin"]:
        C, _ = load(name)
        for M in C.base.objects:
            for mul, unit in product(C.base.hom(C.t(M, M), M), C.base.hom(C.unit, M)):
                cone = point_cone(C, M, mul, unit)
                total += 1
                if check_cone_laws(C, cone) != check_naturality_truncated(C, cone, 2):
                    disagree.append((name, M, mul, unit))
    N, _ = load("nonthin")
    good = point_cone(N, "2", "2->2:0", "0->2:0")
    (x,) = good.vertex.objects
    seeded = WCone(good.vertex, good.f, {x: "2->2:1"}, dict(good.eta))
    seeded_ok = not check_cone_laws(N, seeded) and not check_naturality_truncated(N, seeded, 2)
    ok = not disagree and seeded_ok
    record(5, ok, f"{total} candidates agree" if not disagree else f"disagreements {disagree}"
           + ("; seeded defect fails both" if seeded_ok else "; seeded defect not caught"))
    assert ok


def test_6_theory_structure():
    problems = []
    # 2-cells: existence by type matches the independent image in [top lo], exhaustively
    for alphabet in ((1,), (1, 2)):
        seen = {}
        for w in W.words_up_to_depth(alphabet, 3):
            key = image_span(MOneCell(len(alphabet), (w,)), Operad.LO)
            if seen.setdefault(key, W.type_of(w)) != W.type_of(w):
                problems.append(f"image clash {W.render(w)}")
    small = W.words_up_to_depth((1, 2), 2)
    for a, b in product(small, repeat=2):
        exists = two_cell_m(MOneCell(2, (a,)), MOneCell(2, (b,))) is not None
        same = image_span(MOneCell(2, (a,)), Operad.LO) == image_span(MOneCell(2, (b,)), Operad.LO)
        if exists != same:
            problems.append(f"two-cell verdict {W.render(a)} {W.render(b)}")
    # hom counts, both through the closed form and through the 2-span cells
    words3 = W.words_up_to_depth((1,), 3)
    rep = {}
    for w in words3:
        rep.setdefault(W.occurrences(w), w)
    for n, m in product(range(4), repeat=2):
        w, u = weight_object(rep[n]), weight_object(rep[m])
        expected = comb(n + m - 1, n) if m else int(n == 0)
        cells = hom_cells(weight("monoid"), w, u, 3)
        if not (len(hom_monoid(w, u)) == len(cells) == expected):
            problems.append(f"hom count {n},{m}")
        if sorted(cell_to_monotone(c, w, u).maps for c in cells) != sorted(h.maps for h in hom_monoid(w, u)):
            problems.append(f"hom cells {n},{m}")
    # W(2] -> W(1] x W(1]: objects, then morphisms between representatives
    p1, p2 = projection_m(2, 1), projection_m(2, 2)
    words2 = W.words_up_to_depth((1,), 2)
    pairs = list(product(words3, words2)) + list(product(words2, words3))
    split = {(weight_on_object(p1, weight_object(a, b)), weight_on_object(p2, weight_object(a, b)))
             for a, b in pairs}
    if split != {(weight_object(a), weight_object(b)) for a, b in pairs}:
        problems.append("product comparison on objects")
    for (a, b), (c, d) in product(product(range(4), repeat=2), repeat=2):
        v, v2 = weight_object(rep[a], rep[b]), weight_object(rep[c], rep[d])
        images = {tuple(weight_on_morphism(p, h) for p in (p1, p2)) for h in hom_monoid(v, v2)}
        want = set(product(hom_monoid(weight_object(rep[a]), weight_object(rep[c])),
                           hom_monoid(weight_object(rep[b]), weight_object(rep[d]))))
        if images != want or len(images) != len(hom_monoid(v, v2)):
            problems.append(f"product comparison on homs {(a, b, c, d)}")
    record(6, not problems, f"{len(words3)} one-letter and all two-letter words to depth 3, "
           f"16 hom counts, {len(pairs)} object pairs" + (f"; {problems[:5]}" if problems else ""))
    assert not problems


def test_7_span_hom_counts():
    bad = []
    for n, m in product(range(4), repeat=2):
        if len(enumerate_spans(Operad.BOT, Operad.BOT, n, m, 3)) != (factorial(n) if n == m else 0):
            bad.append(f"[bot bot] {n},{m}")
        if len(enumerate_spans(Operad.BOT, Operad.TOP, n, m, 3)) != m ** n:
            bad.append(f"[bot top] {n},{m}")
        if len(enumerate_spans(Operad.TOP, Operad.TOP, n, m, 3)) != _count_spans_of_functions(n, m, 3):
            bad.append(f"[top top] {n},{m}")
    record(7, not bad, "n, m <= 3, [top top] apexes <= 3" + (f"; {bad}" if bad else ""))
    assert not bad


ACCEPTANCE_SETTINGS = settings(max_examples=200, deadline=None, database=None, derandomize=True,
                               suppress_health_check=list(HealthCheck))


def _suites():
    yield "operad associativity", test_operad.test_multiply_associative, [dict(operad=o) for o in test_operad.OPS]
    yield "operad unit", test_operad.test_multiply_unital, [dict(operad=o) for o in test_operad.OPS]
    yield "operad equivariance", test_operad.test_equivariance, [dict(operad=o) for o in test_operad.OPS]
    yield "F_A category laws", test_fcat.test_category_laws, [dict(operad=o) for o in test_operad.OPS]
    yield "span category laws", test_span.test_span_category_laws, [dict(a=a, b=b) for a, b in test_span.PAIRS]
    yield "2-span interchange", test_twospan.test_interchange, [dict(array=a) for a in test_twospan.ARRAYS]
    yield "Phi functoriality", test_fincat.test_phi_is_functorial, [{}]


def test_8_property_suites():
    failures = []
    runs = 0
    for label, fn, cases in _suites():
        check = ACCEPTANCE_SETTINGS(fn)
        for kwargs in cases:
            runs += 1
            try:
                check(**kwargs)
            except Exception as exc:  # noqa: BLE001 - every failure is reported
                which = ", ".join(str(v) for v in kwargs.values())
                failures.append(f"{label} [{which}]: {type(exc).__name__}")
    # random pairs rarely hit the bimonoid obstruction, so also search the identity endo-cells exhaustively
    for array in test_twospan.ARRAYS:
        if test_twospan.identity_interchange_failures(array):
            failures.append(f"interchange on identity endo-cells [{array}]: counterexample")
    detail = f"{runs} suites x 200 cases, exhaustive interchange on identity endo-cells"
    known = bool(failures) and all(str(BIMONOID) in f for f in failures)
    if failures:
        detail += "; failing: " + "; ".join(failures)
        if known:
            detail += " (vertical endo-cells of an identity do not commute, so no interchange law can hold)"
    record(8, not failures, detail)
    if known:
        pytest.xfail("2-span interchange fails for the bimonoid array")
    assert not failures


def test_9_lax_transport():
    C, _ = load("chain-max")
    mons = oracle("monoid", C)
    U = forgetful(mons, C.base)
    problems = []
    for label, L in [("identity", identity_lax(C)), ("collapse", collapse_to_top(C, "2"))]:
        F = induced_on_monoids(L, mons, mons)
        if functor_violations(F):
            problems.append(f"{label} not a functor")
        if compose_functors(F, U) != compose_functors(U, L.functor):
            problems.append(f"{label} does not commute with forgetful")
    if induced_on_monoids(identity_lax(C), mons, mons) != identity_functor(mons):
        problems.append("identity is not sent to the identity")
    record(9, not problems, "identity and collapse-to-top on chain-max" + (f"; {problems}" if problems else ""))
    assert not problems
