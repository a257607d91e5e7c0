import pytest
from hypothesis import given, strategies as st

from weights import finset
from weights.fcat import (FAError, as_obj, compose_colored_fa, compose_fa, enumerate_fa, fa_morphism,
                          identity_fa, map_fa, parse_fa, pi_a, render_fa, tensor_fa)
from weights.operad import Operad, make_op, parse_op, unit

from strategies import fa_morphisms

LO, BTR, TOP, BOT = Operad.LO, Operad.BTR, Operad.TOP, Operad.BOT


def test_identity_examples():
    i = identity_fa(LO, 2)
    assert [a.payload for a in i.labels] == [(1,), (2,)]
    assert identity_fa(TOP, 0).f == finset.identity(0)
    assert identity_fa(BTR, 1).labels[0] == unit(BTR, 1)


def test_compose_examples():
    x = fa_morphism(LO, 2, 1, [1, 1], [parse_op(LO, (1, 2), "2 1")])
    y = fa_morphism(LO, 1, 1, [1], [parse_op(LO, (1,), "1")])
    assert compose_fa(x, y).labels[0].payload == (2, 1)
    assert compose_fa(x, identity_fa(LO, 1)) == x
    with pytest.raises(FAError):
        compose_fa(x, x)


def test_tensor_examples():
    assert tensor_fa(identity_fa(LO, 1), identity_fa(LO, 1)) == identity_fa(LO, 2)
    x = fa_morphism(LO, 2, 1, [1, 1], [parse_op(LO, (1, 2), "2 1")])
    assert tensor_fa(x, identity_fa(LO, 0)) == x == tensor_fa(identity_fa(LO, 0), x)
    got = tensor_fa(identity_fa(LO, 1), identity_fa(LO, 1))
    assert [a.payload for a in got.labels] == [(1,), (2,)]


def test_labels_must_match_fibres():
    with pytest.raises(FAError):
        fa_morphism(LO, 2, 2, [1, 1], [parse_op(LO, (1,), "1"), parse_op(LO, (2,), "2")])


def test_top_labels_carry_nothing():
    """F_top is F: pi is a bijection on every hom-set."""
    for n in range(4):
        for m in range(4):
            homs = list(enumerate_fa(TOP, n, m))
            assert len(homs) == m ** n
            assert len({pi_a(x) for x in homs}) == len(homs)


def test_text_roundtrip():
    x = fa_morphism(LO, 3, 2, [2, 1, 2], [parse_op(LO, (2,), "2"), parse_op(LO, (1, 3), "3 1")])
    assert render_fa(x) == "3->2: 2 1 2 | 2 ; 3 1"
    assert parse_fa(LO, render_fa(x)) == x
    assert parse_fa(TOP, "2->1: 1 1").labels == (make_op(TOP, (1, 2)),)


def test_colored_composition():
    T2, A = Operad.TOP2, Operad.ACT
    # in F_top2 composition is composition of the underlying functions
    x = fa_morphism(T2, (1, 1), (0, 1), [1, 1], [make_op(T2, (1, 2), None, (0, 1), 1)])
    i = identity_fa(T2, (0, 1))
    assert compose_colored_fa(x, i) == x == compose_colored_fa(identity_fa(T2, (1, 1)), x)
    # act: (1,1) -> (0,1) followed by (1 > x) gives a nested action
    from weights.words import parse
    a = fa_morphism(A, (1, 1), (0, 1), [1, 1], [make_op(A, (1, 2), parse("(1>2)"), (0, 1), 1)])
    pre = tensor_fa(fa_morphism(A, (2, 0), (1, 0), [1, 1], [make_op(A, (1, 2), parse("(1*2)"), (0, 0), 0)]),
                    identity_fa(A, (0, 1)))
    got = compose_colored_fa(pre, a)
    assert got.labels[0].payload == parse("((1*2)>3)")
    with pytest.raises(FAError):
        compose_colored_fa(identity_fa(LO, 1), identity_fa(LO, 1))


@pytest.mark.parametrize("operad", [LO, BTR, TOP, BOT])
@given(data=st.data())
def test_category_laws(operad, data):
    x = data.draw(fa_morphisms(operad))
    y = data.draw(fa_morphisms(operad, n=x.f.cod))
    z = data.draw(fa_morphisms(operad, n=y.f.cod))
    assert compose_fa(compose_fa(x, y), z) == compose_fa(x, compose_fa(y, z))
    assert compose_fa(identity_fa(operad, x.dom), x) == x == compose_fa(x, identity_fa(operad, x.cod))


@pytest.mark.parametrize("operad", [LO, BTR, TOP])
@given(data=st.data())
def test_pi_strict_monoidal(operad, data):
    x = data.draw(fa_morphisms(operad, max_size=3))
    y = data.draw(fa_morphisms(operad, n=x.f.cod, max_size=3))
    z = data.draw(fa_morphisms(operad, max_size=3))
    assert pi_a(compose_fa(x, y)) == finset.compose(pi_a(x), pi_a(y))
    assert pi_a(identity_fa(operad, x.dom)) == finset.identity(x.f.dom)
    t = pi_a(tensor_fa(x, z))
    assert t.images == x.f.images + tuple(v + x.f.cod for v in z.f.images)
    # the tensor is a bifunctor
    w = data.draw(fa_morphisms(operad, n=z.f.cod, max_size=3))
    assert tensor_fa(compose_fa(x, y), compose_fa(z, w)) == compose_fa(tensor_fa(x, z), tensor_fa(y, w))


@given(data=st.data())
def test_change_of_operad_is_functorial(data):
    x = data.draw(fa_morphisms(BTR))
    y = data.draw(fa_morphisms(BTR, n=x.f.cod))
    assert map_fa(LO, compose_fa(x, y)) == compose_fa(map_fa(LO, x), map_fa(LO, y))
    assert map_fa(TOP, map_fa(LO, x)) == map_fa(TOP, x)


def test_as_obj():
    assert as_obj(3) == (3,)
    assert as_obj((1, 2), Operad.ACT) == (1, 2)
