from itertools import product

import pytest
from hypothesis import given, strategies as st

from weights import finset as F
from weights.finset import FinFunction

from strategies import functions


def fn(images, cod):
    return F.function(images, cod)


def test_compose_examples():
    assert F.compose(F.identity(3), F.identity(3)) == F.identity(3)
    assert F.compose(fn([1, 1], 1), fn([2], 2)) == fn([2, 2], 2)
    assert F.compose(fn([1, 1, 2], 2), fn([2, 1], 2)) == fn([2, 2, 1], 2)


def test_compose_mismatch():
    with pytest.raises(ValueError):
        F.compose(fn([1], 1), fn([1, 1], 1))


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        FinFunction(2, 1, (1,))
    with pytest.raises(ValueError):
        FinFunction(1, 1, (2,))


def test_pullback_examples():
    p, p1, p2 = F.pullback(F.identity(2), F.identity(2))
    assert (p, p1, p2) == (2, F.identity(2), F.identity(2))
    c = fn([1, 1], 1)
    p, p1, p2 = F.pullback(c, c)
    assert p == 4 and p1.images == (1, 1, 2, 2) and p2.images == (1, 2, 1, 2)
    p, _, _ = F.pullback(FinFunction(0, 1, ()), F.identity(1))
    assert p == 0


def test_coproduct_examples():
    assert F.coproduct(2, 3)[0] == 5
    assert F.coproduct(0, 4)[0] == 4
    n, i1, i2 = F.coproduct(1, 1)
    assert n == 2 and i1.images == (1,) and i2.images == (2,)


def test_fiber_examples():
    f = fn([1, 1, 2], 2)
    assert F.fiber(f, 1) == (1, 2)
    assert F.fiber(f, 2) == (3,)
    assert F.fiber(fn([2, 2], 2), 1) == ()
    with pytest.raises(ValueError):
        F.fiber(f, 3)


@given(st.data())
def test_compose_associative_and_unital(data):
    f = data.draw(functions())
    g = data.draw(functions(n=f.cod))
    h = data.draw(functions(n=g.cod))
    assert F.compose(F.compose(f, g), h) == F.compose(f, F.compose(g, h))
    assert F.compose(F.identity(f.dom), f) == f == F.compose(f, F.identity(f.cod))


@given(functions())
def test_fibers_partition_domain(f):
    flat = [x for fib in F.fibers(f) for x in fib]
    assert sorted(flat) == list(range(1, f.dom + 1))
    assert all(list(fib) == sorted(fib) for fib in F.fibers(f))


@pytest.mark.parametrize("a,b,m", [(a, b, m) for a in range(3) for b in range(3) for m in range(1, 3)])
def test_pullback_universal_property(a, b, m):
    """Every commuting square over the cospan factors uniquely through the apex."""
    for f, g in product(F.all_functions(a, m), F.all_functions(b, m)):
        p, p1, p2 = F.pullback(f, g)
        assert F.compose(p1, f) == F.compose(p2, g)
        for t in range(3):
            for q1, q2 in product(F.all_functions(t, a), F.all_functions(t, b)):
                if F.compose(q1, f) != F.compose(q2, g):
                    continue
                mediators = [h for h in F.all_functions(t, p)
                             if F.compose(h, p1) == q1 and F.compose(h, p2) == q2]
                assert len(mediators) == 1


def test_monotone_and_bijections():
    assert F.is_monotone(fn([1, 1, 2], 2)) and not F.is_monotone(fn([2, 1], 2))
    assert len(list(F.bijections(3))) == 6
    f = fn([2, 3, 1], 3)
    assert F.compose(f, F.inverse(f)) == F.identity(3)
