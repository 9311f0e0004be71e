import pytest
from hypothesis import given, strategies as st

from dblinst.finset import (FiniteSet, Span, compose_tables, identity_table,
                            inverse_table, is_bijection, is_function,
                            pair_label, product_set, pullback_pairs)

labels = st.lists(st.text(alphabet="abcxyz01", min_size=1, max_size=3),
                  min_size=1, max_size=5, unique=True)


def test_finite_set_orders_labels():
    s = FiniteSet(["b", "a", "c"])
    assert s.labels == ("a", "b", "c")
    assert "a" in s and "d" not in s
    assert len(s) == 3


def test_duplicate_labels_rejected():
    with pytest.raises(AssertionError):
        FiniteSet(["a", "a"])


@given(labels, labels)
def test_pair_label_injective(xs, ys):
    pairs = [(x, y) for x in xs for y in ys]
    assert len({pair_label(x, y) for x, y in pairs}) == len(pairs)


@given(labels)
def test_identity_table_is_identity(xs):
    s = FiniteSet(xs)
    ident = identity_table(s)
    assert is_bijection(ident, s, s)
    assert compose_tables(ident, ident) == ident


def _random_table(draw, src, dst):
    return {x: draw(st.sampled_from(dst.labels)) for x in src}


@given(st.data(), labels, labels, labels)
def test_compose_tables_associative(data, xs, ys, zs):
    a, b, c = FiniteSet(xs), FiniteSet(ys), FiniteSet(zs)
    f = _random_table(data.draw, a, b)
    g = _random_table(data.draw, b, c)
    h = _random_table(data.draw, c, a)
    assert compose_tables(compose_tables(f, g), h) == \
        compose_tables(f, compose_tables(g, h))


def test_inverse_table_round_trip():
    s = FiniteSet(["a", "b"])
    t = FiniteSet(["x", "y"])
    f = {"a": "y", "b": "x"}
    assert compose_tables(f, inverse_table(f)) == identity_table(s)
    with pytest.raises(AssertionError):
        inverse_table({"a": "x", "b": "x"})


def test_is_function_totality():
    s, t = FiniteSet(["a", "b"]), FiniteSet(["x"])
    assert is_function({"a": "x", "b": "x"}, s, t)
    assert not is_function({"a": "x"}, s, t)
    assert not is_function({"a": "x", "b": "z"}, s, t)


def test_pullback_pairs_matches_brute_force():
    mid = FiniteSet(["m0", "m1"])
    left = Span(FiniteSet(["s"]), mid, FiniteSet(["p", "q"]),
                {"p": "s", "q": "s"}, {"p": "m0", "q": "m1"})
    right = Span(mid, FiniteSet(["t"]), FiniteSet(["u", "v"]),
                 {"u": "m0", "v": "m0"}, {"u": "t", "v": "t"})
    pairs = pullback_pairs(left, right)
    brute = [(xi, zeta) for xi in left.apex for zeta in right.apex
             if left.right[xi] == right.left[zeta]]
    assert pairs == brute == [("p", "u"), ("p", "v")]


def test_product_set_cardinality():
    a, b = FiniteSet(["1", "2"]), FiniteSet(["x", "y", "z"])
    assert len(product_set(a, b)) == 6
