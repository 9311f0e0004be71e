"""Finite sets, functions-as-tables, and spans of sets.

Everything downstream works with explicitly labelled finite sets.  A
function is stored as a dict from source labels to target labels; a span
is a pair of such tables out of an apex set.  Element order is always
label order, so constructions that pick representatives are
deterministic.
"""


def pair_label(a, b):
    """Canonical label for an element of a materialized pullback/product."""
    return "({},{})".format(a, b)


class FiniteSet:
    """An ordered finite set of distinct string labels."""

    def __init__(self, labels):
        labels = [str(x) for x in labels]
        assert len(set(labels)) == len(labels), "duplicate labels"
        self.labels = tuple(sorted(labels))

    def __contains__(self, x):
        return x in set(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return "FiniteSet({})".format(list(self.labels))


def identity_table(s):
    """Identity function on a FiniteSet, as a table."""
    return {x: x for x in s}


def compose_tables(f, g):
    """Composite table x |-> g[f[x]] (apply f first)."""
    return {x: g[fx] for x, fx in f.items()}


def is_function(table, src, dst):
    """Check that ``table`` is a total function src -> dst."""
    if set(table.keys()) != set(src.labels):
        return False
    return all(v in dst for v in table.values())


def is_bijection(table, src, dst):
    return (is_function(table, src, dst)
            and len(set(table.values())) == len(src) == len(dst))


def inverse_table(table):
    """Invert a bijective table."""
    inv = {v: k for k, v in table.items()}
    assert len(inv) == len(table), "table is not injective"
    return inv


class Span:
    """A span of finite sets: src_set <- apex -> dst_set."""

    def __init__(self, src_set, dst_set, apex, left, right):
        assert isinstance(src_set, FiniteSet)
        assert isinstance(dst_set, FiniteSet)
        assert isinstance(apex, FiniteSet)
        assert is_function(left, apex, src_set), "left leg not total"
        assert is_function(right, apex, dst_set), "right leg not total"
        self.src_set = src_set
        self.dst_set = dst_set
        self.apex = apex
        self.left = dict(left)
        self.right = dict(right)

    def __eq__(self, other):
        return (isinstance(other, Span)
                and self.src_set == other.src_set
                and self.dst_set == other.dst_set
                and self.apex == other.apex
                and self.left == other.left
                and self.right == other.right)

    def __repr__(self):
        return "Span(apex={})".format(list(self.apex.labels))


def pullback_pairs(left_span, right_span):
    """Matching pairs of apex elements for a composable pair of spans.

    Returns the list of (xi, zeta) with right leg of ``left_span`` at xi
    equal to the left leg of ``right_span`` at zeta, in lexicographic
    order.  This is the materialized domain of a laxator.
    """
    assert left_span.dst_set == right_span.src_set
    return [(xi, zeta)
            for xi in left_span.apex
            for zeta in right_span.apex
            if left_span.right[xi] == right_span.left[zeta]]


def product_set(a, b):
    """Cartesian product of two finite sets with canonical pair labels."""
    return FiniteSet([pair_label(x, y) for x in a for y in b])
