import pytest

from dblinst.errors import HomSetNotFinite, IllFormedRelation
from dblinst.words import ClosedWordCategory


def test_free_category_on_a_chain():
    gens = {"f": ("a", "b"), "g": ("b", "c")}
    cl = ClosedWordCategory(["a", "b", "c"], gens, [], 6)
    cat = cl.category
    assert len(cat.morphisms) == 6  # three identities, f, g, f;g
    assert cl.word_class("a", ("f", "g")) == "f;g"
    assert cat.compose("f", "g") == "f;g"
    assert cat.validate() == []


def test_cyclic_group_closure():
    gens = {"r": ("*", "*")}
    cl = ClosedWordCategory(["*"], gens, [("*", "*", ("r", "r", "r"), ())], 8)
    cat = cl.category
    assert len(cat.morphisms) == 3
    r2 = cl.word_class("*", ("r", "r"))
    assert cat.compose("r", r2) == cat.identity["*"]


def test_idempotent_relation():
    gens = {"e": ("*", "*")}
    cl = ClosedWordCategory(["*"], gens, [("*", "*", ("e", "e"), ("e",))], 8)
    assert len(cl.category.morphisms) == 2
    assert cl.category.compose("e", "e") == "e"


def test_commuting_square_identifies_paths():
    gens = {"f": ("a", "b"), "g": ("a", "c"), "h": ("b", "d"),
            "k": ("c", "d")}
    rel = [("a", "d", ("f", "h"), ("g", "k"))]
    cl = ClosedWordCategory(["a", "b", "c", "d"], gens, rel, 8)
    assert cl.word_class("a", ("f", "h")) == cl.word_class("a", ("g", "k"))
    # 4 identities + 4 generators + 1 shared diagonal
    assert len(cl.category.morphisms) == 9


def test_free_loop_is_not_finite():
    with pytest.raises(HomSetNotFinite):
        ClosedWordCategory(["*"], {"r": ("*", "*")}, [], 5)


def test_ill_formed_relation_rejected():
    gens = {"f": ("a", "b")}
    with pytest.raises(IllFormedRelation):
        ClosedWordCategory(["a", "b"], gens,
                           [("a", "b", ("f", "f"), ("f",))], 5)
    with pytest.raises(IllFormedRelation):
        ClosedWordCategory(["a", "b"], gens, [("a", "a", ("f",), ())], 5)


def test_representatives_are_shortlex_deterministic():
    gens = {"f": ("a", "a"), "g": ("a", "a")}
    rel = [("a", "a", ("f", "f"), ()), ("a", "a", ("g",), ("f",))]
    cl = ClosedWordCategory(["a"], gens, rel, 8)
    assert sorted(cl.category.morphisms) == ["f", "id:a"]
