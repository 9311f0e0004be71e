
from dblinst.collage import (close_presented_category, collage_object,
                             collage_of_model, collage_of_morphism,
                             copresheaf_to_instance, het_gen,
                             instance_to_copresheaf)
from dblinst.fincat import enumerate_natural_transformations
from dblinst.fixtures import (category_as_model, chain_category,
                              cyclic_translation_model,
                              cyclic_quotient_morphism,
                              profunctor_instance_fixture,
                              standard_instance_corpus,
                              tautological_instance, weighted_graph_instance,
                              weighted_graph_schema)
from dblinst.instance import (enumerate_instance_morphisms,
                              find_instance_isomorphism, validate_instance)


def test_collage_objects_are_model_elements():
    x = weighted_graph_schema()
    p = collage_of_model(x)
    assert sorted(p.objects) == sorted(
        [collage_object("dom", "V"), collage_object("dom", "E"),
         collage_object("cod", "Wt")])
    assert het_gen("l", "w") in p.generators


def test_collage_of_category_model_recovers_the_category():
    cat = chain_category(3)
    x = category_as_model(cat)
    closure = close_presented_category(collage_of_model(x), 6)
    assert len(closure.category.objects) == len(cat.objects)
    assert len(closure.category.morphisms) == len(cat.morphisms)


def test_weighted_graph_round_trip():
    x = weighted_graph_schema()
    closure = close_presented_category(collage_of_model(x), 6)
    h = weighted_graph_instance(3)
    cp = instance_to_copresheaf(h, closure)
    assert cp.validate() == []
    back = copresheaf_to_instance(cp, x, closure)
    assert validate_instance(back) == []
    assert find_instance_isomorphism(h, back) is not None


def test_round_trips_on_corpus():
    # word length 4 suffices: the longest reduced arrow word in any
    # corpus model has length 3
    for _, x, instances in standard_instance_corpus():
        closure = close_presented_category(collage_of_model(x), 4)
        for h in instances:
            cp = instance_to_copresheaf(h, closure)
            assert cp.validate() == []
            back = copresheaf_to_instance(cp, x, closure)
            assert find_instance_isomorphism(h, back) is not None


def test_morphism_counts_match_natural_transformations():
    x, h = profunctor_instance_fixture()
    k = tautological_instance(x)
    closure = close_presented_category(collage_of_model(x), 6)
    c1 = instance_to_copresheaf(h, closure)
    c2 = instance_to_copresheaf(k, closure)
    assert len(enumerate_instance_morphisms(h, k)) == \
        len(enumerate_natural_transformations(c1, c2))
    assert len(enumerate_instance_morphisms(k, h)) == \
        len(enumerate_natural_transformations(c2, c1))


def test_unique_weight_lift_out_of_each_edge():
    # every edge element has exactly one heteromorphism generator out of
    # it in the collage, pointing at its weight
    h = weighted_graph_instance(2)
    x = h.model
    closure = close_presented_category(collage_of_model(x), 6)
    cp = instance_to_copresheaf(h, closure)
    src = collage_object("dom", "E")
    dst = collage_object("cod", "Wt")
    hets = [m for m in closure.category.morphisms
            if closure.category.morphisms[m] == (src, dst)]
    assert len(hets) == 1


def test_cyclic_translation_collage_is_the_quotient_group():
    x = cyclic_translation_model(4, 2)
    # every group element reduces to a single heteromorphism generator
    closure = close_presented_category(collage_of_model(x), 3)
    cat = closure.category
    assert len(cat.objects) == 1
    # the nonidentity cell identifies translates: Z/4 collapses to Z/2
    assert len(cat.morphisms) == 2
    g = [m for m in cat.morphisms if not m.startswith("id:")][0]
    assert cat.compose(g, g) == cat.identity[cat.objects[0]]


def test_collage_functor_of_quotient_is_isomorphism():
    al = cyclic_quotient_morphism()
    c4 = close_presented_category(collage_of_model(al.source), 3)
    c2 = close_presented_category(collage_of_model(al.target), 3)
    fun = collage_of_morphism(al, c4, c2)
    assert fun.validate() == []
    assert sorted(set(fun.on_objects.values())) == sorted(c2.category.objects)
    assert sorted(set(fun.on_morphisms.values())) == \
        sorted(c2.category.morphisms)
    assert len(fun.on_morphisms) == len(set(fun.on_morphisms.values()))
