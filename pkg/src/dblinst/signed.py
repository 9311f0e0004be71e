"""Signed graphs and signed categories as models of the sign theory.

A model of the sign theory is a category together with a sign (+1/-1)
on each arrow, multiplicative under composition: the even arrows sit in
the apex of the loose identity, the odd arrows in the apex of the
nonidentity loose arrow, and the laxators are composition.

Free signed categories on a graph are finite only when the graph is
acyclic; graphs with cycles can still produce finite signed categories
through explicit relations (for the fixtures: involutive loop edges).
"""

from .errors import FreeCategoryNotFinite, HomSetNotFinite
from .finset import FiniteSet, Span
from .model import SpanModel
from .theories import signed_theory
from .words import ClosedWordCategory


class SignedGraph:
    def __init__(self, vertices, edges):
        """``edges`` is a list of (name, src, dst, sign) with sign +1/-1."""
        self.vertices = list(vertices)
        self.edges = list(edges)
        for name, src, dst, sign in self.edges:
            assert src in self.vertices and dst in self.vertices
            assert sign in (+1, -1)

    def loops(self):
        return [(n, s, d, sg) for n, s, d, sg in self.edges if s == d]


def _model_from_closure(graph, closure):
    """Package a closed signed word category as a model."""
    theory = signed_theory()
    cat = closure.category
    sign_of_edge = {name: sign for name, _, _, sign in graph.edges}

    def sign_of(name):
        if name.startswith("id:"):
            return +1
        out = +1
        for g in name.split(";"):
            out *= sign_of_edge[g]
        return out

    vertices = FiniteSet(graph.vertices)
    even = sorted(f for f in cat.morphisms if sign_of(f) == +1)
    odd = sorted(f for f in cat.morphisms if sign_of(f) == -1)
    even_set, odd_set = FiniteSet(even), FiniteSet(odd)
    spans = {
        "id:*": Span(vertices, vertices, even_set,
                     {f: cat.src(f) for f in even},
                     {f: cat.dst(f) for f in even}),
        "sigma": Span(vertices, vertices, odd_set,
                      {f: cat.src(f) for f in odd},
                      {f: cat.dst(f) for f in odd}),
    }
    parity = {+1: "id:*", -1: "sigma"}
    laxators = {}
    for s1 in (+1, -1):
        for s2 in (+1, -1):
            m, n = parity[s1], parity[s2]
            laxators[(m, n)] = {
                (f, g): cat.comp[(f, g)]
                for f in spans[m].apex for g in spans[n].apex
                if cat.dst(f) == cat.src(g)}
    unitors = {"*": {v: cat.identity[v] for v in vertices}}
    on_cells = {theory.cell_id_loose["id:*"]: {f: f for f in even},
                theory.cell_id_loose["sigma"]: {f: f for f in odd}}
    model = SpanModel(theory, {"*": vertices}, {"id:*": {v: v for v in vertices}},
                      spans, on_cells, laxators, unitors)
    model.arrow_category = cat
    model.arrow_sign = {f: sign_of(f) for f in cat.morphisms}
    model.word_closure = closure
    return model


def quotient_signed_category(graph, relations, bound):
    """Signed category presented by a graph and sign-preserving relations.

    Relations are (src, dst, word1, word2) over edge names; each side
    must have the same sign parity (asserted), so the sign descends to
    the quotient.
    """
    sign_of_edge = {name: sign for name, _, _, sign in graph.edges}
    for _, _, w1, w2 in relations:
        p1 = 1
        for g in w1:
            p1 *= sign_of_edge[g]
        p2 = 1
        for g in w2:
            p2 *= sign_of_edge[g]
        assert p1 == p2, "relation does not preserve the sign"
    gens = {name: (src, dst) for name, src, dst, _ in graph.edges}
    try:
        closure = ClosedWordCategory(graph.vertices, gens, relations, bound)
    except HomSetNotFinite as e:
        raise FreeCategoryNotFinite(str(e))
    return _model_from_closure(graph, closure)


def free_signed_category(graph, max_path_len):
    """The free signed category on a graph, as a model of the sign theory.

    Errors with FreeCategoryNotFinite when paths of length
    ``max_path_len`` exist (the graph has a long path or a cycle).
    """
    return quotient_signed_category(graph, [], max_path_len)


def involutive_loop_category(graph, bound):
    """Quotient of the free signed category making every loop edge an
    involution; finite whenever the graph minus its loops is acyclic.

    This is the finite stand-in for graphs with feedback: each loop
    survives as a nontrivial endo-arrow squaring to the identity, so
    feedback loops remain visible to model-morphism search.
    """
    relations = [(v, v, (name, name), ())
                 for name, v, _, _ in graph.loops()]
    return quotient_signed_category(graph, relations, bound)


def walking_feedback_loop(sign):
    """The walking feedback loop of length 1 with the given sign.

    One object with a single nonidentity endo-arrow of the requested
    sign, squaring to the identity (the smallest signed category
    containing a loop of that sign).
    """
    graph = SignedGraph(["*"], [("loop", "*", "*", sign)])
    return involutive_loop_category(graph, 4)


def model_morphism_from_graph_map(source_model, target_model, vertex_map,
                                  edge_map):
    """The morphism of free/quotient signed categories induced by a
    graph map (vertices to vertices, edges to edge words)."""
    from .model import ModelMorphism
    src_cat = source_model.arrow_category
    tgt = target_model.word_closure

    def image(name):
        if name.startswith("id:"):
            return tgt.category.identity[vertex_map[name[3:]]]
        word = []
        start = None
        for g in name.split(";"):
            if start is None:
                start = vertex_map[source_model.word_closure.generators[g][0]]
            word.extend(edge_map[g])
        return tgt.word_class(start, tuple(word))

    tables = {"id:*": {}, "sigma": {}}
    for f in src_cat.morphisms:
        parity = "id:*" if source_model.arrow_sign[f] == +1 else "sigma"
        tables[parity][f] = image(f)
    return ModelMorphism(source_model, target_model,
                         {"*": dict(vertex_map)}, tables)
