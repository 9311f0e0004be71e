"""Data migration along model morphisms and comprehensive factorization.

Migration routes instances through the closed collages: restriction is
copresheaf precomposition, and the two Kan extensions are computed
pointwise over comma categories (colimits as connected components via
union-find, limits as compatible families).

Comprehensive factorization splits a model morphism into an initial
morphism followed by a discrete opfibration.  The discrete-opfibration
reflection is evaluated from a presented copresheaf: one generator per
upstairs element, with relations identifying the pushforwards of
upstairs tight arrows and heteromorphisms.
"""

import itertools

from .collage import (close_presented_category, collage_object,
                      collage_of_model, collage_of_morphism, copresheaf_to_instance,
                      het_gen, instance_to_copresheaf, tight_gen)
from .elements import elements
from .errors import HomSetTooLarge, MiddleNotCartesian
from .fincat import Copresheaf
from .finset import FiniteSet, pair_label
from .model import ModelMorphism, compose_model_morphisms

DEFAULT_MAX_HOM_CARD = 10000


# ---------------------------------------------------------------------------
# pointwise Kan extensions of copresheaves along a functor
# ---------------------------------------------------------------------------

def _uf_find(parent, a):
    root = a
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        parent[a], a = root, parent[a]
    return root


def _uf_union(parent, a, b):
    ra, rb = _uf_find(parent, a), _uf_find(parent, b)
    if ra != rb:
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra


def kan_extend_left(fun, cp, max_hom_card=DEFAULT_MAX_HOM_CARD):
    """Pointwise left Kan extension of a copresheaf along a functor.

    The value at an object d is the colimit over the comma category of
    arrows into d from the image: triples (c, g: Fc -> d, value in cp(c))
    identified whenever an arrow of the source category carries one
    triple to another.  Computed as connected components via union-find.
    """
    c_cat, d_cat = fun.source, fun.target
    parents = {}
    for d in d_cat.objects:
        triples = [(c, g, v) for c in c_cat.objects
                   for g, (gs, gd) in d_cat.morphisms.items()
                   if gs == fun.on_objects[c] and gd == d
                   for v in cp.on_objects[c]]
        if len(triples) > max_hom_card:
            raise HomSetTooLarge(
                "left extension at {} has {} raw elements".format(d, len(triples)))
        parent = {tr: tr for tr in triples}
        for u, (us, ud) in c_cat.morphisms.items():
            fu = fun.on_morphisms[u]
            for g2, (g2s, g2d) in d_cat.morphisms.items():
                if g2s != fun.on_objects[ud] or g2d != d:
                    continue
                g1 = d_cat.comp[(fu, g2)]
                for v in cp.on_objects[us]:
                    _uf_union(parent, (us, g1, v),
                              (ud, g2, cp.on_morphisms[u][v]))
        parents[d] = parent

    def label(d, tr):
        root = _uf_find(parents[d], tr)
        return "[{}|{}|{}]".format(*root)

    on_objects = {d: FiniteSet(sorted({label(d, tr) for tr in parents[d]}))
                  for d in d_cat.objects}
    rep_of = {d: {} for d in d_cat.objects}
    for d, parent in parents.items():
        for tr in parent:
            rep_of[d].setdefault(label(d, tr), tr)
    on_morphisms = {}
    for h, (hs, hd) in d_cat.morphisms.items():
        table = {}
        for lab in on_objects[hs]:
            c, g, v = rep_of[hs][lab]
            table[lab] = label(hd, (c, d_cat.comp[(g, h)], v))
        on_morphisms[h] = table
    out = Copresheaf(d_cat, on_objects, on_morphisms)
    assert not out.validate()
    return out


def kan_extend_right(fun, cp, max_hom_card=DEFAULT_MAX_HOM_CARD):
    """Pointwise right Kan extension of a copresheaf along a functor.

    The value at d is the set of compatible families: a choice of value
    in cp(c) for every arrow g: d -> Fc, commuting with every arrow of
    the source category.  Computed by backtracking over the slots.
    """
    c_cat, d_cat = fun.source, fun.target
    families = {}
    slot_lists = {}
    for d in d_cat.objects:
        slots = sorted((c, g) for c in c_cat.objects
                       for g, (gs, gd) in d_cat.morphisms.items()
                       if gs == d and gd == fun.on_objects[c])
        slot_lists[d] = slots
        index = {s: i for i, s in enumerate(slots)}
        # constraints: value at (us, g) pushed along u equals value at
        # (ud, g . Fu)
        constraints = []
        for u, (us, ud) in c_cat.morphisms.items():
            fu = fun.on_morphisms[u]
            for g, (gs, gd) in d_cat.morphisms.items():
                if gs != d or gd != fun.on_objects[us]:
                    continue
                constraints.append((index[(us, g)], u,
                                    index[(ud, d_cat.comp[(g, fu)])]))
        found = []

        def extend(i, chosen):
            if len(found) > max_hom_card:
                raise HomSetTooLarge(
                    "right extension at {} exceeds the family cap".format(d))
            if i == len(slots):
                found.append(tuple(chosen))
                return
            c, _ = slots[i]
            for v in cp.on_objects[c]:
                chosen.append(v)
                ok = True
                for isrc, u, idst in constraints:
                    if isrc < len(chosen) and idst < len(chosen):
                        if cp.on_morphisms[u][chosen[isrc]] != chosen[idst]:
                            ok = False
                            break
                if ok:
                    extend(i + 1, chosen)
                chosen.pop()

        extend(0, [])
        families[d] = sorted(found)

    def label(fam):
        return "[" + "|".join(fam) + "]" if fam else "[()]"

    on_objects = {d: FiniteSet([label(f) for f in families[d]])
                  for d in d_cat.objects}
    on_morphisms = {}
    for h, (hs, hd) in d_cat.morphisms.items():
        index_hd = {s: i for i, s in enumerate(slot_lists[hd])}
        table = {}
        for fam in families[hs]:
            lookup = dict(zip(slot_lists[hs], fam))
            new = tuple(lookup[(c, d_cat.comp[(h, g)])]
                        for (c, g) in slot_lists[hd])
            assert new in set(families[hd])
            table[label(fam)] = label(new)
        on_morphisms[h] = table
    out = Copresheaf(d_cat, on_objects, on_morphisms)
    assert not out.validate()
    return out


# ---------------------------------------------------------------------------
# migration of instances along a model morphism
# ---------------------------------------------------------------------------

class MigrationContext:
    """Closed collages of both models and the induced functor, shared by
    the three migrations along one model morphism."""

    def __init__(self, al, bound=8, max_hom_card=DEFAULT_MAX_HOM_CARD):
        self.morphism = al
        self.max_hom_card = max_hom_card
        self.closure_src = close_presented_category(
            collage_of_model(al.source), bound)
        self.closure_tgt = close_presented_category(
            collage_of_model(al.target), bound)
        self.functor = collage_of_morphism(al, self.closure_src,
                                           self.closure_tgt)


def migrate_pullback(al, h, context=None, bound=8):
    """Restriction of an instance along a model morphism, via copresheaf
    precomposition on the closed collages."""
    ctx = context or MigrationContext(al, bound)
    cp = instance_to_copresheaf(h, ctx.closure_tgt)
    fun = ctx.functor
    pulled = Copresheaf(
        fun.source,
        {c: cp.on_objects[fun.on_objects[c]] for c in fun.source.objects},
        {m: dict(cp.on_morphisms[fun.on_morphisms[m]])
         for m in fun.source.morphisms})
    assert not pulled.validate()
    return copresheaf_to_instance(pulled, al.source, ctx.closure_src)


def migrate_lan(al, h, context=None, bound=8):
    """Left pushforward of an instance along a model morphism."""
    ctx = context or MigrationContext(al, bound)
    cp = instance_to_copresheaf(h, ctx.closure_src)
    ext = kan_extend_left(ctx.functor, cp, ctx.max_hom_card)
    return copresheaf_to_instance(ext, al.target, ctx.closure_tgt)


def migrate_ran(al, h, context=None, bound=8):
    """Right pushforward of an instance along a model morphism."""
    ctx = context or MigrationContext(al, bound)
    cp = instance_to_copresheaf(h, ctx.closure_src)
    ext = kan_extend_right(ctx.functor, cp, ctx.max_hom_card)
    return copresheaf_to_instance(ext, al.target, ctx.closure_tgt)


# ---------------------------------------------------------------------------
# discrete-opfibration reflection and comprehensive factorization
# ---------------------------------------------------------------------------

def reflect_into_dopf(f, bound=8):
    """Reflect a model morphism into an instance of its target.

    The reflection is the copresheaf on the closed target collage
    presented by one generator per upstairs element, located over its
    image, with relations pushing the generators forward along upstairs
    tight arrows and heteromorphisms.  Evaluation quotients the pairs
    (generator, morphism out of its location) by the congruence the
    relations generate.

    Returns (instance over the target, closed target collage,
    class-of-generator lookup).
    """
    x, b = f.source, f.target
    t = x.theory
    closure = close_presented_category(collage_of_model(b), bound)
    cat = closure.category
    tight_ids = set(t.tight_id.values())

    location = {}
    for d in t.objects:
        for e in x.on_objects[d]:
            location[(d, e)] = collage_object(d, f.on_objects[d][e])

    pairs = [(g, mor) for g, loc in location.items()
             for mor, (ms, _) in cat.morphisms.items() if ms == loc]
    parent = {p: p for p in pairs}

    base = []
    for u, (s, d) in t.tight.items():
        if u in tight_ids:
            continue
        for e in x.on_objects[s]:
            w = closure.word_class(location[(s, e)],
                                   (tight_gen(u, f.on_objects[s][e]),))
            base.append(((s, e), w, (d, x.on_tight[u][e])))
    for m, (s, d) in t.loose.items():
        sp = x.on_loose[m]
        for xi in sp.apex:
            e = sp.left[xi]
            w = closure.word_class(location[(s, e)],
                                   (het_gen(m, f.on_loose[m][xi]),))
            base.append(((s, e), w, (d, sp.right[xi])))
    # close each generating identification under post-composition
    for g1, w, g2 in base:
        tgt = cat.dst(w)
        for h, (hs, _) in cat.morphisms.items():
            if hs != tgt:
                continue
            _uf_union(parent, (g1, cat.comp[(w, h)]), (g2, h))

    def label(p):
        (d, e), mor = _uf_find(parent, p)
        return "[{}.{}|{}]".format(d, e, mor)

    by_object = {c: [] for c in cat.objects}
    for p in pairs:
        by_object[cat.dst(p[1])].append(p)
    rep_of = {}
    on_objects = {}
    for c, ps in by_object.items():
        labs = sorted({label(p) for p in ps})
        on_objects[c] = FiniteSet(labs)
        for p in ps:
            rep_of.setdefault(label(p), p)
    on_morphisms = {}
    for h, (hs, hd) in cat.morphisms.items():
        table = {}
        for lab in on_objects[hs]:
            g, mor = rep_of[lab]
            table[lab] = label((g, cat.comp[(mor, h)]))
        on_morphisms[h] = table
    cp = Copresheaf(cat, on_objects, on_morphisms)
    assert not cp.validate()
    inst = copresheaf_to_instance(cp, b, closure)

    gen_class = {}
    for d in t.objects:
        for e in x.on_objects[d]:
            loc = location[(d, e)]
            gen_class[(d, e)] = pair_label(
                f.on_objects[d][e], label(((d, e), cat.identity[loc])))
    return inst, closure, gen_class


class Factorization:
    """A model morphism split as an initial morphism followed by a
    discrete opfibration, with the lifting witness."""

    def __init__(self, original, middle, initial, opfibration, witness):
        self.original = original
        self.middle = middle
        self.initial = initial
        self.opfibration = opfibration
        self.witness = witness


def comprehensive_factorize(f, bound=8):
    """Factor a model morphism through the elements of its reflection."""
    x = f.source
    t = x.theory
    inst, _, gen_class = reflect_into_dopf(f, bound)
    middle, pi, witness = elements(inst)
    on_objects = {d: {e: gen_class[(d, e)] for e in x.on_objects[d]}
                  for d in t.objects}
    on_loose = {}
    for m, (s, _) in t.loose.items():
        sp = x.on_loose[m]
        on_loose[m] = {
            xi: pair_label(on_objects[s][sp.left[xi]], f.on_loose[m][xi])
            for xi in sp.apex}
    unit = ModelMorphism(x, middle, on_objects, on_loose)
    composite = compose_model_morphisms(unit, pi)
    assert composite.on_objects == f.on_objects \
        and composite.on_loose == f.on_loose, \
        "factorization does not recompose to the input"
    return Factorization(f, middle, unit, pi, witness)


def cartesian_factorize(f, bound=8):
    """Comprehensive factorization with a cartesian middle object.

    Both endpoints must be cartesian-valid; the middle object is
    certified cartesian after the fact.
    """
    from .cartesian import validate_cartesian_model
    assert not validate_cartesian_model(f.source)
    assert not validate_cartesian_model(f.target)
    fac = comprehensive_factorize(f, bound)
    report = validate_cartesian_model(fac.middle)
    if report:
        raise MiddleNotCartesian("; ".join(report[:3]))
    return fac


# ---------------------------------------------------------------------------
# orthogonality testing
# ---------------------------------------------------------------------------

class LiftingProblem:
    """A commutative square from a candidate-initial morphism to a
    discrete opfibration: top into the opfibration's domain, bottom out
    of the candidate's codomain."""

    def __init__(self, left, right, top, bottom):
        self.left = left          # e : X -> E
        self.right = right        # q : A -> B
        self.top = top            # u : X -> A
        self.bottom = bottom      # v : E -> B
        assert compose_model_morphisms(left, bottom) == \
            compose_model_morphisms(top, right)

    def fillers(self):
        from .model import enumerate_model_morphisms
        out = []
        for w in enumerate_model_morphisms(self.left.target, self.right.source):
            if compose_model_morphisms(self.left, w) == self.top and \
                    compose_model_morphisms(w, self.right) == self.bottom:
                out.append(w)
        return out


def check_initial(e, dopf_corpus):
    """Test a morphism for initiality against a corpus of discrete
    opfibrations: every commutative square must have exactly one filler.

    The corpus is a sound but incomplete surrogate for the full class;
    an empty report means no violation was found.
    """
    from .elements import is_discrete_opfibration
    from .model import enumerate_model_morphisms
    report = []
    for q in dopf_corpus:
        assert is_discrete_opfibration(q).ok, "corpus entry is not certified"
        tops = enumerate_model_morphisms(e.source, q.source)
        bottoms = enumerate_model_morphisms(e.target, q.target)
        for u, v in itertools.product(tops, bottoms):
            if compose_model_morphisms(e, v) != compose_model_morphisms(u, q):
                continue
            n = len(LiftingProblem(e, q, u, v).fillers())
            if n != 1:
                report.append("square against {} has {} fillers"
                              .format(q, n))
    return report
