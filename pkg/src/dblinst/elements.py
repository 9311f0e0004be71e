"""The equivalence between instances and discrete opfibrations.

``elements`` turns an instance into a model fibered over the base by
pulling back heteromorphisms along the carrier labellings; its
projection has unique lifts by construction.  ``nabla`` reads an
instance back off a discrete opfibration through the witness
bijections.  Both directions are direct formulas on pairs, no search.
"""

from .errors import NoExtension, NotDiscreteOpfibration
from .finset import FiniteSet, Span, pair_label
from .instance import Instance
from .model import ModelMorphism, SpanModel, validate_model_morphism


class DopfWitness:
    """Pullback certificates for a discrete opfibration of models.

    For each loose arrow m, ``bijections[m]`` maps a pair (base
    heteromorphism, upstairs element over its source) to the unique
    upstairs heteromorphism lifting it.
    """

    def __init__(self, morphism, bijections):
        self.morphism = morphism
        self.bijections = {m: dict(t) for m, t in bijections.items()}

    def validate(self):
        p = self.morphism
        e_model, b_model = p.source, p.target
        t = e_model.theory
        report = []
        for m, (s, d) in t.loose.items():
            esp, bsp = e_model.on_loose[m], b_model.on_loose[m]
            table = self.bijections.get(m)
            wanted = {(b, e) for b in bsp.apex for e in e_model.on_objects[s]
                      if bsp.left[b] == p.on_objects[s][e]}
            if table is None or set(table.keys()) != wanted:
                report.append("witness at {} not total on the pullback".format(m))
                continue
            if sorted(table.values()) != sorted(esp.apex):
                report.append("witness at {} not bijective".format(m))
                continue
            for (b, e), lift in table.items():
                if esp.left[lift] != e or p.on_loose[m][lift] != b:
                    report.append("witness at {} does not lift ({},{})"
                                  .format(m, b, e))
        return report


class DopfCheck:
    """Result of the discrete-opfibration predicate."""

    def __init__(self, ok, witness, counterexample):
        self.ok = ok
        self.witness = witness
        self.counterexample = counterexample


def is_discrete_opfibration(p):
    """Check unique lifting of heteromorphisms along lifted sources.

    Returns a DopfCheck: on success the witness records the lift of
    every (base heteromorphism, source element over its source); on
    failure the counterexample is (m, heteromorphism, element, lifts).
    """
    e_model, b_model = p.source, p.target
    t = e_model.theory
    bijections = {}
    for m, (s, d) in t.loose.items():
        esp, bsp = e_model.on_loose[m], b_model.on_loose[m]
        table = {}
        for b in bsp.apex:
            for e in e_model.on_objects[s]:
                if bsp.left[b] != p.on_objects[s][e]:
                    continue
                lifts = [em for em in esp.apex
                         if esp.left[em] == e and p.on_loose[m][em] == b]
                if len(lifts) != 1:
                    return DopfCheck(False, None, (m, b, e, lifts))
                table[(b, e)] = lifts[0]
        if len(table) != len(esp.apex):
            # some upstairs heteromorphism is not a lift of anything
            extra = [em for em in esp.apex if em not in set(table.values())]
            return DopfCheck(False, None, (m, None, None, extra))
        bijections[m] = table
    return DopfCheck(True, DopfWitness(p, bijections), None)


def elements(p_inst):
    """The model of elements of an instance with its projection.

    Returns (model, projection morphism, witness).  The loose carriers
    are the action domains (element, base heteromorphism) in canonical
    pair order; cells, laxators and unitors are the unique solutions
    over the base.
    """
    x = p_inst.model
    t = x.theory
    h = p_inst
    on_objects = {d: h.carriers[d] for d in t.objects}
    on_tight = {f: dict(h.tight_cells[f]) for f in t.tight}
    on_loose, proj_loose = {}, {}
    for m, (s, d) in t.loose.items():
        dom = h.action_domain(m)
        labels = [pair_label(e, b) for (e, b) in dom]
        apex = FiniteSet(labels)
        left = {pair_label(e, b): e for (e, b) in dom}
        right = {pair_label(e, b): h.actions[m][(e, b)] for (e, b) in dom}
        on_loose[m] = Span(on_objects[s], on_objects[d], apex, left, right)
        proj_loose[m] = {pair_label(e, b): b for (e, b) in dom}
    on_cells = {}
    for a, (f, g, m, n) in t.cells.items():
        on_cells[a] = {
            pair_label(e, b): pair_label(h.tight_cells[f][e], x.on_cells[a][b])
            for (e, b) in h.action_domain(m)}
    laxators = {}
    for (m, n), mn in t.loose_comp.items():
        table = {}
        for em in on_loose[m].apex:
            for en in on_loose[n].apex:
                if on_loose[m].right[em] != on_loose[n].left[en]:
                    continue
                e, bm = on_loose[m].left[em], proj_loose[m][em]
                bn = proj_loose[n][en]
                table[(em, en)] = pair_label(
                    e, x.laxators[(m, n)][(bm, bn)])
        laxators[(m, n)] = table
    unitors = {d: {e: pair_label(e, x.unitors[d][h.labels[d][e]])
                   for e in h.carriers[d]}
               for d in t.objects}
    e_model = SpanModel(t, on_objects, on_tight, on_loose, on_cells,
                        laxators, unitors)
    pi = ModelMorphism(e_model, x,
                       {d: dict(h.labels[d]) for d in t.objects}, proj_loose)
    bijections = {m: {(b, e): pair_label(e, b)
                      for (e, b) in h.action_domain(m)}
                  for m in t.loose}
    return e_model, pi, DopfWitness(pi, bijections)


def nabla(p, witness=None):
    """The instance of the base read off a discrete opfibration."""
    if witness is None:
        check = is_discrete_opfibration(p)
        if not check.ok:
            raise NotDiscreteOpfibration(str(check.counterexample))
        witness = check.witness
    elif witness.validate():
        raise NotDiscreteOpfibration(
            "; ".join(witness.validate()))
    e_model, b_model = p.source, p.target
    t = e_model.theory
    carriers = {d: e_model.on_objects[d] for d in t.objects}
    labels = {d: dict(p.on_objects[d]) for d in t.objects}
    tight_cells = {f: dict(e_model.on_tight[f]) for f in t.tight}
    actions = {}
    for m in t.loose:
        actions[m] = {
            (e, b): e_model.on_loose[m].right[lift]
            for (b, e), lift in witness.bijections[m].items()}
    return Instance(b_model, carriers, labels, tight_cells, actions)


def dopf_morphism_from_objects(p, q, witness_q, on_objects):
    """Extend object components to a morphism of discrete opfibrations.

    The loose components are forced: the image of an upstairs
    heteromorphism is the unique q-lift of its projection at the mapped
    source.  Raises NoExtension when the result is not a morphism or
    does not commute with the projections.
    """
    e_model, f_model = p.source, q.source
    t = e_model.theory
    for d in t.objects:
        for e in e_model.on_objects[d]:
            if q.on_objects[d][on_objects[d][e]] != p.on_objects[d][e]:
                raise NoExtension(
                    "object component at {} does not commute at {}".format(d, e))
    on_loose = {}
    for m, (s, _) in t.loose.items():
        table = {}
        for em in e_model.on_loose[m].apex:
            b = p.on_loose[m][em]
            e = e_model.on_loose[m].left[em]
            key = (b, on_objects[s][e])
            if key not in witness_q.bijections[m]:
                raise NoExtension(
                    "no lift of {} at the mapped source {}".format(b, key[1]))
            table[em] = witness_q.bijections[m][key]
        on_loose[m] = table
    mor = ModelMorphism(e_model, f_model, on_objects, on_loose)
    try:
        problems = validate_model_morphism(mor)
    except KeyError as exc:
        # forced components can escape span fibers entirely when the
        # object components only commute by label coincidence
        raise NoExtension("forced components are incompatible: {}".format(exc))
    if problems:
        raise NoExtension("; ".join(problems[:3]))
    return mor


def canonical_elements_comparison(p, witness=None):
    """The canonical isomorphism elements(nabla(p)) -> source of p.

    Identity on objects; on a loose apex it sends the pair (element,
    base heteromorphism) to the witnessed lift.
    """
    if witness is None:
        check = is_discrete_opfibration(p)
        if not check.ok:
            raise NotDiscreteOpfibration(str(check.counterexample))
        witness = check.witness
    inst = nabla(p, witness)
    e2, pi2, _ = elements(inst)
    t = p.source.theory
    on_objects = {d: {e: e for e in e2.on_objects[d]} for d in t.objects}
    on_loose = {}
    for m in t.loose:
        on_loose[m] = {
            pair_label(e, b): witness.bijections[m][(b, e)]
            for (e, b) in inst.action_domain(m)}
    return ModelMorphism(e2, p.source, on_objects, on_loose), e2, pi2


def kappa_creates_dopf_check(p, bound=6):
    """Compare the model-level predicate with the classical one on the
    collage functor; the two must agree."""
    from .collage import (close_presented_category, collage_of_model,
                          collage_of_morphism)
    model_level = is_discrete_opfibration(p).ok
    cl_e = close_presented_category(collage_of_model(p.source), bound)
    cl_b = close_presented_category(collage_of_model(p.target), bound)
    fun = collage_of_morphism(p, cl_e, cl_b)
    classical, _ = fun.is_classical_dopf()
    return model_level, classical
