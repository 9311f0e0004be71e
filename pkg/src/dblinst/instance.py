"""Instances of a model and their morphisms.

An instance assigns to each theory object a carrier set fibered over
the model's carrier (a labelling function), to each tight arrow a
function over the model's function, and to each loose arrow an action:
an element of the carrier over x together with a heteromorphism out of
x is sent to an element over the heteromorphism's target.

The four instance axioms (functoriality on tight arrows, naturality of
actions at every theory cell, associativity of actions through the
laxators, unitality at the unitors) are checked exhaustively.
"""

from .finset import FiniteSet, compose_tables, identity_table, is_function, pair_label


class Instance:
    def __init__(self, model, carriers, labels, tight_cells, actions):
        self.model = model
        self.carriers = dict(carriers)          # d -> FiniteSet
        self.labels = {d: dict(t) for d, t in labels.items()}   # d -> carrier -> Xd
        self.tight_cells = {f: dict(t) for f, t in tight_cells.items()}
        self.actions = {m: dict(t) for m, t in actions.items()}  # (h, het) -> h'

    def action_domain(self, m):
        """Pairs (carrier element, heteromorphism) with matching labels."""
        x = self.model
        src = x.theory.loose_src(m)
        span = x.on_loose[m]
        return [(h, xi) for h in self.carriers[src] for xi in span.apex
                if self.labels[src][h] == span.left[xi]]

    def total_size(self):
        return sum(len(s) for s in self.carriers.values())

    def __repr__(self):
        return "Instance({})".format({d: len(s) for d, s in self.carriers.items()})


def validate_instance(h):
    x = h.model
    t = x.theory
    report = []
    for d in t.objects:
        car = h.carriers.get(d)
        lab = h.labels.get(d)
        if not isinstance(car, FiniteSet) or lab is None \
                or not is_function(lab, car, x.on_objects[d]):
            report.append("carrier at {} not labelled over the model".format(d))
    if report:
        return report
    for f, (s, d) in t.tight.items():
        tab = h.tight_cells.get(f)
        if tab is None or not is_function(tab, h.carriers[s], h.carriers[d]):
            report.append("tight cell at {} not total".format(f))
            continue
        for e in h.carriers[s]:
            if h.labels[d][tab[e]] != x.on_tight[f][h.labels[s][e]]:
                report.append("tight cell at {} breaks labels at {}".format(f, e))
    if report:
        return report
    # functoriality on tight arrows
    for d in t.objects:
        if h.tight_cells[t.tight_id[d]] != identity_table(h.carriers[d]):
            report.append("tight identity at {} not the identity".format(d))
    for (f, g), fg in t.tight_comp.items():
        if compose_tables(h.tight_cells[f], h.tight_cells[g]) != h.tight_cells[fg]:
            report.append("tight functoriality fails at ({},{})".format(f, g))
    # actions: totality and label coherence
    for m, (s, d) in t.loose.items():
        act = h.actions.get(m)
        dom = h.action_domain(m)
        if act is None or set(act.keys()) != set(dom):
            report.append("action at {} not total on its domain".format(m))
            continue
        span = x.on_loose[m]
        for (e, xi) in dom:
            v = act[(e, xi)]
            if v not in h.carriers[d]:
                report.append("action at {} leaves the carrier".format(m))
            elif h.labels[d][v] != span.right[xi]:
                report.append("action at {} breaks labels at ({},{})"
                              .format(m, e, xi))
    if report:
        return report
    # naturality of actions at every theory cell
    for a, (f, g, m, n) in t.cells.items():
        s = t.loose_src(m)
        for (e, xi) in h.action_domain(m):
            lhs = h.tight_cells[g][h.actions[m][(e, xi)]]
            rhs = h.actions[n][(h.tight_cells[f][e], x.on_cells[a][xi])]
            if lhs != rhs:
                report.append("action naturality fails at cell {} on ({},{})"
                              .format(a, e, xi))
    # associativity through the laxators
    for (m, n), mn in t.loose_comp.items():
        for (e, xi) in h.action_domain(m):
            for zeta in x.on_loose[n].apex:
                if x.on_loose[m].right[xi] != x.on_loose[n].left[zeta]:
                    continue
                lhs = h.actions[n][(h.actions[m][(e, xi)], zeta)]
                rhs = h.actions[mn][(e, x.laxators[(m, n)][(xi, zeta)])]
                if lhs != rhs:
                    report.append("action associativity fails at ({},{}) "
                                  "on ({},{},{})".format(m, n, e, xi, zeta))
    # unitality at the unitors
    for d in t.objects:
        lid = t.loose_id[d]
        for e in h.carriers[d]:
            if h.actions[lid][(e, x.unitors[d][h.labels[d][e]])] != e:
                report.append("action unitality fails at {} on {}".format(d, e))
    return report


class InstanceMorphism:
    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = {d: dict(t) for d, t in components.items()}

    def component_key(self):
        return tuple(sorted((d, tuple(sorted(t.items())))
                            for d, t in self.components.items()))

    def __eq__(self, other):
        return (isinstance(other, InstanceMorphism)
                and self.source is other.source and self.target is other.target
                and self.components == other.components)


def validate_instance_morphism(mu):
    h, k = mu.source, mu.target
    x = h.model
    t = x.theory
    report = []
    for d in t.objects:
        tab = mu.components.get(d)
        if tab is None or not is_function(tab, h.carriers[d], k.carriers[d]):
            report.append("component at {} not total".format(d))
            continue
        for e in h.carriers[d]:
            if k.labels[d][tab[e]] != h.labels[d][e]:
                report.append("component at {} breaks labels at {}".format(d, e))
    if report:
        return report
    for f, (s, d) in t.tight.items():
        for e in h.carriers[s]:
            if mu.components[d][h.tight_cells[f][e]] != \
                    k.tight_cells[f][mu.components[s][e]]:
                report.append("naturality fails at tight arrow {} on {}"
                              .format(f, e))
    for m, (s, d) in t.loose.items():
        for (e, xi) in h.action_domain(m):
            if mu.components[d][h.actions[m][(e, xi)]] != \
                    k.actions[m][(mu.components[s][e], xi)]:
                report.append("equivariance fails at {} on ({},{})"
                              .format(m, e, xi))
    return report


def identity_instance_morphism(h):
    return InstanceMorphism(h, h, {d: identity_table(c)
                                   for d, c in h.carriers.items()})


def compose_instance_morphisms(mu, nu):
    assert mu.target is nu.source or mu.target.carriers == nu.source.carriers
    return InstanceMorphism(
        mu.source, nu.target,
        {d: compose_tables(t, nu.components[d])
         for d, t in mu.components.items()})


def enumerate_instance_morphisms(h, k):
    """All instance morphisms h -> k, by fiberwise backtracking."""
    x = h.model
    t = x.theory
    objs = list(t.objects)
    results = []

    def candidates(d):
        """Label-preserving tables carrier(h,d) -> carrier(k,d)."""
        out = [{}]
        for e in h.carriers[d]:
            fiber = [v for v in k.carriers[d]
                     if k.labels[d][v] == h.labels[d][e]]
            out = [dict(tab, **{e: v}) for tab in out for v in fiber]
        return out

    def consistent(components):
        for f, (s, d) in t.tight.items():
            if s in components and d in components:
                for e in h.carriers[s]:
                    if components[d][h.tight_cells[f][e]] != \
                            k.tight_cells[f][components[s][e]]:
                        return False
        for m, (s, d) in t.loose.items():
            if s in components and d in components:
                for (e, xi) in h.action_domain(m):
                    if components[d][h.actions[m][(e, xi)]] != \
                            k.actions[m][(components[s][e], xi)]:
                        return False
        return True

    def extend(idx, components):
        if idx == len(objs):
            results.append(InstanceMorphism(h, k, components))
            return
        d = objs[idx]
        for tab in candidates(d):
            components[d] = tab
            if consistent(components):
                extend(idx + 1, components)
            del components[d]

    extend(0, {})
    results.sort(key=lambda f: f.component_key())
    return results


def find_instance_isomorphism(h, k):
    """An isomorphism h -> k (bijective components), or None."""
    for mu in enumerate_instance_morphisms(h, k):
        if all(len(set(t.values())) == len(t) == len(k.carriers[d])
               for d, t in mu.components.items()):
            return mu
    return None


def restrict_instance(al, h):
    """Restriction of an instance along a model morphism (substitution).

    Carriers over the source model are the pullbacks
    (element of h over alpha(x), x); actions act on the first component
    through alpha and carry the base element along.
    """
    x, y = al.source, al.target
    assert h.model is y or h.model.on_objects == y.on_objects, \
        "instance does not live over the morphism's target"
    t = x.theory
    carriers, labels, elems = {}, {}, {}
    for d in t.objects:
        pairs = [(p, e) for p in h.carriers[d] for e in x.on_objects[d]
                 if h.labels[d][p] == al.on_objects[d][e]]
        carriers[d] = FiniteSet([pair_label(p, e) for p, e in pairs])
        labels[d] = {pair_label(p, e): e for p, e in pairs}
        elems[d] = {pair_label(p, e): (p, e) for p, e in pairs}
    tight_cells = {}
    for f, (s, d) in t.tight.items():
        tight_cells[f] = {
            lab: pair_label(h.tight_cells[f][p], x.on_tight[f][e])
            for lab, (p, e) in elems[s].items()}
    actions = {}
    for m, (s, d) in t.loose.items():
        table = {}
        for p in h.carriers[s]:
            for e in x.on_objects[s]:
                if h.labels[s][p] != al.on_objects[s][e]:
                    continue
                lab = pair_label(p, e)
                for xi in x.on_loose[m].apex:
                    if x.on_loose[m].left[xi] != e:
                        continue
                    table[(lab, xi)] = pair_label(
                        h.actions[m][(p, al.on_loose[m][xi])],
                        x.on_loose[m].right[xi])
        actions[m] = table
    return Instance(x, carriers, labels, tight_cells, actions)
