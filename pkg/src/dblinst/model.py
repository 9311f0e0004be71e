"""Lax double functors into spans of finite sets, and their morphisms.

A ``SpanModel`` assigns a finite set to each theory object, a function
to each tight arrow, a span to each loose arrow, an apex map to each
cell, plus laxator and unitor tables.  Validation checks the lax-functor
axioms exhaustively; for partial (truncated) theories only the
tabulated composites are checked.

Morphisms are the strict tight transformations: a function per object
and an apex function per loose arrow, natural in every direction.
"""

from .finset import (FiniteSet, Span, compose_tables, identity_table,
                     is_function, pullback_pairs)


class SpanModel:
    def __init__(self, theory, on_objects, on_tight, on_loose, on_cells,
                 laxators, unitors):
        self.theory = theory
        self.on_objects = dict(on_objects)   # object -> FiniteSet
        self.on_tight = dict(on_tight)       # tight -> table
        self.on_loose = dict(on_loose)       # loose -> Span
        self.on_cells = dict(on_cells)       # cell -> apex table
        self.laxators = {k: dict(v) for k, v in laxators.items()}
        self.unitors = {d: dict(v) for d, v in unitors.items()}

    def laxator_domain(self, m, n):
        return pullback_pairs(self.on_loose[m], self.on_loose[n])

    def total_size(self):
        return (sum(len(s) for s in self.on_objects.values())
                + sum(len(s.apex) for s in self.on_loose.values()))

    def __repr__(self):
        return "SpanModel({} over {} objects)".format(
            {d: len(s) for d, s in self.on_objects.items()},
            len(self.theory.objects))


def validate_model(x):
    """Exhaustive lax-functor axiom check; returns a report."""
    t = x.theory
    report = []

    # shape of all components
    for d in t.objects:
        if not isinstance(x.on_objects.get(d), FiniteSet):
            report.append("object {} has no carrier".format(d))
    if report:
        return report
    for f, (s, d) in t.tight.items():
        table = x.on_tight.get(f)
        if table is None or not is_function(table, x.on_objects[s],
                                            x.on_objects[d]):
            report.append("tight arrow {} has no total function".format(f))
    for m, (s, d) in t.loose.items():
        sp = x.on_loose.get(m)
        if not isinstance(sp, Span) or sp.src_set != x.on_objects[s] \
                or sp.dst_set != x.on_objects[d]:
            report.append("loose arrow {} has no well-typed span".format(m))
    if report:
        return report

    # tight functoriality
    for d in t.objects:
        if x.on_tight[t.tight_id[d]] != identity_table(x.on_objects[d]):
            report.append("tight identity at {} not the identity".format(d))
    for (f, g), h in t.tight_comp.items():
        if compose_tables(x.on_tight[f], x.on_tight[g]) != x.on_tight[h]:
            report.append("tight functoriality fails at ({},{})".format(f, g))

    # cells are span maps over their tight sides
    for a, (f, g, m, n) in t.cells.items():
        table = x.on_cells.get(a)
        top, bot = x.on_loose[m], x.on_loose[n]
        if table is None or not is_function(table, top.apex, bot.apex):
            report.append("cell {} has no total apex map".format(a))
            continue
        for xi in top.apex:
            if bot.left[table[xi]] != x.on_tight[f][top.left[xi]]:
                report.append("cell {} breaks the left leg at {}".format(a, xi))
            if bot.right[table[xi]] != x.on_tight[g][top.right[xi]]:
                report.append("cell {} breaks the right leg at {}".format(a, xi))
    if report:
        return report

    # functoriality for the vertical (tight) composition of cells
    for m, a in t.cell_id_loose.items():
        if x.on_cells[a] != identity_table(x.on_loose[m].apex):
            report.append("identity cell of {} not the identity".format(m))
    for (a, b), c in t.cell_vcomp.items():
        if compose_tables(x.on_cells[a], x.on_cells[b]) != x.on_cells[c]:
            report.append("cell functoriality fails at ({},{})".format(a, b))

    # laxators: totality, span-map condition
    for (m, n), mn in t.loose_comp.items():
        lax = x.laxators.get((m, n))
        dom = x.laxator_domain(m, n)
        if lax is None or set(lax.keys()) != set(dom):
            report.append("laxator at ({},{}) not total on the pullback"
                          .format(m, n))
            continue
        target = x.on_loose[mn]
        for (xi, zeta) in dom:
            v = lax[(xi, zeta)]
            if v not in target.apex:
                report.append("laxator at ({},{}) leaves the target".format(m, n))
            elif target.left[v] != x.on_loose[m].left[xi] \
                    or target.right[v] != x.on_loose[n].right[zeta]:
                report.append("laxator at ({},{}) breaks a leg at ({},{})"
                              .format(m, n, xi, zeta))
    if report:
        return report

    # naturality of laxators with respect to cells
    for (a, b), c in t.cell_hcomp.items():
        m1, m2 = t.cell_top(a), t.cell_top(b)
        n1, n2 = t.cell_bottom(a), t.cell_bottom(b)
        if (m1, m2) not in x.laxators or (n1, n2) not in x.laxators:
            continue
        for (xi, zeta) in x.laxator_domain(m1, m2):
            lhs = x.on_cells[c][x.laxators[(m1, m2)][(xi, zeta)]]
            rhs = x.laxators[(n1, n2)][(x.on_cells[a][xi], x.on_cells[b][zeta])]
            if lhs != rhs:
                report.append("laxator naturality fails at cells ({},{}) "
                              "on ({},{})".format(a, b, xi, zeta))

    # associativity of laxators
    for (l, m), lm in t.loose_comp.items():
        for n in t.loose:
            if (m, n) not in t.loose_comp:
                continue
            mn = t.loose_comp[(m, n)]
            if (lm, n) not in t.loose_comp or (l, mn) not in t.loose_comp:
                continue
            for (xi, zeta) in x.laxator_domain(l, m):
                for theta in x.on_loose[n].apex:
                    if x.on_loose[m].right[zeta] != x.on_loose[n].left[theta]:
                        continue
                    lhs = x.laxators[(lm, n)][
                        (x.laxators[(l, m)][(xi, zeta)], theta)]
                    rhs = x.laxators[(l, mn)][
                        (xi, x.laxators[(m, n)][(zeta, theta)])]
                    if lhs != rhs:
                        report.append(
                            "laxator associativity fails at ({},{},{}) "
                            "on ({},{},{})".format(l, m, n, xi, zeta, theta))

    # unitors: legs and unit laws
    for d in t.objects:
        uni = x.unitors.get(d)
        idspan = x.on_loose[t.loose_id[d]]
        if uni is None or not is_function(uni, x.on_objects[d], idspan.apex):
            report.append("unitor at {} not a total function".format(d))
            continue
        for e in x.on_objects[d]:
            if idspan.left[uni[e]] != e or idspan.right[uni[e]] != e:
                report.append("unitor at {} breaks a leg at {}".format(d, e))
    if report:
        return report
    for m, (dsrc, ddst) in t.loose.items():
        lid, rid = t.loose_id[dsrc], t.loose_id[ddst]
        sp = x.on_loose[m]
        if (lid, m) in t.loose_comp:
            for xi in sp.apex:
                got = x.laxators[(lid, m)][(x.unitors[dsrc][sp.left[xi]], xi)]
                if got != xi:
                    report.append("left unit law fails at {} on {}".format(m, xi))
        if (m, rid) in t.loose_comp:
            for xi in sp.apex:
                got = x.laxators[(m, rid)][(xi, x.unitors[ddst][sp.right[xi]])]
                if got != xi:
                    report.append("right unit law fails at {} on {}".format(m, xi))

    # naturality of unitors with respect to tight arrows
    for f, (s, d) in t.tight.items():
        a = t.cell_id_tight.get(f)
        if a is None:
            continue
        for e in x.on_objects[s]:
            if x.on_cells[a][x.unitors[s][e]] != x.unitors[d][x.on_tight[f][e]]:
                report.append("unitor naturality fails at {} on {}".format(f, e))
    return report


def terminal_model(t):
    """The model with every carrier and apex a singleton."""
    pt = FiniteSet(["*"])
    on_objects = {d: pt for d in t.objects}
    on_tight = {f: {"*": "*"} for f in t.tight}
    on_loose = {m: Span(pt, pt, pt, {"*": "*"}, {"*": "*"}) for m in t.loose}
    on_cells = {a: {"*": "*"} for a in t.cells}
    laxators = {pair: {("*", "*"): "*"} for pair in t.loose_comp}
    unitors = {d: {"*": "*"} for d in t.objects}
    return SpanModel(t, on_objects, on_tight, on_loose, on_cells,
                     laxators, unitors)


class ModelMorphism:
    def __init__(self, source, target, on_objects, on_loose):
        self.source = source
        self.target = target
        self.on_objects = {d: dict(tab) for d, tab in on_objects.items()}
        self.on_loose = {m: dict(tab) for m, tab in on_loose.items()}

    def component_key(self):
        """Canonical sort key: the flattened component tables."""
        return (tuple(sorted((d, tuple(sorted(t.items())))
                             for d, t in self.on_objects.items())),
                tuple(sorted((m, tuple(sorted(t.items())))
                             for m, t in self.on_loose.items())))

    def __eq__(self, other):
        return (isinstance(other, ModelMorphism)
                and self.source is other.source and self.target is other.target
                and self.on_objects == other.on_objects
                and self.on_loose == other.on_loose)

    def __repr__(self):
        return "ModelMorphism({} objects, {} loose components)".format(
            len(self.on_objects), len(self.on_loose))


def validate_model_morphism(al):
    x, y = al.source, al.target
    t = x.theory
    assert t is y.theory or t.objects == y.theory.objects
    report = []
    for d in t.objects:
        tab = al.on_objects.get(d)
        if tab is None or not is_function(tab, x.on_objects[d], y.on_objects[d]):
            report.append("component at object {} not total".format(d))
    for m in t.loose:
        tab = al.on_loose.get(m)
        if tab is None or not is_function(tab, x.on_loose[m].apex,
                                          y.on_loose[m].apex):
            report.append("component at loose arrow {} not total".format(m))
    if report:
        return report
    for f, (s, d) in t.tight.items():
        lhs = compose_tables(x.on_tight[f], al.on_objects[d])
        rhs = compose_tables(al.on_objects[s], y.on_tight[f])
        if lhs != rhs:
            report.append("naturality fails at tight arrow {}".format(f))
    for m, (s, d) in t.loose.items():
        for xi in x.on_loose[m].apex:
            im = al.on_loose[m][xi]
            if y.on_loose[m].left[im] != al.on_objects[s][x.on_loose[m].left[xi]]:
                report.append("left leg broken at {} on {}".format(m, xi))
            if y.on_loose[m].right[im] != al.on_objects[d][x.on_loose[m].right[xi]]:
                report.append("right leg broken at {} on {}".format(m, xi))
    for a in t.cells:
        m, n = t.cell_top(a), t.cell_bottom(a)
        for xi in x.on_loose[m].apex:
            if al.on_loose[n][x.on_cells[a][xi]] != y.on_cells[a][al.on_loose[m][xi]]:
                report.append("naturality fails at cell {} on {}".format(a, xi))
    for (m, n), mn in t.loose_comp.items():
        for (xi, zeta) in x.laxator_domain(m, n):
            lhs = al.on_loose[mn][x.laxators[(m, n)][(xi, zeta)]]
            rhs = y.laxators[(m, n)][(al.on_loose[m][xi], al.on_loose[n][zeta])]
            if lhs != rhs:
                report.append("laxator compatibility fails at ({},{}) on ({},{})"
                              .format(m, n, xi, zeta))
    for d in t.objects:
        lid = t.loose_id[d]
        for e in x.on_objects[d]:
            if al.on_loose[lid][x.unitors[d][e]] != y.unitors[d][al.on_objects[d][e]]:
                report.append("unitor compatibility fails at {} on {}".format(d, e))
    return report


def identity_morphism(x):
    return ModelMorphism(
        x, x,
        {d: identity_table(s) for d, s in x.on_objects.items()},
        {m: identity_table(sp.apex) for m, sp in x.on_loose.items()})


def compose_model_morphisms(f, g):
    assert f.target is g.source or f.target.on_objects == g.source.on_objects
    return ModelMorphism(
        f.source, g.target,
        {d: compose_tables(t, g.on_objects[d]) for d, t in f.on_objects.items()},
        {m: compose_tables(t, g.on_loose[m]) for m, t in f.on_loose.items()})


def _all_tables(src, dst):
    """All functions src -> dst as tables, in lexicographic order."""
    src = list(src)
    dst = list(dst)
    if not src:
        return [{}]
    if not dst:
        return []
    out = [{}]
    for e in src:
        out = [dict(t, **{e: v}) for t in out for v in dst]
    return out


def enumerate_model_morphisms(a, b):
    """All strict morphisms a -> b, by backtracking over components.

    Components are assigned object-by-object and then loose-arrow-by-
    loose-arrow, pruning with every constraint whose components are all
    assigned; the result is sorted by component tables.
    """
    t = a.theory
    slots = [("ob", d) for d in t.objects] + [("lo", m) for m in sorted(t.loose)]
    results = []

    def violated(obs, los):
        # tight naturality (needs both endpoints' object components)
        for f, (s, d) in t.tight.items():
            if s in obs and d in obs:
                if compose_tables(a.on_tight[f], obs[d]) != \
                        compose_tables(obs[s], b.on_tight[f]):
                    return True
        for m, (s, d) in t.loose.items():
            if m not in los:
                continue
            sp, spb = a.on_loose[m], b.on_loose[m]
            for xi in sp.apex:
                im = los[m][xi]
                if s in obs and spb.left[im] != obs[s][sp.left[xi]]:
                    return True
                if d in obs and spb.right[im] != obs[d][sp.right[xi]]:
                    return True
        for c in t.cells:
            m, n = t.cell_top(c), t.cell_bottom(c)
            if m in los and n in los:
                for xi in a.on_loose[m].apex:
                    if los[n][a.on_cells[c][xi]] != b.on_cells[c][los[m][xi]]:
                        return True
        for (m, n), mn in t.loose_comp.items():
            if m in los and n in los and mn in los:
                for (xi, zeta) in a.laxator_domain(m, n):
                    if los[mn][a.laxators[(m, n)][(xi, zeta)]] != \
                            b.laxators[(m, n)][(los[m][xi], los[n][zeta])]:
                        return True
        for d in t.objects:
            lid = t.loose_id[d]
            if d in obs and lid in los:
                for e in a.on_objects[d]:
                    if los[lid][a.unitors[d][e]] != b.unitors[d][obs[d][e]]:
                        return True
        return False

    def extend(idx, obs, los):
        if idx == len(slots):
            results.append(ModelMorphism(a, b, obs, los))
            return
        kind, name = slots[idx]
        if kind == "ob":
            for tab in _all_tables(a.on_objects[name], b.on_objects[name]):
                obs[name] = tab
                if not violated(obs, los):
                    extend(idx + 1, obs, los)
                del obs[name]
        else:
            for tab in _all_tables(a.on_loose[name].apex, b.on_loose[name].apex):
                los[name] = tab
                if not violated(obs, los):
                    extend(idx + 1, obs, los)
                del los[name]

    extend(0, {}, {})
    results.sort(key=lambda f: f.component_key())
    return results


def find_model_isomorphism(a, b):
    """A morphism a -> b with bijective components, or None.

    A bijective strict transformation is an isomorphism: its inverse
    tables form a morphism again (checked).
    """
    from .finset import inverse_table
    for f in enumerate_model_morphisms(a, b):
        if all(len(set(t.values())) == len(t) == len(b.on_objects[d])
               for d, t in f.on_objects.items()) and \
           all(len(set(t.values())) == len(t) == len(b.on_loose[m].apex)
               for m, t in f.on_loose.items()):
            inv = ModelMorphism(
                b, a,
                {d: inverse_table(t) for d, t in f.on_objects.items()},
                {m: inverse_table(t) for m, t in f.on_loose.items()})
            if not validate_model_morphism(inv):
                return f
    return None
