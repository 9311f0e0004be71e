"""Cartesian models and instances, and the multicategory dictionaries.

A cartesian theory designates its finite products; a cartesian model
sends them to actual products of sets up to bijective comparison maps,
and a cartesian instance has bijective pairing comparisons over them.

Over the truncated operation theory (``prom_trunc``) cartesian models
are exactly multicategories and their cartesian instances are exactly
multifunctors into finite sets; over the opposite finite-set square
theory (``sq_finset_op``) the single-object cartesian models built here
come from semilattice operation tables with actions of all functions
between index sets.
"""

import itertools

from .finset import FiniteSet, Span, pair_label
from .instance import Instance
from .model import SpanModel
from .theories import map_blocks, p_arrow


# ---------------------------------------------------------------------------
# comparison maps and validators
# ---------------------------------------------------------------------------

def product_comparison(x, d1, d2):
    """The comparison table X(d1 x d2) -> X(d1) x X(d2)."""
    c = x.theory.cartesian
    p = c.product_object[(d1, d2)]
    p1, p2 = c.proj_tight[(d1, d2)]
    return {e: (x.on_tight[p1][e], x.on_tight[p2][e]) for e in x.on_objects[p]}


def apex_comparison(x, m1, m2):
    """The comparison table X(m1 x m2) apex -> X(m1) x X(m2) apexes."""
    c = x.theory.cartesian
    m12 = c.product_loose[(m1, m2)]
    c1, c2 = c.proj_cells[(m1, m2)]
    return {e: (x.on_cells[c1][e], x.on_cells[c2][e])
            for e in x.on_loose[m12].apex}


def _is_bijection_onto(table, codomain):
    values = list(table.values())
    return len(set(values)) == len(values) and set(values) == set(codomain)


def validate_cartesian_model(x):
    """Check that a model over a cartesian theory preserves the
    designated products up to bijective comparisons."""
    t = x.theory
    c = t.cartesian
    report = []
    if c is None:
        return ["theory carries no cartesian structure"]
    if len(x.on_objects[c.terminal_object]) != 1:
        report.append("carrier of the terminal object is not a singleton")
    if len(x.on_loose[t.loose_id[c.terminal_object]].apex) != 1:
        report.append("loose unit at the terminal object is not a singleton")
    for (d1, d2), p in c.product_object.items():
        cmp_t = product_comparison(x, d1, d2)
        target = [(u, v) for u in x.on_objects[d1] for v in x.on_objects[d2]]
        if not _is_bijection_onto(cmp_t, target):
            report.append("object comparison at {}x{} is not bijective"
                          .format(d1, d2))
    for (m1, m2), m12 in c.product_loose.items():
        cmp_a = apex_comparison(x, m1, m2)
        target = [(u, v) for u in x.on_loose[m1].apex
                  for v in x.on_loose[m2].apex]
        if not _is_bijection_onto(cmp_a, target):
            report.append("apex comparison at {}x{} is not bijective"
                          .format(m1, m2))
    return report


def instance_product_comparison(p, d1, d2):
    """The pairing comparison of an instance at a designated product."""
    x = p.model
    c = x.theory.cartesian
    prod = c.product_object[(d1, d2)]
    p1, p2 = c.proj_tight[(d1, d2)]
    return {e: (p.tight_cells[p1][e], p.tight_cells[p2][e])
            for e in p.carriers[prod]}


def validate_cartesian_instance(p):
    """Check that an instance over a cartesian model has bijective
    pairing comparisons at the designated products."""
    x = p.model
    c = x.theory.cartesian
    report = []
    if c is None:
        return ["theory carries no cartesian structure"]
    if len(p.carriers[c.terminal_object]) != 1:
        report.append("carrier over the terminal object is not a singleton")
    for (d1, d2), prod in c.product_object.items():
        cmp_t = instance_product_comparison(p, d1, d2)
        target = [(u, v) for u in p.carriers[d1] for v in p.carriers[d2]]
        if not _is_bijection_onto(cmp_t, target):
            report.append("instance comparison at {}x{} is not bijective"
                          .format(d1, d2))
    return report


def check_product_actions_determined(p):
    """Recompute the actions of product loose arrows from the factor
    actions through the projection cells and report mismatches."""
    x = p.model
    t = x.theory
    c = t.cartesian
    report = []
    for (m1, m2), m12 in c.product_loose.items():
        c1, c2 = c.proj_cells[(m1, m2)]
        f1, g1 = t.cell_left(c1), t.cell_right(c1)
        f2, g2 = t.cell_left(c2), t.cell_right(c2)
        d1, d2 = t.loose_dst(m1), t.loose_dst(m2)
        inverse = {v: e for e, v in
                   instance_product_comparison(p, d1, d2).items()}
        for (e, xi) in p.action_domain(m12):
            w1 = p.actions[m1][(p.tight_cells[f1][e], x.on_cells[c1][xi])]
            w2 = p.actions[m2][(p.tight_cells[f2][e], x.on_cells[c2][xi])]
            want = inverse[(w1, w2)]
            if p.actions[m12][(e, xi)] != want:
                report.append("action of {} at ({},{}) is not the paired "
                              "factor action".format(m12, e, xi))
    return report


# ---------------------------------------------------------------------------
# multicategories
# ---------------------------------------------------------------------------

class Multicategory:
    """A truncated multicategory: multimorphism arities are bounded and
    composites are tabulated only while the result stays in bound."""

    def __init__(self, objects, multimorphisms, identities, comp, truncation):
        self.objects = list(objects)
        # name -> (dom tuple of objects, cod object)
        self.multimorphisms = {n: (tuple(d), c)
                               for n, (d, c) in multimorphisms.items()}
        self.identities = dict(identities)      # object -> unary name
        # (outer, inner names tuple) -> composite name
        self.comp = dict(comp)
        self.truncation = truncation

    def arity(self, name):
        return len(self.multimorphisms[name][0])

    def by_arity(self, n):
        return sorted(m for m, (d, _) in self.multimorphisms.items()
                      if len(d) == n)

    def composable(self):
        """All (outer, inners) pairs whose composite stays in bound."""
        out = []
        for outer, (dom, _) in self.multimorphisms.items():
            if not dom:
                continue
            pools = [[m for m, (d2, c2) in self.multimorphisms.items()
                      if c2 == o] for o in dom]
            for inners in itertools.product(*pools):
                if sum(self.arity(i) for i in inners) <= self.truncation:
                    out.append((outer, inners))
        return out


def validate_multicategory(mc):
    report = []
    for m, (dom, cod) in mc.multimorphisms.items():
        if len(dom) > mc.truncation or cod not in mc.objects \
                or any(o not in mc.objects for o in dom):
            report.append("multimorphism {} ill-typed".format(m))
    for o in mc.objects:
        i = mc.identities.get(o)
        if i is None or mc.multimorphisms.get(i) != ((o,), o):
            report.append("identity of {} ill-formed".format(o))
    if report:
        return report
    for outer, inners in mc.composable():
        got = mc.comp.get((outer, inners))
        dom = sum((mc.multimorphisms[i][0] for i in inners), ())
        cod = mc.multimorphisms[outer][1]
        if got is None:
            report.append("missing composite of {} with {}".format(outer, inners))
        elif mc.multimorphisms.get(got) != (dom, cod):
            report.append("composite of {} with {} ill-typed".format(outer, inners))
    if report:
        return report
    for m, (dom, cod) in mc.multimorphisms.items():
        if dom and mc.comp[(m, tuple(mc.identities[o] for o in dom))] != m:
            report.append("right unit fails at {}".format(m))
        if mc.comp.get((mc.identities[cod], (m,))) != m:
            report.append("left unit fails at {}".format(m))
    # associativity on composites that stay tabulated
    for outer, inners in mc.composable():
        once = mc.comp[(outer, inners)]
        doms = [mc.multimorphisms[i][0] for i in inners]
        pools = [[m for m, (d2, c2) in mc.multimorphisms.items() if c2 == o]
                 for o in sum(doms, ())]
        for flat in itertools.product(*pools):
            if sum(mc.arity(i) for i in flat) > mc.truncation:
                continue
            # regroup the flat inners under the original inners
            twice_inner, pos = [], 0
            ok = True
            for i, d in zip(inners, doms):
                chunk = flat[pos:pos + len(d)]
                pos += len(d)
                if not d:
                    twice_inner.append(i)
                    continue
                mid = mc.comp.get((i, chunk))
                if mid is None:
                    ok = False
                    break
                twice_inner.append(mid)
            if not ok:
                continue
            lhs = mc.comp.get((once, flat))
            rhs = mc.comp.get((outer, tuple(twice_inner)))
            if lhs is not None and rhs is not None and lhs != rhs:
                report.append("associativity fails at {} with {}"
                              .format(outer, flat))
    return report


# ---------------------------------------------------------------------------
# the multicategory <-> model dictionary over prom_trunc
# ---------------------------------------------------------------------------

def _tuple_label(tup):
    if len(tup) == 0:
        return "()"
    if len(tup) == 1:
        return tup[0]
    return pair_label(tup[0], tup[1])


def _mm_label(names):
    return "[" + "|".join(names) + "]"


def multicategory_to_model(mc, t):
    """Encode a multicategory as a model of a prom_trunc theory.

    Object carriers are object tuples, the apex of a loose arrow holds
    one tuple of multimorphisms per block of its monotone map, cells
    reindex blocks, and laxators are multicomposition.
    """
    k = max(t.size_of_object.values())
    assert mc.truncation >= k
    obj = {i: "x{}".format(i) for i in range(k + 1)}

    tuples = {i: sorted(itertools.product(mc.objects, repeat=i))
              for i in range(k + 1)}
    on_objects = {obj[i]: FiniteSet([_tuple_label(tp) for tp in tuples[i]])
                  for i in range(k + 1)}
    tup_of = {obj[i]: {_tuple_label(tp): tp for tp in tuples[i]}
              for i in range(k + 1)}

    on_tight = {}
    for f, (a, b, pf) in t.tight_data.items():
        on_tight[f] = {
            _tuple_label(tp): _tuple_label(tuple(tp[v - 1] for v in pf))
            for tp in tuples[a]}

    on_loose, mm_of = {}, {}
    for m, (a, b, pm) in t.loose_data.items():
        blocks = map_blocks(pm, b)
        pools = [mc.by_arity(len(bl)) for bl in blocks]
        apex, left, right = [], {}, {}
        table = {}
        for names in itertools.product(*pools):
            src = sum((mc.multimorphisms[n][0] for n in names), ())
            lab = _mm_label(names)
            apex.append(lab)
            table[lab] = names
            left[lab] = _tuple_label(src)
            right[lab] = _tuple_label(tuple(mc.multimorphisms[n][1]
                                            for n in names))
        on_loose[m] = Span(on_objects[obj[a]], on_objects[obj[b]],
                           FiniteSet(apex), left, right)
        mm_of[m] = table

    on_cells = {}
    for cell, (f, g, m, n) in t.cells.items():
        _, _, pg = t.tight_data[g]
        on_cells[cell] = {
            lab: _mm_label(tuple(names[j - 1] for j in pg))
            for lab, names in mm_of[m].items()}

    laxators = {}
    for (m, n), mn in t.loose_comp.items():
        _, b, pm = t.loose_data[m]
        _, c, pn = t.loose_data[n]
        n_blocks = map_blocks(pn, c)
        table = {}
        for lab_m, mus in mm_of[m].items():
            for lab_n, nus in mm_of[n].items():
                if on_loose[m].right[lab_m] != on_loose[n].left[lab_n]:
                    continue
                parts = []
                for l in range(1, c + 1):
                    outer = nus[l - 1]
                    inners = tuple(mus[j - 1] for j in n_blocks[l - 1])
                    parts.append(outer if not inners
                                 else mc.comp[(outer, inners)])
                table[(lab_m, lab_n)] = _mm_label(tuple(parts))
        laxators[(m, n)] = table

    unitors = {}
    for i in range(k + 1):
        unitors[obj[i]] = {
            _tuple_label(tp): _mm_label(tuple(mc.identities[o] for o in tp))
            for tp in tuples[i]}

    x = SpanModel(t, on_objects, on_tight, on_loose, on_cells,
                  laxators, unitors)
    x.multicategory = mc
    x.tuple_of = tup_of
    x.mm_of = mm_of
    return x


def model_to_multicategory(x):
    """Read a multicategory off a cartesian model of a prom_trunc theory."""
    t = x.theory
    k = max(t.size_of_object.values())
    x1 = "x1"
    objects = list(x.on_objects[x1])
    pair_dec = product_comparison(x, x1, x1) if k >= 2 else {}

    def decode(n, e):
        if n == 0:
            return ()
        if n == 1:
            return (e,)
        return pair_dec[e]

    multimorphisms, names = {}, {}
    for n in range(k + 1):
        pn = p_arrow(t, n)
        sp = x.on_loose[pn]
        for xi in sp.apex:
            name = "{}#{}".format(n, xi)
            multimorphisms[name] = (decode(n, sp.left[xi]), sp.right[xi])
            names[(n, xi)] = name
    identities = {o: names[(1, x.unitors[x1][o])] for o in objects}

    apex_inv = {}
    # a nullary multimorphism composed with the empty family is itself
    comp = {(m, ()): m for m, (dom, _) in multimorphisms.items() if not dom}
    for n in range(1, k + 1):
        pn = p_arrow(t, n)
        for xi in x.on_loose[pn].apex:
            outer = names[(n, xi)]
            dom = multimorphisms[outer][0]
            pools = [[(a, z) for a in range(k + 1)
                      for z in x.on_loose[p_arrow(t, a)].apex
                      if x.on_loose[p_arrow(t, a)].right[z] == o]
                     for o in dom]
            for inners in itertools.product(*pools):
                total = sum(a for a, _ in inners)
                if total > k:
                    continue
                phi = tuple(j + 1 for j, (a, _) in enumerate(inners)
                            for _ in range(a))
                if n == 1:
                    m, zm = p_arrow(t, inners[0][0]), inners[0][1]
                else:
                    m1, m2 = (p_arrow(t, a) for a, _ in inners)
                    m = t.cartesian.product_loose[(m1, m2)]
                    key = (m1, m2)
                    if key not in apex_inv:
                        apex_inv[key] = {v: e for e, v in
                                         apex_comparison(x, m1, m2).items()}
                    zm = apex_inv[key][(inners[0][1], inners[1][1])]
                assert t.loose_data[m][2] == phi
                res = x.laxators[(m, pn)][(zm, xi)]
                comp[(outer, tuple(names[i] for i in inners))] = \
                    names[(total, res)]
    return Multicategory(objects, multimorphisms, identities, comp, k)


def multicategories_isomorphic(mc1, mc2):
    """Search for an isomorphism of truncated multicategories."""
    if sorted(map(mc1.arity, mc1.multimorphisms)) != \
            sorted(map(mc2.arity, mc2.multimorphisms)):
        return False
    if len(mc1.objects) != len(mc2.objects):
        return False
    for obj_perm in itertools.permutations(mc2.objects):
        ob = dict(zip(mc1.objects, obj_perm))
        # match multimorphisms by translated type
        slots = sorted(mc1.multimorphisms)
        pools = []
        for m in slots:
            dom, cod = mc1.multimorphisms[m]
            want = (tuple(ob[o] for o in dom), ob[cod])
            pools.append([m2 for m2, ty in mc2.multimorphisms.items()
                          if ty == want])

        def extend(i, table, used):
            if i == len(slots):
                for o in mc1.objects:
                    if table[mc1.identities[o]] != mc2.identities[ob[o]]:
                        return None
                for (outer, inners), res in mc1.comp.items():
                    key = (table[outer], tuple(table[j] for j in inners))
                    if mc2.comp.get(key) != table[res]:
                        return None
                return dict(table)
            for cand in pools[i]:
                if cand in used:
                    continue
                table[slots[i]] = cand
                used.add(cand)
                got = extend(i + 1, table, used)
                if got is not None:
                    return got
                used.discard(cand)
                del table[slots[i]]
            return None

        if extend(0, {}, set()) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# multifunctors
# ---------------------------------------------------------------------------

class Multifunctor:
    """A set-valued multifunctor on a truncated multicategory: finite
    sets of values per object and one table per multimorphism."""

    def __init__(self, mc, on_objects, actions):
        self.mc = mc
        self.on_objects = {o: s for o, s in on_objects.items()}
        # name -> {tuple of values: value}
        self.actions = {m: dict(t) for m, t in actions.items()}


def validate_multifunctor(fm):
    mc = fm.mc
    report = []
    for m, (dom, cod) in mc.multimorphisms.items():
        table = fm.actions.get(m)
        wanted = set(itertools.product(*[fm.on_objects[o] for o in dom]))
        if table is None or set(table.keys()) != wanted:
            report.append("action of {} not total".format(m))
            continue
        if any(v not in fm.on_objects[cod] for v in table.values()):
            report.append("action of {} leaves its value set".format(m))
    if report:
        return report
    for o in mc.objects:
        t = fm.actions[mc.identities[o]]
        if any(t[(v,)] != v for v in fm.on_objects[o]):
            report.append("identity of {} does not act as identity".format(o))
    for (outer, inners), res in mc.comp.items():
        doms = [mc.multimorphisms[i][0] for i in inners]
        for args in itertools.product(
                *[fm.on_objects[o] for o in sum(doms, ())]):
            mids, pos = [], 0
            for i, d in zip(inners, doms):
                mids.append(fm.actions[i][tuple(args[pos:pos + len(d)])])
                pos += len(d)
            if fm.actions[outer][tuple(mids)] != fm.actions[res][tuple(args)]:
                report.append("composition fails at {} with {} on {}"
                              .format(outer, inners, args))
    return report


def instance_to_multifunctor(p):
    """Read a multifunctor off an instance of a multicategory model."""
    x = p.model
    t = x.theory
    mc = x.multicategory
    x1 = "x1"
    on_objects = {o: sorted(e for e in p.carriers[x1]
                            if p.labels[x1][e] == o)
                  for o in mc.objects}
    inv = {}
    if 2 in {len(d) for d, _ in mc.multimorphisms.values()}:
        inv = {v: e for e, v in
               instance_product_comparison(p, x1, x1).items()}
    point = None
    if p.carriers.get("x0") is not None and len(p.carriers["x0"]):
        point = p.carriers["x0"].labels[0]

    def encode(vals):
        if len(vals) == 0:
            return point
        if len(vals) == 1:
            return vals[0]
        return inv[(vals[0], vals[1])]

    actions = {}
    for m, (dom, cod) in mc.multimorphisms.items():
        n = len(dom)
        lab = _mm_label((m,))
        table = {}
        for vals in itertools.product(*[on_objects[o] for o in dom]):
            table[vals] = p.actions[p_arrow(t, n)][(encode(vals), lab)]
        actions[m] = table
    return Multifunctor(mc, {o: list(s) for o, s in on_objects.items()},
                        actions)


def multifunctor_to_instance(fm, x):
    """Build the canonical-product instance of a multicategory model
    from a multifunctor (no validation; validators are the oracle)."""
    mc = x.multicategory
    t = x.theory
    k = max(t.size_of_object.values())

    elems = {0: [()]}
    for i in range(1, k + 1):
        elems[i] = [tp + ((o, v),) for tp in elems[i - 1]
                    for o in mc.objects for v in fm.on_objects[o]]

    def elem_label(tp):
        return _tuple_label(tuple(pair_label(o, v) for o, v in tp))

    carriers, labels, tup_of = {}, {}, {}
    for i in range(k + 1):
        ob = "x{}".format(i)
        carriers[ob] = FiniteSet([elem_label(tp) for tp in elems[i]])
        labels[ob] = {elem_label(tp): _tuple_label(tuple(o for o, _ in tp))
                      for tp in elems[i]}
        tup_of[ob] = {elem_label(tp): tp for tp in elems[i]}

    tight_cells = {}
    for f, (a, b, pf) in t.tight_data.items():
        tight_cells[f] = {
            elem_label(tp): elem_label(tuple(tp[v - 1] for v in pf))
            for tp in elems[a]}

    actions = {}
    for m, (a, b, pm) in t.loose_data.items():
        blocks = map_blocks(pm, b)
        table = {}
        for lab, names in x.mm_of[m].items():
            src = x.on_loose[m].left[lab]
            for tp in elems[a]:
                if labels["x{}".format(a)][elem_label(tp)] != src:
                    continue
                out = []
                for j in range(b):
                    mu = names[j]
                    vals = tuple(tp[i - 1][1] for i in blocks[j])
                    out.append((mc.multimorphisms[mu][1],
                                fm.actions[mu][vals]))
                table[(elem_label(tp), lab)] = elem_label(tuple(out))
        actions[m] = table
    return Instance(x, carriers, labels, tight_cells, actions)


def all_action_tables(mc, on_objects):
    """Every assignment of raw action tables for the given value sets
    (the common search space for instances and multifunctors)."""
    slots = sorted(mc.multimorphisms)
    per_slot = []
    for m in slots:
        dom, cod = mc.multimorphisms[m]
        keys = sorted(itertools.product(*[on_objects[o] for o in dom]))
        values = list(on_objects[cod])
        per_slot.append([dict(zip(keys, choice)) for choice in
                         itertools.product(values, repeat=len(keys))])
    for combo in itertools.product(*per_slot):
        yield dict(zip(slots, combo))


def cartesian_elements_check(p):
    """(instance cartesian-valid, elements model cartesian-valid);
    the two must agree."""
    from .elements import elements
    em, _, _ = elements(p)
    return (not validate_cartesian_instance(p),
            not validate_cartesian_model(em))


# ---------------------------------------------------------------------------
# cocartesian example over sq_finset_op: monoid operation tables
# ---------------------------------------------------------------------------

def build_cocartesian_example(t, monoid=None):
    """A single-object cartesian model of a sq_finset_op theory.

    Operations with inputs indexed by [a] are tuples of monoid elements,
    one weight per input; composition multiplies the weights along the
    chain, and every function between index sets acts by reindexing the
    weights (the coduplication/codeletion actions).  The default monoid
    is the two-element join semilattice; passing the one-element monoid
    gives the terminal example.
    """
    if monoid is None:
        monoid = (("0", "1"),
                  {(a, b): max(a, b) for a in "01" for b in "01"}, "0")
    elements, mult, unit = monoid
    k = max(t.size_of_object.values())

    point = "()"
    on_objects = {"s{}".format(i): FiniteSet([point])
                  for i in range(k + 1)}
    on_tight = {f: {point: point} for f in t.tight}

    on_loose, op_of = {}, {}
    for m, (a, b, pm) in t.loose_data.items():
        weights = sorted(itertools.product(elements, repeat=a))
        apex = [_mm_label(w) for w in weights]
        on_loose[m] = Span(on_objects["s{}".format(a)],
                           on_objects["s{}".format(b)],
                           FiniteSet(apex),
                           {z: point for z in apex}, {z: point for z in apex})
        op_of[m] = {_mm_label(w): w for w in weights}

    on_cells = {}
    for cell, (f, g, m, n) in t.cells.items():
        _, _, pf = t.tight_data[f]
        on_cells[cell] = {
            lab: _mm_label(tuple(w[i - 1] for i in pf))
            for lab, w in op_of[m].items()}

    laxators = {}
    for (m, n), mn in t.loose_comp.items():
        _, _, pm = t.loose_data[m]
        table = {}
        for lab_m, w in op_of[m].items():
            for lab_n, v in op_of[n].items():
                table[(lab_m, lab_n)] = _mm_label(
                    tuple(mult[(w[i], v[pm[i] - 1])] for i in range(len(w))))
        laxators[(m, n)] = table

    unitors = {"s{}".format(i): {point: _mm_label((unit,) * i)}
               for i in range(k + 1)}

    x = SpanModel(t, on_objects, on_tight, on_loose, on_cells,
                  laxators, unitors)
    x.op_of = op_of
    return x
