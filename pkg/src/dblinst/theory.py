"""Finite strict double theories with fully tabulated composition.

A ``DoubleTheory`` is a finite strict double category: objects, tight
arrows (composed diagrammatically, ``f then g``), loose arrows with a
strict tabulated composition, and cells filling squares.  A cell has a
boundary (left tight, right tight, top loose, bottom loose): it maps its
top loose arrow to its bottom one over the two tight sides.

Truncated families (monad powers, finite product powers) are *partial*
theories: composites that would leave the truncation are simply absent
from the tables and the theory carries a ``partial`` flag.  Validation
only checks tabulated composites in that case.
"""


class CartesianStructure:
    """Designated finite products for a double theory.

    Products are extra data, not a search: the theory declares its
    terminal object, binary product objects with tight projections, and
    binary products of loose arrows with projection cells.  Pairing
    tables are derived by uniqueness search at validation time and
    cached on the structure.
    """

    def __init__(self, terminal_object, terminal_tight, product_object,
                 proj_tight, product_loose, proj_cells):
        self.terminal_object = terminal_object
        self.terminal_tight = dict(terminal_tight)      # d -> tight d -> 1
        self.product_object = dict(product_object)      # (d1,d2) -> d1xd2
        self.proj_tight = dict(proj_tight)              # (d1,d2) -> (p1,p2)
        self.product_loose = dict(product_loose)        # (m1,m2) -> m1xm2
        self.proj_cells = dict(proj_cells)              # (m1,m2) -> (c1,c2)
        self.pair_tight = {}
        self.pair_cells = {}


class DoubleTheory:
    def __init__(self, objects, tight, tight_id, tight_comp,
                 loose, loose_id, loose_comp,
                 cells, cell_id_loose, cell_id_tight,
                 cell_vcomp, cell_hcomp,
                 partial=False, cartesian=None):
        self.objects = tuple(objects)
        self.tight = dict(tight)            # name -> (src, dst)
        self.tight_id = dict(tight_id)      # object -> name
        self.tight_comp = dict(tight_comp)  # (f, g) -> "f then g"
        self.loose = dict(loose)            # name -> (src, dst)
        self.loose_id = dict(loose_id)      # object -> name
        self.loose_comp = dict(loose_comp)  # (m, n) -> m (.) n
        # name -> (left tight, right tight, top loose, bottom loose)
        self.cells = dict(cells)
        self.cell_id_loose = dict(cell_id_loose)  # m -> identity cell for vcomp
        self.cell_id_tight = dict(cell_id_tight)  # f -> identity cell for hcomp
        self.cell_vcomp = dict(cell_vcomp)
        self.cell_hcomp = dict(cell_hcomp)
        self.partial = partial
        self.cartesian = cartesian

    # -- accessors -----------------------------------------------------------

    def tight_src(self, f):
        return self.tight[f][0]

    def tight_dst(self, f):
        return self.tight[f][1]

    def loose_src(self, m):
        return self.loose[m][0]

    def loose_dst(self, m):
        return self.loose[m][1]

    def cell_left(self, a):
        return self.cells[a][0]

    def cell_right(self, a):
        return self.cells[a][1]

    def cell_top(self, a):
        return self.cells[a][2]

    def cell_bottom(self, a):
        return self.cells[a][3]

    def composable_loose_pairs(self):
        return [(m, n) for m in self.loose for n in self.loose
                if self.loose_dst(m) == self.loose_src(n)
                and (m, n) in self.loose_comp]

    def __repr__(self):
        return "DoubleTheory(objects={}, tight={}, loose={}, cells={})".format(
            len(self.objects), len(self.tight), len(self.loose), len(self.cells))


def _check_category(report, kind, objects, arrows, ident, comp, partial):
    for o in objects:
        i = ident.get(o)
        if i is None or arrows.get(i) != (o, o):
            report.append("{}: identity of {} ill-formed".format(kind, o))
            return
    for f, (s, d) in arrows.items():
        if s not in objects or d not in objects:
            report.append("{}: endpoints of {} unknown".format(kind, f))
        if comp.get((ident[s], f)) != f:
            report.append("{}: left unit fails at {}".format(kind, f))
        if comp.get((f, ident[d])) != f:
            report.append("{}: right unit fails at {}".format(kind, f))
    for (f, g), h in comp.items():
        if arrows[f][1] != arrows[g][0]:
            report.append("{}: table entry ({},{}) not composable".format(kind, f, g))
        elif arrows.get(h) != (arrows[f][0], arrows[g][1]):
            report.append("{}: composite of ({},{}) has wrong endpoints".format(kind, f, g))
    for f, (fs, fd) in arrows.items():
        for g, (gs, gd) in arrows.items():
            if fd != gs:
                continue
            if (f, g) not in comp:
                if not partial:
                    report.append("{}: missing composite ({},{})".format(kind, f, g))
                continue
            fg = comp[(f, g)]
            for h, (hs, hd) in arrows.items():
                if gd != hs:
                    continue
                if (g, h) not in comp:
                    continue
                gh = comp[(g, h)]
                if (fg, h) in comp and (f, gh) in comp:
                    if comp[(fg, h)] != comp[(f, gh)]:
                        report.append("{}: associativity fails at ({},{},{})"
                                      .format(kind, f, g, h))


def validate_theory(t):
    """Exhaustive strict-double-category axiom check; returns a report."""
    report = []
    _check_category(report, "tight", t.objects, t.tight, t.tight_id,
                    t.tight_comp, t.partial)
    _check_category(report, "loose", t.objects, t.loose, t.loose_id,
                    t.loose_comp, t.partial)
    for d, m in t.loose_id.items():
        if t.loose.get(m) != (d, d):
            report.append("loose identity of {} has wrong endpoints".format(d))
    if report:
        return report

    # cell boundaries
    for a, (f, g, m, n) in t.cells.items():
        ok = (f in t.tight and g in t.tight and m in t.loose and n in t.loose
              and t.tight[f] == (t.loose_src(m), t.loose_src(n))
              and t.tight[g] == (t.loose_dst(m), t.loose_dst(n)))
        if not ok:
            report.append("cell {} has inconsistent boundary".format(a))
    if report:
        return report

    # identity cells
    for m, a in t.cell_id_loose.items():
        x, y = t.loose[m]
        if t.cells.get(a) != (t.tight_id[x], t.tight_id[y], m, m):
            report.append("vertical identity cell of {} ill-formed".format(m))
    for f, a in t.cell_id_tight.items():
        x, y = t.tight[f]
        if t.cells.get(a) != (f, f, t.loose_id[x], t.loose_id[y]):
            report.append("horizontal identity cell of {} ill-formed".format(f))
    for d in t.objects:
        if t.cell_id_loose.get(t.loose_id[d]) != t.cell_id_tight.get(t.tight_id[d]):
            report.append("identity cells disagree at object {}".format(d))

    # vertical composition
    def v_composable(a, b):
        return t.cell_bottom(a) == t.cell_top(b)

    for a in t.cells:
        for b in t.cells:
            if not v_composable(a, b):
                continue
            lf = t.tight_comp.get((t.cell_left(a), t.cell_left(b)))
            rf = t.tight_comp.get((t.cell_right(a), t.cell_right(b)))
            if lf is None or rf is None:
                if not t.partial and (a, b) in t.cell_vcomp:
                    report.append("vertical composite ({},{}) over missing tights"
                                  .format(a, b))
                continue
            c = t.cell_vcomp.get((a, b))
            if c is None:
                if not t.partial:
                    report.append("missing vertical composite ({},{})".format(a, b))
                continue
            want = (lf, rf, t.cell_top(a), t.cell_bottom(b))
            if t.cells.get(c) != want:
                report.append("vertical composite ({},{}) has wrong boundary"
                              .format(a, b))
        ia = t.cell_id_loose.get(t.cell_top(a))
        ib = t.cell_id_loose.get(t.cell_bottom(a))
        if ia and t.cell_vcomp.get((ia, a)) != a:
            report.append("vertical unit fails at {}".format(a))
        if ib and t.cell_vcomp.get((a, ib)) != a:
            report.append("vertical unit fails at {}".format(a))

    # horizontal composition
    def h_composable(a, b):
        return (t.cell_right(a) == t.cell_left(b)
                and (t.cell_top(a), t.cell_top(b)) in t.loose_comp
                and (t.cell_bottom(a), t.cell_bottom(b)) in t.loose_comp)

    for a in t.cells:
        for b in t.cells:
            if t.cell_right(a) != t.cell_left(b):
                continue
            if not h_composable(a, b):
                continue
            c = t.cell_hcomp.get((a, b))
            if c is None:
                if not t.partial:
                    report.append("missing horizontal composite ({},{})".format(a, b))
                continue
            want = (t.cell_left(a), t.cell_right(b),
                    t.loose_comp[(t.cell_top(a), t.cell_top(b))],
                    t.loose_comp[(t.cell_bottom(a), t.cell_bottom(b))])
            if t.cells.get(c) != want:
                report.append("horizontal composite ({},{}) has wrong boundary"
                              .format(a, b))
        la = t.cell_id_tight.get(t.cell_left(a))
        ra = t.cell_id_tight.get(t.cell_right(a))
        if la and t.cell_hcomp.get((la, a)) != a:
            report.append("horizontal unit fails at {}".format(a))
        if ra and t.cell_hcomp.get((a, ra)) != a:
            report.append("horizontal unit fails at {}".format(a))

    # associativity of both cell compositions (on tabulated entries)
    for (a, b), ab in t.cell_vcomp.items():
        for c in t.cells:
            if (b, c) in t.cell_vcomp and (ab, c) in t.cell_vcomp \
                    and (a, t.cell_vcomp[(b, c)]) in t.cell_vcomp:
                if t.cell_vcomp[(ab, c)] != t.cell_vcomp[(a, t.cell_vcomp[(b, c)])]:
                    report.append("vertical associativity fails at ({},{},{})"
                                  .format(a, b, c))
    for (a, b), ab in t.cell_hcomp.items():
        for c in t.cells:
            if (b, c) in t.cell_hcomp and (ab, c) in t.cell_hcomp \
                    and (a, t.cell_hcomp[(b, c)]) in t.cell_hcomp:
                if t.cell_hcomp[(ab, c)] != t.cell_hcomp[(a, t.cell_hcomp[(b, c)])]:
                    report.append("horizontal associativity fails at ({},{},{})"
                                  .format(a, b, c))

    # interchange on all tabulated 2x2 grids
    for (a, b), ab in t.cell_hcomp.items():
        for (c, d), cd in t.cell_hcomp.items():
            if (a, c) in t.cell_vcomp and (b, d) in t.cell_vcomp \
                    and (ab, cd) in t.cell_vcomp:
                ac, bd = t.cell_vcomp[(a, c)], t.cell_vcomp[(b, d)]
                if (ac, bd) in t.cell_hcomp:
                    if t.cell_hcomp[(ac, bd)] != t.cell_vcomp[(ab, cd)]:
                        report.append("interchange fails at grid ({},{};{},{})"
                                      .format(a, b, c, d))

    if t.cartesian is not None:
        _check_cartesian(report, t)
    return report


def _check_cartesian(report, t):
    c = t.cartesian
    if c.terminal_object not in t.objects:
        report.append("cartesian: unknown terminal object")
        return
    for d in t.objects:
        f = c.terminal_tight.get(d)
        if f is None or t.tight.get(f) != (d, c.terminal_object):
            report.append("cartesian: terminal arrow at {} ill-formed".format(d))
            continue
        # uniqueness of the map to the terminal object
        others = [g for g, (s, e) in t.tight.items()
                  if s == d and e == c.terminal_object]
        if others != [f] and len(others) != 1:
            report.append("cartesian: map {} -> terminal not unique".format(d))
    for (d1, d2), p in c.product_object.items():
        p1, p2 = c.proj_tight[(d1, d2)]
        if t.tight.get(p1) != (p, d1) or t.tight.get(p2) != (p, d2):
            report.append("cartesian: projections of {}x{} ill-formed"
                          .format(d1, d2))
            continue
        for f, (fs, fd) in t.tight.items():
            if fd != d1:
                continue
            for g, (gs, gd) in t.tight.items():
                if gd != d2 or gs != fs:
                    continue
                pairs = [h for h, (hs, hd) in t.tight.items()
                         if hs == fs and hd == p
                         and t.tight_comp.get((h, p1)) == f
                         and t.tight_comp.get((h, p2)) == g]
                if len(pairs) != 1:
                    report.append("cartesian: pairing of ({},{}) not unique"
                                  .format(f, g))
                else:
                    c.pair_tight[(f, g)] = pairs[0]
    for (m1, m2), m12 in c.product_loose.items():
        c1, c2 = c.proj_cells[(m1, m2)]
        ok = (t.cells.get(c1) is not None and t.cells.get(c2) is not None
              and t.cell_top(c1) == m12 and t.cell_bottom(c1) == m1
              and t.cell_top(c2) == m12 and t.cell_bottom(c2) == m2)
        if not ok:
            report.append("cartesian: projection cells of {}x{} ill-formed"
                          .format(m1, m2))
            continue
        for a in t.cells:
            if t.cell_bottom(a) != m1:
                continue
            for b in t.cells:
                if t.cell_bottom(b) != m2 or t.cell_top(a) != t.cell_top(b):
                    continue
                pairs = [h for h in t.cells
                         if t.cell_top(h) == t.cell_top(a)
                         and t.cell_bottom(h) == m12
                         and t.cell_vcomp.get((h, c1)) == a
                         and t.cell_vcomp.get((h, c2)) == b]
                if len(pairs) == 1:
                    c.pair_cells[(a, b)] = pairs[0]
                elif len(pairs) > 1:
                    report.append("cartesian: cell pairing of ({},{}) ambiguous"
                                  .format(a, b))
                # a missing pairing can be legitimate in a truncated theory
                elif not t.partial:
                    report.append("cartesian: cell pairing of ({},{}) missing"
                                  .format(a, b))
