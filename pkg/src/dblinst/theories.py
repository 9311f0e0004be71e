"""Builtin finite double theories.

Most small theories here are *thin*: they carry at most one cell per
boundary, so the cell composition tables can be derived mechanically
from the boundary algebra.  The truncated families encode their tight
and loose arrows as explicit finite functions:

* ``monad_trunc(k)``: one object, tight powers t^0..t^k, and cells the
  weakly monotone maps between the powers (composition of cells is
  ordinal sum vertically and map composition horizontally).
* ``prom_trunc(k)``: objects x^0..x^k, tight arrows the coordinate
  selections (functions, contravariantly), loose arrows the monotone
  maps, with designated product structure.
* ``sq_finset_op(k)``: skeletal finite sets of size <= k, all functions
  as loose arrows, functions reversed as tight arrows, cells the
  commuting squares; carries the coproduct-as-product structure.
"""

from .theory import CartesianStructure, DoubleTheory


# ---------------------------------------------------------------------------
# thin theories: cells determined by their boundary


def _cell_name(f, g, m, n):
    return "c[{}|{}|{}|{}]".format(f, g, m, n)


def thin_double_theory(objects, tight, tight_id, tight_comp,
                       loose, loose_id, loose_comp, boundaries,
                       partial=False, cartesian=None):
    """Build a theory whose cells are exactly the given boundaries.

    ``boundaries`` is an iterable of (left, right, top, bottom) tuples;
    it must contain the identity boundaries and be closed under both
    pastings (an assertion fires otherwise, unless ``partial``).
    """
    boundaries = sorted(set(boundaries))
    cells = {_cell_name(*b): b for b in boundaries}
    by_boundary = {b: name for name, b in cells.items()}
    cell_id_loose, cell_id_tight = {}, {}
    for m, (x, y) in loose.items():
        b = (tight_id[x], tight_id[y], m, m)
        assert b in by_boundary, "missing identity boundary for loose {}".format(m)
        cell_id_loose[m] = by_boundary[b]
    for f, (x, y) in tight.items():
        b = (f, f, loose_id[x], loose_id[y])
        assert b in by_boundary, "missing identity boundary for tight {}".format(f)
        cell_id_tight[f] = by_boundary[b]
    vcomp, hcomp = {}, {}
    for a, (f1, g1, m1, n1) in cells.items():
        for b, (f2, g2, m2, n2) in cells.items():
            if n1 == m2:    # vertically composable
                lf = tight_comp.get((f1, f2))
                rf = tight_comp.get((g1, g2))
                if lf is not None and rf is not None:
                    target = by_boundary.get((lf, rf, m1, n2))
                    if target is not None:
                        vcomp[(a, b)] = target
                    else:
                        assert partial, \
                            "thin theory not closed under vertical pasting"
            if g1 == f2:    # horizontally composable
                top = loose_comp.get((m1, m2))
                bot = loose_comp.get((n1, n2))
                if top is not None and bot is not None:
                    target = by_boundary.get((f1, g2, top, bot))
                    if target is not None:
                        hcomp[(a, b)] = target
                    else:
                        assert partial, \
                            "thin theory not closed under horizontal pasting"
    return DoubleTheory(objects, tight, tight_id, tight_comp,
                        loose, loose_id, loose_comp,
                        cells, cell_id_loose, cell_id_tight,
                        vcomp, hcomp, partial=partial, cartesian=cartesian)


def identity_cell_boundaries(tight, loose, tight_id, loose_id):
    """Boundaries of the identity cells only (for cell-free theories)."""
    out = set()
    for m, (x, y) in loose.items():
        out.add((tight_id[x], tight_id[y], m, m))
    for f, (x, y) in tight.items():
        out.add((f, f, loose_id[x], loose_id[y]))
    return out


def _discrete_arrows(objects):
    """Identity-only arrow data on the given objects."""
    arrows = {"id:" + o: (o, o) for o in objects}
    ident = {o: "id:" + o for o in objects}
    comp = {(i, i): i for i in arrows}
    return arrows, ident, comp


# ---------------------------------------------------------------------------
# the small named theories


def terminal_theory():
    objects = ["*"]
    tight, tid, tcomp = _discrete_arrows(objects)
    loose, lid, lcomp = _discrete_arrows(objects)
    bnds = identity_cell_boundaries(tight, loose, tid, lid)
    return thin_double_theory(objects, tight, tid, tcomp,
                              loose, lid, lcomp, bnds)


def walking_loose_theory():
    """Two objects and a single nonidentity loose arrow between them."""
    objects = ["dom", "cod"]
    tight, tid, tcomp = _discrete_arrows(objects)
    loose = {"id:dom": ("dom", "dom"), "id:cod": ("cod", "cod"),
             "l": ("dom", "cod")}
    lid = {"dom": "id:dom", "cod": "id:cod"}
    lcomp = {("id:dom", "id:dom"): "id:dom", ("id:cod", "id:cod"): "id:cod",
             ("id:dom", "l"): "l", ("l", "id:cod"): "l"}
    bnds = identity_cell_boundaries(tight, loose, tid, lid)
    return thin_double_theory(objects, tight, tid, tcomp,
                              loose, lid, lcomp, bnds)


def walking_tight_theory():
    """Two objects and a single nonidentity tight arrow between them."""
    objects = ["top", "bot"]
    tight = {"id:top": ("top", "top"), "id:bot": ("bot", "bot"),
             "t": ("top", "bot")}
    tid = {"top": "id:top", "bot": "id:bot"}
    tcomp = {("id:top", "id:top"): "id:top", ("id:bot", "id:bot"): "id:bot",
             ("id:top", "t"): "t", ("t", "id:bot"): "t"}
    loose, lid, lcomp = _discrete_arrows(objects)
    bnds = identity_cell_boundaries(tight, loose, tid, lid)
    return thin_double_theory(objects, tight, tid, tcomp,
                              loose, lid, lcomp, bnds)


def walking_square_theory():
    """Four objects, two tights, two looses, one filling cell."""
    objects = ["tl", "tr", "bl", "br"]
    tight = {"id:" + o: (o, o) for o in objects}
    tight.update({"l": ("tl", "bl"), "r": ("tr", "br")})
    tid = {o: "id:" + o for o in objects}
    tcomp = {("id:" + o, "id:" + o): "id:" + o for o in objects}
    tcomp.update({("id:tl", "l"): "l", ("l", "id:bl"): "l",
                  ("id:tr", "r"): "r", ("r", "id:br"): "r"})
    loose = {"id:" + o: (o, o) for o in objects}
    loose.update({"top": ("tl", "tr"), "bot": ("bl", "br")})
    lid = {o: "id:" + o for o in objects}
    lcomp = {("id:" + o, "id:" + o): "id:" + o for o in objects}
    lcomp.update({("id:tl", "top"): "top", ("top", "id:tr"): "top",
                  ("id:bl", "bot"): "bot", ("bot", "id:br"): "bot"})
    bnds = identity_cell_boundaries(tight, loose, tid, lid)
    bnds.add(("l", "r", "top", "bot"))
    return thin_double_theory(objects, tight, tid, tcomp,
                              loose, lid, lcomp, bnds)


def signed_theory():
    """One object; loose arrows form the two-element sign group."""
    objects = ["*"]
    tight, tid, tcomp = _discrete_arrows(objects)
    loose = {"id:*": ("*", "*"), "sigma": ("*", "*")}
    lid = {"*": "id:*"}
    lcomp = {("id:*", "id:*"): "id:*",
             ("id:*", "sigma"): "sigma", ("sigma", "id:*"): "sigma",
             ("sigma", "sigma"): "id:*"}
    bnds = identity_cell_boundaries(tight, loose, tid, lid)
    return thin_double_theory(objects, tight, tid, tcomp,
                              loose, lid, lcomp, bnds)


def involution_cell_theory():
    """One object with a single nonidentity globular cell squaring to
    the identity cell.

    The cell monoid is the two-element group under both pastings (the
    shared unit forces the two compositions to agree).  Models of this
    theory are one-object categories equipped with a central involution
    given by translation; it powers the collage quotient fixtures.
    """
    objects = ["*"]
    tight, tid, tcomp = _discrete_arrows(objects)
    loose, lid, lcomp = _discrete_arrows(objects)
    cid, alpha = "c[id]", "alpha"
    cells = {cid: ("id:*", "id:*", "id:*", "id:*"),
             alpha: ("id:*", "id:*", "id:*", "id:*")}
    table = {(cid, cid): cid, (cid, alpha): alpha,
             (alpha, cid): alpha, (alpha, alpha): cid}
    return DoubleTheory(objects, tight, tid, tcomp, loose, lid, lcomp,
                        cells, {"id:*": cid}, {"id:*": cid},
                        dict(table), dict(table))


# ---------------------------------------------------------------------------
# monotone maps and finite functions, encoded as value tuples


def monotone_maps(i, j):
    """Weakly increasing tuples of length i with values in 1..j."""
    if i == 0:
        return [()]
    out = []

    def rec(prefix, lo):
        if len(prefix) == i:
            out.append(tuple(prefix))
            return
        for v in range(lo, j + 1):
            rec(prefix + [v], v)

    rec([], 1)
    return out


def all_maps(i, j):
    """All tuples of length i with values in 1..j."""
    if i == 0:
        return [()]
    out = [()]
    for _ in range(i):
        out = [t + (v,) for t in out for v in range(1, j + 1)]
    return sorted(out)


def compose_maps(f, g):
    """Apply f: [a]->[b] then g: [b]->[c] (both value tuples)."""
    return tuple(g[v - 1] for v in f)


def ordinal_sum(f, g, shift):
    """Block sum of f: [a]->[b] and g: [c]->[d]; ``shift`` = b."""
    return f + tuple(v + shift for v in g)


def map_blocks(phi, b):
    """Preimages of 1..b under a value tuple, in coordinate order."""
    return [[i + 1 for i, v in enumerate(phi) if v == j]
            for j in range(1, b + 1)]


def _fn_name(prefix, a, b, values):
    return "{}:{}-{}:{}".format(prefix, a, b, ".".join(str(v) for v in values))


# ---------------------------------------------------------------------------
# monad_trunc


def monad_trunc_theory(k):
    """Tight monad powers t^0..t^k with monotone-map cells."""
    assert k >= 0
    objects = ["x"]
    tight = {"t{}".format(i): ("x", "x") for i in range(k + 1)}
    tid = {"x": "t0"}
    tcomp = {("t{}".format(i), "t{}".format(j)): "t{}".format(i + j)
             for i in range(k + 1) for j in range(k + 1) if i + j <= k}
    loose, lid, lcomp = _discrete_arrows(objects)

    cells = {}
    data = {}   # name -> (i, j, values)
    for i in range(k + 1):
        for j in range(k + 1):
            for phi in monotone_maps(i, j):
                name = _fn_name("mm", i, j, phi)
                cells[name] = ("t{}".format(i), "t{}".format(j), "id:x", "id:x")
                data[name] = (i, j, phi)
    by_data = {v: n for n, v in data.items()}
    cell_id_tight = {"t{}".format(i):
                     by_data[(i, i, tuple(range(1, i + 1)))]
                     for i in range(k + 1)}
    cell_id_loose = {"id:x": cell_id_tight["t0"]}
    vcomp, hcomp = {}, {}
    for a, (i1, j1, p1) in data.items():
        for b, (i2, j2, p2) in data.items():
            if i1 + i2 <= k and j1 + j2 <= k:
                vcomp[(a, b)] = by_data[(i1 + i2, j1 + j2,
                                         ordinal_sum(p1, p2, j1))]
            if j1 == i2:
                hcomp[(a, b)] = by_data[(i1, j2, compose_maps(p1, p2))]
    return DoubleTheory(objects, tight, tid, tcomp, loose, lid, lcomp,
                        cells, cell_id_loose, cell_id_tight,
                        vcomp, hcomp, partial=(k >= 1))


# ---------------------------------------------------------------------------
# prom_trunc and sq_finset_op


def _power_theory(k, obj_prefix, loose_maps, block_respecting):
    """Common builder for the two finite-function theories.

    Objects are ``<prefix>0..<prefix>k`` standing for sizes 0..k.  A
    tight arrow from size a to size b is a function [b] -> [a] (read
    contravariantly: coordinate selection for products, reversal for
    the opposite orientation).  A loose arrow from a to b is a function
    [a] -> [b], drawn from ``loose_maps``.  Cells are the commuting
    squares: (f, g, m, n) is a cell iff m after f equals n then g as
    functions; with ``block_respecting`` set, the tight side must
    additionally restrict to an order isomorphism from each block of
    the bottom onto the matching block of the top (the cells generated
    by products and identities, with no hidden permutation or
    diagonal).
    """
    objects = ["{}{}".format(obj_prefix, i) for i in range(k + 1)]

    def ob(i):
        return "{}{}".format(obj_prefix, i)

    tight, tdata = {}, {}
    for a in range(k + 1):
        for b in range(k + 1):
            for phi in all_maps(b, a):
                name = _fn_name("tf", a, b, phi)
                tight[name] = (ob(a), ob(b))
                tdata[name] = (a, b, phi)
    t_by_data = {v: n for n, v in tdata.items()}
    tid = {ob(a): t_by_data[(a, a, tuple(range(1, a + 1)))]
           for a in range(k + 1)}
    tcomp = {}
    for f, (a, b, pf) in tdata.items():
        for g, (b2, c, pg) in tdata.items():
            if b == b2:
                # (f then g)* = f* after g*: [c] -> [b] -> [a]
                tcomp[(f, g)] = t_by_data[(a, c, compose_maps(pg, pf))]

    loose, ldata = {}, {}
    for a in range(k + 1):
        for b in range(k + 1):
            for phi in loose_maps(a, b):
                name = _fn_name("lf", a, b, phi)
                loose[name] = (ob(a), ob(b))
                ldata[name] = (a, b, phi)
    l_by_data = {v: n for n, v in ldata.items()}
    lid = {ob(a): l_by_data[(a, a, tuple(range(1, a + 1)))]
           for a in range(k + 1)}
    lcomp = {}
    for m, (a, b, pm) in ldata.items():
        for n, (b2, c, pn) in ldata.items():
            if b == b2:
                lcomp[(m, n)] = l_by_data[(a, c, compose_maps(pm, pn))]

    def square_ok(pf, pg, pm, pn, a, b, b1):
        if compose_maps(pf, pm) != compose_maps(pn, pg):
            return False
        if not block_respecting:
            return True
        top_blocks = map_blocks(pm, b)
        for j, block in enumerate(map_blocks(pn, b1), start=1):
            if [pf[i - 1] for i in block] != top_blocks[pg[j - 1] - 1]:
                return False
        return True

    boundaries = []
    for f, (u, a1, pf) in tdata.items():
        for m, (u2, v, pm) in ldata.items():
            if u != u2:
                continue
            for g, (v2, b1, pg) in tdata.items():
                if v != v2:
                    continue
                # the bottom is forced on the image of f*; enumerate the rest
                for n, (a2, b2, pn) in ldata.items():
                    if a2 != a1 or b2 != b1:
                        continue
                    if square_ok(pf, pg, pm, pn, u, v, b1):
                        boundaries.append((f, g, m, n))

    # designated products: sizes add, witnesses are block inclusions
    product_object, proj_tight = {}, {}
    for a in range(k + 1):
        for b in range(k + 1):
            if a + b <= k:
                product_object[(ob(a), ob(b))] = ob(a + b)
                incl1 = tuple(range(1, a + 1))
                incl2 = tuple(range(a + 1, a + b + 1))
                proj_tight[(ob(a), ob(b))] = (
                    t_by_data[(a + b, a, incl1)],
                    t_by_data[(a + b, b, incl2)])
    product_loose, proj_cells = {}, {}
    for m1, (a1, b1, p1) in ldata.items():
        for m2, (a2, b2, p2) in ldata.items():
            if a1 + a2 <= k and b1 + b2 <= k:
                m12 = l_by_data[(a1 + a2, b1 + b2, ordinal_sum(p1, p2, b1))]
                product_loose[(m1, m2)] = m12
                fa1 = t_by_data[(a1 + a2, a1, tuple(range(1, a1 + 1)))]
                fb1 = t_by_data[(b1 + b2, b1, tuple(range(1, b1 + 1)))]
                fa2 = t_by_data[(a1 + a2, a2, tuple(range(a1 + 1, a1 + a2 + 1)))]
                fb2 = t_by_data[(b1 + b2, b2, tuple(range(b1 + 1, b1 + b2 + 1)))]
                proj_cells[(m1, m2)] = (_cell_name(fa1, fb1, m12, m1),
                                        _cell_name(fa2, fb2, m12, m2))
    terminal_tight = {ob(a): t_by_data[(a, 0, ())] for a in range(k + 1)}
    cart = CartesianStructure(ob(0), terminal_tight, product_object,
                              proj_tight, product_loose, proj_cells)
    t = thin_double_theory(objects, tight, tid, tcomp,
                           loose, lid, lcomp, boundaries, cartesian=cart)
    t.size_of_object = {ob(i): i for i in range(k + 1)}
    t.tight_data = tdata
    t.loose_data = ldata
    return t


def prom_trunc_theory(k):
    """Finite-product powers of one object with monotone loose arrows.

    The loose arrow from x^n to x is the n-ary operation proarrow; all
    other loose arrows are its product-induced relatives.
    """
    assert 0 <= k <= 2, "truncation beyond 2 produces unmanageable tables"
    return _power_theory(k, "x", monotone_maps, block_respecting=True)


def sq_finset_op_theory(k):
    """Squares of skeletal finite sets of size <= k, tight side reversed."""
    assert 0 <= k <= 2, "truncation beyond 2 produces unmanageable tables"
    return _power_theory(k, "s", all_maps, block_respecting=False)


def p_arrow(t, n):
    """The n-ary operation proarrow x^n -> x of a prom_trunc theory."""
    phi = tuple(1 for _ in range(n))
    return _fn_name("lf", n, 1, phi)


# ---------------------------------------------------------------------------
# dispatch


def builtin_theory(name, k=None):
    """Look up a named theory; truncated families take a bound k."""
    simple = {
        "terminal": terminal_theory,
        "walking_loose": walking_loose_theory,
        "walking_tight": walking_tight_theory,
        "walking_square": walking_square_theory,
        "signed": signed_theory,
        "involution_cell": involution_cell_theory,
    }
    if name in simple:
        return simple[name]()
    family = {
        "monad_trunc": monad_trunc_theory,
        "prom_trunc": prom_trunc_theory,
        "sq_finset_op": sq_finset_op_theory,
    }
    if name in family:
        assert k is not None and k >= 0, "family theory needs a bound"
        return family[name](k)
    raise ValueError("unknown builtin theory: {}".format(name))
