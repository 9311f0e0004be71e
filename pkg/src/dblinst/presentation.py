"""Bounded closure of double-theory presentations.

A presentation lists generating objects, tight and loose generators,
and relation pairs of composable words.  Closure runs the shared word
engine on the tight and the loose side separately and assembles the
identity cells.  Presentations with cell generators are accepted as
data, but closing them is only possible when the arrow closure already
fails (the usual way such presentations are infinite); a finite arrow
closure with leftover cell generators is rejected explicitly rather
than closed, since cell pasting words are not supported by the engine.
"""

from .errors import ClosureNotFinite, DblinstError, HomSetNotFinite
from .theories import identity_cell_boundaries, thin_double_theory
from .words import ClosedWordCategory


class TheoryPresentation:
    def __init__(self, objects, tight_gens=None, loose_gens=None,
                 cell_gens=None, tight_relations=None, loose_relations=None):
        self.objects = list(objects)
        self.tight_gens = dict(tight_gens or {})      # name -> (src, dst)
        self.loose_gens = dict(loose_gens or {})      # name -> (src, dst)
        # name -> (left tight word, right tight word, top loose, bottom loose)
        self.cell_gens = dict(cell_gens or {})
        self.tight_relations = list(tight_relations or [])
        self.loose_relations = list(loose_relations or [])


def _closed_arrows(closure):
    """Extract (arrows, identity, comp) dicts from a closed word category."""
    cat = closure.category
    return dict(cat.morphisms), dict(cat.identity), dict(cat.comp)


def close_presentation(p, bound):
    """Close a presentation to an explicit double theory.

    Raises ClosureNotFinite if either arrow closure keeps producing new
    classes at the word bound.
    """
    assert bound >= 1
    try:
        tight = ClosedWordCategory(p.objects, p.tight_gens,
                                   p.tight_relations, bound)
    except HomSetNotFinite as e:
        raise ClosureNotFinite("tight arrows: {}".format(e))
    try:
        loose = ClosedWordCategory(p.objects, p.loose_gens,
                                   p.loose_relations, bound)
    except HomSetNotFinite as e:
        raise ClosureNotFinite("loose arrows: {}".format(e))
    if p.cell_gens:
        raise DblinstError(
            "cell generators survived arrow closure; supply the theory "
            "explicitly (cell pasting words are not closed by the engine)")
    t_arrows, t_id, t_comp = _closed_arrows(tight)
    l_arrows, l_id, l_comp = _closed_arrows(loose)
    bnds = identity_cell_boundaries(t_arrows, l_arrows, t_id, l_id)
    return thin_double_theory(p.objects, t_arrows, t_id, t_comp,
                              l_arrows, l_id, l_comp, bnds)


def presentation_of_theory(t):
    """Read a presentation back off a closed theory.

    Only supported when the theory's cells are all identity cells; the
    relations record the full composition tables.
    """
    ids = set(t.cell_id_loose.values()) | set(t.cell_id_tight.values())
    assert set(t.cells) == ids, "theory has non-identity cells"
    tight_gens = {f: e for f, e in t.tight.items()
                  if f not in t.tight_id.values()}
    loose_gens = {m: e for m, e in t.loose.items()
                  if m not in t.loose_id.values()}

    def relations(arrows, ident, comp, gens):
        rels = []
        for (f, g), h in comp.items():
            if f not in gens or g not in gens:
                continue
            src = arrows[f][0]
            dst = arrows[g][1]
            rhs = (h,) if h in gens else ()
            rels.append((src, dst, (f, g), rhs))
        return rels

    return TheoryPresentation(
        t.objects, tight_gens, loose_gens, {},
        relations(t.tight, t.tight_id, t.tight_comp, tight_gens),
        relations(t.loose, t.loose_id, t.loose_comp, loose_gens))
