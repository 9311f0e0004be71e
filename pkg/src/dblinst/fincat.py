"""Explicit finite categories, functors between them, and copresheaves.

A ``FinCategory`` stores its objects, named morphisms with endpoints, an
identity per object, and a total composition table.  Composition is
written diagrammatically throughout: ``comp[(f, g)]`` is "f then g".
"""

from .finset import FiniteSet, compose_tables, identity_table, is_function


class FinCategory:
    """A finite category with a total, tabulated composition."""

    def __init__(self, objects, morphisms, identity, comp):
        self.objects = tuple(objects)
        # name -> (src, dst)
        self.morphisms = dict(morphisms)
        # object -> identity morphism name
        self.identity = dict(identity)
        # (f, g) -> "f then g"
        self.comp = dict(comp)

    def src(self, f):
        return self.morphisms[f][0]

    def dst(self, f):
        return self.morphisms[f][1]

    def hom(self, a, b):
        return sorted(f for f, (s, d) in self.morphisms.items()
                      if s == a and d == b)

    def morphisms_from(self, a):
        return sorted(f for f, (s, _) in self.morphisms.items() if s == a)

    def compose(self, f, g):
        assert self.dst(f) == self.src(g), "morphisms not composable"
        return self.comp[(f, g)]

    def compose_word(self, obj, word):
        """Compose a list of morphism names starting at ``obj``."""
        out = self.identity[obj]
        for f in word:
            out = self.compose(out, f)
        return out

    def validate(self):
        """Report violations of the category axioms (exhaustive)."""
        report = []
        for o in self.objects:
            i = self.identity.get(o)
            if i is None or self.morphisms.get(i) != (o, o):
                report.append("identity of {} ill-formed".format(o))
        for f, (s, d) in self.morphisms.items():
            if s not in self.objects or d not in self.objects:
                report.append("morphism {} has unknown endpoints".format(f))
            if self.comp.get((self.identity[s], f)) != f:
                report.append("left unit fails at {}".format(f))
            if self.comp.get((f, self.identity[d])) != f:
                report.append("right unit fails at {}".format(f))
        for f, (fs, fd) in self.morphisms.items():
            for g, (gs, gd) in self.morphisms.items():
                if fd != gs:
                    continue
                fg = self.comp.get((f, g))
                if fg is None or self.morphisms.get(fg) != (fs, gd):
                    report.append("composite {};{} ill-formed".format(f, g))
                    continue
                for h, (hs, hd) in self.morphisms.items():
                    if gd != hs:
                        continue
                    if self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                        report.append(
                            "associativity fails at ({},{},{})".format(f, g, h))
        return report


class FinFunctor:
    """A functor between explicit finite categories."""

    def __init__(self, source, target, on_objects, on_morphisms):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)

    def validate(self):
        report = []
        c, d = self.source, self.target
        for o in c.objects:
            if self.on_objects.get(o) not in d.objects:
                report.append("object {} not mapped".format(o))
        for f, (s, t) in c.morphisms.items():
            ff = self.on_morphisms.get(f)
            if ff is None or d.morphisms.get(ff) != (self.on_objects[s],
                                                     self.on_objects[t]):
                report.append("morphism {} not mapped over endpoints".format(f))
        if report:
            return report
        for o in c.objects:
            if self.on_morphisms[c.identity[o]] != d.identity[self.on_objects[o]]:
                report.append("identity of {} not preserved".format(o))
        for (f, g), fg in c.comp.items():
            lhs = d.comp[(self.on_morphisms[f], self.on_morphisms[g])]
            if lhs != self.on_morphisms[fg]:
                report.append("composition not preserved at ({},{})".format(f, g))
        return report

    def is_classical_dopf(self):
        """Unique-lifting check: discrete opfibration of categories.

        For every object e of the source and morphism g out of its image,
        exactly one morphism out of e maps to g.  Returns (ok, failures).
        """
        failures = []
        c, d = self.source, self.target
        for e in c.objects:
            image = self.on_objects[e]
            for g in d.morphisms_from(image):
                lifts = [u for u in c.morphisms_from(e)
                         if self.on_morphisms[u] == g]
                if len(lifts) != 1:
                    failures.append((e, g, len(lifts)))
        return (not failures, failures)


def compose_functors(f, g):
    assert f.target is g.source or f.target.morphisms == g.source.morphisms
    return FinFunctor(
        f.source, g.target,
        {o: g.on_objects[v] for o, v in f.on_objects.items()},
        {m: g.on_morphisms[v] for m, v in f.on_morphisms.items()})


class Copresheaf:
    """A set-valued functor on an explicit finite category."""

    def __init__(self, base, on_objects, on_morphisms):
        self.base = base
        self.on_objects = {o: s if isinstance(s, FiniteSet) else FiniteSet(s)
                           for o, s in on_objects.items()}
        self.on_morphisms = {m: dict(t) for m, t in on_morphisms.items()}

    def validate(self):
        report = []
        b = self.base
        for o in b.objects:
            if o not in self.on_objects:
                report.append("object {} has no value".format(o))
        for f, (s, d) in b.morphisms.items():
            t = self.on_morphisms.get(f)
            if t is None or not is_function(t, self.on_objects[s],
                                            self.on_objects[d]):
                report.append("morphism {} has no total action".format(f))
        if report:
            return report
        for o in b.objects:
            if self.on_morphisms[b.identity[o]] != identity_table(self.on_objects[o]):
                report.append("identity of {} not sent to identity".format(o))
        for (f, g), fg in b.comp.items():
            got = compose_tables(self.on_morphisms[f], self.on_morphisms[g])
            if got != self.on_morphisms[fg]:
                report.append("functoriality fails at ({},{})".format(f, g))
        return report


def enumerate_natural_transformations(c1, c2):
    """All natural transformations between copresheaves on the same base.

    Brute-force with early pruning; components ordered by object, then
    componentwise by the source element order.
    """
    base = c1.base
    objs = list(base.objects)
    results = []

    def extend(idx, components):
        if idx == len(objs):
            results.append({o: dict(t) for o, t in components.items()})
            return
        o = objs[idx]
        src = c1.on_objects[o]
        dst = c2.on_objects[o]
        candidates = [dict(zip(src, choice))
                      for choice in _tuples(list(dst), len(src))]
        for comp in candidates:
            components[o] = comp
            if _natural_so_far(c1, c2, components):
                extend(idx + 1, components)
            del components[o]

    extend(0, {})
    return results


def _tuples(pool, n):
    if n == 0:
        yield ()
        return
    for rest in _tuples(pool, n - 1):
        for x in pool:
            yield rest + (x,)


def _natural_so_far(c1, c2, components):
    base = c1.base
    for f, (s, d) in base.morphisms.items():
        if s in components and d in components:
            for x in c1.on_objects[s]:
                lhs = components[d][c1.on_morphisms[f][x]]
                rhs = c2.on_morphisms[f][components[s][x]]
                if lhs != rhs:
                    return False
    return True
