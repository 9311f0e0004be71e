"""Bounded word closure for finitely presented categories.

Words in the generators are enumerated breadth-first and identified by a
ground congruence closure over the relation instances (union-find keyed
by words, with substitution instances of the relations and one-step
extension propagation).  Closure succeeds when a frontier stabilizes:
every congruence class already has a representative shorter than the
frontier length.  Class representatives are the length-lexicographically
least words, generators ordered by declaration order, which makes all
downstream tables deterministic.
"""

from .errors import HomSetNotFinite, HomSetTooLarge, IllFormedRelation
from .fincat import FinCategory

_WORD_SEP = ";"


class ClosedWordCategory:
    """The result of closing a presentation: an explicit finite category
    together with the map from generator words to morphism names."""

    def __init__(self, objects, generators, relations, bound, max_classes=10000):
        assert bound >= 1
        self.objects = list(objects)
        self.generators = dict(generators)
        self._gen_order = {g: i for i, g in enumerate(generators)}
        self._relations = [self._check_relation(r) for r in relations]
        self._cap = bound + 2
        self._max_classes = max_classes
        self._parent = {}
        self._words = set()
        self._close(bound)
        self._build()

    # -- presentation sanity ------------------------------------------------

    def _check_relation(self, rel):
        src, dst, w1, w2 = rel
        for w in (w1, w2):
            if self._path(src, tuple(w)) is None:
                raise IllFormedRelation(
                    "word {} does not start at {}".format(list(w), src))
            if self._endpoint(src, tuple(w)) != dst:
                raise IllFormedRelation(
                    "relation words are not parallel at {}".format(list(w)))
        return (src, dst, tuple(w1), tuple(w2))

    def _path(self, src, gens):
        """Objects visited by a word, or None if not composable."""
        path = [src]
        for g in gens:
            info = self.generators.get(g)
            if info is None or info[0] != path[-1]:
                return None
            path.append(info[1])
        return path

    def _endpoint(self, src, gens):
        path = self._path(src, gens)
        return None if path is None else path[-1]

    # -- union-find over words ----------------------------------------------

    def _order_key(self, word):
        _, gens = word
        return (len(gens), tuple(self._gen_order[g] for g in gens))

    def _add(self, word):
        if word in self._words:
            return False
        assert self._path(word[0], word[1]) is not None
        self._words.add(word)
        self._parent[word] = word
        return True

    def _find(self, word):
        root = word
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[word] != root:
            self._parent[word], word = root, self._parent[word]
        return root

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra == rb:
            return False
        if self._order_key(rb) < self._order_key(ra):
            ra, rb = rb, ra
        self._parent[rb] = ra
        return True

    # -- congruence saturation ----------------------------------------------

    def _relation_pass(self):
        changed = False
        for word in list(self._words):
            src, gens = word
            path = self._path(src, gens)
            for rs, _, w1, w2 in self._relations:
                for needle, other in ((w1, w2), (w2, w1)):
                    if not needle:
                        continue
                    n = len(needle)
                    for i in range(len(gens) - n + 1):
                        if path[i] != rs or gens[i:i + n] != needle:
                            continue
                        repl = (src, gens[:i] + other + gens[i + n:])
                        if len(repl[1]) > self._cap:
                            continue
                        self._add(repl)
                        changed |= self._union(word, repl)
        return changed

    def _extension_pass(self):
        changed = False
        classes = {}
        for w in self._words:
            classes.setdefault(self._find(w), []).append(w)
        for rep, members in classes.items():
            for g, (gs, _) in self.generators.items():
                # right extension by g
                exts = [(m[0], m[1] + (g,)) for m in members
                        if self._endpoint(*m) == gs]
                known = [e for e in exts if e in self._words]
                if known:
                    seed = (rep[0], rep[1] + (g,))
                    if self._endpoint(*rep) == gs and len(seed[1]) <= self._cap:
                        self._add(seed)
                        known.append(seed)
                    for e in known[1:]:
                        changed |= self._union(known[0], e)
                # left extension by g
                exts = [(gs, (g,) + m[1]) for m in members if m[0] == self.generators[g][1]]
                known = [e for e in exts if e in self._words]
                if known:
                    if rep[0] == self.generators[g][1] and len(rep[1]) + 1 <= self._cap:
                        seed = (gs, (g,) + rep[1])
                        self._add(seed)
                        known.append(seed)
                    for e in known[1:]:
                        changed |= self._union(known[0], e)
        return changed

    def _saturate(self):
        while True:
            changed = self._relation_pass()
            changed |= self._extension_pass()
            if not changed:
                break

    def _class_reps(self):
        reps = {}
        for w in self._words:
            r = self._find(w)
            if r not in reps or self._order_key(w) < self._order_key(reps[r]):
                reps[r] = w
        return reps

    def _close(self, bound):
        for o in self.objects:
            self._add((o, ()))
        for g, (s, _) in self.generators.items():
            self._add((s, (g,)))
        self._saturate()
        stable = False
        for length in range(1, bound + 1):
            reps = self._class_reps()
            if len(reps) > self._max_classes:
                raise HomSetTooLarge(
                    "{} congruence classes exceed cap".format(len(reps)))
            if not any(len(r[1]) == length for r in reps.values()):
                stable = True
                break
            if length == bound:
                raise HomSetNotFinite(
                    "new morphism classes still appear at word length {}".format(bound))
            for rep in reps.values():
                end = self._endpoint(*rep)
                for g, (gs, _) in self.generators.items():
                    if gs == end and len(rep[1]) + 1 <= self._cap:
                        self._add((rep[0], rep[1] + (g,)))
            self._saturate()
        assert stable
        # guard: one more extension round must not create classes
        before = len(self._class_reps())
        for rep in list(self._class_reps().values()):
            end = self._endpoint(*rep)
            for g, (gs, _) in self.generators.items():
                if gs == end and len(rep[1]) + 1 <= self._cap:
                    self._add((rep[0], rep[1] + (g,)))
        self._saturate()
        if len(self._class_reps()) != before:
            raise HomSetNotFinite("closure frontier failed to stabilize")

    # -- explicit category ---------------------------------------------------

    def _name_of(self, rep):
        src, gens = rep
        return "id:{}".format(src) if not gens else _WORD_SEP.join(gens)

    def _build(self):
        reps = self._class_reps()
        self._rep_of_root = dict(reps)
        names, identity = {}, {}
        self._name_of_root = {}
        self.rep_words = {}   # morphism name -> (src, generator word)
        for root, rep in reps.items():
            name = self._name_of(rep)
            assert name not in names, "ambiguous generator naming"
            names[name] = (rep[0], self._endpoint(*rep))
            self._name_of_root[root] = name
            self.rep_words[name] = rep
            if not rep[1]:
                identity[rep[0]] = name
        comp = {}
        for r1, rep1 in reps.items():
            for r2, rep2 in reps.items():
                if self._endpoint(*rep1) != rep2[0]:
                    continue
                comp[(self._name_of_root[r1], self._name_of_root[r2])] = \
                    self._fold_name(rep1[0], rep1[1] + rep2[1])
        self.category = FinCategory(self.objects, names, identity, comp)
        if len(names) <= 120:
            problems = self.category.validate()
            assert not problems, "closure produced a non-category: {}".format(problems)

    def _fold_name(self, src, gens):
        cur = (src, ())
        for g in gens:
            rep = self._rep_of_root[self._find(cur)]
            ext = (rep[0], rep[1] + (g,))
            if ext not in self._words:
                self._add(ext)
                self._saturate()
                # a genuinely new class here would contradict stabilization
                self._rep_of_root = dict(self._class_reps())
            cur = ext
        root = self._find(cur)
        name = self._name_of_root.get(root)
        if name is None:
            raise HomSetNotFinite("word escaped the stabilized closure")
        return name

    def word_class(self, src, gens):
        """Morphism name of a generator word starting at ``src``."""
        assert self._path(src, tuple(gens)) is not None, "word not composable"
        return self._fold_name(src, tuple(gens))
