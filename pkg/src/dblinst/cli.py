"""Command-line interface.

One verb per invocation; every input and output is a self-describing
JSON document.  Exit status 0 means success with an empty report, 1
means the requested check produced report entries, and 2 means the
computation could not be carried out (parse errors, non-finite
closures, unknown verbs).
"""

import argparse
import json
import os
import sys

from .errors import DblinstError, UnknownVerb
from . import fixtures as fx
from .serialize import (document_of, load_document, object_of,
                        save_document, FORMAT_VERSION)


def _bound(args):
    if getattr(args, "bound", None) is not None:
        return args.bound
    return int(os.environ.get("DBLINST_MAX_WORDLEN", "8"))


def _max_hom_card(args):
    return int(os.environ.get("DBLINST_MAX_HOM_CARD", "10000"))


def _emit_report(args, entries, extra=None):
    entries = list(entries)
    if args.json_report:
        doc = {"kind": "report", "format_version": FORMAT_VERSION,
               "ok": not entries, "entries": entries}
        doc.update(extra or {})
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for entry in entries:
            print(entry)
        if not entries:
            print("ok")
    return 1 if entries else 0


def _write(args, obj):
    doc = document_of(obj)
    if args.output:
        save_document(doc, args.output)
    else:
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    return 0


def _load(path, kinds):
    doc = load_document(path)
    if doc.get("kind") not in kinds:
        raise DblinstError("{}: expected one of {}, found {!r}"
                           .format(path, sorted(kinds), doc.get("kind")))
    return object_of(doc)


# ---------------------------------------------------------------------------
# verbs


def cmd_validate_theory(args):
    from .theory import validate_theory
    return _emit_report(args, validate_theory(_load(args.file, {"theory"})))


def cmd_validate_model(args):
    from .model import validate_model
    return _emit_report(args, validate_model(_load(args.file, {"model"})))


def cmd_validate_instance(args):
    from .instance import validate_instance
    return _emit_report(args,
                        validate_instance(_load(args.file, {"instance"})))


def cmd_collage(args):
    from .collage import collage_of_model
    return _write(args, collage_of_model(_load(args.file, {"model"})))


def cmd_close_category(args):
    from .collage import close_presented_category
    p = _load(args.file, {"presented_category"})
    closure = close_presented_category(p, _bound(args))
    return _write(args, closure.category)


def cmd_to_copresheaf(args):
    from .collage import (close_presented_category, collage_of_model,
                          instance_to_copresheaf)
    h = _load(args.file, {"instance"})
    closure = close_presented_category(collage_of_model(h.model),
                                       _bound(args))
    return _write(args, instance_to_copresheaf(h, closure))


def cmd_from_copresheaf(args):
    from .collage import (close_presented_category, collage_of_model,
                          copresheaf_to_instance)
    cp = _load(args.file, {"copresheaf"})
    x = _load(args.model, {"model"})
    closure = close_presented_category(collage_of_model(x), _bound(args))
    return _write(args, copresheaf_to_instance(cp, x, closure))


def cmd_elements(args):
    from .elements import elements
    _, pi, _ = elements(_load(args.file, {"instance"}))
    return _write(args, pi)


def cmd_nabla(args):
    from .elements import nabla
    return _write(args, nabla(_load(args.file, {"model_morphism"})))


def cmd_check_dopf(args):
    from .elements import is_discrete_opfibration
    check = is_discrete_opfibration(_load(args.file, {"model_morphism"}))
    entries = [] if check.ok else \
        ["not a discrete opfibration: {}".format(check.counterexample)]
    extra = None
    if check.ok and args.witness:
        save_document({
            "kind": "dopf_witness", "format_version": FORMAT_VERSION,
            "bijections": {m: [[list(k) + [v] for k, v in sorted(t.items())]]
                           for m, t in check.witness.bijections.items()},
        }, args.witness)
        extra = {"witness": args.witness}
    return _emit_report(args, entries, extra)


def cmd_migrate(args):
    from .migration import migrate_lan, migrate_pullback, migrate_ran
    al = _load(args.along, {"model_morphism"})
    h = _load(args.file, {"instance"})
    fn = {"delta": migrate_pullback, "sigma": migrate_lan,
          "pi": migrate_ran}[args.mode]
    return _write(args, fn(al, h, bound=_bound(args)))


def cmd_factorize(args):
    from .migration import cartesian_factorize, comprehensive_factorize
    f = _load(args.file, {"model_morphism"})
    factorize = cartesian_factorize if args.cartesian else \
        comprehensive_factorize
    fac = factorize(f, bound=_bound(args))
    stem = args.output or os.path.splitext(args.file)[0]
    save_document(document_of(fac.initial), stem + ".initial.json")
    save_document(document_of(fac.opfibration), stem + ".dopf.json")
    return 0


def cmd_check_initial(args):
    from .migration import check_initial
    e = _load(args.file, {"model_morphism"})
    corpus = []
    for name in sorted(os.listdir(args.corpus)):
        if name.endswith(".json"):
            corpus.append(_load(os.path.join(args.corpus, name),
                                {"model_morphism"}))
    return _emit_report(args, check_initial(e, corpus))


def cmd_check_cartesian(args):
    from .cartesian import validate_cartesian_instance, validate_cartesian_model
    doc = load_document(args.file)
    obj = object_of(doc)
    if doc["kind"] == "model":
        report = validate_cartesian_model(obj)
    elif doc["kind"] == "instance":
        report = validate_cartesian_instance(obj)
    else:
        raise DblinstError("check-cartesian expects a model or instance")
    return _emit_report(args, report)


def cmd_flatten(args):
    from .sketch import flatten_cartesian_theory, flatten_theory
    t = _load(args.file, {"theory"})
    flatten = flatten_cartesian_theory if args.cartesian else flatten_theory
    return _write(args, flatten(t))


def cmd_count_morphisms(args):
    from .model import enumerate_model_morphisms
    a = _load(args.source, {"model"})
    b = _load(args.target, {"model"})
    print(len(enumerate_model_morphisms(a, b)))
    return 0


# ---------------------------------------------------------------------------
# fixtures


def _fixture_documents(name):
    from .theories import builtin_theory
    theory_names = ("terminal", "walking_loose", "walking_tight",
                    "walking_square", "signed", "involution_cell")
    power_names = ("monad_trunc", "prom_trunc", "sq_finset_op")
    if name in theory_names:
        return {name + ".json": builtin_theory(name)}
    if name in power_names:
        return {name + "2.json": builtin_theory(name, 2)}
    if name == "weighted_graph":
        return {"weighted_graph.json": fx.weighted_graph_schema(),
                "weighted_graph_instance.json": fx.weighted_graph_instance()}
    if name == "profunctor_instance":
        x, h = fx.profunctor_instance_fixture()
        return {"profunctor_model.json": x, "profunctor_instance.json": h}
    if name == "monad_instance":
        x, h = fx.monad_instance_fixture()
        return {"monad_model.json": x, "monad_instance.json": h}
    if name == "cyclic_pair":
        return {"cyclic_pair.json": fx.cyclic_quotient_morphism()}
    if name == "signed_models":
        models = fx.signed_fixture_models()
        return {"signed_model_{}.json".format(i): m
                for i, m in enumerate(models)}
    if name in ("negloop1", "posloop1"):
        from .signed import walking_feedback_loop
        sign = -1 if name.startswith("neg") else +1
        return {name + ".json": walking_feedback_loop(sign)}
    if name.startswith("multicategory_"):
        return {name + ".json": fx.builtin_multicategory(name[14:])}
    raise DblinstError("unknown fixture {!r}".format(name))


FIXTURE_NAMES = (
    "terminal", "walking_loose", "walking_tight", "walking_square",
    "signed", "involution_cell", "monad_trunc", "prom_trunc",
    "sq_finset_op", "weighted_graph", "profunctor_instance",
    "monad_instance", "cyclic_pair", "signed_models", "negloop1",
    "posloop1", "multicategory_terminal", "multicategory_join",
    "multicategory_two_object")


def cmd_fixtures(args):
    if args.action != "emit":
        raise UnknownVerb("fixtures {}".format(args.action))
    for fname, obj in sorted(_fixture_documents(args.name).items()):
        path = os.path.join(args.directory, fname)
        save_document(document_of(obj), path)
        print(path)
    return 0


# ---------------------------------------------------------------------------
# dispatch


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dblinst",
        description="Finite models, instances, and migrations of double "
                    "theories.")
    sub = parser.add_subparsers(dest="verb")

    def add(verb, handler, **positionals):
        p = sub.add_parser(verb)
        for arg, kw in positionals.items():
            p.add_argument(arg, **kw)
        p.add_argument("--output", "-o", default=None)
        p.add_argument("--json-report", action="store_true")
        p.add_argument("--bound", type=int, default=None)
        p.set_defaults(fn=handler)
        return p

    add("validate-theory", cmd_validate_theory, file={})
    add("validate-model", cmd_validate_model, file={})
    add("validate-instance", cmd_validate_instance, file={})
    add("collage", cmd_collage, file={})
    add("close-category", cmd_close_category, file={})
    add("to-copresheaf", cmd_to_copresheaf, file={})
    p = add("from-copresheaf", cmd_from_copresheaf, file={})
    p.add_argument("--model", required=True)
    add("elements", cmd_elements, file={})
    add("nabla", cmd_nabla, file={})
    p = add("check-dopf", cmd_check_dopf, file={})
    p.add_argument("--witness", default=None)
    p = add("migrate", cmd_migrate, file={})
    p.add_argument("--mode", choices=("delta", "sigma", "pi"), required=True)
    p.add_argument("--along", required=True)
    p = add("factorize", cmd_factorize, file={})
    p.add_argument("--cartesian", action="store_true")
    p = add("check-initial", cmd_check_initial, file={})
    p.add_argument("--corpus", required=True)
    add("check-cartesian", cmd_check_cartesian, file={})
    p = add("flatten", cmd_flatten, file={})
    p.add_argument("--cartesian", action="store_true")
    add("count-morphisms", cmd_count_morphisms, source={}, target={})
    p = add("fixtures", cmd_fixtures, action={"choices": ("emit",)},
            name={"choices": FIXTURE_NAMES})
    p.add_argument("--directory", default=".")
    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb is None:
        parser.print_help()
        return 2
    try:
        return args.fn(args)
    except DblinstError as e:
        print("error: {}".format(e), file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, AssertionError) as e:
        print("error: {!r}".format(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
