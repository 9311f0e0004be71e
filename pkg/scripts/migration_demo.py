#!/usr/bin/env python3
"""Demonstrate the migration adjoint triple and comprehensive
factorization on the weighted-graph schema, printing carrier sizes and
hom-set cardinalities."""

from dblinst.fixtures import (tautological_instance, walking_loose_model,
                              weighted_graph_schema)
from dblinst.instance import enumerate_instance_morphisms
from dblinst.elements import is_discrete_opfibration
from dblinst.migration import (MigrationContext, comprehensive_factorize,
                               migrate_lan, migrate_pullback, migrate_ran)
from dblinst.model import enumerate_model_morphisms, terminal_model


def sizes(h):
    return {d: len(s) for d, s in h.carriers.items()}


def main():
    src = walking_loose_model(["a0", "a1"], ["b0"],
                              [("h0", "a0", "b0"), ("h1", "a1", "b0")])
    tgt = walking_loose_model(["a"], ["b"], [("h", "a", "b")])
    al = enumerate_model_morphisms(src, tgt)[0]
    ctx = MigrationContext(al, bound=4)
    hx, hy = tautological_instance(src), tautological_instance(tgt)

    lan = migrate_lan(al, hx, context=ctx)
    ran = migrate_ran(al, hx, context=ctx)
    pulled = migrate_pullback(al, hy, context=ctx)
    print("left pushforward sizes:", sizes(lan))
    print("right pushforward sizes:", sizes(ran))
    print("restriction sizes:", sizes(pulled))
    print("|Hom(lan H, K)| =", len(enumerate_instance_morphisms(lan, hy)),
          " |Hom(H, restrict K)| =",
          len(enumerate_instance_morphisms(hx, pulled)))
    print("|Hom(K, ran H)| =", len(enumerate_instance_morphisms(hy, ran)),
          " |Hom(restrict K, H)| =",
          len(enumerate_instance_morphisms(pulled, hx)))

    x = weighted_graph_schema()
    f = enumerate_model_morphisms(x, terminal_model(x.theory))[0]
    fac = comprehensive_factorize(f, bound=4)
    print("factorization middle sizes:",
          {d: len(s) for d, s in fac.middle.on_objects.items()})
    print("right factor is a discrete opfibration:",
          is_discrete_opfibration(fac.opfibration).ok)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
