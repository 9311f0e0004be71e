#!/usr/bin/env python3
"""Run the instance <-> discrete-opfibration round trips over the
standard corpus and print one line per instance."""

from dblinst.elements import elements, is_discrete_opfibration, nabla
from dblinst.fixtures import standard_instance_corpus
from dblinst.instance import find_instance_isomorphism


def main():
    failures = 0
    for name, x, instances in standard_instance_corpus():
        for i, h in enumerate(instances):
            _, pi, witness = elements(h)
            ok = is_discrete_opfibration(pi).ok
            back = nabla(pi, witness)
            iso = find_instance_isomorphism(h, back) is not None
            status = "ok" if ok and iso else "FAIL"
            failures += status == "FAIL"
            print("{:15s} instance {} size {:3d}  projection dopf: {}  "
                  "round trip isomorphic: {}  [{}]"
                  .format(name, i, h.total_size(), ok, iso, status))
    print("{} failures".format(failures))
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
