#!/usr/bin/env python3
"""Count positive and negative feedback loops in the signed fixture
graphs two ways: by model-morphism search from the walking feedback
loop, and by the direct graph-combinatorial oracle."""

from dblinst.fixtures import (feedback_loop_count, signed_cycle_oracle,
                              signed_fixture_graphs, signed_fixture_models)


def main():
    mismatches = 0
    for graph, model in zip(signed_fixture_graphs(), signed_fixture_models()):
        edges = ", ".join("{}:{}{}->{}".format(n, "+" if sg > 0 else "-", s, d)
                          for n, s, d, sg in graph.edges)
        print("graph on {} ({})".format("/".join(graph.vertices), edges))
        for sign, word in ((+1, "positive"), (-1, "negative")):
            searched = feedback_loop_count(model, sign)
            oracle = signed_cycle_oracle(graph, sign)
            mismatches += searched != oracle
            print("  {} loops: search {}  oracle {}"
                  .format(word, searched, oracle))
    print("{} mismatches".format(mismatches))
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
