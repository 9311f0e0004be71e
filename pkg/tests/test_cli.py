import json
import os

import pytest

from dblinst.cli import main
from dblinst.serialize import document_of, load_document, save_document


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def emitted(tmp_path, capsys):
    """Emit the weighted-graph fixture pair and return the two paths."""
    code, out, _ = run(capsys, "fixtures", "emit", "weighted_graph",
                       "--directory", str(tmp_path))
    assert code == 0
    model = tmp_path / "weighted_graph.json"
    instance = tmp_path / "weighted_graph_instance.json"
    assert model.exists() and instance.exists()
    return model, instance


def test_validate_emitted_fixtures(emitted, capsys):
    model, instance = emitted
    code, out, _ = run(capsys, "validate-model", str(model))
    assert code == 0 and out.strip() == "ok"
    code, out, _ = run(capsys, "validate-instance", str(instance))
    assert code == 0 and out.strip() == "ok"


def test_validate_theory_fixture(tmp_path, capsys):
    code, _, _ = run(capsys, "fixtures", "emit", "walking_square",
                     "--directory", str(tmp_path))
    assert code == 0
    code, out, _ = run(capsys, "validate-theory",
                       str(tmp_path / "walking_square.json"))
    assert code == 0 and out.strip() == "ok"


def test_json_report_container(emitted, capsys):
    model, _ = emitted
    code, out, _ = run(capsys, "validate-model", str(model), "--json-report")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "report" and doc["ok"] and doc["entries"] == []


def test_failing_check_exits_one(emitted, tmp_path, capsys):
    _, instance = emitted
    doc = load_document(instance)
    # break an action table entry: send an edge to the wrong weight fiber
    broken = tmp_path / "broken.json"
    entry = next(e for e in doc["actions"] if e[0] == "l")
    entry[1][0][-1] = "e1"  # the weighting action now leaves the weight sort
    save_document(doc, broken)
    code, out, _ = run(capsys, "validate-instance", str(broken))
    assert code == 1 and out.strip() != "ok"


def test_structural_errors_exit_two(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    code, _, err = run(capsys, "validate-model", str(missing))
    assert code == 2 and "error" in err
    wrong_kind = tmp_path / "wrong.json"
    wrong_kind.write_text('{"kind": "theory", "format_version": 1}')
    code, _, err = run(capsys, "validate-model", str(wrong_kind))
    assert code == 2


def test_elements_check_dopf_nabla_pipeline(emitted, tmp_path, capsys):
    _, instance = emitted
    proj = tmp_path / "proj.json"
    code, _, _ = run(capsys, "elements", str(instance), "-o", str(proj))
    assert code == 0 and proj.exists()
    code, out, _ = run(capsys, "check-dopf", str(proj))
    assert code == 0 and out.strip() == "ok"
    back = tmp_path / "back.json"
    code, _, _ = run(capsys, "nabla", str(proj), "-o", str(back))
    assert code == 0
    assert load_document(back)["kind"] == "instance"


def test_collage_close_copresheaf_round_trip(emitted, tmp_path, capsys):
    model, instance = emitted
    cp = tmp_path / "cp.json"
    code, _, _ = run(capsys, "to-copresheaf", str(instance), "--bound", "4",
                     "-o", str(cp))
    assert code == 0
    back = tmp_path / "back.json"
    code, _, _ = run(capsys, "from-copresheaf", str(cp), "--model",
                     str(model), "--bound", "4", "-o", str(back))
    assert code == 0
    assert load_document(back)["kind"] == "instance"
    code, out, _ = run(capsys, "validate-instance", str(back))
    assert code == 0


def test_factorize_and_check_outputs(emitted, tmp_path, capsys):
    from dblinst.fixtures import (dopf_corpus_over, weighted_graph_schema)
    from dblinst.model import enumerate_model_morphisms, terminal_model
    x = weighted_graph_schema()
    one = terminal_model(x.theory)
    f = enumerate_model_morphisms(x, one)[0]
    fpath = tmp_path / "to_terminal.json"
    save_document(document_of(f), fpath)
    stem = str(tmp_path / "fac")
    code, _, _ = run(capsys, "factorize", str(fpath), "--bound", "4",
                     "-o", stem)
    assert code == 0
    code, out, _ = run(capsys, "check-dopf", stem + ".dopf.json")
    assert code == 0 and out.strip() == "ok"
    corpus_dir = tmp_path / "corpus"
    corpus_dir.mkdir()
    for i, (pi, _) in enumerate(dopf_corpus_over(one)):
        save_document(document_of(pi), corpus_dir / "q{}.json".format(i))
    code, out, _ = run(capsys, "check-initial", stem + ".initial.json",
                       "--corpus", str(corpus_dir))
    assert code == 0 and out.strip() == "ok"


def test_count_morphisms_prints_a_number(tmp_path, capsys):
    code, _, _ = run(capsys, "fixtures", "emit", "negloop1",
                     "--directory", str(tmp_path))
    assert code == 0
    code2, _, _ = run(capsys, "fixtures", "emit", "signed_models",
                      "--directory", str(tmp_path))
    assert code2 == 0
    code, out, _ = run(capsys, "count-morphisms",
                       str(tmp_path / "negloop1.json"),
                       str(tmp_path / "signed_model_0.json"))
    assert code == 0 and out.strip() == "1"


def test_flatten_writes_a_sketch(tmp_path, capsys):
    code, _, _ = run(capsys, "fixtures", "emit", "walking_loose",
                     "--directory", str(tmp_path))
    assert code == 0
    sk = tmp_path / "sk.json"
    code, _, _ = run(capsys, "flatten", str(tmp_path / "walking_loose.json"),
                     "-o", str(sk))
    assert code == 0
    assert load_document(sk)["kind"] == "sketch"


def test_unknown_verb_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus-verb"])
    assert exc.value.code == 2
