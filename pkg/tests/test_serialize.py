import json

import pytest

from dblinst.collage import collage_of_model
from dblinst.elements import elements
from dblinst.fincat import Copresheaf
from dblinst.fixtures import (builtin_multicategory, chain_category,
                              weighted_graph_instance, weighted_graph_schema)
from dblinst.serialize import (document_of, load_document, object_of,
                               save_document)
from dblinst.sketch import flatten_theory
from dblinst.theories import builtin_theory


def _samples():
    x = weighted_graph_schema()
    h = weighted_graph_instance(2)
    _, pi, _ = elements(h)
    cat = chain_category(2)
    cp = Copresheaf(cat, {"0": ["a", "b"], "1": ["c"]},
                    {"id:0": {"a": "a", "b": "b"}, "id:1": {"c": "c"},
                     "0<1": {"a": "c", "b": "c"}})
    assert cp.validate() == []
    return {
        "theory": builtin_theory("walking_square"),
        "model": x,
        "model_morphism": pi,
        "instance": h,
        "fincategory": cat,
        "copresheaf": cp,
        "presented_category": collage_of_model(x),
        "sketch": flatten_theory(builtin_theory("walking_loose")),
        "multicategory": builtin_multicategory("join"),
    }


@pytest.mark.parametrize("kind", sorted(_samples()))
def test_round_trip_is_byte_identical(kind):
    obj = _samples()[kind]
    doc = document_of(obj)
    assert doc["kind"] == kind
    assert doc["format_version"] == 1
    text = json.dumps(doc, sort_keys=True)
    back = object_of(doc)
    doc2 = document_of(back)
    assert json.dumps(doc2, sort_keys=True) == text


def test_save_and_load_files(tmp_path):
    for kind, obj in _samples().items():
        path = tmp_path / (kind + ".json")
        save_document(document_of(obj), path)
        doc = load_document(path)
        assert doc["kind"] == kind
        # a second emission of the loaded object writes the same bytes
        path2 = tmp_path / (kind + ".again.json")
        save_document(document_of(object_of(doc)), path2)
        assert path.read_bytes() == path2.read_bytes()


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        object_of({"kind": "nonsense", "format_version": 1})


def test_documents_are_plain_json():
    for obj in _samples().values():
        doc = document_of(obj)
        json.dumps(doc)  # raises if anything non-serializable leaks in
