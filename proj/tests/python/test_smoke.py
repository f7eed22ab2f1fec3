import json
import os

import pytest

import vinberg

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")


def test_simplex_353():
    doc = vinberg.FormDocument.read(os.path.join(DATA, "simplex_353.json"))
    assert doc.n == 3
    assert doc.field == "Q(sqrt5)"
    v = vinberg.run(doc)
    assert v.reflective
    assert v.faces == 4
    assert v.compact
    assert v.ordinary_vertices == 4
    assert v.arithmeticity()["is_arithmetic"]
    assert v.diagram("dot").startswith("graph coxeter {")


def test_analyze_dict_and_report():
    report = vinberg.analyze({"field": "Q", "diag": [-1, 1, 1, 1]})
    assert report["outcome"] == "reflective"
    assert report["faces"] == 4
    assert report["minimality"] is not None
    text = vinberg.run(vinberg.FormDocument.parse(json.dumps({"diag": [-1, 1, 1]}))).report("text")
    assert "reflective" in text


def test_cap_is_inconclusive():
    doc = vinberg.catalogue_document("mark_f7_4")
    v = vinberg.run(doc, max_roots=12)
    assert not v.reflective
    assert v.cap_hit == "max_roots"
    assert v.symmetry_order is None


def test_catalogue_entry():
    names = [e["name"] for e in vinberg.catalogue("quick")]
    assert "vinberg_unimodular_5" in names
    passed, detail, verdict = vinberg.run_catalogue_entry("vinberg_unimodular_5")
    assert passed, detail
    assert verdict.faces == 6


def test_triangle_groups():
    assert vinberg.triangle_arithmeticity(2, 3, 7)["is_arithmetic"]
    assert not vinberg.triangle_arithmeticity(2, 3, 13)["is_arithmetic"]


def test_errors():
    with pytest.raises(ValueError, match="not symmetric"):
        vinberg.FormDocument.parse('{"gram": [[-1, 1], [0, 1]]}')
    with pytest.raises(ValueError):
        vinberg.catalogue_document("no_such_entry")
