"""Serialization tests: float rendering, document shape, CSV/JSON agreement."""

import json

import numpy as np

from hopf_atlas import documents, fibration


def test_format_float_17_digits():
    assert documents.format_float(0.1) == "0.10000000000000001"
    assert documents.format_float(1.0) == "1"
    assert documents.format_float(-0.0) == "0"
    assert documents.format_float(2.0 / 3.0) == "0.66666666666666663"
    # round trip: 17 significant digits reproduce the double exactly
    for x in np.random.default_rng(5).normal(scale=100.0, size=50):
        assert float(documents.format_float(x)) == x


def test_emit_json_shapes():
    assert documents.emit_json({"a": 1, "b": [True, None, "x"]}) == '{"a":1,"b":[true,null,"x"]}'
    assert documents.emit_json(np.array([1.0, 0.5])) == "[1,0.5]"


def test_fiber_document_fields():
    fb = fibration.fiber([0, 1, 0], "r1", 16)
    doc = documents.fiber_document(fb)
    assert doc["schema_version"] == "1"
    assert doc["samples"] == 16
    assert len(doc["points_s3"]) == 16
    assert len(doc["projected"]) == 16
    assert doc["fit"]["kind"] == "circle"
    assert doc["gauge_kind"] == "r1"
    # document parses back as ordinary JSON
    parsed = json.loads(documents.fiber_json(fb))
    assert parsed["base_point"] == [0.0, 1.0, 0.0]


def test_fiber_document_pole_fiber_has_null_projection():
    fb = fibration.fiber([1, 0, 0], "r1", 256)
    doc = documents.fiber_document(fb)
    assert doc["projected"] is None
    assert doc["fit"]["kind"] == "line"
    assert len(doc["points_s3"]) == 256


def test_csv_and_json_encode_identical_values():
    fb = fibration.fiber([0, 1, 0], "auto", 12)
    doc = documents.fiber_document(fb)
    csv_lines = documents.fiber_csv(fb).strip().split("\n")
    assert csv_lines[0] == "index,t,w,x,y,z,px,py,pz"
    assert len(csv_lines) == 13
    for idx, line in enumerate(csv_lines[1:]):
        cells = line.split(",")
        assert cells[0] == str(idx)
        assert cells[2:6] == [documents.format_float(v) for v in doc["points_s3"][idx]]
        assert cells[6:9] == [documents.format_float(v) for v in doc["projected"][idx]]


def test_csv_blank_cells_at_pole():
    fb = fibration.fiber([1, 0, 0], "r1", 256)
    csv_lines = documents.fiber_csv(fb).strip().split("\n")
    blanks = [line for line in csv_lines[1:] if line.endswith(",,,")
              or line.split(",")[6:] == ["", "", ""]]
    assert len(blanks) == 1
