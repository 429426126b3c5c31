# -*- coding: utf-8 -*-
import json

import pytest
from fastapi.testclient import TestClient

from balagha.api import create_app
from balagha.cli import run as cli_run


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(), raise_server_exceptions=False)


def document_payload(samples_dir, name):
    return json.loads(
        (samples_dir / f"{name}.balagha.json").read_text(encoding="utf-8")
    )


def test_taxonomy_endpoint(client):
    resp = client.get("/api/taxonomy")
    assert resp.status_code == 200
    records = resp.json()
    assert len(records) == 84
    assert records[0]["code"] == "A-1"


def test_device_endpoint(client):
    resp = client.get("/api/device/CE-15")
    assert resp.status_code == 200
    body = resp.json()
    assert body["name_en"] == "Hyperbole"
    assert body["deep_link_slug"] == "hyperbole"


def test_device_endpoint_404(client):
    resp = client.get("/api/device/Q-1")
    assert resp.status_code == 404
    assert resp.json()["code"] == "unknown-device"


def test_morphemes_endpoint(client):
    resp = client.post("/api/morphemes", json={"text": "بيتي كبير جداً، مثل قصر."})
    assert resp.status_code == 200
    body = resp.json()
    assert body["total"] == 6
    assert body["source"] == "rule_based"
    assert body["breakdowns"][0]["segments"][0]["kind"] == "stem"


def test_score_endpoint_sample_b(client, samples_dir):
    resp = client.post("/api/score", json=document_payload(samples_dir, "sample_b"))
    assert resp.status_code == 200
    body = resp.json()
    assert body["density"] == "0.10204"
    assert body["summary_text"] == "A2 B2 C6 / 98"
    assert body["warnings"] == []


def test_score_endpoint_unknown_device(client):
    doc = {
        "id": "bad",
        "metadata": {},
        "text": "نص",
        "annotations": [{"device": "Q-1", "start": 0, "end": 1, "mark": 1}],
    }
    resp = client.post("/api/score", json=doc)
    assert resp.status_code == 422
    body = resp.json()
    assert body["code"] == "validation-failed"
    assert body["diagnostics"][0]["code"] == "unknown-device"


def test_score_endpoint_zero_morphemes(client):
    resp = client.post(
        "/api/score", json={"id": "empty", "metadata": {}, "text": "", "annotations": []}
    )
    assert resp.status_code == 422
    assert resp.json()["code"] == "zero-morphemes"


def test_validate_endpoint(client):
    doc = {
        "id": "warny",
        "metadata": {},
        "text": "بيتي قصر جميل",
        "annotations": [
            {"device": "B-2", "start": 5, "end": 8, "mark": 2},
            {"device": "B-6", "start": 5, "end": 8, "mark": 1},
        ],
    }
    resp = client.post("/api/validate", json=doc)
    assert resp.status_code == 200
    codes = [d["code"] for d in resp.json()["diagnostics"]]
    assert codes == ["figurative-span-repeat"]


def test_malformed_body_is_400(client):
    resp = client.post("/api/score", json={"text": 42})
    assert resp.status_code == 400
    assert resp.json()["code"] == "malformed-body"


def test_statelessness(client, samples_dir):
    payload = document_payload(samples_dir, "sample_e")
    first = client.post("/api/score", json=payload).json()
    client.post("/api/score", json=document_payload(samples_dir, "sample_a"))
    second = client.post("/api/score", json=payload).json()
    assert first == second


def test_cli_and_api_agree(client, samples_dir, capsys):
    for name in ("sample_a", "sample_c", "sample_e", "calibration_2"):
        path = samples_dir / f"{name}.balagha.json"
        assert cli_run(["score", str(path), "--format", "json"]) == 0
        cli_report = json.loads(capsys.readouterr().out)
        api_report = client.post(
            "/api/score", json=document_payload(samples_dir, name)
        ).json()
        api_report.pop("warnings")
        assert api_report == cli_report


def test_figure4_calculator_state(client):
    # tally-style session: zero-width annotations, manual morpheme count
    annotations = (
        [{"device": "A-9", "start": 0, "end": 0, "mark": 1}]
        + [{"device": "B-2", "start": 0, "end": 0, "mark": 2}] * 4
        + [{"device": "CE-15", "start": 0, "end": 0, "mark": 2}] * 2
    )
    doc = {
        "id": "calculator-session",
        "metadata": {},
        "text": "نص الجلسة",
        "manual_morpheme_count": 121,
        "annotations": annotations,
    }
    resp = client.post("/api/score", json=doc)
    assert resp.status_code == 200
    body = resp.json()
    assert body["density"] == "0.10744"
    assert body["summary_text"] == "A1 B8 C4 / 121"
