"""HTTP endpoints: golden responses, validation, error mapping."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from quadric_stability.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/v1/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_basis_endpoint(client):
    response = client.post("/v1/basis", json={"d": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["schema"] == 1
    assert body["command"] == "basis"
    assert body["payload"]["count"] == 30


def test_chow_endpoint_worked_example(client):
    response = client.post(
        "/v1/chow",
        json={
            "q": "x0*x4+x1*x3+x2^2",
            "f": "x0*x3^3+x1*x2^2*x3",
            "chi": [3, 3, -2, -2, -2],
        },
    )
    assert response.status_code == 200
    payload = response.json()["payload"]
    assert payload["mu_q"] == 1
    assert payload["mu_y"] == -3
    assert payload["combined"] == -2
    assert payload["verdict"] == "chow-unstable-witness"


def test_check_endpoint_with_family_sugar(client):
    response = client.post("/v1/check", json={"d": 4, "f": "@family:4/1:strict"})
    assert response.status_code == 200
    assert response.json()["payload"]["verdict"] == "torus-unstable"


def test_chart_endpoint(client):
    response = client.post("/v1/chart", json={"d": 3, "f": "x1*x3^2", "shift": "1"})
    assert response.status_code == 200
    payload = response.json()["payload"]
    assert payload["chart_form"] == "y1*y3^2 - y3^2"
    assert payload["multiplicity"] == 2


def test_lct_bound_endpoint_defaults_to_preset_weights(client):
    response = client.post("/v1/lct-bound", json={"d": 4, "f": "@family:3/1"})
    assert response.status_code == 200
    payload = response.json()["payload"]
    assert payload["weights"] == [2, 3, 4]
    assert payload["lct_upper_bound"] == "3/4"


def test_type_xi_endpoint_degeneration(client):
    response = client.post("/v1/type-xi", json={"d": 4, "mus": ["1", "1", "1"]})
    assert response.status_code == 200
    assert response.json()["payload"]["orbit"]["closed"] is True


def test_verify_lemmas_endpoint(client):
    response = client.post("/v1/verify-lemmas", json={"d": 5})
    assert response.status_code == 200
    assert response.json()["payload"]["passed"] is True


def test_families_endpoint_deterministic_payload(client):
    first = client.post("/v1/families", json={"d": 4, "strict": True})
    second = client.post("/v1/families", json={"d": 4, "strict": True})
    assert first.status_code == second.status_code == 200
    payload1 = json.dumps(first.json()["payload"], sort_keys=False)
    payload2 = json.dumps(second.json()["payload"], sort_keys=False)
    assert payload1 == payload2


def test_parse_error_maps_to_400_with_position(client):
    response = client.post("/v1/check", json={"d": 4, "f": "x0*x9^3"})
    assert response.status_code == 400
    error = response.json()["error"]
    assert "unknown variable" in error["message"]
    assert error["line"] == 1
    assert error["column"] == 4


def test_schema_violation_maps_to_422(client):
    response = client.post("/v1/basis", json={"d": 2})
    assert response.status_code == 422


def test_precondition_violation_maps_to_400(client):
    response = client.post("/v1/check", json={"d": 4, "f": "x0^3"})
    assert response.status_code == 400
    assert "degree" in response.json()["error"]["message"]
