"""HTTP surface: routing, validation, and response shapes."""

import pytest
from fastapi.testclient import TestClient

from domgame.engine import D_GAME, Move, Solver, replay
from domgame.families import build
from domgame.graphs import parse_edge_list
from domgame.service.app import app, create_app
from domgame.service.handlers import SolverCache

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_gamma_defaults_to_the_d_game():
    r = client.post("/gamma", json={"graph": {"construct": "cycle:6"}})
    assert r.status_code == 200
    assert r.json() == {"label": "gamma_g", "value": 3, "n": 6, "trace": None}


def test_gamma_variants_and_labels():
    body = {"graph": {"construct": "cycle:6"}, "variant": {"s_game": True}}
    assert client.post("/gamma", json=body).json()["label"] == "gamma_g'"
    body = {"graph": {"construct": "cycle:6"}, "variant": {"staller_passes": 2}}
    got = client.post("/gamma", json=body).json()
    assert got["label"] == "gamma_g^St,2"
    body = {"graph": {"construct": "cycle:6"}, "variant": {"s_game": True, "staller_passes": 1}}
    assert client.post("/gamma", json=body).json()["label"] == "value"


def test_gamma_accepts_edge_list_and_dominated():
    body = {
        "graph": {"edge_list": "4 3\n0 1\n1 2\n2 3\n"},
        "dominated": [0, 1],
    }
    got = client.post("/gamma", json=body).json()
    assert got["value"] == 1


def test_gamma_trace_replays_to_the_value():
    body = {"graph": {"construct": "path:5"}, "trace": True}
    got = client.post("/gamma", json=body).json()
    g = build("path:5").graph
    line = [
        Move(0 if m["player"] == "D" else 1, m["vertex"]) for m in got["trace"]
    ]
    assert replay(g, D_GAME, line) == got["value"] == Solver(g).value(D_GAME)


def test_gamma_rejects_bad_input():
    r = client.post("/gamma", json={"graph": {"edge_list": "nope"}})
    assert r.status_code == 400
    assert "line 1" in r.json()["detail"]
    r = client.post("/gamma", json={"graph": {"construct": "nope:4"}})
    assert r.status_code == 400
    r = client.post("/gamma", json={"graph": {"construct": "cycle:6"}, "dominated": [9]})
    assert r.status_code == 400
    # schema-level failures are 422s
    assert client.post("/gamma", json={"graph": {}}).status_code == 422
    both = {"graph": {"construct": "cycle:6", "edge_list": "1 0\n"}}
    assert client.post("/gamma", json=both).status_code == 422
    extra = {"graph": {"construct": "cycle:6"}, "bogus": 1}
    assert client.post("/gamma", json=extra).status_code == 422
    big = {"graph": {"construct": "cycle:6"}, "variant": {"dominator_passes": 9}}
    assert client.post("/gamma", json=big).status_code == 422


def test_cuts_route():
    r = client.post("/cuts", json={"graph": {"construct": "path:3"}})
    got = r.json()
    assert got["count"] == 2
    assert got["edge_connectivity"] == 1
    assert got["bridges"] == [[0, 1], [1, 2]]
    assert got["cuts"][0] == {
        "edges": [[0, 1]],
        "side_a": [0],
        "side_b": [1, 2],
        "size": 1,
    }


def test_double_staller_route():
    got = client.post("/double-staller", json={"graph": {"construct": "cycle:6"}}).json()
    assert got == {"is_double_staller": True, "gamma": 3, "net_value": 3}
    got = client.post("/double-staller", json={"graph": {"construct": "hx3:cycle:6"}}).json()
    assert got == {"is_double_staller": False, "gamma": 7, "net_value": 5}


def test_construct_route_round_trips():
    got = client.post("/construct", json={"spec": "tn:2"}).json()
    assert got["n"] == 11 and got["m"] == 10
    assert got["marks"] == {"center": 0}
    g = parse_edge_list(got["edge_list"])
    assert g == build("tn:2").graph


def test_verify_route_reports_and_verdict():
    body = {"claim": "thm1.2", "graph": {"construct": "path:5"}}
    got = client.post("/verify", json=body).json()
    assert got["ok"] is True
    (rec,) = got["reports"]
    assert rec["claim_id"] == "thm1.2"
    assert rec["lhs"] == [3, 3] and rec["rhs"] == 1
    assert set(rec) == {"claim_id", "instance", "lhs", "rhs", "holds", "tight", "elapsed"}


def test_verify_thm4_through_the_join_constructor():
    body = {"claim": "thm4.1", "graph": {"construct": "hx3:cycle:6"}, "k": 2}
    got = client.post("/verify", json=body).json()
    assert got["ok"] is True
    ids = [r["claim_id"] for r in got["reports"]]
    assert ids[-2:] == ["thm4.1/gamma", "thm4.1/gamma-minus-e"]


def test_verify_claim_validation():
    r = client.post("/verify", json={"claim": "bogus"})
    assert r.status_code == 400
    assert "unknown claim" in r.json()["detail"]
    r = client.post("/verify", json={"claim": "thm1.2"})
    assert r.status_code == 400  # needs a graph
    r = client.post("/verify", json={"claim": "thm4.1", "graph": {"construct": "cycle:6"}, "k": 2})
    assert r.status_code == 400  # thm4.1 wants an hx3 constructor


def test_verify_tn_needs_no_graph():
    got = client.post("/verify", json={"claim": "tn", "n": 2}).json()
    assert got["ok"] is True
    assert got["reports"][0]["claim_id"] == "tn-family"


def test_scan_route():
    body = {"family": "cycle", "lo": 3, "hi": 10}
    got = client.post("/scan", json=body).json()
    assert got["ok"] is True
    assert len(got["reports"]) == 8
    body = {"constructs": ["path:4", "cycle:5"]}
    got = client.post("/scan", json=body).json()
    assert [r["instance"]["description"] for r in got["reports"]] == ["path:4", "cycle:5"]
    assert client.post("/scan", json={}).status_code == 422
    assert client.post("/scan", json={"family": "cycle"}).status_code == 422


def test_solver_cache_reuses_and_evicts():
    cache = SolverCache(capacity=2)
    g1, g2, g3 = (build(s).graph for s in ("path:3", "path:4", "cycle:5"))
    s1 = cache.get(g1)
    assert cache.get(g1) is s1
    cache.get(g2)
    cache.get(g3)  # evicts g1
    assert cache.get(g1) is not s1


def test_create_app_returns_fresh_instances():
    assert create_app() is not create_app()


@pytest.mark.parametrize("route", ["/gamma", "/cuts", "/double-staller"])
def test_routes_reject_wrong_method(route):
    assert client.get(route).status_code == 405
