import json

import pytest
from fastapi.testclient import TestClient

from namefuzz import SearchParams, build_index
from namefuzz.cli import main
from namefuzz.service import ServiceState, create_app

TRIO = ["Mike Petterson", "Jennifer Mikoilan", "Mark"]


@pytest.fixture
def client():
    state = ServiceState(build_index(TRIO))
    return TestClient(create_app(state))


def test_search_endpoint_reference_query(client):
    resp = client.get("/api/search", params={"q": "mik"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["query"] == "mik"
    assert body["corpus_size"] == 3
    assert body["latency_us"] >= 0
    assert [r["name"] for r in body["results"]] == ["Mike Petterson", "Jennifer Mikoilan"]
    first = body["results"][0]
    assert set(first) == {"id", "name", "lld", "bd", "span"}
    assert first["lld"] == 0 and first["bd"] == -5.0 and first["span"] == [1, 4]


def test_search_empty_query_is_ok(client):
    resp = client.get("/api/search", params={"q": ""})
    assert resp.status_code == 200
    assert resp.json()["results"] == []


def test_search_missing_query_is_400(client):
    resp = client.get("/api/search")
    assert resp.status_code == 400
    assert "error" in resp.json()


def test_search_overlong_query_is_400(client):
    resp = client.get("/api/search", params={"q": "x" * 257})
    assert resp.status_code == 400


def test_search_limit_parameter(client):
    resp = client.get("/api/search", params={"q": "m", "limit": "1"})
    assert resp.status_code == 200
    assert len(resp.json()["results"]) == 1
    assert client.get("/api/search", params={"q": "m", "limit": "nope"}).status_code == 400
    assert client.get("/api/search", params={"q": "m", "limit": "-1"}).status_code == 400


def test_params_roundtrip_and_defaults(client):
    body = client.get("/api/params").json()
    assert body == {"k": 1, "lambda": 1.0, "t1": 1.0, "t2": 1, "min_fuzzy_len": 3, "limit": 20}

    resp = client.put("/api/params", json={"t2": 2})
    assert resp.status_code == 200
    assert resp.json()["t2"] == 2
    assert client.get("/api/params").json()["t2"] == 2


def test_params_threshold_interplay(client):
    # raising t2 alone does not surface Mark: the stage-1 bigram gate
    # already rejected it (bd = 3 > t1)
    client.put("/api/params", json={"t2": 2})
    names = [r["name"] for r in client.get("/api/search", params={"q": "mik"}).json()["results"]]
    assert "Mark" not in names


def test_params_validation_errors(client):
    resp = client.put("/api/params", json={"lambda": 0})
    assert resp.status_code == 400
    assert resp.json()["violations"]
    assert client.put("/api/params", json={"bogus": 1}).status_code == 400
    assert client.put("/api/params", json={"t2": "two"}).status_code == 400
    assert client.put("/api/params", content=b"[1,2]").status_code == 400
    # nothing was applied
    assert client.get("/api/params").json()["lambda"] == 1.0


def test_params_k_change_rebuilds_snapshot(client):
    before = client.get("/api/stats").json()
    resp = client.put("/api/params", json={"k": 2})
    assert resp.status_code == 200
    after = client.get("/api/stats").json()
    assert after["k"] == 2
    assert after["total_bigrams"] > before["total_bigrams"]  # wider skips add bigrams
    # searches still work against the rebuilt snapshot
    resp = client.get("/api/search", params={"q": "mik"})
    assert resp.status_code == 200
    assert [r["name"] for r in resp.json()["results"]][0] == "Mike Petterson"


def test_stats_counts_only_searches(client):
    stats = client.get("/api/stats").json()
    assert stats == {
        "corpus_size": 3,
        "k": 1,
        "lambda": 1.0,
        "total_bigrams": stats["total_bigrams"],
        "requests_served": 0,
    }
    assert stats["total_bigrams"] > 0
    client.get("/api/search", params={"q": "mik"})
    assert client.get("/api/stats").json()["requests_served"] == 1
    client.get("/api/params")
    assert client.get("/api/stats").json()["requests_served"] == 1


def test_api_results_match_cli_json(client, tmp_path, capsys):
    corpus = tmp_path / "names.txt"
    corpus.write_text("\n".join(TRIO) + "\n", encoding="utf-8")
    index = tmp_path / "names.idx"
    assert main(["build", "--corpus", str(corpus), "--index", str(index)]) == 0
    capsys.readouterr()
    assert main(["query", "--index", str(index), "--q", "mik", "--format", "json"]) == 0
    cli_payload = json.loads(capsys.readouterr().out)

    api_payload = client.get("/api/search", params={"q": "mik"}).json()["results"]
    assert api_payload == cli_payload


def test_cors_allows_localhost_origins(client):
    resp = client.get("/api/search", params={"q": "mik"}, headers={"Origin": "http://localhost:8080"})
    assert resp.headers.get("access-control-allow-origin") == "http://localhost:8080"


def test_state_rejects_mismatched_params():
    idx = build_index(TRIO, k=1)
    with pytest.raises(ValueError):
        ServiceState(idx, SearchParams(k=2))
