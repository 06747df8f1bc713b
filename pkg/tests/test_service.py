import pytest
from fastapi.testclient import TestClient

from dyckforest.service import create_app
from reference_data import (
    PRIME_TRIPLETS_MASKED,
    ROOTS_BY_RANGE,
    TERM_PREFIX,
    TREE39_LEVELS,
    TRIPLETS_BY_RANGE,
)


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_terms(client):
    body = client.get("/terms", params={"limit": 21}).json()
    assert body["terms"] == TERM_PREFIX


def test_terms_validation(client):
    assert client.get("/terms", params={"limit": 0}).status_code == 422
    assert client.get("/terms").status_code == 422


def test_ranges_rows(client):
    body = client.get("/ranges", params={"from": 4, "to": 8}).json()
    assert body["rows"] == [
        {"range": 4, "size": 3, "triplets": 1, "lone_terms": 0},
        {"range": 5, "size": 6, "triplets": 2, "lone_terms": 0},
        {"range": 6, "size": 10, "triplets": 3, "lone_terms": 1},
        {"range": 7, "size": 20, "triplets": 6, "lone_terms": 2},
        {"range": 8, "size": 35, "triplets": 10, "lone_terms": 5},
    ]


def test_ranges_rejects_inverted_interval(client):
    assert client.get("/ranges", params={"from": 8, "to": 4}).status_code == 422


def test_range_triplets(client):
    body = client.get("/ranges/6/triplets").json()
    assert [(t["low"], t["mid"], t["high"]) for t in body["triplets"]] == TRIPLETS_BY_RANGE[6]


def test_range_roots(client):
    assert client.get("/ranges/8/roots").json()["roots"] == ROOTS_BY_RANGE[8]
    assert client.get("/ranges/5/roots").json()["roots"] == []


def test_range_primes(client):
    body = client.get("/ranges/5/primes").json()
    assert [r["masked"] for r in body["records"]] == PRIME_TRIPLETS_MASKED[5]
    assert (body["twins"], body["cousins"]) == (1, 1)
    gaps = [r["gap"] for r in body["records"]]
    assert gaps == ["cousin", "twin"]


def test_census_range_cap(client):
    assert client.get("/ranges/27/roots").status_code == 422
    assert client.get("/ranges", params={"from": 1, "to": 27}).status_code == 422


def test_tree(client):
    body = client.get("/tree", params={"root": 39, "depth": 2}).json()
    assert body["nodes"] == TREE39_LEVELS[2]


def test_tree_rejects_non_root(client):
    resp = client.get("/tree", params={"root": 45, "depth": 1})
    assert resp.status_code == 400
    assert resp.json()["code"] == "invalid_value"


def test_tree_primes(client):
    body = client.get("/tree/primes", params={"root": 39, "depth": 3}).json()
    assert [r["masked"] for r in body["records"]] == ["2539/0/2543", "0/2549/2551"]


def test_rank_and_term(client):
    assert client.get("/rank/33023").json() == {"value": 33023, "rank": 7061}
    assert client.get("/term/7061").json() == {"index": 7061, "value": 33023}


def test_rank_rejects_non_member(client):
    resp = client.get("/rank/9")
    assert resp.status_code == 400
    assert resp.json()["code"] == "invalid_value"


def test_term_overflow(client):
    resp = client.get("/term/99999999999999999999")
    assert resp.status_code == 400
    assert resp.json()["code"] == "overflow"


def test_verify_roundtrip(client):
    ok = client.post(
        "/verify", json={"sequence": "a001405", "text": "0 1\n1 1\n2 2\n3 3\n"}
    ).json()
    assert ok["ok"] and ok["checked"] == 4

    bad = client.post(
        "/verify", json={"sequence": "a001405", "text": "0 1\n1 2\n"}
    ).json()
    assert not bad["ok"]
    assert bad["mismatch_index"] == 1
    assert bad["expected"] == 1
    assert bad["actual"] == 2


def test_verify_rejects_malformed(client):
    resp = client.post("/verify", json={"sequence": "a001405", "text": "1 x\n"})
    assert resp.status_code == 400
    resp = client.post("/verify", json={"sequence": "a999999", "text": "0 1\n"})
    assert resp.status_code == 400


def test_deterministic_payloads(client):
    first = client.get("/ranges/9/primes").content
    second = client.get("/ranges/9/primes").content
    assert first == second
