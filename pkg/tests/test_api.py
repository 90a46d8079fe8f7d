import inspect

import pytest
from fastapi.testclient import TestClient

from main import app

@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client

def test_health(client) -> None:
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}

def test_qsym_product(client) -> None:
    response = client.post("/api/qsym/mul", json={"left": "M(1)", "right": "M(1)"})
    assert response.status_code == 200
    body = response.json()
    assert body["element"] == "2*M(1,1) + M(2)"
    assert body["terms"][0] == {"basis": "M(1,1)", "coefficient": "2"}
    assert "X-Process-Time" in response.headers

def test_qsym_coproduct(client) -> None:
    response = client.post("/api/qsym/coprod", json={"element": "M(1,2)"})
    assert response.status_code == 200
    body = response.json()
    assert body["family"] == "qsym2"
    assert body["element"] == "M()⊗M(1,2) + M(1)⊗M(2) + M(1,2)⊗M()"

def test_parse_error_is_400_with_position(client) -> None:
    response = client.post("/api/qsym/antipode", json={"element": "M(1,x)"})
    assert response.status_code == 400
    body = response.json()
    assert body["position"] == 4
    assert body["text"] == "M(1,x)"

def test_wrong_family_is_rejected(client) -> None:
    response = client.post("/api/qsym/mul", json={"left": "S(1)", "right": "M(1)"})
    assert response.status_code == 400

def test_nsym_antipode(client) -> None:
    response = client.post("/api/nsym/antipode", json={"element": "S(2)"})
    assert response.json()["element"] == "S(1,1) - S(2)"

def test_words(client) -> None:
    response = client.post("/api/words/shuffle", json={"left": "W(xy)", "right": "W(xy)"})
    assert response.json()["element"] == "4*W(xxyy) + 2*W(xyxy)"
    response = client.post("/api/words/ohno", json={"word": "xyy", "i": 1})
    assert response.json()["element"] == "W(xxyy) + W(xyxy)"
    response = client.post("/api/words/ohno", json={"word": "yx", "i": 1})
    assert response.status_code == 422

def test_mzv_endpoints(client) -> None:
    response = client.post("/api/mzv/eval", json={"element": "M(2)", "N": 2})
    assert response.status_code == 200
    assert response.json()["value"] == pytest.approx(1.25)
    response = client.post("/api/mzv/verify", json={"element": "M(2) - M(2)", "N": 100})
    assert response.json()["pass"] is True
    response = client.post("/api/mzv/eval", json={"element": "M(2,1)", "N": 100})
    assert response.status_code == 422
    response = client.post("/api/mzv/eval", json={"element": "T[[]]", "N": 100})
    assert response.status_code == 422

def test_ohno_endpoint(client) -> None:
    response = client.post("/api/mzv/ohno", json={"weight": 4, "i": 1, "N": 100000})
    assert response.status_code == 200
    body = response.json()
    assert [check["word"] for check in body["checks"]] == ["xxy", "xyy"]
    assert body["passed"]
    response = client.post("/api/mzv/ohno", json={"weight": 3, "i": 2})
    assert response.status_code == 422

def test_tree_endpoints(client) -> None:
    response = client.get("/api/trees/enum/4")
    assert response.json()["count"] == 4
    response = client.post("/api/trees/invariants", json={"tree": "[[][[]]]"})
    body = response.json()
    assert body["multiplicity"] == 3
    assert body["tree_factorial"] == 8
    assert body["by_tree_factorial"] == "3"
    response = client.get("/api/trees/kappa/2")
    assert response.json()["element"] == "1/2*T[[[][]]] + T[[[[]]]]"
    response = client.post("/api/trees/phistar", json={"element": "1/2*T[[[][]]] + T[[[[]]]]"})
    assert response.json()["element"] == "e(1,1) - e(2)"
    response = client.post("/api/trees/coprod", json={"element": "M(1)"})
    assert response.status_code == 422

def test_tree_size_out_of_range(client) -> None:
    response = client.get("/api/trees/enum/0")
    assert response.status_code == 422

def test_verify(client) -> None:
    assert "words" in client.get("/api/verify/suites").json()
    response = client.post("/api/verify", json={"suites": ["words", "gl-algebra"], "max_degree": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"]
    assert body["max_degree"] == 3
    response = client.post("/api/verify", json={"suites": ["nope"]})
    assert response.status_code == 422

def test_diagnostics(client) -> None:
    info = client.get("/diagnostics/info").json()
    assert info["settings"]["PROJECT_NAME"] == "hopfbench"
    assert any(cache["name"] == "words.shuffle" for cache in info["caches"])
    cleared = client.post("/diagnostics/clear-caches").json()
    assert cleared["status"] == "success"

def test_algebra_handlers_run_in_threadpool() -> None:
    algebra_routes = [route for route in app.routes if getattr(route, "path", "").startswith("/api/")]
    assert algebra_routes
    for route in algebra_routes:
        assert not inspect.iscoroutinefunction(route.endpoint), route.path
