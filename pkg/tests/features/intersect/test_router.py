def test_intersect(client):
    response = client.post("/api/intersect", json={"expression": "(h1+h2)^8", "ambient": "P4 x P4"})
    assert response.status_code == 200
    assert response.json()["value"] == 70


def test_parse_error_reports_position(client):
    response = client.post("/api/intersect", json={"expression": "h1 +* h2", "ambient": "P4 x P4"})
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "ExpressionParseError"
    assert body["position"] == 4


def test_unbound_variable(client):
    response = client.post("/api/intersect", json={"expression": "k", "ambient": "P2"})
    assert response.status_code == 400
    assert response.json()["error"] == "UnboundVariableError"
