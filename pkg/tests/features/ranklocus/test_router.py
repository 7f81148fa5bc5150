import pytest


def test_rank_locus(client):
    response = client.get("/api/rank-locus/4/5")
    assert response.status_code == 200
    body = response.json()
    assert (body["dimension"], body["degree"], body["degree_closed_form"]) == (13, 5, 5)


def test_plan(client):
    response = client.get("/api/rank-locus/plan", params={"r": 4, "n": 5, "c": 9})
    assert response.status_code == 200
    body = response.json()
    assert body["dim_X"] == 4
    assert body["h3"] == "Z/2"
    assert body["citations"]["torsion_window"]["provenance"] == "REFERENCE"
    assert body["citations"]["torsion_window"]["locator"] == "torsion-theorem"


def test_luna(client):
    assert client.get("/api/rank-locus/luna/4/5").json()["trivial_multiplicity"] == 8


def test_fano(client):
    assert client.get("/api/rank-locus/fano/4").json()["spec"] == {"r": 4, "n": 5, "c": 9}


@pytest.mark.parametrize(
    "path, params",
    [
        ("/api/rank-locus/plan", {"r": 3, "n": 5, "c": 1}),
        ("/api/rank-locus/luna/2/5", None),
        ("/api/rank-locus/fano/5", None),
        ("/api/rank-locus/0/5", None),
    ],
)
def test_invalid_requests(client, path, params):
    response = client.get(path, params=params)
    assert response.status_code == 422
    assert response.json()["error"] in {"InvalidSpecError", "OutOfRangeError"}
