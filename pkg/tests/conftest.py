import pytest
from fastapi.testclient import TestClient
from hypothesis import HealthCheck, settings

from fanolab.main import app

settings.register_profile(
    "fanolab",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fanolab")


@pytest.fixture(scope="session")
def client() -> TestClient:
    return TestClient(app)
