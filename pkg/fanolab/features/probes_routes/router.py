from fastapi import APIRouter, status

from fanolab.features.reproduce.registry import REGISTRY
from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.config.config import settings

probe_router = APIRouter(prefix="", tags=["probe"])


class ProbeStatus(BaseModel):
    status: str
    tool_version: str
    registered_checks: int


@probe_router.get("/health", status_code=status.HTTP_200_OK)
@probe_router.get("/health/", status_code=status.HTTP_200_OK)
async def health_check():
    """Liveness: the process answers."""
    return {"status": "ok"}


@probe_router.get("/ready", response_model=ProbeStatus, status_code=status.HTTP_200_OK)
@probe_router.get("/ready/", response_model=ProbeStatus, status_code=status.HTTP_200_OK)
async def ready_check() -> ProbeStatus:
    """
    Readiness: the check registry imported, which pulls in every engine module.

    Returns:
        the tool version and the number of registered checks

    """
    return ProbeStatus(status="ok", tool_version=settings.tool_version, registered_checks=len(REGISTRY))
