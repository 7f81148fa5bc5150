from typing import Optional

from fastapi import APIRouter

from fanolab.features.reproduce.schemas import ReportDocument
from fanolab.features.reproduce.service import ReproduceService

reproduce_router = APIRouter(prefix="/reproduce", tags=["reproduce"])


@reproduce_router.get("", response_model=ReportDocument)
def get_reproduction_report(only: Optional[str] = None):
    return ReproduceService.reproduce(only=only)
