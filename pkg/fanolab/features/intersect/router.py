from fastapi import APIRouter

from fanolab.features.intersect.schemas import IntersectRequest, IntersectResult
from fanolab.features.intersect.service import IntersectService

intersect_router = APIRouter(prefix="/intersect", tags=["intersect"])


@intersect_router.post("", response_model=IntersectResult)
def intersect(request: IntersectRequest):
    return IntersectService.intersect(expression=request.expression, ambient=request.ambient)
