from fastapi import APIRouter, Query

from fanolab.features.appendixlab.schemas import (
    AppendixReport,
    ConicObstructionReport,
    FourfoldHodgeReport,
    RuledSigmaReport,
)
from fanolab.features.appendixlab.service import AppendixLabService

appendix_router = APIRouter(prefix="/appendix", tags=["appendix"])


@appendix_router.get("/intersections", response_model=AppendixReport)
def get_appendix_intersections():
    return AppendixLabService.appendix_intersections()


@appendix_router.get("/conic-obstruction", response_model=ConicObstructionReport)
def get_conic_obstruction():
    return AppendixLabService.conic_obstruction()


@appendix_router.get("/ruled-sigma", response_model=RuledSigmaReport)
def get_ruled_sigma(a: int = Query(ge=0), k: int = 0):
    return AppendixLabService.ruled_sigma(a=a, k=k)


@appendix_router.get("/hodge-chain", response_model=FourfoldHodgeReport)
def get_hodge_chain():
    return AppendixLabService.hodge_chain()
