from fastapi import APIRouter

from fanolab.features.ranklocus.schemas import FanoFamilyMember, LunaSlice, PlannerReport, RankLocusData, RankLocusSpec
from fanolab.features.ranklocus.service import RankLocusService

rank_locus_router = APIRouter(prefix="/rank-locus", tags=["rank-locus"])


@rank_locus_router.get("/plan", response_model=PlannerReport)
def get_plan(r: int, n: int, c: int):
    return RankLocusService.plan(RankLocusSpec(r=r, n=n, c=c))


@rank_locus_router.get("/luna/{r}/{n}", response_model=LunaSlice)
def get_luna_slice(r: int, n: int):
    return RankLocusService.luna_slice(r=r, n=n)


@rank_locus_router.get("/fano/{d}", response_model=FanoFamilyMember)
def get_fano_family_member(d: int):
    return RankLocusService.fano_family(d=d)


@rank_locus_router.get("/{r}/{n}", response_model=RankLocusData)
def get_rank_locus(r: int, n: int):
    return RankLocusService.rank_locus(r=r, n=n)
