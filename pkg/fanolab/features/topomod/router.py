from fastapi import APIRouter, Query

from fanolab.features.topomod.schemas import BSO4Group, ConiveauReport, GysinReport, SteenrodResult
from fanolab.features.topomod.service import TopologyService

topology_router = APIRouter(prefix="/topology", tags=["topology"])


@topology_router.get("/bso4/{degree}", response_model=BSO4Group)
def get_bso4_group(degree: int):
    return TopologyService.bso4_group_report(degree=degree)


@topology_router.get("/steenrod", response_model=SteenrodResult)
def get_steenrod_square(i: int = Query(ge=0), x: str = Query(examples=["w2"])):
    return TopologyService.steenrod(i=i, expression=x)


@topology_router.get("/gysin", response_model=GysinReport)
def get_gysin_check():
    return TopologyService.gysin_report()


@topology_router.get("/coniveau", response_model=ConiveauReport)
def get_coniveau_verdict(square_nonzero: bool = True):
    return TopologyService.coniveau_report(square_mod2_nonzero=square_nonzero)
