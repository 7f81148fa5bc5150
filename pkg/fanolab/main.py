from fastapi import APIRouter, FastAPI, Request, status
from fastapi.responses import JSONResponse

from fanolab.features.appendixlab.router import appendix_router
from fanolab.features.intersect.router import intersect_router
from fanolab.features.probes_routes.router import probe_router
from fanolab.features.ranklocus.router import rank_locus_router
from fanolab.features.reproduce.router import reproduce_router
from fanolab.features.topomod.router import topology_router
from fanolab.shared.config.config import settings
from fanolab.shared.utils.exceptions import ExpressionParseError, FanolabException, SpecException
from fanolab.shared.utils.logger import logger

docs_url_dict = dict(docs_url="/api/docs", redoc_url="/api/redoc", openapi_url="/api/openapi.json")
if settings.is_production:
    docs_url_dict = {"openapi_url": None, "docs_url": None, "redoc_url": None}

app = FastAPI(
    title="fanolab",
    docs_url=docs_url_dict["docs_url"],
    redoc_url=docs_url_dict["redoc_url"],
    openapi_url=docs_url_dict["openapi_url"],
    description="Exact intersection numbers, rank-locus planning and torsion checks for double covers of rank loci",
    version=settings.tool_version,
)


@app.exception_handler(FanolabException)
async def fanolab_exception_handler(request: Request, exc: FanolabException):
    code = status.HTTP_422_UNPROCESSABLE_ENTITY if isinstance(exc, SpecException) else status.HTTP_400_BAD_REQUEST
    content = {"error": type(exc).__name__, "detail": str(exc)}
    if isinstance(exc, ExpressionParseError):
        content["position"] = exc.position
    logger.info(f"{request.method} {request.url.path} rejected: {content['error']}")
    return JSONResponse(status_code=code, content=content)


features_router = APIRouter(prefix="/api")
features_router.include_router(probe_router)
features_router.include_router(intersect_router)
features_router.include_router(rank_locus_router)
features_router.include_router(appendix_router)
features_router.include_router(topology_router)
features_router.include_router(reproduce_router)


app.include_router(features_router)
app.include_router(probe_router)
