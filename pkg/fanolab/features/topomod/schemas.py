from fanolab.features.topomod.groups import FGAbelianGroup
from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.common.enums import ConiveauVerdict


class BSO4Group(BaseModel):
    degree: int
    group: FGAbelianGroup
    description: str
    basis: list[str]


class SteenrodResult(BaseModel):
    i: int
    x: str
    result: str
    square_nonzero: bool


class GysinReport(BaseModel):
    labels: list[str]
    groups: list[str]
    exact: bool


class ConiveauReport(BaseModel):
    square_nonzero: bool
    verdict: ConiveauVerdict
    sq_axiom_consistent: bool
    witness: str
    statement: str
