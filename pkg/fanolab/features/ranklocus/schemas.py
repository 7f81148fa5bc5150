from typing import Optional

from pydantic import model_validator

from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.common.enums import Classification, ConiveauVerdict, Provenance, Smoothness, WindowVerdict
from fanolab.shared.common.schemas.common import Citation
from fanolab.shared.utils.exceptions import InvalidSpecError


def rank_locus_dimension(r: int, n: int) -> int:
    """dim Z_{r,n} = rn - r(r - 1)/2 - 1, the projective dimension of quadrics in n variables of rank exactly r."""
    return r * n - r * (r - 1) // 2 - 1


class RankLocusSpec(BaseModel):
    """X = W_{r,n} cut by c general hyperplane sections, W_{r,n} the double cover of the rank <= r locus."""

    r: int
    n: int
    c: int

    @model_validator(mode="after")
    def check_ranges(self):
        if self.r <= 0 or self.r % 2:
            raise InvalidSpecError(f"r must be a positive even integer, got {self.r}")
        if self.n < self.r:
            raise InvalidSpecError(f"n = {self.n} must be at least r = {self.r}")
        if not 0 <= self.c <= rank_locus_dimension(self.r, self.n):
            raise InvalidSpecError(
                f"c = {self.c} must lie in 0..{rank_locus_dimension(self.r, self.n)} for (r, n) = ({self.r}, {self.n})"
            )
        return self


class RankLocusData(BaseModel):
    r: int
    n: int
    dimension: int
    degree: Optional[int] = None
    degree_closed_form: int
    grassmannian: Optional[str] = None


class LunaSlice(BaseModel):
    """Normal representation at a closed orbit of W_{r,n} over a rank r - 2 quadric."""

    w_plus: int
    w_minus: int
    cone: str
    cone_dimension: int
    trivial_multiplicity: int
    provenance: Provenance = Provenance.derived


class LefschetzData(BaseModel):
    range_bound: int
    codimension: int
    isomorphism_below: int


class SingularLocus(BaseModel):
    z_singular_along: Optional[str] = None
    w_singular_along: Optional[str] = None
    w_singular_codimension: Optional[int] = None
    branch_codimension: int


class IsolatedSingularities(BaseModel):
    count: Optional[int] = None
    exceptional_divisor: str
    local_model: str


class SingularCount(BaseModel):
    """dim sigma^{-1}(Z_{r-2,n}) - rn/2 + 1, the dimension of the singular locus of X when K_X = -H."""

    value: int
    closed_form: str
    symbolic_match: bool
    nonnegative: bool


class PlannerReport(BaseModel):
    spec: RankLocusSpec
    dim_Z: int
    dim_W: int
    dim_X: int
    deg_Z: Optional[int] = None
    h_degree: Optional[int] = None
    k_coefficient: int
    classification: Classification
    smoothness: Smoothness
    singular_dimension: int
    torsion_window: WindowVerdict
    obstruction_window: WindowVerdict
    h3: Optional[str] = None
    coniveau: ConiveauVerdict
    luna: Optional[LunaSlice] = None
    lefschetz: LefschetzData
    singular_locus: SingularLocus
    isolated_singularities: Optional[IsolatedSingularities] = None
    singular_count: Optional[SingularCount] = None
    annotations: list[str] = []
    citations: dict[str, Citation] = {}


class FanoFamilyMember(BaseModel):
    dimension: int
    spec: RankLocusSpec
    index: int
    h3: str
