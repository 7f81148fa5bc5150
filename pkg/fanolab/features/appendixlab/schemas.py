from pydantic import model_validator

from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.common.schemas.common import Citation
from fanolab.shared.varieties.surfaces import SurfaceInvariants


class AppendixReport(BaseModel):
    """Intersection numbers on the complete intersection Y of five (1,1) divisors in P4 x P5."""

    deg_R: int
    deg_S: int
    quad_number: int
    multiplicity: int
    deg_XZ: int
    D_H_degree: int
    citations: dict[str, Citation] = {}

    @model_validator(mode="after")
    def check_relations(self):
        if self.quad_number != self.multiplicity * self.deg_S:
            raise ValueError(f"{self.quad_number} != {self.multiplicity} * {self.deg_S}")
        if 2 * self.D_H_degree != 4 * self.deg_XZ:
            raise ValueError(f"2 D_H = {2 * self.D_H_degree} differs from 4 H5 = {4 * self.deg_XZ}")
        return self


class ConicObstructionReport(BaseModel):
    zeta14: int
    zeta13_g: int
    top_chern_sym2: int
    fiber_count: int
    section_equation_solvable: bool
    citations: dict[str, Citation] = {}


class RuledSigmaReport(BaseModel):
    a: int
    k: int
    intersection: int
    parity: int


class FourfoldHodgeReport(BaseModel):
    t_invariants: SurfaceInvariants
    s_invariants: SurfaceInvariants
    chi_top_t_noether: int
    h13: int
    h12: int
    h22: int
    h_fourth: int
    w_anticanonical: int
    k_x_coefficient: int
    citations: dict[str, Citation] = {}
