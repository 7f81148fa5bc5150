from typing import Optional

from pydantic import model_validator

from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.common.enums import CoverDirection, CoverKind
from fanolab.shared.utils.exceptions import ConsistencyError, InvalidSpecError
from fanolab.shared.varieties.variety import Variety


class SurfaceInvariants(BaseModel):
    k_squared: int
    chi_top: int
    chi_o: int
    q: int
    h20: int
    h11: int

    @model_validator(mode="after")
    def check_identities(self):
        if 12 * self.chi_o != self.k_squared + self.chi_top:
            raise ValueError(f"Noether fails: 12*{self.chi_o} != {self.k_squared} + {self.chi_top}")
        if self.h20 != self.chi_o - 1 + self.q:
            raise ValueError(f"h20 = {self.h20} differs from chi(O) - 1 + q = {self.chi_o - 1 + self.q}")
        if self.h11 != self.chi_top - 2 + 4 * self.q - 2 * self.h20 or self.h11 < 0:
            raise ValueError(f"h11 = {self.h11} is inconsistent with chi_top = {self.chi_top}")
        return self


class CoverNumerics(BaseModel):
    """Numerical data carried through a double cover; H-classes are recorded as integer multiples of H."""

    dim: int
    h_degree: Optional[int] = None
    k_coefficient: Optional[int] = None
    chi_top: Optional[int] = None
    k_squared: Optional[int] = None
    chi_o: Optional[int] = None


def surface_hodge(k_squared: int, chi_top: int, q: int) -> SurfaceInvariants:
    """
    Hodge numbers of a surface from Noether's formula.

    Args:
        k_squared: K^2
        chi_top: topological Euler characteristic
        q: irregularity h^{1,0}

    Returns:
        chi(O) = (K^2 + chi_top) / 12, h^{2,0} = chi(O) - 1 + q and h^{1,1} = chi_top - 2 + 4q - 2h^{2,0}

    """
    if (k_squared + chi_top) % 12:
        raise ConsistencyError(f"K^2 + chi_top = {k_squared + chi_top} is not divisible by 12")
    chi_o = (k_squared + chi_top) // 12
    h20 = chi_o - 1 + q
    h11 = chi_top - 2 + 4 * q - 2 * h20
    if h11 < 0 or h20 < 0:
        raise ConsistencyError(f"Negative Hodge numbers h20 = {h20}, h11 = {h11}")
    return SurfaceInvariants(k_squared=k_squared, chi_top=chi_top, chi_o=chi_o, q=q, h20=h20, h11=h11)


def surface_invariants(surface: Variety, q: int = 0) -> SurfaceInvariants:
    """K^2 by intersection, chi_top by Gauss-Bonnet and chi(O) by Riemann-Roch, checked against Noether."""
    if surface.dim != 2:
        raise InvalidSpecError(f"{surface.name} has dimension {surface.dim}, not 2")
    canonical = surface.canonical()
    k_squared = surface.degree(canonical * canonical)
    chi_top = surface.chi_top()
    chi_o = surface.chi(surface.structure_sheaf())
    if 12 * chi_o != k_squared + chi_top:
        raise ConsistencyError(f"{surface.name}: 12 chi(O) = {12 * chi_o} but K^2 + chi_top = {k_squared + chi_top}")
    return surface_hodge(k_squared, chi_top, q)


def _halve(value: Optional[int], label: str) -> Optional[int]:
    if value is None:
        return None
    if value % 2:
        raise ConsistencyError(f"{label} = {value} is odd and cannot be halved by an etale double cover")
    return value // 2


def _double(value: Optional[int]) -> Optional[int]:
    return None if value is None else 2 * value


def double_cover_invariants(
    base: CoverNumerics,
    kind: CoverKind,
    direction: CoverDirection = CoverDirection.to_quotient,
    branch_coefficient: int = 0,
) -> CoverNumerics:
    """
    Transports numerical invariants across a double cover.

    Etale covers are multiplicative: chi_top, K^2 (for surfaces), chi(O) and H-degrees halve towards the quotient and
    double towards the cover, while K pulls back to K. A ramified cover is only followed towards the cover:
    K_cover = pullback(K_base + branch / 2), H-degrees double and the topological data is dropped.

    Args:
        base: invariants on the known side
        kind: etale or ramified
        direction: for etale covers, whether base is the cover or the quotient
        branch_coefficient: branch divisor as a multiple of H (0 when the branch locus has codimension >= 2)

    Returns:
        invariants on the other side

    """
    if kind == CoverKind.etale:
        if direction == CoverDirection.to_quotient:
            return CoverNumerics(
                dim=base.dim,
                h_degree=_halve(base.h_degree, "H-degree"),
                k_coefficient=base.k_coefficient,
                chi_top=_halve(base.chi_top, "chi_top"),
                k_squared=_halve(base.k_squared, "K^2"),
                chi_o=_halve(base.chi_o, "chi(O)"),
            )
        return CoverNumerics(
            dim=base.dim,
            h_degree=_double(base.h_degree),
            k_coefficient=base.k_coefficient,
            chi_top=_double(base.chi_top),
            k_squared=_double(base.k_squared),
            chi_o=_double(base.chi_o),
        )
    if direction != CoverDirection.to_cover:
        raise InvalidSpecError("Ramified covers are only followed from the base to the cover")
    if branch_coefficient % 2:
        raise ConsistencyError(f"Branch divisor {branch_coefficient}H is not divisible by 2")
    k_coefficient = None if base.k_coefficient is None else base.k_coefficient + branch_coefficient // 2
    return CoverNumerics(dim=base.dim, h_degree=_double(base.h_degree), k_coefficient=k_coefficient)
