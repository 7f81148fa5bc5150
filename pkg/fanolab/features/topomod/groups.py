from __future__ import annotations

from pydantic import Field, field_validator, model_validator

from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.exact_core.matrices import IntegerMatrix, integer_kernel, lattice_contains, smith_normal_form
from fanolab.shared.utils.exceptions import NonComposableError
from fanolab.shared.utils.logger import logger


class FGAbelianGroup(BaseModel):
    """Z^free_rank + Z/t_1 + ... + Z/t_s with t_1 | t_2 | ... | t_s, all t_i >= 2."""

    free_rank: int = Field(ge=0)
    torsion: tuple[int, ...] = ()

    @field_validator("torsion")
    @classmethod
    def check_divisibility(cls, torsion: tuple[int, ...]) -> tuple[int, ...]:
        if any(t < 2 for t in torsion):
            raise ValueError(f"Torsion orders must be at least 2, got {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"Torsion orders {torsion} do not form a divisibility chain")
        return torsion

    @classmethod
    def trivial(cls) -> FGAbelianGroup:
        return cls(free_rank=0)

    @classmethod
    def free(cls, rank: int) -> FGAbelianGroup:
        return cls(free_rank=rank)

    @classmethod
    def from_orders(cls, free_rank: int, orders: list[int]) -> FGAbelianGroup:
        """Canonical form of Z^free_rank + sum Z/orders[i] through the Smith normal form of the relations."""
        orders = [o for o in orders if o != 1]
        if any(o < 0 for o in orders):
            raise ValueError(f"Cyclic orders must be nonnegative, got {orders}")
        free_rank += sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o > 0]
        invariants = smith_normal_form(IntegerMatrix.diagonal(finite, len(finite), len(finite))).invariants
        return cls(free_rank=free_rank, torsion=tuple(d for d in invariants if d > 1))

    @property
    def generator_count(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        if not self.is_finite:
            return None
        result = 1
        for t in self.torsion:
            result *= t
        return result

    def relations(self) -> IntegerMatrix:
        """Columns t_j e_{free_rank + j} span the relation lattice of the generator presentation."""
        columns = []
        for j, t in enumerate(self.torsion):
            column = [0] * self.generator_count
            column[self.free_rank + j] = t
            columns.append(column)
        return IntegerMatrix.from_columns(columns, self.generator_count)

    def __str__(self) -> str:
        pieces = []
        if self.free_rank:
            pieces.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        pieces.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(pieces) if pieces else "0"


class ExactSequenceInstance(BaseModel):
    """G_0 -> G_1 -> ... -> G_m, with maps[i] : G_i -> G_{i+1} written on the chosen generators."""

    groups: list[FGAbelianGroup]
    maps: list[IntegerMatrix]

    @model_validator(mode="after")
    def check_composable(self):
        if len(self.maps) != len(self.groups) - 1:
            raise NonComposableError(
                f"{len(self.groups)} groups need {len(self.groups) - 1} maps, got {len(self.maps)}"
            )
        for i, matrix in enumerate(self.maps):
            source, target = self.groups[i], self.groups[i + 1]
            if (matrix.rows, matrix.cols) != (target.generator_count, source.generator_count):
                raise NonComposableError(
                    f"Map {i} has shape {matrix.rows}x{matrix.cols}, expected "
                    f"{target.generator_count}x{source.generator_count}"
                )
            relations = target.relations()
            for column in (matrix @ source.relations()).columns():
                if not lattice_contains(relations, column):
                    raise NonComposableError(f"Map {i} does not respect the relations of {source}")
        return self


def _kernel_lattice(outgoing: IntegerMatrix, middle: FGAbelianGroup, target: FGAbelianGroup) -> list[tuple[int, ...]]:
    # x with outgoing @ x in the relation lattice of target: project ker [outgoing | -R_target]
    relations = target.relations()
    negated = IntegerMatrix(relations.rows, relations.cols, tuple(tuple(-x for x in row) for row in relations.entries))
    kernel = integer_kernel(outgoing.hstack(negated))
    return [column[: middle.generator_count] for column in kernel.columns()]


def _image_lattice(incoming: IntegerMatrix, middle: FGAbelianGroup) -> IntegerMatrix:
    return incoming.hstack(middle.relations())


def _spans(generators: list[tuple[int, ...]], rows: int) -> IntegerMatrix:
    return IntegerMatrix.from_columns(generators, rows)


def check_exact(sequence: ExactSequenceInstance) -> bool:
    """
    Decides exactness at every interior node with integer lattices.

    At G_i the image lattice is span(incoming columns) + relations(G_i) and the kernel lattice is the preimage of
    relations(G_{i+1}); the node is exact when the two lattices contain each other.

    Args:
        sequence: a composable exact sequence instance

    Returns:
        True when image equals kernel at every interior node

    """
    for i in range(1, len(sequence.groups) - 1):
        middle = sequence.groups[i]
        rows = middle.generator_count
        image = _image_lattice(sequence.maps[i - 1], middle)
        kernel_generators = _kernel_lattice(sequence.maps[i], middle, sequence.groups[i + 1])
        kernel = _spans(kernel_generators, rows)
        image_in_kernel = all(lattice_contains(kernel, column) for column in image.columns())
        kernel_in_image = all(lattice_contains(image, column) for column in kernel_generators)
        if not (image_in_kernel and kernel_in_image):
            logger.debug(f"Sequence fails exactness at node {i} ({middle})")
            return False
    return True
