"""Exactness of short sequences of finite abelian groups by listing every element."""

from itertools import product

from fanolab.features.topomod.groups import FGAbelianGroup
from fanolab.shared.exact_core.matrices import IntegerMatrix


def elements(group: FGAbelianGroup) -> list[tuple[int, ...]]:
    return list(product(*(range(t) for t in group.torsion)))


def apply(matrix: IntegerMatrix, x: tuple[int, ...], target: FGAbelianGroup) -> tuple[int, ...]:
    return tuple(value % t for value, t in zip(matrix.apply(x), target.torsion))


def exact_by_enumeration(groups: list[FGAbelianGroup], maps: list[IntegerMatrix]) -> bool:
    for i in range(1, len(groups) - 1):
        image = {apply(maps[i - 1], x, groups[i]) for x in elements(groups[i - 1])}
        zero = (0,) * groups[i + 1].generator_count
        kernel = {x for x in elements(groups[i]) if apply(maps[i], x, groups[i + 1]) == zero}
        if image != kernel:
            return False
    return True
