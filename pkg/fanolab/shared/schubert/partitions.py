from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from fanolab.shared.utils.exceptions import InvalidSpecError


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise InvalidSpecError(f"Partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidSpecError(f"Partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> Partition:
        """Builds a partition, discarding trailing zeros."""
        return cls(tuple(p for p in parts if p))

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> Partition:
        return cls((cols,) * rows if cols else ())

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def complement(self, rows: int, cols: int) -> Partition:
        if not self.fits_in_box(rows, cols):
            raise InvalidSpecError(f"{self} does not fit in a {rows}x{cols} box")
        return Partition.of(cols - self.part(rows - 1 - i) for i in range(rows))

    def padded(self, length: int) -> tuple[int, ...]:
        return self.parts + (0,) * (length - self.length)

    def __str__(self) -> str:
        return f"s[{','.join(str(p) for p in self.parts)}]"


def partitions_in_box(rows: int, cols: int, size: int | None = None) -> Iterator[Partition]:
    """All partitions in the rows x cols box, optionally of a fixed size, largest first."""

    def build(prefix: tuple[int, ...], bound: int, remaining_rows: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if remaining_rows == 0:
            return
        for part in range(bound, 0, -1):
            yield from build(prefix + (part,), part, remaining_rows - 1)

    for parts in build((), cols, rows):
        if size is None or sum(parts) == size:
            yield Partition(parts)


def horizontal_strips(shape: Partition, p: int, rows: int, cols: int) -> Iterator[Partition]:
    """Partitions mu in the box with mu / shape a horizontal strip of size p."""
    base = shape.padded(rows)

    def extend(i: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if remaining == 0:
                yield prefix
            return
        upper = cols if i == 0 else base[i - 1]
        for value in range(base[i], min(upper, base[i] + remaining) + 1):
            yield from extend(i + 1, remaining - (value - base[i]), prefix + (value,))

    for parts in extend(0, p, ()):
        yield Partition.of(parts)


def vertical_strips(shape: Partition, p: int, rows: int, cols: int) -> Iterator[Partition]:
    """Partitions mu in the box with mu / shape a vertical strip of size p."""
    for mu in horizontal_strips(shape.conjugate(), p, cols, rows):
        yield mu.conjugate()
