from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from fanolab.shared.utils.exceptions import InvalidSpecError


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidSpecError("Matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise InvalidSpecError(f"Entries do not match the declared shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise InvalidSpecError("The column count of an empty matrix must be given")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> IntegerMatrix:
        return cls.diagonal([1] * size, size, size)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> IntegerMatrix:
        return cls(
            rows,
            cols,
            tuple(tuple(values[i] if i == j and i < len(values) else 0 for j in range(cols)) for i in range(rows)),
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntegerMatrix:
        return cls(rows, len(columns), tuple(tuple(int(col[i]) for col in columns) for i in range(rows)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix.from_columns(self.entries, self.cols) if self.rows else IntegerMatrix.zeros(self.cols, 0)

    def hstack(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.rows != other.rows:
            raise InvalidSpecError("Cannot stack matrices with different row counts")
        entries = tuple(a + b for a, b in zip(self.entries, other.entries))
        return IntegerMatrix(self.rows, self.cols + other.cols, entries)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise InvalidSpecError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        other_columns = other.columns()
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in other_columns) for row in self.entries),
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise InvalidSpecError(f"Vector of length {len(vector)} does not fit {self.rows}x{self.cols}")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in row] for row in self.entries], (self.rows, self.cols), ZZ)

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise InvalidSpecError("Determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.determinant()) == 1


@dataclass(frozen=True)
class SmithDecomposition:
    """left @ matrix @ right == diag(invariants), with left and right unimodular."""

    invariants: tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d)

    def diagonal_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.diagonal(self.invariants, self.left.rows, self.right.cols)


def smith_normal_form(matrix: IntegerMatrix) -> SmithDecomposition:
    """
    Smith normal form by pivoting on the entry of least absolute value, with the unimodular transforms recorded.

    Args:
        matrix: any integer matrix

    Returns:
        the invariant factors d_1 | d_2 | ... (zeros last) and the row and column transforms

    """
    a = [list(row) for row in matrix.entries]
    nr, nc = matrix.rows, matrix.cols
    left = [[int(i == j) for j in range(nr)] for i in range(nr)]
    right = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i: int, j: int):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst: int, src: int, q: int):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    t = 0
    while t < min(nr, nc):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nonzero:
            break
        _, i0, j0 = min(nonzero)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            pivot = a[t][t]
            for i in range(t + 1, nr):
                q = a[i][t] // pivot
                if q:
                    add_row(i, t, -q)
            for j in range(t + 1, nc):
                q = a[t][j] // pivot
                if q:
                    add_col(j, t, -q)
            remainders = [(abs(a[i][t]), i, True) for i in range(t + 1, nr) if a[i][t]]
            remainders += [(abs(a[t][j]), j, False) for j in range(t + 1, nc) if a[t][j]]
            if remainders:
                _, index, is_row = min(remainders)
                if is_row:
                    swap_rows(t, index)
                else:
                    swap_cols(t, index)
                continue
            offender = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1

    return SmithDecomposition(
        invariants=tuple(a[i][i] for i in range(min(nr, nc))),
        left=IntegerMatrix(nr, nr, tuple(tuple(row) for row in left)),
        right=IntegerMatrix(nc, nc, tuple(tuple(row) for row in right)),
    )


def integer_kernel(matrix: IntegerMatrix) -> IntegerMatrix:
    """Columns form a Z-basis of {x : matrix @ x = 0}."""
    decomposition = smith_normal_form(matrix)
    basis = [decomposition.right.column(j) for j in range(decomposition.rank, matrix.cols)]
    return IntegerMatrix.from_columns(basis, matrix.cols)


def solve_integer(matrix: IntegerMatrix, target: Sequence[int]) -> tuple[int, ...] | None:
    """An integer solution of matrix @ x = target, or None when there is none."""
    if len(target) != matrix.rows:
        raise InvalidSpecError(f"Target of length {len(target)} does not fit {matrix.rows} rows")
    decomposition = smith_normal_form(matrix)
    transformed = decomposition.left.apply(target)
    z = [0] * matrix.cols
    for i, value in enumerate(transformed):
        d = decomposition.invariants[i] if i < len(decomposition.invariants) else 0
        if d == 0:
            if value:
                return None
            continue
        if value % d:
            return None
        z[i] = value // d
    return decomposition.right.apply(z)


def lattice_contains(generators: IntegerMatrix, vector: Sequence[int]) -> bool:
    """Whether vector lies in the Z-span of the columns of generators."""
    return solve_integer(generators, vector) is not None
