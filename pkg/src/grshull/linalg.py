"""Row-major matrices over a Field, with the handful of operations the
hull computations need: reduced row echelon form, rank, right kernel,
row-space comparison and intersection.

Rows are lists of integer reps; vectors are rows throughout.  All
reductions are deterministic, so two runs over the same input produce
identical bases.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple, Union

from .errors import BadParameters
from .gf import Field, FieldElement


class Matrix:
    """Immutable-by-convention matrix; mutate only inside this module."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Sequence[int]], ncols: int = -1):
        rs = [list(r) for r in rows]
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise BadParameters("ragged rows")
            if ncols >= 0 and ncols != width:
                raise BadParameters(f"rows have {width} entries, expected {ncols}")
        else:
            width = ncols
            if width < 0:
                raise BadParameters("empty matrix needs an explicit column count")
        q = field.q
        for r in rs:
            for c in r:
                if not 0 <= c < q:
                    raise BadParameters(f"entry rep {c} outside 0..{q - 1}")
        self.field = field
        self.rows = rs
        self.ncols = width

    @staticmethod
    def from_elements(
        field: Field, rows: Sequence[Sequence[Union[FieldElement, int]]], ncols: int = -1
    ) -> "Matrix":
        conv = []
        for row in rows:
            out = []
            for e in row:
                if isinstance(e, FieldElement):
                    if e.field is not field:
                        raise BadParameters("entry from a different field")
                    out.append(e.rep)
                else:
                    out.append(field.from_subfield_int(e))
            conv.append(out)
        return Matrix(field, conv, ncols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero_rows(field: Field, ncols: int) -> "Matrix":
        """A 0 x ncols matrix: the basis of the zero space."""
        return Matrix(field, [], ncols)

    # -- shape and access -----------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def elem(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def element_rows(self) -> List[List[FieldElement]]:
        F = self.field
        return [[FieldElement(F, c) for c in r] for r in self.rows]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return (
                self.field is other.field
                and self.ncols == other.ncols
                and self.rows == other.rows
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __str__(self):
        fmt = self.field.format_rep
        cells = [[fmt(c) for c in r] for r in self.rows]
        if not cells:
            return f"(0 x {self.ncols} matrix)"
        widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(self.ncols)]
        lines = [
            "[" + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "]"
            for row in cells
        ]
        return "\n".join(lines)

    def __repr__(self):
        return f"Matrix({self.field.name}, {self.nrows}x{self.ncols})"

    # -- combining ------------------------------------------------------------

    def stack(self, other: "Matrix") -> "Matrix":
        """Rows of self above rows of other."""
        if self.field is not other.field or self.ncols != other.ncols:
            raise BadParameters("stack needs matching fields and widths")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def augment(self, other: "Matrix") -> "Matrix":
        """Columns of self followed by columns of other."""
        if self.field is not other.field or self.nrows != other.nrows:
            raise BadParameters("augment needs matching fields and heights")
        return Matrix(
            self.field, [a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.field is not other.field:
            raise BadParameters("product over different fields")
        if self.ncols != other.nrows:
            raise BadParameters(
                f"inner dimensions differ: {self.ncols} vs {other.nrows}"
            )
        F = self.field
        ot = other.transpose()
        return Matrix(
            F,
            [[F.dot(r, c) for c in ot.rows] for r in self.rows],
            other.ncols,
        )

    def matvec(self, vec: Sequence[int]) -> List[int]:
        if len(vec) != self.ncols:
            raise BadParameters("vector length mismatch")
        F = self.field
        return [F.dot(r, vec) for r in self.rows]

    # -- reductions -----------------------------------------------------------

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        F = self.field
        rows = [list(r) for r in self.rows]
        nr = len(rows)
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, nr) if rows[i][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            if rows[r][c] != 1:
                rows[r] = F.row_scale(rows[r], F.inv(rows[r][c]))
            for i in range(nr):
                if i != r and rows[i][c]:
                    rows[i] = F.row_submul(rows[i], rows[r], rows[i][c])
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Matrix(F, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_space_basis(self) -> "Matrix":
        """Canonical basis of the row space: RREF with zero rows dropped."""
        red, pivots = self.rref()
        return Matrix(self.field, red.rows[: len(pivots)], self.ncols)

    def nullspace(self) -> "Matrix":
        """Basis (as rows) of {x : self @ x = 0}, from the RREF free columns."""
        red, pivots = self.rref()
        piv_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in piv_set]
        F = self.field
        out = []
        for fcol in free:
            vec = [0] * self.ncols
            vec[fcol] = 1
            for r, pcol in enumerate(pivots):
                vec[pcol] = F.neg(red.rows[r][fcol])
            out.append(vec)
        return Matrix(F, out, self.ncols)

    def row_space_equal(self, other: "Matrix") -> bool:
        if self.field is not other.field or self.ncols != other.ncols:
            return False
        return self.row_space_basis() == other.row_space_basis()

    def row_space_contains(self, other: "Matrix") -> bool:
        """Does the row space of self contain every row of other?"""
        if self.field is not other.field or self.ncols != other.ncols:
            return False
        F = self.field
        red, pivots = self.rref()
        for row in other.rows:
            vec = list(row)
            for r, pcol in enumerate(pivots):
                if vec[pcol]:
                    vec = F.row_submul(vec, red.rows[r], vec[pcol])
            if any(vec):
                return False
        return True

    def row_space_intersect(self, other: "Matrix") -> "Matrix":
        """Canonical basis of (row space of self) meet (row space of other).

        Works on the doubled block matrix [[self, self], [other, 0]]: after
        elimination, rows whose left half vanished carry intersection
        vectors in their right half.
        """
        if self.field is not other.field or self.ncols != other.ncols:
            raise BadParameters("intersection needs matching fields and widths")
        F = self.field
        n = self.ncols
        block = [list(r) + list(r) for r in self.rows]
        block += [list(r) + [0] * n for r in other.rows]
        red, pivots = Matrix(F, block, 2 * n).rref()
        out = []
        for i, row in enumerate(red.rows):
            left, right = row[:n], row[n:]
            if any(left):
                continue
            if any(right):
                out.append(right)
        return Matrix(F, out, n).row_space_basis()

    @property
    def is_zero(self) -> bool:
        return all(not c for r in self.rows for c in r)
