"""Exact dense matrices over GF(p) or the rationals.

Matrices are immutable, stored row-major, and legal in every degenerate
shape (0 x n and n x 0 behave as linear maps between zero spaces).  All
derived bases come from the reduced row echelon form, which is unique,
so every result is reproducible across runs and backends.
"""

from __future__ import annotations

from . import _core
from .fields import Field


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries", "_rref")

    def __init__(self, field: Field, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._rref = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, row_data, cols: int | None = None) -> "Matrix":
        row_data = [list(r) for r in row_data]
        if row_data:
            cols = len(row_data[0])
            if any(len(r) != cols for r in row_data):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        flat = [field.canon(x) for row in row_data for x in row]
        return cls(field, len(row_data), cols, flat)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return cls(field, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        flat = [o if i == j else z for i in range(n) for j in range(n)]
        return cls(field, n, n, flat)

    @classmethod
    def column(cls, field: Field, vec) -> "Matrix":
        vec = [field.canon(x) for x in vec]
        return cls(field, len(vec), 1, vec)

    # -- basic access --------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(x == z for x in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols} over {self.field!r}: [{body}])"

    # -- arithmetic ------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.field != other.field or self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape or field mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        sub = self.field.sub
        return Matrix(self.field, self.rows, self.cols,
                      [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [neg(a) for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = self.field.canon(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [mul(c, a) for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        p = f.p
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        if p is not None:
            for i in range(n):
                arow = a[i * k : (i + 1) * k]
                for j in range(m):
                    s = 0
                    for t in range(k):
                        s += arow[t] * b[t * m + j]
                    out.append(s % p)
        else:
            zero = f.zero()
            for i in range(n):
                arow = a[i * k : (i + 1) * k]
                for j in range(m):
                    s = zero
                    for t in range(k):
                        s = s + arow[t] * b[t * m + j]
                    out.append(s)
        return Matrix(f, n, m, out)

    def apply(self, vec):
        """Matrix-vector product, returning a tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(self.__matmul__(Matrix.column(self.field, vec)).entries)

    def transpose(self) -> "Matrix":
        e = self.entries
        c = self.cols
        out = [e[i * c + j] for j in range(c) for i in range(self.rows)]
        return Matrix(self.field, c, self.rows, out)

    # -- stacking -----------------------------------------------------------

    @staticmethod
    def hstack(field: Field, mats: list["Matrix"], rows: int | None = None) -> "Matrix":
        """Concatenate blocks left to right (all with equal row count)."""
        mats = [m for m in mats]
        if mats:
            rows = mats[0].rows
        if rows is None:
            raise ValueError("empty hstack needs an explicit row count")
        if any(m.rows != rows or m.field != field for m in mats):
            raise ValueError("hstack mismatch")
        out = []
        for i in range(rows):
            for m in mats:
                out.extend(m.row(i))
        return Matrix(field, rows, sum(m.cols for m in mats), out)

    @staticmethod
    def vstack(field: Field, mats: list["Matrix"], cols: int | None = None) -> "Matrix":
        """Concatenate blocks top to bottom (all with equal column count)."""
        mats = [m for m in mats]
        if mats:
            cols = mats[0].cols
        if cols is None:
            raise ValueError("empty vstack needs an explicit column count")
        if any(m.cols != cols or m.field != field for m in mats):
            raise ValueError("vstack mismatch")
        out = []
        for m in mats:
            out.extend(m.entries)
        return Matrix(field, sum(m.rows for m in mats), cols, out)

    @staticmethod
    def block_diag(field: Field, mats: list["Matrix"]) -> "Matrix":
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        z = field.zero()
        grid = [[z] * cols for _ in range(rows)]
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                grid[r0 + i][c0 : c0 + m.cols] = list(m.row(i))
            r0 += m.rows
            c0 += m.cols
        return Matrix(field, rows, cols, [x for row in grid for x in row])

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form and pivot columns (cached)."""
        if self._rref is None:
            rows = self.to_rows()
            if self.field.p is not None:
                reduced, pivots = _core.rref_mod_p(rows, self.field.p)
            else:
                reduced, pivots = _core.rref_fraction(rows)
            self._rref = (reduced, pivots)
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace_basis(self) -> list[tuple]:
        """Canonical kernel basis, one vector per free column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        z, o = self.field.zero(), self.field.one()
        neg = self.field.neg
        basis = []
        for f in free:
            v = [z] * self.cols
            v[f] = o
            for t, j in enumerate(pivots):
                v[j] = neg(reduced[t][f])
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """Some x with self @ x = b, or None when inconsistent.

        Deterministic: free variables are set to zero in the reduced system.
        """
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        sol = self.solve_matrix(Matrix.column(self.field, b))
        return None if sol is None else tuple(sol.entries)

    def solve_matrix(self, rhs: "Matrix"):
        """Columnwise solve: X with self @ X = rhs, or None if any column fails."""
        if rhs.rows != self.rows or rhs.field != self.field:
            raise ValueError("right-hand side mismatch")
        aug = Matrix.hstack(self.field, [self, rhs], rows=self.rows)
        reduced, pivots = aug.rref()
        if any(j >= self.cols for j in pivots):
            return None
        z = self.field.zero()
        out = [[z] * rhs.cols for _ in range(self.cols)]
        for t, j in enumerate(pivots):
            for c in range(rhs.cols):
                out[j][c] = reduced[t][self.cols + c]
        return Matrix.from_rows(self.field, out, cols=rhs.cols)

    def invert(self):
        """The inverse matrix, or None when not square or singular."""
        if self.rows != self.cols:
            return None
        aug = Matrix.hstack(self.field, [self, Matrix.identity(self.field, self.rows)],
                            rows=self.rows)
        reduced, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            return None
        flat = [x for t in range(self.rows) for x in reduced[t][self.cols :]]
        return Matrix(self.field, self.rows, self.cols, flat)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


# -- subspace helpers ---------------------------------------------------------


def column_space(m: Matrix) -> Matrix:
    """Canonical basis of the column space, returned as columns.

    The basis is the nonzero rows of the reduced row echelon form of the
    transpose, so equal spans yield equal matrices.
    """
    reduced, pivots = m.transpose().rref()
    basis_rows = [reduced[t] for t in range(len(pivots))]
    return Matrix.from_rows(m.field, basis_rows, cols=m.rows).transpose()


def quotient_map(m: Matrix) -> Matrix:
    """Canonical projection of the ambient space onto the quotient by colspan(m).

    Returns Q with ker Q = column span of m and Q surjective; coordinates
    on the quotient are the non-pivot ambient coordinates.
    """
    reduced, pivots = m.transpose().rref()
    d = m.rows
    pivot_set = set(pivots)
    free = [j for j in range(d) if j not in pivot_set]
    z, o = m.field.zero(), m.field.one()
    neg = m.field.neg
    rows = []
    for f in free:
        row = [z] * d
        row[f] = o
        for t, j in enumerate(pivots):
            row[j] = neg(reduced[t][f])
        rows.append(row)
    return Matrix.from_rows(m.field, rows, cols=d)


def in_column_span(m: Matrix, vec) -> bool:
    return m.solve(vec) is not None
