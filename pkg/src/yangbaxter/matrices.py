"""Dense exact matrices over a :class:`~yangbaxter.fields.Field`.

Matrices are immutable row-major tuples of scalars. Every reduction used
here (rref, rank, kernel, inverse, nullspace of operator equations) is
plain Gauss-Jordan elimination with exact field arithmetic, so results
are deterministic down to the byte.

Whenever a basis of a matrix space is returned (kernels, centralizers,
annihilators) it is the reduced-echelon basis of the row-major
vectorization, which makes those bases canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, FieldMismatchError
from .fields import Field, Scalar


class Matrix:
    """An immutable n-by-m matrix with exact entries in one field."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, nrows: int, ncols: int, entries):
        entries = tuple(entries)
        if nrows * ncols != len(entries):
            raise DimensionError(
                f"{nrows}x{ncols} matrix needs {nrows * ncols} entries, got {len(entries)}"
            )
        for e in entries:
            if not isinstance(e, Scalar) or e.field != field:
                raise FieldMismatchError("all entries must be scalars of the matrix field")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    # -- construction ----------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("matrix needs at least one row")
        ncols = len(rows[0])
        if ncols == 0 or any(len(r) != ncols for r in rows):
            raise DimensionError("rows must be non-empty and of equal length")
        ents = [field.scalar(v) for row in rows for v in row]
        return cls(field, len(rows), ncols, ents)

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int | None = None) -> "Matrix":
        if ncols is None:
            ncols = nrows
        z = field.zero()
        return cls(field, nrows, ncols, [z] * (nrows * ncols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def unit(cls, field: Field, nrows: int, ncols: int, i: int, j: int) -> "Matrix":
        """The matrix with a single 1 at position (i, j)."""
        z, o = field.zero(), field.one()
        return cls(field, nrows, ncols, [o if (r, c) == (i, j) else z
                                         for r in range(nrows) for c in range(ncols)])

    @classmethod
    def block(cls, grid) -> "Matrix":
        """Assemble a matrix from a 2-d grid of conforming blocks."""
        grid = [list(row) for row in grid]
        field = grid[0][0].field
        row_heights = [row[0].nrows for row in grid]
        col_widths = [b.ncols for b in grid[0]]
        for row, h in zip(grid, row_heights):
            if len(row) != len(col_widths):
                raise DimensionError("ragged block grid")
            for b, w in zip(row, col_widths):
                if b.nrows != h or b.ncols != w:
                    raise DimensionError("block sizes do not conform")
                if b.field != field:
                    raise FieldMismatchError("blocks over different fields")
        rows = []
        for row, h in zip(grid, row_heights):
            for i in range(h):
                rows.append([b[i, j] for b in row for j in range(b.ncols)])
        return cls.from_rows(field, rows)

    # -- access ----------------------------------------------------------------

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.entries))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(e) for e in self.row(i))
                               for i in range(self.nrows)) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self.field.spec()}, {self})"

    # -- arithmetic --------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionError(
                f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.field, self.nrows, self.ncols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = self.field.scalar(c)
        return Matrix(self.field, self.nrows, self.ncols, [c * a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.field != other.field:
                raise FieldMismatchError("matrices over different fields")
            if self.ncols != other.nrows:
                raise DimensionError(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
                )
            n, k, m = self.nrows, self.ncols, other.ncols
            a, b = self.entries, other.entries
            out = []
            for i in range(n):
                arow = a[i * k:(i + 1) * k]
                for j in range(m):
                    acc = self.field.zero()
                    for t in range(k):
                        acc = acc + arow[t] * b[t * m + j]
                    out.append(acc)
            return Matrix(self.field, n, m, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionError("powers need a square matrix")
        if k < 0:
            inv = self.inverse()
            if inv is None:
                raise ZeroDivisionError("matrix is singular")
            return inv ** (-k)
        out = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows,
                      [self[i, j] for j in range(self.ncols) for i in range(self.nrows)])

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionError("trace needs a square matrix")
        acc = self.field.zero()
        for i in range(self.nrows):
            acc = acc + self[i, i]
        return acc

    def apply(self, vec) -> tuple[Scalar, ...]:
        """Multiply this matrix by a column vector given as a scalar sequence."""
        vec = [self.field.scalar(v) for v in vec]
        if len(vec) != self.ncols:
            raise DimensionError("vector length does not match column count")
        out = []
        for i in range(self.nrows):
            acc = self.field.zero()
            for j, v in enumerate(vec):
                acc = acc + self[i, j] * v
            out.append(acc)
        return tuple(out)

    # -- elimination -----------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and the tuple of pivot columns."""
        rows = self.rows()
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            pr = None
            for i in range(r, nr):
                if not rows[i][c].is_zero:
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [inv * e for e in rows[r]]
            for i in range(nr):
                if i != r and not rows[i][c].is_zero:
                    f = rows[i][c]
                    rows[i] = [e - f * g for e, g in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Matrix.from_rows(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple[Scalar, ...]]:
        """Canonical basis of the right kernel, one vector per free column."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        z, o = self.field.zero(), self.field.one()
        basis = []
        for fc in free:
            v = [z] * self.ncols
            v[fc] = o
            for r, pc in enumerate(pivots):
                v[pc] = -red[r, fc]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix | None":
        """Exact inverse, or None when the matrix is singular."""
        if not self.is_square:
            raise DimensionError("inverse needs a square matrix")
        n = self.nrows
        aug = Matrix.block([[self, Matrix.identity(self.field, n)]])
        red, pivots = aug.rref()
        if pivots != tuple(range(n)):
            return None
        return Matrix(self.field, n, n,
                      [red[i, n + j] for i in range(n) for j in range(n)])

    def det(self) -> Scalar:
        """Determinant by exact elimination with row pivoting."""
        if not self.is_square:
            raise DimensionError("determinant needs a square matrix")
        rows = self.rows()
        n = self.nrows
        det = self.field.one()
        for c in range(n):
            pr = None
            for i in range(c, n):
                if not rows[i][c].is_zero:
                    pr = i
                    break
            if pr is None:
                return self.field.zero()
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, n):
                if not rows[i][c].is_zero:
                    f = rows[i][c] * inv
                    rows[i] = [e - f * g for e, g in zip(rows[i], rows[c])]
        return det

    def is_invertible(self) -> bool:
        return self.is_square and not self.det().is_zero


# -- Jordan structure ------------------------------------------------------------


@dataclass(frozen=True)
class JordanSpec:
    """An ordered list of Jordan blocks (eigenvalue, size)."""

    blocks: tuple[tuple[Scalar, int], ...]

    def __post_init__(self):
        for lam, size in self.blocks:
            if size < 1:
                raise DimensionError(f"Jordan block size must be >= 1, got {size}")

    @property
    def dimension(self) -> int:
        return sum(size for _, size in self.blocks)

    def block_ranges(self) -> list[tuple[int, int]]:
        """Half-open coordinate ranges occupied by each block."""
        out, start = [], 0
        for _, size in self.blocks:
            out.append((start, start + size))
            start += size
        return out

    def eigenvalues(self) -> list[Scalar]:
        """Distinct eigenvalues in order of first appearance."""
        seen: list[Scalar] = []
        for lam, _ in self.blocks:
            if lam not in seen:
                seen.append(lam)
        return seen


def jordan_block(field: Field, eigenvalue, size: int) -> Matrix:
    lam = field.scalar(eigenvalue)
    z, o = field.zero(), field.one()
    ents = []
    for i in range(size):
        for j in range(size):
            if i == j:
                ents.append(lam)
            elif j == i + 1:
                ents.append(o)
            else:
                ents.append(z)
    return Matrix(field, size, size, ents)


def nilpotent_block(field: Field, size: int) -> Matrix:
    """The shift matrix with ones on the superdiagonal."""
    return jordan_block(field, 0, size)


def jordan_matrix(field: Field, spec) -> Matrix:
    """Block-diagonal matrix of Jordan blocks, in the given order."""
    if isinstance(spec, JordanSpec):
        pairs = spec.blocks
    else:
        pairs = tuple((field.scalar(lam), size) for lam, size in spec)
    blocks = [jordan_block(field, lam, size) for lam, size in pairs]
    return block_diag(field, blocks)


def block_diag(field: Field, blocks) -> Matrix:
    blocks = list(blocks)
    if not blocks:
        raise DimensionError("need at least one block")
    n = sum(b.nrows for b in blocks)
    grid = []
    for i, b in enumerate(blocks):
        row = []
        for j, c in enumerate(blocks):
            row.append(b if i == j else Matrix.zero(field, b.nrows, c.ncols))
        grid.append(row)
    return Matrix.block(grid)


# -- operator equation bases -------------------------------------------------------

def _vec_row_major(m: Matrix) -> tuple[Scalar, ...]:
    return m.entries


def _unvec_row_major(field: Field, n: int, vec) -> Matrix:
    return Matrix(field, n, n, vec)


def _matrix_space_basis(a: Matrix, system_rows) -> list[Matrix]:
    """Canonical basis of {M : linear conditions hold}, via one big kernel."""
    n = a.nrows
    sys_matrix = Matrix.from_rows(a.field, system_rows)
    return [_unvec_row_major(a.field, n, v) for v in sys_matrix.kernel_basis()]


def centralizer_basis(a: Matrix) -> list[Matrix]:
    """Canonical basis of {M : AM = MA}."""
    if not a.is_square:
        raise DimensionError("centralizer needs a square matrix")
    n = a.nrows
    z = a.field.zero()
    rows = []
    # equation (i, j): sum_k a[i,k] m[k,j] - m[i,k] a[k,j] = 0
    for i in range(n):
        for j in range(n):
            coeff = [z] * (n * n)
            for k in range(n):
                coeff[k * n + j] = coeff[k * n + j] + a[i, k]
                coeff[i * n + k] = coeff[i * n + k] - a[k, j]
            rows.append(coeff)
    return _matrix_space_basis(a, rows)


def annihilator_basis(a: Matrix) -> list[Matrix]:
    """Canonical basis of {M : AM = 0 and MA = 0}."""
    if not a.is_square:
        raise DimensionError("annihilator needs a square matrix")
    n = a.nrows
    z = a.field.zero()
    rows = []
    for i in range(n):
        for j in range(n):
            coeff = [z] * (n * n)
            for k in range(n):
                coeff[k * n + j] = coeff[k * n + j] + a[i, k]
            rows.append(coeff)
    for i in range(n):
        for j in range(n):
            coeff = [z] * (n * n)
            for k in range(n):
                coeff[i * n + k] = coeff[i * n + k] + a[k, j]
            rows.append(coeff)
    return _matrix_space_basis(a, rows)


def jordan_chain_conjugator(x: Matrix, lam) -> Matrix | None:
    """An invertible S with S J_k(lam) S^{-1} = x, assembled from a Jordan
    chain of x, or None when x is not similar to the full single block."""
    if not x.is_square:
        raise DimensionError("conjugator needs a square matrix")
    field, k = x.field, x.nrows
    lam = field.scalar(lam)
    nil = x - Matrix.identity(field, k).scale(lam)
    if not (nil ** k).is_zero:
        return None
    top = nil ** (k - 1)
    z, o = field.zero(), field.one()
    for idx in range(k):
        v = tuple(o if t == idx else z for t in range(k))
        if any(not c.is_zero for c in top.apply(v)):
            chain = [v]
            for _ in range(k - 1):
                chain.append(nil.apply(chain[-1]))
            chain.reverse()
            s = Matrix.from_rows(field, [[chain[j][i] for j in range(k)]
                                         for i in range(k)])
            if s.is_invertible():
                return s
    return None


def span_contains(basis: list[Matrix], m: Matrix) -> bool:
    """Whether ``m`` lies in the span of the given matrices."""
    if not basis:
        return m.is_zero
    field = basis[0].field
    rows = [list(_vec_row_major(b)) for b in basis]
    stacked = Matrix.from_rows(field, rows)
    with_m = Matrix.from_rows(field, rows + [list(_vec_row_major(m))])
    return stacked.rank() == with_m.rank()
