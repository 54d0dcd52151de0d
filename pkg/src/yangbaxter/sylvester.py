"""Exact Sylvester equation machinery: AX + XB = C at desk scale.

The equation is vectorized column-major into an (n*m) x (n*m) linear
system, the Kronecker lift I_m (x) A + B^T (x) I_n, and solved by exact
elimination. Non-uniqueness is a first-class outcome: the solver returns
a particular solution together with a canonical kernel basis, because the
homogeneous case C = 0 is exactly the interesting one here.

Column-major vectorization is fixed throughout this module: the unknown
X[i, j] sits at coordinate j*n + i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, FieldMismatchError, PreconditionError
from .matrices import Matrix
from .unipoly import char_poly, solve_linear


@dataclass(frozen=True)
class SylvesterProblem:
    """AX + XB = C with A n-by-n, B m-by-m and C n-by-m."""

    a: Matrix
    b: Matrix
    c: Matrix

    def __post_init__(self):
        if not self.a.is_square or not self.b.is_square:
            raise DimensionError("A and B must be square")
        if self.c.nrows != self.a.nrows or self.c.ncols != self.b.nrows:
            raise DimensionError("C must be n-by-m for A n-by-n and B m-by-m")
        if not (self.a.field == self.b.field == self.c.field):
            raise FieldMismatchError("A, B, C must share one field")


@dataclass(frozen=True)
class SylvesterSolution:
    """Solution set description: particular solution plus kernel basis.

    ``particular`` is None exactly when the system is inconsistent.
    """

    particular: Matrix | None
    kernel: tuple[Matrix, ...]

    @property
    def inconsistent(self) -> bool:
        return self.particular is None

    @property
    def unique(self) -> bool:
        return self.particular is not None and not self.kernel


def sylvester_unique(a: Matrix, b: Matrix) -> bool:
    """Unique solvability for every C: A and -B share no eigenvalue,
    detected as coprimality of char(A) and char(-B)."""
    if not a.is_square or not b.is_square:
        raise DimensionError("A and B must be square")
    if a.field != b.field:
        raise FieldMismatchError("A and B over different fields")
    return char_poly(a).gcd(char_poly(-b)).degree == 0


def _vec_col_major(m: Matrix) -> list:
    return [m[i, j] for j in range(m.ncols) for i in range(m.nrows)]


def _unvec_col_major(field, n: int, m: int, vec) -> Matrix:
    return Matrix.from_rows(
        field, [[vec[j * n + i] for j in range(m)] for i in range(n)]
    )


def kronecker_lift(a: Matrix, b: Matrix) -> Matrix:
    """The (n*m) x (n*m) matrix of X -> AX + XB in column-major coordinates."""
    field = a.field
    n, m = a.nrows, b.nrows
    z = field.zero()
    rows = []
    for j in range(m):
        for i in range(n):
            coeff = [z] * (n * m)
            for k in range(n):
                coeff[j * n + k] = coeff[j * n + k] + a[i, k]
            for l in range(m):
                coeff[l * n + i] = coeff[l * n + i] + b[l, j]
            rows.append(coeff)
    return Matrix.from_rows(field, rows)


def sylvester_solve(problem: SylvesterProblem) -> SylvesterSolution:
    """Solve AX + XB = C exactly; see :class:`SylvesterSolution`."""
    a, b, c = problem.a, problem.b, problem.c
    field = a.field
    n, m = a.nrows, b.nrows
    system = kronecker_lift(a, b)
    particular_vec = solve_linear(system, _vec_col_major(c))
    kernel = tuple(
        _unvec_col_major(field, n, m, v) for v in system.kernel_basis()
    )
    if particular_vec is None:
        return SylvesterSolution(None, kernel)
    return SylvesterSolution(_unvec_col_major(field, n, m, particular_vec), kernel)


def offdiag_solution_space(a1: Matrix, a2: Matrix, x2: Matrix) -> list[Matrix]:
    """Basis of the off-diagonal blocks X1 solving A1 X1 A2 = X1 A2 X2.

    Substituting Y = X1 A2 turns the equation into the Sylvester form
    A1 Y - Y X2 = 0; the kernel is computed exactly and mapped back
    through A2^{-1}.
    """
    from .core import is_solution

    a2_inv = a2.inverse()
    if a2_inv is None:
        raise PreconditionError("off-diagonal space: A2 must be invertible")
    if not is_solution(a2, x2):
        raise PreconditionError("off-diagonal space: X2 must solve the equation for A2")
    problem = SylvesterProblem(a1, -x2, Matrix.zero(a1.field, a1.nrows, x2.nrows))
    sol = sylvester_solve(problem)
    return [y * a2_inv for y in sol.kernel]
