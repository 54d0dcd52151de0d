"""Exact univariate polynomials, characteristic and minimal polynomials.

The characteristic polynomial is computed by the Faddeev-LeVerrier
recurrence over fields of characteristic zero. Over GF(p) the recurrence
divides by integers up to n, which can vanish mod p, so there the
determinant of (xI - M) is expanded by fraction-free Bareiss elimination
over the polynomial ring instead. Both paths are exact.
"""

from __future__ import annotations

from .errors import DimensionError, FieldMismatchError, InconclusiveError
from .fields import Field, Scalar
from .matrices import Matrix


class UniPoly:
    """A univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = [field.scalar(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field: Field) -> "UniPoly":
        return cls(field, [])

    @classmethod
    def one(cls, field: Field) -> "UniPoly":
        return cls(field, [1])

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls(field, [0, 1])

    @classmethod
    def linear(cls, field: Field, root) -> "UniPoly":
        """The monic linear factor x - root."""
        return cls(field, [-field.scalar(root), field.one()])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if self.is_zero:
            return self.field.zero()
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading() == self.field.one()

    def _check(self, other: "UniPoly"):
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")

    def __eq__(self, other) -> bool:
        return (isinstance(other, UniPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return UniPoly(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            self._check(other)
            if self.is_zero or other.is_zero:
                return UniPoly.zero(self.field)
            z = self.field.zero()
            out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(self.field, out)
        c = self.field.scalar(other)
        return UniPoly(self.field, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        out = UniPoly.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self) -> "UniPoly":
        if self.is_zero or self.is_monic:
            return self
        inv = self.leading().inverse()
        return self * inv

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        z = self.field.zero()
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(self.field), self
        quo = [z] * (dq + 1)
        inv = other.leading().inverse()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv
            quo[k] = c
            if not c.is_zero:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return UniPoly(self.field, quo), UniPoly(self.field, rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor via the Euclidean algorithm."""
        self._check(other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def __call__(self, point) -> Scalar:
        point = self.field.scalar(point)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def at_matrix(self, m: Matrix) -> Matrix:
        """Horner evaluation of this polynomial at a square matrix."""
        if not m.is_square:
            raise DimensionError("polynomial evaluation needs a square matrix")
        if m.field != self.field:
            raise FieldMismatchError("matrix field differs from coefficient field")
        acc = Matrix.zero(self.field, m.nrows)
        ident = Matrix.identity(self.field, m.nrows)
        for c in reversed(self.coeffs):
            acc = acc * m + ident.scale(c)
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            if k == 0:
                term = str(c)
            elif k == 1:
                term = f"{c}*x" if c != self.field.one() else "x"
            else:
                term = f"{c}*x^{k}" if c != self.field.one() else f"x^{k}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self) -> str:
        return f"UniPoly({self.field.spec()}, {self})"


def eval_poly_at_matrix(p: UniPoly, m: Matrix) -> Matrix:
    return p.at_matrix(m)


def _char_poly_leverrier(m: Matrix) -> UniPoly:
    """Faddeev-LeVerrier recurrence; requires characteristic zero."""
    field, n = m.field, m.nrows
    ident = Matrix.identity(field, n)
    coeffs = [field.zero()] * (n + 1)
    coeffs[n] = field.one()
    mk = Matrix.zero(field, n)
    for k in range(1, n + 1):
        mk = m * mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m * mk).trace() / field.scalar(k)
    return UniPoly(field, coeffs)


def _char_poly_bareiss(m: Matrix) -> UniPoly:
    """det(xI - m) by fraction-free Bareiss elimination over the field[x] ring.

    Every division is exact because the intermediate entries are minors of
    the original polynomial matrix, which lives over an integral domain.
    """
    field, n = m.field, m.nrows
    x = UniPoly.x(field)
    work = [[(x if i == j else UniPoly.zero(field)) - UniPoly(field, [m[i, j]])
             for j in range(n)] for i in range(n)]
    prev = UniPoly.one(field)
    sign = 1
    for k in range(n - 1):
        if work[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not work[r][k].is_zero), None)
            if swap is None:
                return UniPoly.zero(field)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                work[i][j] = num.divexact(prev)
            work[i][k] = UniPoly.zero(field)
        prev = work[k][k]
    det = work[n - 1][n - 1]
    return det if sign == 1 else -det


def char_poly(m: Matrix) -> UniPoly:
    """Monic characteristic polynomial det(xI - m)."""
    if not m.is_square:
        raise DimensionError("characteristic polynomial needs a square matrix")
    if m.field.characteristic == 0:
        return _char_poly_leverrier(m)
    return _char_poly_bareiss(m)


def min_poly(m: Matrix) -> UniPoly:
    """Monic minimal polynomial, found as the first linear dependence
    among I, M, M^2, ... in vectorized coordinates."""
    if not m.is_square:
        raise DimensionError("minimal polynomial needs a square matrix")
    field, n = m.field, m.nrows
    power = Matrix.identity(field, n)
    rows = []
    for d in range(1, n + 1):
        rows.append(list(power.entries))
        power = power * m
        stacked = Matrix.from_rows(field, rows + [list(power.entries)])
        if stacked.rank() == d:
            # M^d is a combination of lower powers; solve for the coefficients.
            coeff_matrix = Matrix.from_rows(field, rows).transpose()
            target = list(power.entries)
            sol = solve_linear(coeff_matrix, target)
            assert sol is not None
            return UniPoly(field, [-c for c in sol] + [field.one()])
    raise AssertionError("Cayley-Hamilton guarantees degree <= n")


def solve_linear(a: Matrix, rhs) -> list[Scalar] | None:
    """One particular solution of a x = rhs, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rhs = [a.field.scalar(v) for v in rhs]
    if len(rhs) != a.nrows:
        raise DimensionError("right-hand side length does not match row count")
    aug = Matrix.from_rows(a.field, [list(a.row(i)) + [rhs[i]] for i in range(a.nrows)])
    red, pivots = aug.rref()
    if a.ncols in pivots:
        return None
    z = a.field.zero()
    sol = [z] * a.ncols
    for r, pc in enumerate(pivots):
        sol[pc] = red[r, a.ncols]
    return sol


def is_similar(x: Matrix, y: Matrix, candidate_eigenvalues) -> bool:
    """Similarity test over a caller-supplied candidate eigenvalue list.

    Compares rank((m - lam I)^k) profiles for both matrices. Raises
    :class:`InconclusiveError` when the candidates fail to exhaust either
    spectrum, which is detected by exact divisibility of the characteristic
    polynomial by the product of candidate linear factors.
    """
    if not x.is_square or not y.is_square:
        raise DimensionError("similarity needs square matrices")
    if x.field != y.field:
        raise FieldMismatchError("matrices over different fields")
    if x.nrows != y.nrows:
        return False
    field, n = x.field, x.nrows
    cands: list[Scalar] = []
    for lam in candidate_eigenvalues:
        lam = field.scalar(lam)
        if lam not in cands:
            cands.append(lam)
    if not cands:
        raise InconclusiveError("no candidate eigenvalues supplied")
    bound = UniPoly.one(field)
    for lam in cands:
        bound = bound * (UniPoly.linear(field, lam) ** n)
    for m in (x, y):
        if not char_poly(m).divides(bound):
            raise InconclusiveError(
                "candidate eigenvalues do not exhaust the spectrum"
            )
    ident = Matrix.identity(field, n)
    for lam in cands:
        dx = x - ident.scale(lam)
        dy = y - ident.scale(lam)
        px, py = ident, ident
        for _ in range(n):
            px = px * dx
            py = py * dy
            if px.rank() != py.rank():
                return False
    return True
