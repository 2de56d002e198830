"""Exact complex-rational scalars and dense matrix arithmetic.

Everything downstream (structure constants, weights, parameter matrices)
runs through these two value types.  There are no floats and no tolerance
parameters anywhere: equality is exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalarish = Union[int, Fraction, "GaussianRational"]


def _frac(x: Union[int, Fraction]) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> "GaussianRational":
        return GaussianRational(_frac(re), _frac(im))

    @staticmethod
    def coerce(x: Scalarish) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_frac(x))

    def __add__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: Scalarish) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __truediv__(self, other: Scalarish) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * o.re + self.im * o.im) / d,
                                (self.im * o.re - self.re * o.im) / d)

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus a*conj(a); always a plain rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self.im == 0:
            return _frac_str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{_frac_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{_frac_str(mag)}i"
        return f"{_frac_str(self.re)}{sign}{istr}"


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix over GaussianRational, row-major entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(data: Sequence[Sequence[Scalarish]]) -> "ExactMatrix":
        rows = len(data)
        cols = len(data[0])
        flat = []
        for row in data:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(GaussianRational.coerce(x) for x in row)
        return ExactMatrix(rows, cols, tuple(flat))

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols, (GR_ZERO,) * (rows * cols))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, tuple(
            GR_ONE if i == j else GR_ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, tuple(
            a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, tuple(
            a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Scalarish) -> "ExactMatrix":
        cc = GaussianRational.coerce(c)
        return ExactMatrix(self.rows, self.cols, tuple(cc * a for a in self.entries))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: ({self.rows}x{self.cols}) @ ({other.rows}x{other.cols})")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = GR_ZERO
                for k in range(self.cols):
                    acc = acc + ri[k] * other[k, j]
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(
            self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def det(self) -> GaussianRational:
        """Exact determinant by Gaussian elimination with first-nonzero pivoting."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        m = [list(self.row(i)) for i in range(n)]
        det = GR_ONE
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if m[r][col]), None)
            if pivot_row is None:
                return GR_ZERO
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                det = -det
            pivot = m[col][col]
            det = det * pivot
            for r in range(col + 1, n):
                if m[r][col]:
                    f = m[r][col] / pivot
                    for c in range(col, n):
                        m[r][c] = m[r][c] - f * m[col][c]
        return det

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("dimension mismatch")

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(self[i, j]) for j in range(self.cols)) + "]"
            for i in range(self.rows))


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact matrix product; rejects mismatched inner dimensions."""
    return a @ b


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """The Lie bracket a@b - b@a of two square matrices of equal size."""
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ValueError("commutator requires square matrices of equal size")
    return a @ b - b @ a


def solve_in_span(target: ExactMatrix, basis: Sequence[ExactMatrix]) -> Optional[tuple]:
    """Exact coordinates of ``target`` in the span of ``basis``, or None.

    Solves sum(c_i * basis_i) = target by Gaussian elimination over the
    Gaussian rationals, treating each matrix as a flat vector.  Returns a
    tuple of GaussianRational coordinates (free variables set to zero), or
    None when the target is not in the span.
    """
    if not basis:
        return () if target.is_zero() else None
    shape = (basis[0].rows, basis[0].cols)
    for b in basis:
        if (b.rows, b.cols) != shape:
            raise ValueError("basis matrices must share one shape")
    if (target.rows, target.cols) != shape:
        raise ValueError("target shape differs from basis shape")

    ncols = len(basis)
    nrows = shape[0] * shape[1]
    aug = [[b.entries[r] for b in basis] + [target.entries[r]] for r in range(nrows)]

    pivots = []  # (row, col) of each pivot
    prow = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(prow, nrows) if aug[r][col]), None)
        if pivot_row is None:
            continue
        aug[prow], aug[pivot_row] = aug[pivot_row], aug[prow]
        pivot = aug[prow][col]
        aug[prow] = [x / pivot for x in aug[prow]]
        for r in range(nrows):
            if r != prow and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * p for x, p in zip(aug[r], aug[prow])]
        pivots.append((prow, col))
        prow += 1
        if prow == nrows:
            break

    # Inconsistent rows mean the target leaves the span.
    for r in range(prow, nrows):
        if aug[r][ncols]:
            return None

    coords = [GR_ZERO] * ncols
    for row, col in pivots:
        coords[col] = aug[row][ncols]
    return tuple(coords)
