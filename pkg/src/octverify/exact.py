"""Exact rational scalars, vectors and small dense matrices.

Scalars are :class:`fractions.Fraction`; they are always normalized and
never round. Vectors are plain tuples of fractions. Matrices are immutable
row-major tuples, sized for the 8x8 and 16x16 maps used in this package.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


class ExactArithmeticError(ArithmeticError):
    """Raised for undefined exact operations (zero divisors, shape mismatch)."""


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat(value, denominator=None) -> Fraction:
    if denominator is None:
        return Fraction(value)
    return Fraction(value, denominator)


def rat_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` in {add, sub, mul, div} to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise ExactArithmeticError(f"division by zero: {a} / 0")
    return fn(a, b)


def vector(entries: Iterable) -> tuple:
    v = tuple(Fraction(x) for x in entries)
    if not v:
        raise ExactArithmeticError("vector must have positive dimension")
    return v


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ExactArithmeticError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class Matrix:
    """Immutable dense matrix of fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ExactArithmeticError("matrix must be non-empty")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ExactArithmeticError("ragged matrix rows")
        self._data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def _trusted(cls, data: tuple) -> "Matrix":
        m = object.__new__(cls)
        m._data = data
        m.rows = len(data)
        m.cols = len(data[0])
        return m

    @classmethod
    def identity(cls, n: int, scale=1) -> "Matrix":
        s = Fraction(scale)
        return cls([[s if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        return cls([[0] * (rows if cols is None else cols) for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        return cls(zip(*columns))

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __str__(self):
        """``c*In`` for scalar matrices, ``diag(...)`` for diagonal ones, else nonzero entries."""
        if self.rows == self.cols:
            c = self[0, 0]
            off = any(self[i, j] for i in range(self.rows) for j in range(self.cols) if i != j)
            if not off:
                d = [self[i, i] for i in range(self.rows)]
                if all(x == c for x in d):
                    return f"{c}*I{self.rows}"
                return "diag(" + ", ".join(str(x) for x in d) + ")"
        nz = [
            f"({i},{j})={self[i, j]}"
            for i in range(self.rows)
            for j in range(self.cols)
            if self[i, j]
        ]
        return "[" + ", ".join(nz) + "]"

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix([{body}])"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)
        )

    def __neg__(self) -> "Matrix":
        return Matrix([-a for a in r] for r in self._data)

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix([c * a for a in r] for r in self._data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ExactArithmeticError(
                f"cannot apply {self.rows}x{self.cols} matrix to vector of dim {len(v)}"
            )
        return tuple(dot(r, v) for r in self._data)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ExactArithmeticError(f"shape mismatch: {self.shape} vs {other.shape}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ExactArithmeticError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    an, da = _integral(a)
    bn, db = _integral(b)
    bt = list(zip(*bn))
    d = da * db
    rows = [[sum(x * y for x, y in zip(ra, cb)) for cb in bt] for ra in an]
    return Matrix._trusted(tuple(tuple(Fraction(v, d) for v in r) for r in rows))


def _integral(m: Matrix) -> tuple[list[list[int]], int]:
    """Integer entries over the least common denominator of ``m``."""
    d = 1
    for r in m._data:
        for x in r:
            if x.denominator != 1:
                d = math.lcm(d, x.denominator)
    return [[x.numerator * (d // x.denominator) for x in r] for r in m._data], d


def gram(vectors: Sequence[Sequence]) -> Matrix:
    """Matrix of pairwise dot products of ``vectors``."""
    if not vectors:
        raise ExactArithmeticError("gram matrix of an empty family")
    dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise ExactArithmeticError("gram vectors must share one dimension")
    n = len(vectors)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = dot(vectors[i], vectors[j])
    return Matrix(rows)


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ExactArithmeticError("determinant of a non-square matrix")
    n = m.rows
    # Bareiss keeps every intermediate integral when the input is integral;
    # scale rationals to a common denominator first.
    denom = 1
    for r in m.tolist():
        for x in r:
            denom = math.lcm(denom, x.denominator)
    a = [[int(x * denom) for x in r] for r in m.tolist()]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], denom**n)

