"""Octonions over exact rationals.

The basis is i0 = 1, i1, ..., i7 with i_k^2 = -1 and, for every oriented
line (k, l, m) of the table below, i_k i_l = i_m = -i_l i_k together with its
cyclic rotations.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable

from .exact import ExactArithmeticError, Matrix

TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 6, 4),
    (2, 5, 7),
    (3, 4, 7),
    (3, 5, 6),
)

# Signed product index: entry [k][l] = +-(m+1) means i_k i_l = +-i_m.
# Hand-written independently of TRIPLES; the two must agree at import time.
_LITERAL_TABLE = (
    (+1, +2, +3, +4, +5, +6, +7, +8),
    (+2, -1, +4, -3, +6, -5, +8, -7),
    (+3, -4, -1, +2, -7, +8, +5, -6),
    (+4, +3, -2, -1, +8, +7, -6, -5),
    (+5, -6, +7, -8, -1, +2, -3, +4),
    (+6, +5, -8, -7, -2, -1, +4, +3),
    (+7, -8, -5, +6, +3, -4, -1, +2),
    (+8, +7, +6, +5, -4, -3, -2, -1),
)


class InternalConsistencyError(RuntimeError):
    """An identity the algebra guarantees (e.g. flexibility) failed to hold."""


class MultTable:
    """Sign and target index of i_k i_l for every ordered basis pair."""

    def __init__(self, triples: Iterable[tuple[int, int, int]] = TRIPLES):
        entries: dict[tuple[int, int], tuple[int, int]] = {}
        for a in range(8):
            entries[0, a] = (1, a)
            entries[a, 0] = (1, a)
        for a in range(1, 8):
            entries[a, a] = (-1, 0)
        for k, l, m in triples:
            for a, b, c in ((k, l, m), (l, m, k), (m, k, l)):
                for key, val in (((a, b), (1, c)), ((b, a), (-1, c))):
                    if entries.setdefault(key, val) != val:
                        raise ValueError(f"conflicting products for i{key[0]} i{key[1]}")
        if len(entries) != 64:
            raise ValueError(f"triples define {len(entries)} of 64 basis products")
        self.sign = tuple(tuple(entries[k, l][0] for l in range(8)) for k in range(8))
        self.index = tuple(tuple(entries[k, l][1] for l in range(8)) for k in range(8))

    def product(self, k: int, l: int) -> tuple[int, int]:
        return self.sign[k][l], self.index[k][l]

    def as_signed_literal(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.sign[k][l] * (self.index[k][l] + 1) for l in range(8))
            for k in range(8)
        )


TABLE = MultTable()
if TABLE.as_signed_literal() != _LITERAL_TABLE:
    raise InternalConsistencyError("generated multiplication table disagrees with literal")

_SIGN = TABLE.sign
_INDEX = TABLE.index


class Octonion:
    """Immutable octonion with eight rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (0,) * 8):
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) != 8:
            raise ValueError(f"octonion needs 8 coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def _trusted(cls, coeffs: tuple) -> "Octonion":
        # Internal results are already 8 Fractions; skip re-validation.
        x = object.__new__(cls)
        object.__setattr__(x, "coeffs", coeffs)
        return x

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def basis(cls, k: int, scale=1) -> "Octonion":
        if not 0 <= k <= 7:
            raise ValueError(f"basis index must be in 0..7, got {k}")
        c = [0] * 8
        c[k] = scale
        return cls(c)

    @classmethod
    def scalar(cls, a) -> "Octonion":
        return cls.basis(0, a)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def real(self) -> Fraction:
        return self.coeffs[0]

    def is_imaginary(self) -> bool:
        return self.coeffs[0] == 0

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Octonion.scalar(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        return Octonion._trusted(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Octonion._trusted(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Octonion._trusted(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Octonion(a * other for a in self.coeffs)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion(other * a for a in self.coeffs)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ExactArithmeticError("octonion divided by zero scalar")
            return Octonion(a / other for a in self.coeffs)
        return NotImplemented

    def __str__(self):
        return to_wire(self)

    def __repr__(self):
        terms = [
            (f"{c}" if k == 0 else f"{c}*i{k}")
            for k, c in enumerate(self.coeffs)
            if c
        ]
        return f"Octonion({' + '.join(terms) or '0'})"


def _coerce(x) -> Octonion:
    if isinstance(x, Octonion):
        return x
    if isinstance(x, (int, Fraction)):
        return Octonion.scalar(x)
    raise TypeError(f"cannot combine octonion with {type(x).__name__}")


I = tuple(Octonion.basis(k) for k in range(8))
ZERO = Octonion()
ONE = I[0]


def to_wire(x: Octonion) -> str:
    """Serialize as ``a0 + a1 i1 + ... + a7 i7`` with exact fraction literals."""
    return " + ".join(
        [str(x.coeffs[0])] + [f"{x.coeffs[k]} i{k}" for k in range(1, 8)]
    )


_SMALL = {v: Fraction(v) for v in range(-64, 65)}


def _scaled(coeffs: tuple) -> tuple[list[int], int]:
    """Integer numerators over the least common denominator."""
    d = 1
    for c in coeffs:
        if c.denominator != 1:
            d = math.lcm(d, c.denominator)
    if d == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    # Integer arithmetic over a common denominator; one Fraction per output slot.
    xn, dx = _scaled(x.coeffs)
    yn, dy = _scaled(y.coeffs)
    out = [0] * 8
    ynz = [(l, b) for l, b in enumerate(yn) if b]
    for k, a in enumerate(xn):
        if not a:
            continue
        sk, ik = _SIGN[k], _INDEX[k]
        for l, b in ynz:
            if sk[l] > 0:
                out[ik[l]] += a * b
            else:
                out[ik[l]] -= a * b
    d = dx * dy
    if d == 1:
        return Octonion._trusted(tuple(_SMALL.get(v) or Fraction(v) for v in out))
    return Octonion._trusted(tuple(Fraction(v, d) for v in out))


def conjugate(x: Octonion) -> Octonion:
    c = x.coeffs
    return Octonion((c[0],) + tuple(-a for a in c[1:]))


def norm_sq(x: Octonion) -> Fraction:
    return sum((a * a for a in x.coeffs), Fraction(0))


def inverse(x: Octonion) -> Octonion:
    n = norm_sq(x)
    if n == 0:
        raise ExactArithmeticError("zero octonion has no inverse")
    return conjugate(x) / n


def inner(x: Octonion, y: Octonion) -> Fraction:
    return sum((a * b for a, b in zip(x.coeffs, y.coeffs)), Fraction(0))


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


def commutator(x: Octonion, y: Octonion) -> Octonion:
    return oct_mul(x, y) - oct_mul(y, x)


def flexible_triple(x: Octonion, y: Octonion, w: Octonion | None = None) -> Octonion:
    """The unbracketed product x y w, where w defaults to x.

    Both bracketings are computed; they agree whenever w is a real multiple
    of x plus a real scalar (flexibility), which covers every use here.
    """
    w = x if w is None else w
    left = oct_mul(oct_mul(x, y), w)
    right = oct_mul(x, oct_mul(y, w))
    if left != right:
        raise InternalConsistencyError(
            f"bracketings of x y w disagree: (xy)w = {left!r}, x(yw) = {right!r}"
        )
    return left


def moufang_residuals(
    x: Octonion, y: Octonion, z: Octonion
) -> tuple[Octonion, Octonion, Octonion]:
    """LHS - RHS of the three Moufang identities.

    (xyx)z = x(y(xz)),  z(xyx) = ((zx)y)x,  x(yz)x = (xy)(zx).
    """
    xyx = flexible_triple(x, y)
    m1 = oct_mul(xyx, z) - oct_mul(x, oct_mul(y, oct_mul(x, z)))
    m2 = oct_mul(z, xyx) - oct_mul(oct_mul(oct_mul(z, x), y), x)
    m3 = flexible_triple(x, oct_mul(y, z)) - oct_mul(oct_mul(x, y), oct_mul(z, x))
    return m1, m2, m3


def left_mult_matrix(a: Octonion) -> Matrix:
    """Matrix of x -> a x in the basis i0..i7."""
    return Matrix.from_columns([oct_mul(a, e).coeffs for e in I])


def right_mult_matrix(a: Octonion) -> Matrix:
    """Matrix of x -> x a in the basis i0..i7."""
    return Matrix.from_columns([oct_mul(e, a).coeffs for e in I])


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_octonion(rng: random.Random, *, nonzero: bool = False) -> Octonion:
    while True:
        x = Octonion(random_rational(rng) for _ in range(8))
        if x or not nonzero:
            return x


def random_unit_imaginary(rng: random.Random, support: Iterable[int] = range(1, 8)) -> Octonion:
    """A rational point on the unit sphere of the span of ``support``.

    Inverse stereographic projection sends a random rational w in Q^(n-1) to
    ((|w|^2 - 1) / (|w|^2 + 1), 2w / (|w|^2 + 1)), which has norm exactly 1.
    """
    support = list(support)
    if not support or 0 in support:
        raise ValueError("support must be a non-empty set of imaginary indices")
    w = [random_rational(rng) for _ in support[1:]]
    s = sum((a * a for a in w), Fraction(0))
    coords = [(s - 1) / (s + 1)] + [2 * a / (s + 1) for a in w]
    c = [Fraction(0)] * 8
    for k, v in zip(support, coords):
        c[k] = v
    return Octonion(c)
