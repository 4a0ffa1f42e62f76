"""Spin/Pin-type actions on the octonions as exact linear maps.

Every map here is linear in its argument, so it is pinned down by its values
on i0..i7 and every identity that is linear in the free octonion is decided
by evaluating it on the basis.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import ExactArithmeticError, Matrix, gram
from .octonion import (
    I,
    Octonion,
    flexible_triple,
    inner,
    norm_sq,
    oct_mul,
    random_unit_imaginary,
)
from .results import CheckResult, Status, Witness, verdict

REFLECT_A = "reflectA"
ACTION_A = "actionA"
ACTION_B = "actionB"
ACTION_C = "actionC"
GROUPED = "grouped"


def _label(u: Octonion) -> str:
    nz = [k for k in range(8) if u[k]]
    if len(nz) == 1 and u[nz[0]] == 1:
        return f"i{nz[0]}"
    return f"({u})"


def _reflect(u: Octonion, x: Octonion) -> Octonion:
    return -flexible_triple(u, x)


def _action_a(k: int, x: Octonion) -> Octonion:
    # i_k((i7 x i7) i_k)
    return oct_mul(I[k], oct_mul(flexible_triple(I[7], x), I[k]))


def _grouped(j: int, k: int, x: Octonion) -> Octonion:
    # ((i_j i_k) x)(i_k i_j)
    return oct_mul(oct_mul(oct_mul(I[j], I[k]), x), oct_mul(I[k], I[j]))


def _action_c(j: int, k: int, x: Octonion) -> Octonion:
    # i_j((i_k x i_k) i_j)
    return oct_mul(I[j], oct_mul(flexible_triple(I[k], x), I[j]))


@dataclass(frozen=True, eq=False)
class SandwichMap:
    """One generator-level map x -> (product of units) x (product of units).

    Forms:
      reflectA(u)    x -> -u x u, u a unit imaginary octonion
      actionA(k)     x -> i_k((i7 x i7) i_k)
      actionB(k)     x -> ((i_k i7) x)(i7 i_k)
      actionC(j, k)  x -> i_j((i_k x i_k) i_j)
      grouped(j, k)  x -> ((i_j i_k) x)(i_k i_j)
    """

    form: str
    params: tuple
    matrix: Matrix = field(init=False, repr=False)

    def __post_init__(self):
        if self.form == REFLECT_A:
            (u,) = self.params
            if not isinstance(u, Octonion):
                raise TypeError("reflectA takes an octonion")
            if not u.is_imaginary() or norm_sq(u) != 1:
                raise ExactArithmeticError(
                    f"reflectA needs a unit imaginary octonion, got {u!r}"
                )
        elif self.form in (ACTION_A, ACTION_B):
            (k,) = self.params
            if not 1 <= k <= 6:
                raise ValueError(f"{self.form} index must be in 1..6, got {k}")
        elif self.form in (ACTION_C, GROUPED):
            j, k = self.params
            if not (1 <= j <= 7 and 1 <= k <= 7):
                raise ValueError(f"{self.form} indices must be in 1..7, got {j},{k}")
        else:
            raise ValueError(f"unknown sandwich form {self.form!r}")
        object.__setattr__(
            self, "matrix", Matrix.from_columns([self(e).coeffs for e in I])
        )

    def __call__(self, x: Octonion) -> Octonion:
        f, p = self.form, self.params
        if f == REFLECT_A:
            return _reflect(p[0], x)
        if f == ACTION_A:
            return _action_a(p[0], x)
        if f == ACTION_B:
            return _grouped(p[0], 7, x)
        if f == ACTION_C:
            return _action_c(p[0], p[1], x)
        return _grouped(p[0], p[1], x)

    @property
    def label(self) -> str:
        if self.form == REFLECT_A:
            return f"reflectA({_label(self.params[0])})"
        return f"{self.form}({','.join(str(k) for k in self.params)})"

    def __repr__(self):
        return self.label


def reflect_a(u: Octonion | int) -> SandwichMap:
    if isinstance(u, int):
        return _basis_map(REFLECT_A, u)
    return SandwichMap(REFLECT_A, (u,))


@functools.lru_cache(maxsize=None)
def _basis_map(form: str, *params: int) -> SandwichMap:
    # Index-parameterized maps are immutable; build each (and its matrix) once.
    if form == REFLECT_A:
        return SandwichMap(form, (I[params[0]],))
    return SandwichMap(form, params)


def action_a(k: int) -> SandwichMap:
    return _basis_map(ACTION_A, k)


def action_b(k: int) -> SandwichMap:
    return _basis_map(ACTION_B, k)


def action_c(j: int, k: int) -> SandwichMap:
    return _basis_map(ACTION_C, j, k)


def grouped(j: int, k: int) -> SandwichMap:
    return _basis_map(GROUPED, j, k)


@dataclass(frozen=True)
class GroupWord:
    """Composite g_1 o g_2 o ... o g_n; the last letter acts first."""

    letters: tuple[SandwichMap, ...] = ()

    def __init__(self, letters: Iterable[SandwichMap] = ()):
        object.__setattr__(self, "letters", tuple(letters))

    @property
    def parity(self) -> str:
        return "even" if len(self.letters) % 2 == 0 else "odd"

    def __call__(self, x: Octonion) -> Octonion:
        for g in reversed(self.letters):
            x = g(x)
        return x

    def then(self, other: "GroupWord") -> "GroupWord":
        """self o other."""
        return GroupWord(self.letters + other.letters)

    @property
    def matrix(self) -> Matrix:
        m = Matrix.identity(8)
        for g in self.letters:
            m = m @ g.matrix
        return m

    @property
    def label(self) -> str:
        if not self.letters:
            return "id"
        return " o ".join(g.label for g in self.letters)

    def __repr__(self):
        return f"GroupWord({self.label})"


def word(*letters: SandwichMap) -> GroupWord:
    return GroupWord(letters)


OctMap = Union[SandwichMap, GroupWord]


def apply(m: OctMap, x: Octonion) -> Octonion:
    """Evaluate by octonion products (not through the cached matrix)."""
    return m(x)


def basis_table(m: OctMap | Matrix) -> Matrix:
    """8x8 matrix whose n-th column is the image of i_n."""
    if isinstance(m, Matrix):
        return m
    if isinstance(m, SandwichMap):
        return m.matrix
    return Matrix.from_columns([m(e).coeffs for e in I])


def _name_of(m) -> str:
    return m.label if hasattr(m, "label") else "matrix"


def check_orthogonality(m: OctMap | Matrix, *, name: str | None = None) -> CheckResult:
    t = basis_table(m)
    got = t.T @ t
    name = name or f"actions.orthogonal.{_name_of(m)}"
    ref = "M^T M = I8 for x -> u x u^{-1}, u unit in Im O"
    if got == Matrix.identity(8):
        return verdict(name, ref)
    bad = next((i, j) for i in range(8) for j in range(8) if got[i, j] != (i == j))
    return verdict(
        name,
        ref,
        (f"{_name_of(m)}, entry {bad} of M^T M", got[bad], int(bad[0] == bad[1])),
    )


# ----------------------------------------------------------- vector fields p -> p i_m


FIELD_REF = (
    "Spin(k)-equivariant fields ({+-p, +-pi_m}) on RP^7, k < m <= 7"
)


def equivariance_failures(g: OctMap, m: int) -> list[tuple[int, Octonion, Octonion]]:
    """Basis indices n with g(i_n i_m) != g(i_n) i_m, with both sides."""
    out = []
    for n, p in enumerate(I):
        lhs = g(oct_mul(p, I[m]))
        rhs = oct_mul(g(p), I[m])
        if lhs != rhs:
            out.append((n, lhs, rhs))
    return out


def check_field_equivariance(
    group_gens: Sequence[OctMap], m: int, *, name: str | None = None
) -> CheckResult:
    """Decide g(p i_m) = g(p) i_m for every generator g and basis p.

    Exhaustive over the basis, hence complete by linearity. A violation is a
    finding: it refutes the literal reading, not the tool.
    """
    if not 1 <= m <= 7:
        raise ValueError(f"field index must be in 1..7, got {m}")
    name = name or f"lemma_field.equivariance.m{m}"
    for g in group_gens:
        fails = equivariance_failures(g, m)
        if fails:
            n, lhs, rhs = fails[0]
            return verdict(
                name,
                FIELD_REF,
                Witness(
                    f"g={_name_of(g)}, p=i{n}; got g(p*i{m}), expected g(p)*i{m}",
                    str(lhs),
                    str(rhs),
                ),
                on_failure=Status.FINDING,
            )
    return verdict(name, FIELD_REF)


def spin_generators(k: int, style: str = ACTION_A) -> list[GroupWord]:
    """Generator realizations of Spin(k) exhibited in the text, indices a<b<=k.

    style actionA: actionA(a) o actionA(b); actionB: actionB(a) o actionB(b);
    reflectA: reflectA(i_a) o reflectA(i_b).
    """
    make = {ACTION_A: action_a, ACTION_B: action_b, REFLECT_A: reflect_a}[style]
    return [word(make(a), make(b)) for a, b in itertools.combinations(range(1, k + 1), 2)]


MIXED_REF = (
    "phi_(gamma_6(e_k))(pi_7)=(i_ki_7)(pi_7)(i_7i_k) = ... "
    "=(-sum_(n!=k,7)t_ni_n+t_ki_k+t_7i_7)i_7"
)


def mixed_identity_failures(k: int) -> list[tuple[int, Octonion, Octonion]]:
    b, a = action_b(k), action_a(k)
    out = []
    for n, p in enumerate(I):
        lhs = b(oct_mul(p, I[7]))
        rhs = -oct_mul(a(p), I[7])
        if lhs != rhs:
            out.append((n, lhs, rhs))
    return out


def check_mixed_identity(k: int) -> CheckResult:
    """actionB(k)(p i7) = -(actionA(k)(p)) i7 on every basis p."""
    if not 1 <= k <= 6:
        raise ValueError(f"k must be in 1..6, got {k}")
    name = f"lemma_field.mixed_identity.k{k}"
    fails = mixed_identity_failures(k)
    if fails:
        n, lhs, rhs = fails[0]
        return verdict(
            name, MIXED_REF, (f"k={k}, p=i{n}", lhs, rhs), on_failure=Status.FINDING
        )
    return verdict(name, MIXED_REF)


# ------------------------------------------------------------- parallelizability


PARALLEL_REF = (
    "frame ({+-p, +-pi_1}),...,({+-p, +-pi_7}) on RP^7"
)


def frame(p: Octonion) -> list[tuple]:
    return [oct_mul(p, e).coeffs for e in I]


def check_parallelizability(p: Octonion, *, name: str | None = None) -> CheckResult:
    """Gram({p i_k}) = |p|^2 I8 and <p, p i_k> = 0 for k >= 1."""
    if not p:
        raise ExactArithmeticError("parallelizability frame needs p != 0")
    name = name or f"orbits.parallelizable.{_label(p)}"
    g = gram(frame(p))
    want = Matrix.identity(8, norm_sq(p))
    if g != want:
        bad = next((i, j) for i in range(8) for j in range(8) if g[i, j] != want[i, j])
        return verdict(name, PARALLEL_REF, (f"p={p}, Gram entry {bad}", g[bad], want[bad]))
    for k in range(1, 8):
        t = inner(p, oct_mul(p, I[k]))
        if t != 0:
            return verdict(name, PARALLEL_REF, (f"p={p}, <p, p*i{k}>", t, 0))
    return verdict(name, PARALLEL_REF)


# --------------------------------------------------------------- orbit geometry


@dataclass(frozen=True)
class SlicePoint:
    """v = c * i_pole + s * x with c^2 + s^2 = 1 and x a unit vector orthogonal to i0, i_pole."""

    c: Fraction
    s: Fraction
    x: Octonion
    pole: int = 0

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "s", Fraction(self.s))
        if self.c * self.c + self.s * self.s != 1:
            raise ValueError(f"c^2 + s^2 != 1 for (c, s) = ({self.c}, {self.s})")
        if self.x[0] != 0 or self.x[self.pole] != 0:
            raise ValueError("slice direction must vanish on i0 and the pole")
        if norm_sq(self.x) != 1:
            raise ValueError("slice direction must be a unit vector")

    @property
    def point(self) -> Octonion:
        return self.c * I[self.pole] + self.s * self.x


def slice_image(g: OctMap, sp: SlicePoint) -> Octonion | None:
    """The new direction x' if g keeps sp in slice form (same c, unit x' orthogonal to i0 and the pole), else None."""
    v = g(sp.point)
    if v[sp.pole] != sp.c:
        return None
    rest = v - sp.c * I[sp.pole]
    if sp.s == 0:
        return sp.x if not rest else None
    x2 = rest / sp.s
    if x2[0] != 0 or x2[sp.pole] != 0 or norm_sq(x2) != 1:
        return None
    return x2


ORBIT_REFS = {
    "pole": "t=0: pole i_0, isotropy Spin(7)",
    "pin": "isotropy of {+-i_7}: Pin(6)",
    "interior": "t in (0,pi/2): isotropy Spin(6)",
    "slice": "v'=i_k(i_7(cos t i_0+sin t x)i_7)i_k=cos t i_0+sin t i_k(i_7xi_7)i_k",
    "pin5": "isotropy of {+-i_6}: Pin(5)",
}


def random_even_word(rng: random.Random, length: int) -> GroupWord:
    if length % 2:
        raise ValueError("even words need an even number of letters")
    return GroupWord(reflect_a(random_unit_imaginary(rng)) for _ in range(length))


def basis_reflection_pairs(upto: int = 7) -> list[GroupWord]:
    return [
        word(reflect_a(a), reflect_a(b))
        for a, b in itertools.combinations(range(1, upto + 1), 2)
    ]


def orbit_words(rng: random.Random, n_random: int) -> list[GroupWord]:
    """All 21 length-2 basis words, then ``n_random`` seeded words of length 4 or 6."""
    words = basis_reflection_pairs()
    words += [random_even_word(rng, rng.choice((4, 6))) for _ in range(n_random)]
    return words


def _first_failure(items, pred):
    for item in items:
        bad = pred(item)
        if bad is not None:
            return bad
    return None


def check_orbit_geometry(
    seed: int = 0, n_random: int = 64, slice_cs=(Fraction(3, 5), Fraction(4, 5))
) -> list[CheckResult]:
    rng = random.Random(seed)
    words = orbit_words(rng, n_random)
    c, s = slice_cs
    results = []

    # (a) the pole i0 is fixed by every even word
    def pole_moved(w):
        y = w(I[0])
        return None if y == I[0] else (w.label, y, I[0])

    bad = _first_failure(words, pole_moved)
    results.append(verdict("orbits.a_pole_i0_fixed", ORBIT_REFS["pole"], bad))

    # (b) reflections along i1..i6 send i7 to -i7 (Pin(6) stabilizes {+-i7})
    def i7_not_negated(k):
        y = reflect_a(k)(I[7])
        return None if y == -I[7] else (f"reflectA(i{k}) on i7", y, -I[7])

    bad = _first_failure(range(1, 7), i7_not_negated)
    results.append(verdict("orbits.b_pin6_stabilizes_pm_i7", ORBIT_REFS["pin"], bad))

    # (b') the same one level down: reflections along i1..i5 negate i6
    def i6_not_negated(k):
        y = reflect_a(k)(I[6])
        return None if y == -I[6] else (f"reflectA(i{k}) on i6", y, -I[6])

    bad = _first_failure(range(1, 6), i6_not_negated)
    results.append(verdict("orbits.b_pin5_stabilizes_pm_i6", ORBIT_REFS["pin5"], bad))

    # (c) v = c i0 + s i7 is fixed by actionA(j) o actionA(k), j < k <= 6
    v = c * I[0] + s * I[7]
    pairs = spin_generators(6, ACTION_A)

    def moves_v(w):
        y = w(v)
        return None if y == v else (f"{w.label} on {v}", y, v)

    bad = _first_failure(pairs, moves_v)
    results.append(verdict("orbits.c_interior_point_fixed_by_spin6", ORBIT_REFS["interior"], bad))

    # (d) slice form c i0 + s x is preserved, with x' a unit imaginary
    slices = [SlicePoint(c, s, I[k]) for k in range(1, 8)]
    slices += [SlicePoint(c, s, random_unit_imaginary(rng)) for _ in range(8)]

    def breaks_slice(w):
        for sp in slices:
            if slice_image(w, sp) is None:
                return (f"{w.label} on {sp.point}", w(sp.point), f"{c} + {s} x' with |x'|=1")
        return None

    maps = words + [word(action_a(k)) for k in range(1, 7)]
    bad = _first_failure(maps, breaks_slice)
    results.append(verdict("orbits.d_slice_form_preserved", ORBIT_REFS["slice"], bad))
    return results


def composition_contract_failures(words: Sequence[GroupWord]) -> list[tuple[str, str]]:
    """Pairs (w1, w2) where the matrix of w1 o w2 is not M(w1) M(w2)."""
    out = []
    for w1, w2 in itertools.product(words, repeat=2):
        if basis_table(w1.then(w2)) != basis_table(w1) @ basis_table(w2):
            out.append((w1.label, w2.label))
    return out


def norm_preservation_failures(maps: Sequence[OctMap], xs: Sequence[Octonion]) -> list:
    return [
        (_name_of(g), x)
        for g in maps
        for x in xs
        if norm_sq(g(x)) != norm_sq(x)
    ]


def closed_form_action_a(k: int) -> Matrix:
    """The claimed matrix of actionA(k): negate coordinates k and 7."""
    return Matrix.diag([-1 if n in (k, 7) else 1 for n in range(8)])


def negate_coordinates(*ks: int) -> Matrix:
    return Matrix.diag([-1 if n in ks else 1 for n in range(8)])


