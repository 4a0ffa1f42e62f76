"""Clifford algebras Cl(p, q) over the rationals and their octonionic representations.

Convention: generators e_1..e_p square to +1 and e_(p+1)..e_(p+q) to -1.
Blades are stored as bitmasks (bit k-1 set <=> e_k present) and printed in
ascending index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exact import Matrix
from .octonion import I, Octonion, conjugate, left_mult_matrix, oct_mul
from .results import CheckResult, Status, Witness, verdict

MAX_GENERATORS = 9

RAISE_Q = "raise_q"
RAISE_P = "raise_p"
VARIANTS = (RAISE_Q, RAISE_P)


class SignatureError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"negative signature ({self.p},{self.q})")
        if self.p + self.q > MAX_GENERATORS:
            raise SignatureError(
                f"Cl({self.p},{self.q}) exceeds {MAX_GENERATORS} generators"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    def square(self, k: int) -> int:
        """e_k^2 for 1-based generator index k."""
        if not 1 <= k <= self.n:
            raise IndexError(f"generator e{k} not in Cl({self.p},{self.q})")
        return 1 if k <= self.p else -1

    def __str__(self):
        return f"Cl({self.p},{self.q})"


def blade_indices(mask: int) -> tuple[int, ...]:
    out, k = [], 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def blade_mask(indices: Iterable[int]) -> int:
    indices = tuple(indices)
    if list(indices) != sorted(set(indices)):
        raise ValueError(f"blade indices must be strictly ascending: {indices}")
    mask = 0
    for k in indices:
        if k < 1:
            raise ValueError(f"generator indices start at 1, got {k}")
        mask |= 1 << (k - 1)
    return mask


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Return (sign, mask) with e_A e_B = sign * e_(A xor B)."""
    # Reordering parity: each generator of b must pass every larger generator of a.
    swaps, rest = 0, a >> 1
    while rest:
        swaps += bin(rest & b).count("1")
        rest >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    for k in blade_indices(common):
        sign *= sig.square(k)
    return sign, a ^ b


class Multivector:
    """Immutable element of Cl(p, q): a sparse map blade -> rational."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: Mapping | None = None):
        clean: dict[int, Fraction] = {}
        limit = 1 << sig.n
        for blade, coeff in (terms or {}).items():
            mask = blade if isinstance(blade, int) else blade_mask(blade)
            if not 0 <= mask < limit:
                raise SignatureError(f"blade {blade_indices(mask)} not in {sig}")
            c = clean.get(mask, Fraction(0)) + Fraction(coeff)
            if c:
                clean[mask] = c
            else:
                clean.pop(mask, None)
        self.sig = sig
        self.terms = clean

    @classmethod
    def scalar(cls, sig: Signature, a) -> "Multivector":
        return cls(sig, {0: a})

    @classmethod
    def generator(cls, sig: Signature, k: int) -> "Multivector":
        sig.square(k)
        return cls(sig, {1 << (k - 1): 1})

    @classmethod
    def blade(cls, sig: Signature, *indices: int, coeff=1) -> "Multivector":
        return cls(sig, {tuple(indices): coeff})

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise SignatureError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, Fraction(0)) + c
        return Multivector(self.sig, t)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geo_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return Multivector(self.sig, {m: c * other for m, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def grades(self) -> set[int]:
        return {bin(m).count("1") for m in self.terms}

    def is_even(self) -> bool:
        return all(g % 2 == 0 for g in self.grades())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (bin(m).count("1"), blade_indices(m))):
            name = "".join(f"e{k}" for k in blade_indices(m))
            c = self.terms[m]
            parts.append(str(c) if not name else (name if c == 1 else f"{c} {name}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"Multivector({self.sig}: {self})"


def geo_mul(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    out: dict[int, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            s, m = blade_product(ma, mb, a.sig)
            out[m] = out.get(m, Fraction(0)) + s * ca * cb
    return Multivector(a.sig, out)


def even_part(a: Multivector) -> Multivector:
    return Multivector(a.sig, {m: c for m, c in a.terms.items() if bin(m).count("1") % 2 == 0})


def embedding_target(sig: Signature, variant: str) -> tuple[Signature, list[Multivector]]:
    """Target algebra and images of e_1..e_n under the even embedding.

    raise_q: e_k -> e_k e_(n+1) in Cl(p, q+1).
    raise_p: e_k -> e_1 e_(k+1) in Cl(q+1, p). With first-positive ordering the
    target generator must square to minus the source one, so for mixed
    signatures positive sources go to the trailing negative slots; for
    p = 0 or q = 0 this is exactly k -> k+1.
    """
    n, p, q = sig.n, sig.p, sig.q
    if variant == RAISE_Q:
        tgt = Signature(p, q + 1)
        images = [Multivector.blade(tgt, k, n + 1) for k in range(1, n + 1)]
    elif variant == RAISE_P:
        tgt = Signature(q + 1, p)
        images = []
        for k in range(1, n + 1):
            slot = q + 1 + k if k <= p else k - p + 1
            images.append(Multivector.blade(tgt, 1, slot))
    else:
        raise ValueError(f"unknown embedding variant {variant!r}")
    return tgt, images


def embed_even(a: Multivector, variant: str) -> Multivector:
    tgt, images = embedding_target(a.sig, variant)
    out = Multivector(tgt)
    for mask, c in a.terms.items():
        term = Multivector.scalar(tgt, c)
        for k in blade_indices(mask):
            term = geo_mul(term, images[k - 1])
        out = out + term
    return out


def check_embedding_hom(p: int, q: int, variant: str) -> CheckResult:
    """Images of the generators of Cl(p,q) obey its squares and anticommutation."""
    sig = Signature(p, q)
    name = f"clifford.embedding.{variant}.cl_{p}_{q}"
    ref = "Cl^0(q + 1,p) = Cl(p,q) = Cl^0(p,q + 1) via e_1e_(k+1) <- e_k -> e_ke_(n+1)"
    gens = [Multivector.generator(sig, k) for k in range(1, sig.n + 1)]
    imgs = [embed_even(g, variant) for g in gens]
    tgt = imgs[0].sig if imgs else sig
    for k, img in enumerate(imgs, start=1):
        if not img.is_even():
            return verdict(name, ref, (f"e{k}", img, "even multivector"))
    for k in range(1, sig.n + 1):
        for l in range(k, sig.n + 1):
            a, b = imgs[k - 1], imgs[l - 1]
            got = geo_mul(a, b) + geo_mul(b, a)
            want = Multivector.scalar(tgt, 2 * sig.square(k) if k == l else 0)
            if got != want:
                return verdict(name, ref, (f"e{k}, e{l}", got, want))
    return verdict(name, ref)


# ---------------------------------------------------------------- representations


@dataclass(frozen=True)
class RepGenerators:
    name: str
    matrices: tuple[Matrix, ...]
    signature: Signature

    def __post_init__(self):
        if len(self.matrices) != self.signature.n:
            raise ValueError(
                f"{self.name}: {len(self.matrices)} matrices for {self.signature}"
            )

    @property
    def size(self) -> int:
        return self.matrices[0].rows

    def image(self, a: Multivector) -> Matrix:
        """Matrix of a multivector: blades act as ascending composites of generators."""
        if a.sig != self.signature:
            raise SignatureError(f"{self.name} represents {self.signature}, not {a.sig}")
        out = Matrix.zeros(self.size)
        for mask, c in a.terms.items():
            m = Matrix.identity(self.size)
            for k in blade_indices(mask):
                m = m @ self.matrices[k - 1]
            out = out + m.scale(c)
        return out


def block(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    top = [list(a) + list(b) for a, b in zip(tl.tolist(), tr.tolist())]
    bottom = [list(a) + list(b) for a, b in zip(bl.tolist(), br.tolist())]
    return Matrix(top + bottom)


def gamma8_generator(k: int) -> Matrix:
    """Gamma_k = [[0, L(i_k)], [L(i_k*), 0]] on O^2 flattened to 16 coordinates."""
    z = Matrix.zeros(8)
    return block(z, left_mult_matrix(I[k]), left_mult_matrix(conjugate(I[k])), z)


def build_rep(name: str) -> RepGenerators:
    if name == "gamma8":
        mats = tuple(gamma8_generator(k) for k in range(8))
        return RepGenerators(name, mats, Signature(8, 0))
    if name == "gamma7":
        mats = tuple(left_mult_matrix(I[k]) for k in range(1, 8))
        return RepGenerators(name, mats, Signature(0, 7))
    if name == "gamma6":
        mats = tuple(left_mult_matrix(oct_mul(I[k], I[7])) for k in range(1, 7))
        return RepGenerators(name, mats, Signature(0, 6))
    raise ValueError(f"unknown representation {name!r}")


REP_REFS = {
    "gamma8": "Gamma_k=gamma_8(e_k)=[[0, i_k],[i_k^*, 0]], 0<=k<=7",
    "gamma7": "gamma_7(e_k)=i_k, 1<=k<=7",
    "gamma6": "gamma_6(e_k)=i_ki_7, 1<=k<=6",
}


def check_clifford_relations(r: RepGenerators, *, name: str | None = None) -> CheckResult:
    """M_k M_l + M_l M_k = 2 s_k delta_kl I for every generator pair."""
    name = name or f"representations.{r.name}.clifford_relations"
    ref = REP_REFS.get(r.name, "M_kM_l + M_lM_k = 2 s_k delta_kl")
    n = r.signature.n
    for k in range(n):
        for l in range(k, n):
            a, b = r.matrices[k], r.matrices[l]
            got = a @ b + b @ a
            s = 2 * r.signature.square(k + 1) if k == l else 0
            want = Matrix.identity(r.size, s)
            if got != want:
                return verdict(
                    name,
                    ref,
                    Witness(f"{r.name}: e{k + 1}, e{l + 1}", str(got), str(want)),
                )
    return verdict(name, ref)


def even_gamma8_generators(order: str = "0k") -> RepGenerators:
    """Gamma_0 Gamma_k (order "0k") or Gamma_k Gamma_0 (order "k0"), k = 1..7, as Cl(0,7)."""
    g = build_rep("gamma8").matrices
    if order == "0k":
        mats = tuple(g[0] @ g[k] for k in range(1, 8))
    elif order == "k0":
        mats = tuple(g[k] @ g[0] for k in range(1, 8))
    else:
        raise ValueError(f"unknown order {order!r}")
    return RepGenerators(f"gamma8_even_{order}", mats, Signature(0, 7))


def check_gamma8_even_diagonal() -> list[CheckResult]:
    """The even products are diagonal blocks diag(L(i_k), -L(i_k)) and obey Cl(0,7)."""
    ref = "Gamma_0 Gamma_k = [[i_k, 0],[0, -i_k]], 1<=k<=7"
    z = Matrix.zeros(8)
    out = []
    for order in ("0k", "k0"):
        rep = even_gamma8_generators(order)
        name = f"representations.gamma8_even_{order}.diagonal_form"
        bad = None
        for k, m in enumerate(rep.matrices, start=1):
            want = block(left_mult_matrix(I[k]), z, z, -left_mult_matrix(I[k]))
            if m != want:
                bad = Witness(
                    f"k={k}, product order {order}",
                    f"upper block {_upper_block_label(m, k)}",
                    f"upper block L(i{k})",
                )
                break
        out.append(verdict(name, ref, bad, on_failure=Status.FINDING))
        out.append(
            check_clifford_relations(
                rep, name=f"representations.gamma8_even_{order}.clifford_relations"
            )
        )
    return out


def _upper_block_label(m: Matrix, k: int) -> str:
    upper = Matrix([row[:8] for row in m.tolist()[:8]])
    lk = left_mult_matrix(I[k])
    if upper == lk:
        return f"L(i{k})"
    if upper == -lk:
        return f"-L(i{k})"
    return str(upper)


def check_gamma6_from_gamma7() -> CheckResult:
    """Compare gamma_6(e_k) = L(i_k i_7) with gamma_7 applied to the even image e_k e_7.

    gamma_7(e_k e_7) is the composite L(i_k) L(i_7); non-associativity means it
    need not equal L(i_k i_7), so a mismatch is reported as a finding.
    """
    name = "representations.gamma6_equals_gamma7_of_even_embedding"
    ref = "Cl^0(0,7) = Cl(0,6), gamma_6(e_k)=i_ki_7"
    g6, g7 = build_rep("gamma6"), build_rep("gamma7")
    sig6 = g6.signature
    for k in range(1, 7):
        img = embed_even(Multivector.generator(sig6, k), RAISE_Q)
        got = g7.image(img)
        want = g6.matrices[k - 1]
        if got != want:
            n = next(c for c in range(8) if got.column(c) != want.column(c))
            return verdict(
                name,
                ref,
                Witness(
                    f"k={k}, applied to i{n}",
                    f"i{k}(i7 i{n}) = {_oct_str(got.column(n))}",
                    f"(i{k}i7) i{n} = {_oct_str(want.column(n))}",
                ),
                on_failure=Status.FINDING,
            )
    return verdict(name, ref)


def check_gamma6_linear() -> CheckResult:
    """gamma_6(u) = u i_7 for u in R^6 agrees with the linear extension of the generators."""
    name = "representations.gamma6.linear_in_u"
    ref = "gamma_6(u)=ui_7, u in R^6"
    g6 = build_rep("gamma6")
    sig6 = g6.signature
    for k in range(1, 7):
        for l in range(k, 7):
            coeffs = [0] * 8
            coeffs[k] += 2
            coeffs[l] += 3
            u = Octonion(coeffs)
            mv = Multivector(sig6, {(k,): 2}) + Multivector(sig6, {(l,): 3})
            got = g6.image(mv)
            want = left_mult_matrix(oct_mul(u, I[7]))
            if got != want:
                return verdict(name, ref, (f"u=2 i{k} + 3 i{l}", got, want))
    return verdict(name, ref)


def _oct_str(coeffs) -> str:
    return str(Octonion(coeffs))
