"""Named verification suites: each maps a run context to a list of check results."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import actions as act
from . import clifford as cl
from .exact import Matrix, gram
from .octonion import (
    I,
    TRIPLES,
    Octonion,
    associator,
    conjugate,
    inverse,
    left_mult_matrix,
    moufang_residuals,
    norm_sq,
    oct_mul,
    random_octonion,
    random_unit_imaginary,
    right_mult_matrix,
)
from .proofs import FIELD, THREE_COMPONENTS, verify_proof_steps
from .results import CheckResult, Status, verdict


@dataclass(frozen=True)
class Context:
    seed: int = 0
    trials: int = 256

    def rng(self, stream: str) -> random.Random:
        # Independent deterministic stream per check so suites can be run alone or together.
        return random.Random(f"{self.seed}:{stream}")

    @property
    def small_trials(self) -> int:
        return max(1, self.trials // 4)


Check = Callable[[Context], list[CheckResult]]


def _first(cases):
    """First (input, got, expected) with got != expected, else None."""
    for desc, got, want in cases:
        if got != want:
            return desc, got, want
    return None


def _pairs():
    return itertools.product(range(8), repeat=2)


def _triples():
    return itertools.product(range(8), repeat=3)


def _polarized_x():
    xs = [(f"i{a}", I[a]) for a in range(8)]
    xs += [(f"i{a}+i{b}", I[a] + I[b]) for a, b in itertools.combinations(range(8), 2)]
    return xs


TABLE_REF = "i_0 = 1, i_k^2 =-1, i_ki_l = i_m =-i_li_k, cyclic for (k,l,m) in P"


# ------------------------------------------------------------------------ table


def _product_from_triples(k: int, l: int) -> Octonion:
    """Oracle independent of MultTable: look the pair up on the oriented lines."""
    if k == 0:
        return I[l]
    if l == 0:
        return I[k]
    if k == l:
        return -I[0]
    for line in TRIPLES:
        if k in line and l in line:
            m = next(x for x in line if x not in (k, l))
            forward = (line.index(l) - line.index(k)) % 3 == 1
            return I[m] if forward else -I[m]
    raise AssertionError(f"no line through i{k}, i{l}")


def table_checks(ctx: Context) -> list[CheckResult]:
    rng = ctx.rng("table")
    out = [
        verdict(
            "table.products_match_triples",
            TABLE_REF,
            _first(
                (f"i{k} i{l}", oct_mul(I[k], I[l]), _product_from_triples(k, l))
                for k, l in _pairs()
            ),
        ),
        verdict(
            "table.antisymmetry",
            "i_ki_l = i_m =-i_li_k",
            _first(
                (f"i{k}, i{l}", oct_mul(I[k], I[l]), -oct_mul(I[l], I[k]))
                for k, l in itertools.permutations(range(1, 8), 2)
            ),
        ),
        verdict(
            "table.unit_and_squares",
            "i_0 = 1, i_k^2 =-1",
            _first(
                [(f"i0 i{k}", oct_mul(I[0], I[k]), I[k]) for k in range(8)]
                + [(f"i{k} i0", oct_mul(I[k], I[0]), I[k]) for k in range(8)]
                + [(f"i{k}^2", oct_mul(I[k], I[k]), -I[0]) for k in range(1, 8)]
            ),
        ),
        verdict(
            "table.conjugation_reverses_products",
            "x^* in gamma_8(x)=[[0, x],[x^*, 0]]",
            _first(
                (
                    f"i{k}, i{l}",
                    conjugate(oct_mul(I[k], I[l])),
                    oct_mul(conjugate(I[l]), conjugate(I[k])),
                )
                for k, l in _pairs()
            ),
        ),
    ]
    randoms = [(random_octonion(rng), random_octonion(rng)) for _ in range(ctx.trials)]
    out.append(
        verdict(
            "table.norm_multiplicative.basis",
            "composition algebra: |xy| = |x||y|",
            _first(
                (f"i{k}, i{l}", norm_sq(oct_mul(I[k], I[l])), norm_sq(I[k]) * norm_sq(I[l]))
                for k, l in _pairs()
            ),
        )
    )
    out.append(
        verdict(
            "table.norm_multiplicative.random",
            "composition algebra: |xy| = |x||y|",
            _first(
                (f"x={x}, y={y}", norm_sq(oct_mul(x, y)), norm_sq(x) * norm_sq(y))
                for x, y in randoms
            ),
        )
    )
    out.append(
        verdict(
            "table.inverse",
            "u x u^{-1}",
            _first(
                (f"x={x}", oct_mul(x, inverse(x)), I[0])
                for x, _ in randoms
                if x
            ),
        )
    )
    out.append(
        verdict(
            "table.flexibility",
            "x(yx) = (xy)x",
            _first(
                (f"x={xn}, y=i{l}", oct_mul(oct_mul(x, I[l]), x), oct_mul(x, oct_mul(I[l], x)))
                for (xn, x) in _polarized_x()
                for l in range(8)
            ),
        )
    )
    out.append(
        verdict(
            "table.mult_matrices",
            "L(a)x = ax, R(a)x = xa on O",
            _first(
                (f"a=i{k}, x=i{l}", (left_mult_matrix(I[k]).apply(I[l].coeffs), right_mult_matrix(I[k]).apply(I[l].coeffs)),
                 (oct_mul(I[k], I[l]).coeffs, oct_mul(I[l], I[k]).coeffs))
                for k, l in _pairs()
            ),
        )
    )
    return out


# ------------------------------------------------------------------- identities


MOUFANG_REFS = ("(xyx)z = x(y(xz))", "z(xyx) = ((zx)y)x", "x(yz)x = (xy)(zx)")


def identity_checks(ctx: Context) -> list[CheckResult]:
    rng = ctx.rng("identities")
    out = []
    basis_res = {t: moufang_residuals(I[t[0]], I[t[1]], I[t[2]]) for t in _triples()}
    pol = [
        (xn, yn, zn, moufang_residuals(x, I[yn], I[zn]))
        for (xn, x) in _polarized_x()
        for yn in range(8)
        for zn in range(8)
    ]
    rand = []
    for _ in range(ctx.trials):
        x, y, z = (random_octonion(rng) for _ in range(3))
        rand.append((x, y, z, moufang_residuals(x, y, z)))
    for i, ref in enumerate(MOUFANG_REFS):
        m = f"m{i + 1}"
        out.append(
            verdict(
                f"identities.moufang_{m}.basis_triples",
                ref,
                _first((f"i{a}, i{b}, i{c}", r[i], 0) for (a, b, c), r in basis_res.items()),
            )
        )
        out.append(
            verdict(
                f"identities.moufang_{m}.polarized",
                ref,
                _first((f"x={xn}, y=i{yn}, z=i{zn}", r[i], 0) for xn, yn, zn, r in pol),
            )
        )
        out.append(
            verdict(
                f"identities.moufang_{m}.random",
                ref,
                _first((f"x={x}, y={y}, z={z}", r[i], 0) for x, y, z, r in rand),
            )
        )
    xs = _polarized_x()
    out.append(
        verdict(
            "identities.alternative.left",
            "associator(x,x,y) = 0",
            _first(
                [(f"x={xn}, y=i{l}", associator(x, x, I[l]), 0) for xn, x in xs for l in range(8)]
                + [(f"x={x}, y={y}", associator(x, x, y), 0) for x, y, _, _ in rand]
            ),
        )
    )
    out.append(
        verdict(
            "identities.alternative.right",
            "associator(y,x,x) = 0",
            _first(
                [(f"x={xn}, y=i{l}", associator(I[l], x, x), 0) for xn, x in xs for l in range(8)]
                + [(f"x={x}, y={y}", associator(y, x, x), 0) for x, y, _, _ in rand]
            ),
        )
    )
    out.append(
        verdict(
            "identities.non_associative_witness",
            "(i1 i2) i4 - i1 (i2 i4) = 2 i7",
            _first([("i1, i2, i4", associator(I[1], I[2], I[4]), 2 * I[7])]),
        )
    )
    out.append(
        verdict(
            "identities.lines_associative",
            "span(i_0,i_k,i_l,i_m) associative, (k,l,m) in P",
            _first((f"i{k}, i{l}, i{m}", associator(I[k], I[l], I[m]), 0) for k, l, m in TRIPLES),
        )
    )
    return out


# ---------------------------------------------------------------------- clifford


def clifford_checks(ctx: Context) -> list[CheckResult]:
    out = []
    bad = None
    for n in range(0, 5):
        for p in range(n + 1):
            sig = cl.Signature(p, n - p)
            blades = [cl.Multivector(sig, {m: 1}) for m in range(1 << n)]
            for a, b, c in itertools.product(blades, repeat=3):
                lhs = cl.geo_mul(cl.geo_mul(a, b), c)
                rhs = cl.geo_mul(a, cl.geo_mul(b, c))
                if lhs != rhs:
                    bad = (f"{sig}: {a}, {b}, {c}", lhs, rhs)
                    break
            if bad:
                break
        if bad:
            break
    out.append(verdict("clifford.geo_mul_associative", "Clifford algebras Cl(p,q), p+q<=4 exhaustive", bad))

    def relations(sig):
        gens = [cl.Multivector.generator(sig, k) for k in range(1, sig.n + 1)]
        for k, l in itertools.combinations_with_replacement(range(sig.n), 2):
            a, b = gens[k], gens[l]
            got = a * b + b * a
            want = cl.Multivector.scalar(sig, 2 * sig.square(k + 1) if k == l else 0)
            if got != want:
                return (f"{sig}: e{k + 1}, e{l + 1}", got, want)
        return None

    for p, q in ((8, 0), (0, 7), (0, 6)):
        out.append(
            verdict(
                f"clifford.generator_relations.cl_{p}_{q}",
                "e_ke_l = -e_le_k (k!=l), e_k^2 = +-1",
                relations(cl.Signature(p, q)),
            )
        )

    sig = cl.Signature(2, 3)
    blades = [cl.Multivector(sig, {m: 1}) for m in range(1 << sig.n)]
    evens = [b for b in blades if b.is_even()]
    bad = _first(
        [(f"{a}", cl.even_part(cl.even_part(a)), cl.even_part(a)) for a in blades]
        + [(f"{a} * {b}", cl.geo_mul(a, b).is_even(), True) for a in evens for b in evens]
    )
    out.append(verdict("clifford.even_part_closed", "Pin(n)=Pin^0(n)+Pin^1(n), Pin^0(n)=Spin(n)", bad))

    for p, q in ((0, 6), (0, 7), (8, 0)):
        for variant in cl.VARIANTS:
            out.append(cl.check_embedding_hom(p, q, variant))
    return out


# --------------------------------------------------------------- representations


def representation_checks(ctx: Context) -> list[CheckResult]:
    rng = ctx.rng("representations")
    out = [cl.check_clifford_relations(cl.build_rep(n)) for n in ("gamma6", "gamma7", "gamma8")]
    out += cl.check_gamma8_even_diagonal()
    out.append(cl.check_gamma6_from_gamma7())
    out.append(cl.check_gamma6_linear())

    us = [I[k] for k in range(1, 8)] + [random_unit_imaginary(rng) for _ in range(ctx.small_trials)]
    xs = list(I) + [random_octonion(rng) for _ in range(8)]
    out.append(
        verdict(
            "representations.reflection_is_conjugation",
            "x'=phi_(gamma_7(u))(x)=u x u^{-1}=-uxu",
            _first(
                (f"u={u}, x={x}", r(x), oct_mul(oct_mul(u, x), inverse(u)))
                for u, r in ((u, act.reflect_a(u)) for u in us)
                for x in xs
            ),
        )
    )

    maps = (
        [act.reflect_a(k) for k in range(1, 8)]
        + [act.action_a(k) for k in range(1, 7)]
        + [act.action_b(k) for k in range(1, 7)]
        + [act.action_c(j, k) for j, k in itertools.combinations(range(1, 7), 2)]
    )
    bad = None
    for m in maps:
        r = act.check_orthogonality(m)
        if not r.passed:
            bad = r.witness
            break
    out.append(verdict("representations.sandwich_maps_orthogonal", "M^T M = I8", bad))

    words = [act.word(a, b) for a, b in itertools.product(maps[:7] + maps[7:13], repeat=2)]
    words += [act.random_even_word(rng, 2) for _ in range(8)]
    out.append(
        verdict(
            "representations.norm_preserved",
            "|phi(x)| = |x|",
            _first(
                (f"{g.label}, x={x}", norm_sq(g(x)), norm_sq(x))
                for g in maps + words
                for x in xs
            ),
        )
    )
    out.append(
        verdict(
            "representations.matrix_matches_products",
            "x'=i_k(i_7xi_7)i_k",
            _first(
                (f"{g.label}, x={x}", Octonion(t.apply(x.coeffs)), g(x))
                for g, t in ((g, act.basis_table(g)) for g in maps + words)
                for x in xs[8:]
            ),
        )
    )
    sample = words[:: max(1, len(words) // 12)]
    fails = act.composition_contract_failures(sample)
    out.append(
        verdict(
            "representations.composition_order",
            "M(g o h) = M(g) M(h)",
            None if not fails else (f"{fails[0][0]} then {fails[0][1]}", "M(w1 o w2)", "M(w1) M(w2)"),
        )
    )
    return out


# ------------------------------------------------------------------- lemma field


def lemma_field_checks(ctx: Context) -> list[CheckResult]:
    out = verify_proof_steps(FIELD, seed=ctx.seed)
    for k in range(2, 7):
        for style in (act.ACTION_A, act.ACTION_B, act.REFLECT_A):
            gens = act.spin_generators(k, style)
            for m in range(k + 1, 8):
                out.append(
                    act.check_field_equivariance(
                        gens, m, name=f"lemma_field.equivariance.spin{k}.m{m}.{style}"
                    )
                )
    out += [act.check_mixed_identity(k) for k in range(1, 7)]

    rng = ctx.rng("lemma-field")
    ps = [I[0], I[3]] + [random_octonion(rng, nonzero=True) for _ in range(ctx.small_trials)]
    bad = None
    for k in range(2, 7):
        for p in ps:
            fields = [oct_mul(p, I[m]).coeffs for m in range(k + 1, 8)]
            if gram(fields) != Matrix.identity(7 - k, norm_sq(p)):
                bad = (f"k={k}, p={p}", gram(fields), f"{norm_sq(p)}*I{7 - k}")
                break
        if bad:
            break
    out.append(
        verdict(
            "lemma_field.fields_independent",
            "7-k number ... linearly independent tangent vector fields",
            bad,
        )
    )
    return out


# ------------------------------------------------------------------------ orbits


def orbit_checks(ctx: Context) -> list[CheckResult]:
    rng = ctx.rng("orbits")
    out = act.check_orbit_geometry(seed=rng.randrange(2**32), n_random=ctx.small_trials)
    out += verify_proof_steps(THREE_COMPONENTS, seed=ctx.seed)
    fixed = {
        "i0": I[0],
        "3_5_i0_4_5_i2": Octonion([Fraction(3, 5), 0, Fraction(4, 5), 0, 0, 0, 0, 0]),
        "2_i1": 2 * I[1],
    }
    for label, p in fixed.items():
        out.append(act.check_parallelizability(p, name=f"orbits.parallelizable.{label}"))
    bad = None
    for _ in range(ctx.small_trials):
        p = random_octonion(rng, nonzero=True)
        r = act.check_parallelizability(p)
        if not r.passed:
            bad = r.witness
            break
    out.append(verdict("orbits.parallelizable.random", act.PARALLEL_REF, bad))
    return out


SUITES: dict[str, list[Check]] = {
    "table": [table_checks],
    "identities": [identity_checks],
    "clifford": [clifford_checks],
    "representations": [representation_checks],
    "lemma-field": [lemma_field_checks],
    "orbits": [orbit_checks],
}
SUITES["all"] = [c for name in list(SUITES) for c in SUITES[name]]

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, ctx: Context, registry: dict[str, list[Check]] | None = None) -> list[CheckResult]:
    registry = SUITES if registry is None else registry
    if name not in registry:
        raise KeyError(name)
    results = [r for check in registry[name] for r in check(ctx)]
    names = [r.name for r in results]
    dup = {n for n in names if names.count(n) > 1}
    if dup:
        raise RuntimeError(f"duplicate check names: {sorted(dup)}")
    return sorted(results, key=lambda r: r.name)


__all__ = ["Context", "SUITES", "SUITE_NAMES", "run_suite", "Status"]
