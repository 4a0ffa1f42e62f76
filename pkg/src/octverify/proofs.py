"""Line-by-line replay of the two orbit/vector-field arguments.

Each displayed equation becomes an identity that is linear (or multilinear)
in the free octonion and is decided on every basis input, keeping the exact
bracketing in which it is written. Steps whose literal reading fails are
reported as findings with the first basis witness; identities the algebra
guarantees (Moufang, alternativity) are hard failures instead.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterable, Iterator

from .actions import (
    SlicePoint,
    action_a,
    action_b,
    action_c,
    grouped,
    negate_coordinates,
    reflect_a,
    slice_image,
    word,
)
from .octonion import I, Octonion, flexible_triple, moufang_residuals, oct_mul, random_unit_imaginary
from .results import CheckResult, Status, Witness, verdict

FIELD = "field"
THREE_COMPONENTS = "three_components"

KS = range(1, 7)
PAIRS = [(j, k) for j, k in itertools.permutations(KS, 2)]

Case = tuple  # (input description, got, expected)


def _decide(name: str, ref: str, cases: Iterable[Case], on_failure=Status.FINDING) -> CheckResult:
    for desc, got, expected in cases:
        if got != expected:
            return verdict(name, ref, Witness(desc, str(got), str(expected)), on_failure=on_failure)
    return verdict(name, ref)


def _basis_cases(fn, params: Iterable) -> Iterator[Case]:
    """fn(param, p) -> (got, expected), for every param and basis p."""
    for param in params:
        for n, p in enumerate(I):
            got, want = fn(param, p)
            yield f"{_fmt(param)}, p=i{n}", got, want


def _fmt(param) -> str:
    if isinstance(param, tuple):
        return f"j={param[0]}, k={param[1]}"
    return f"k={param}"


def _neg(p: Octonion, *ks: int) -> Octonion:
    return Octonion(negate_coordinates(*ks).apply(p.coeffs))


def _moufang_cases(which: int) -> Iterator[Case]:
    # Quadratic in x: basis x plus x = e_a + e_b decides it together with y, z basis.
    xs = [(f"i{a}", I[a]) for a in range(8)]
    xs += [(f"i{a}+i{b}", I[a] + I[b]) for a, b in itertools.combinations(range(8), 2)]
    for (xn, x), (yn, y), (zn, z) in itertools.product(xs, list(enumerate(I)), list(enumerate(I))):
        r = moufang_residuals(x, y, z)[which]
        yield f"x={xn}, y=i{yn}, z=i{zn}", r, 0


MOUFANG_REFS = ("(xyx)z = x(y(xz))", "z(xyx) = ((zx)y)x", "x(yz)x = (xy)(zx)")


def field_steps() -> list[CheckResult]:
    out: list[CheckResult] = []
    pre = "lemma_field.step"

    for i, ref in enumerate(MOUFANG_REFS):
        out.append(_decide(f"{pre}.00_moufang_m{i + 1}", ref, _moufang_cases(i), Status.FAIL))

    out.append(
        _decide(
            f"{pre}.01_i7_p_i7_closed_form",
            "i_7(t_0i_0+...+t_7i_7)i_7 = sum_(n!=0,7)t_ni_n-t_0i_0-t_7i_7",
            ((f"p=i{n}", flexible_triple(I[7], p), _neg(p, 0, 7)) for n, p in enumerate(I)),
        )
    )
    out.append(
        _decide(
            f"{pre}.02_action_a_bracketing",
            "i_k(i_7pi_7)i_k = i_k((i_7pi_7)i_k)",
            _basis_cases(
                lambda k, p: (
                    oct_mul(oct_mul(I[k], flexible_triple(I[7], p)), I[k]),
                    action_a(k)(p),
                ),
                KS,
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.03_action_a_closed_form",
            "phi_(gamma_6(e_k))(p) = sum_(n!=k,7)t_ni_n-t_ki_k-t_7i_7",
            ((f"k={k}", action_a(k).matrix, negate_coordinates(k, 7)) for k in KS),
        )
    )
    for form, make in (("a_form", action_a), ("b_form", action_b)):
        out.append(
            _decide(
                f"{pre}.04_phi_jk_p_closed_form.{form}",
                "phi_(gamma_6(e_je_k))(p) = sum_(n!=j,k)t_ni_n-t_ji_j-t_ki_k",
                (
                    (f"j={j}, k={k}", word(make(j), make(k)).matrix, negate_coordinates(j, k))
                    for j, k in PAIRS
                ),
            )
        )
    for form, make in (("a_form", action_a), ("b_form", action_b)):
        out.append(
            _decide(
                f"{pre}.05_phi_k_fixes_line_i7.{form}",
                "phi_(gamma_6(e_k))(i_7) = -i_7",
                ((f"k={k}", make(k)(I[7]), -I[7]) for k in KS),
            )
        )
        out.append(
            _decide(
                f"{pre}.06_phi_jk_fixes_i7.{form}",
                "phi_(gamma_6(e_je_k))(i_7) = i_7",
                ((f"j={j}, k={k}", word(make(j), make(k))(I[7]), I[7]) for j, k in PAIRS),
            )
        )

    def u(k):
        return oct_mul(I[k], I[7])

    def ui(k):
        return oct_mul(I[7], I[k])

    def pi7(p):
        return oct_mul(p, I[7])

    out.append(
        _decide(
            f"{pre}.07_b_form_bracketing",
            "phi_(gamma_6(e_k))(pi_7) = (i_ki_7)(pi_7)(i_7i_k)",
            _basis_cases(
                lambda k, p: (
                    oct_mul(oct_mul(u(k), pi7(p)), ui(k)),
                    oct_mul(u(k), oct_mul(pi7(p), ui(k))),
                ),
                KS,
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.08_by_m3",
            "(i_ki_7)(pi_7)(i_7i_k) = ((i_ki_7)p)(i_7(i_7i_k)) by (m3)",
            _basis_cases(
                lambda k, p: (
                    oct_mul(oct_mul(u(k), pi7(p)), ui(k)),
                    oct_mul(oct_mul(u(k), p), oct_mul(I[7], ui(k))),
                ),
                KS,
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.09_i7_i7_ik",
            "i_7(i_7i_k) = -i_k, as i_7^2=-1",
            ((f"k={k}", oct_mul(I[7], ui(k)), -I[k]) for k in KS),
        )
    )
    out.append(
        _decide(
            f"{pre}.10_as_i7_squared",
            "((i_ki_7)p)(i_7(i_7i_k)) = -((i_ki_7)p)i_k",
            _basis_cases(
                lambda k, p: (
                    oct_mul(oct_mul(u(k), p), oct_mul(I[7], ui(k))),
                    -oct_mul(oct_mul(u(k), p), I[k]),
                ),
                KS,
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.11_as_anticommute",
            "-((i_ki_7)p)i_k = ((i_7i_k)p)i_k, as i_7i_k=-i_ki_7",
            _basis_cases(
                lambda k, p: (
                    -oct_mul(oct_mul(u(k), p), I[k]),
                    oct_mul(oct_mul(ui(k), p), I[k]),
                ),
                KS,
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.12_by_m2",
            "((i_7i_k)p)i_k = i_7(i_kpi_k) by (m2)",
            _basis_cases(
                lambda k, p: (
                    oct_mul(oct_mul(ui(k), p), I[k]),
                    oct_mul(I[7], flexible_triple(I[k], p)),
                ),
                KS,
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.13_ik_p_ik_closed_form",
            "i_k(t_0i_0+...+t_7i_7)i_k = sum_(n!=0,k)t_ni_n-t_0i_0-t_ki_k",
            _basis_cases(lambda k, p: (flexible_triple(I[k], p), _neg(p, 0, k)), KS),
        )
    )
    out.append(
        _decide(
            f"{pre}.14_chain_end",
            "i_7(sum_(n!=0,k)t_ni_n-t_0i_0-t_ki_k) = (-sum_(n!=k,7)t_ni_n+t_ki_k+t_7i_7)i_7",
            _basis_cases(
                lambda k, p: (
                    oct_mul(I[7], _neg(p, 0, k)),
                    oct_mul(-_neg(p, k, 7), I[7]),
                ),
                KS,
            ),
        )
    )
    for form, make in (("b_form", action_b), ("a_form", action_a)):
        out.append(
            _decide(
                f"{pre}.15_phi_jk_p_i7.{form}",
                "phi_(gamma_6(e_je_k))(pi_7) = (sum_(n!=j,k)t_ni_n-t_ji_j-t_ki_k)i_7",
                _basis_cases(
                    lambda jk, p, make=make: (
                        word(make(jk[0]), make(jk[1]))(pi7(p)),
                        pi7(_neg(p, *jk)),
                    ),
                    PAIRS,
                ),
            )
        )
    readings = (
        ("mixed_b_then_a", action_b, action_a),
        ("a_form", action_a, action_a),
        ("b_form", action_b, action_b),
    )
    for form, outer, inner_ in readings:
        out.append(
            _decide(
                f"{pre}.16_equivariance_conclusion.{form}",
                "phi_(gamma_6(e_je_k))(pi_7) = phi_(gamma_6(e_je_k))(p)i_7",
                _basis_cases(
                    lambda jk, p, outer=outer, inner_=inner_: (
                        word(outer(jk[0]), outer(jk[1]))(pi7(p)),
                        pi7(word(inner_(jk[0]), inner_(jk[1]))(p)),
                    ),
                    PAIRS,
                ),
            )
        )
    out.append(compare_a_b_forms())
    return out


def a_b_differences(k: int) -> list[int]:
    a, b = action_a(k), action_b(k)
    return [n for n in range(8) if a(I[n]) != b(I[n])]


def compare_a_b_forms() -> CheckResult:
    """actionA(k) and actionB(k) as linear maps; a witness is the first differing basis vector."""
    name = "lemma_field.step.17_action_a_equals_action_b"
    ref = "x'=i_k(i_7xi_7)i_k versus phi_(gamma_6(e_k))(pi_7)=(i_ki_7)(pi_7)(i_7i_k)"
    for k in KS:
        diff = a_b_differences(k)
        if diff:
            n = diff[0]
            where = ",".join(f"i{d}" for d in diff)
            return verdict(
                name,
                ref,
                Witness(
                    f"k={k}, x=i{n} (forms differ on {where})",
                    f"actionA: {action_a(k)(I[n])}",
                    f"actionB: {action_b(k)(I[n])}",
                ),
                on_failure=Status.FINDING,
            )
    return verdict(name, ref)


SLICE_CS = (Fraction(3, 5), Fraction(4, 5))


def three_component_steps(seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    c, s = SLICE_CS
    pre = "lemma_3comp.step"
    out: list[CheckResult] = []
    sixpairs = list(itertools.combinations(KS, 2))

    out.append(
        _decide(
            f"{pre}.01_i0_invariant",
            "Spin(7) fixes i_0",
            [(f"actionA({k}) on i0", action_a(k)(I[0]), I[0]) for k in KS]
            + [(f"reflectA(i{k}) on i0", reflect_a(k)(I[0]), I[0]) for k in range(1, 8)],
        )
    )

    xs7 = [I[k] for k in range(1, 8)] + [random_unit_imaginary(rng) for _ in range(8)]
    out.append(
        _decide(
            f"{pre}.02_slice_m7",
            "v'=i_k(i_7(cos t i_0+sin t x)i_7)i_k=cos t i_0+sin t i_k(i_7xi_7)i_k",
            (
                (f"k={k}, x={x}", action_a(k)(c * I[0] + s * x), c * I[0] + s * action_a(k)(x))
                for k in KS
                for x in xs7
            ),
        )
    )

    for form, make in (("nested", action_c), ("grouped", grouped)):
        out.append(
            _decide(
                f"{pre}.03_i7_invariant_spin6.{form}",
                "i_ji_k in Spin(6) fixes i_7",
                ((f"j={j}, k={k}", make(j, k)(I[7]), I[7]) for j, k in sixpairs),
            )
        )

    xs6 = [I[k] for k in KS] + [random_unit_imaginary(rng, KS) for _ in range(8)]
    out.append(
        _decide(
            f"{pre}.04_slice_m6.grouped_vs_nested",
            "v'=i_ji_k(cos t i_7+sin t x)i_ki_j=cos t i_7+sin t i_j(i_kxi_k)i_j",
            (
                (f"j={j}, k={k}, x={x}", grouped(j, k)(c * I[7] + s * x), c * I[7] + s * action_c(j, k)(x))
                for j, k in sixpairs
                for x in xs6
            ),
        )
    )
    out.append(
        _decide(
            f"{pre}.05_slice_m6.nested",
            "v'=i_j(i_k(cos t i_7+sin t x)i_k)i_j=cos t i_7+sin t i_j(i_kxi_k)i_j",
            (
                (f"j={j}, k={k}, x={x}", action_c(j, k)(c * I[7] + s * x), c * I[7] + s * action_c(j, k)(x))
                for j, k in sixpairs
                for x in xs6
            ),
        )
    )

    def slice_kept(j, k, x):
        sp = SlicePoint(c, s, x, pole=7)
        return slice_image(word(action_c(j, k)), sp) is not None

    out.append(
        _decide(
            f"{pre}.06_orbit_m6_slice_form",
            "orbit of cos t i_7+sin t x",
            ((f"j={j}, k={k}, x={x}", slice_kept(j, k, x), True) for j, k in sixpairs for x in xs6),
        )
    )
    out.append(
        _decide(
            f"{pre}.07_pole_i7_fixed_spin6",
            "t=0: pole i_7, isotropy Spin(6)",
            ((f"actionA({j}) o actionA({k})", word(action_a(j), action_a(k))(I[7]), I[7]) for j, k in sixpairs),
        )
    )
    return out


def verify_proof_steps(lemma: str, seed: int = 0) -> list[CheckResult]:
    if lemma == FIELD:
        return field_steps()
    if lemma == THREE_COMPONENTS:
        return three_component_steps(seed)
    raise ValueError(f"unknown lemma {lemma!r}; expected {FIELD!r} or {THREE_COMPONENTS!r}")
