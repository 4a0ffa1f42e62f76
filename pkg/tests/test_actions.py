import itertools
import random
from fractions import Fraction

import pytest

import oracle
from octverify.actions import (
    GroupWord,
    SlicePoint,
    action_a,
    action_b,
    apply,
    basis_reflection_pairs,
    basis_table,
    check_field_equivariance,
    check_mixed_identity,
    check_orbit_geometry,
    check_orthogonality,
    check_parallelizability,
    closed_form_action_a,
    composition_contract_failures,
    equivariance_failures,
    mixed_identity_failures,
    negate_coordinates,
    orbit_words,
    reflect_a,
    slice_image,
    spin_generators,
    word,
)
from octverify.exact import ExactArithmeticError, Matrix
from octverify.octonion import I, Octonion, norm_sq, oct_mul, random_octonion, random_unit_imaginary
from octverify.results import Status

F = Fraction


def test_reflect_examples():
    r = reflect_a(1)
    assert apply(r, I[0]) == I[0]
    assert apply(r, I[1]) == I[1]
    assert apply(r, I[2]) == -I[2]


def test_reflect_requires_unit_imaginary():
    with pytest.raises(ExactArithmeticError):
        reflect_a(2 * I[1])
    with pytest.raises(ExactArithmeticError):
        reflect_a(F(3, 5) * I[0] + F(4, 5) * I[1])
    reflect_a(F(3, 5) * I[1] + F(4, 5) * I[2])


def test_index_ranges():
    with pytest.raises(ValueError):
        action_a(7)
    with pytest.raises(ValueError):
        action_b(0)


def test_action_a_vs_b_on_i3():
    assert apply(action_a(1), I[3]) == I[3]
    assert apply(action_b(1), I[3]) == -I[3]


def test_basis_tables_against_oracle():
    for k in range(1, 7):
        assert basis_table(action_a(k)).tolist() == oracle.matrix_of(lambda x: oracle.action_a(k, x))
        assert basis_table(action_b(k)).tolist() == oracle.matrix_of(lambda x: oracle.action_b(k, x))
    for k in range(1, 8):
        assert basis_table(reflect_a(k)).tolist() == oracle.matrix_of(
            lambda x: oracle.reflect(oracle.e(k), x)
        )


def test_basis_table_examples():
    assert basis_table(action_a(1)) == Matrix.diag([1, -1, 1, 1, 1, 1, 1, -1])
    for j, k in itertools.combinations(range(1, 7), 2):
        assert basis_table(word(action_a(j), action_a(k))) == negate_coordinates(j, k)
    for k in range(1, 7):
        assert basis_table(action_a(k)) == closed_form_action_a(k)


def test_frozen_action_b_and_differences():
    assert basis_table(action_b(1)) == Matrix.diag([1, -1, -1, -1, -1, -1, 1, -1])
    diffs = {
        k: [n for n in range(8) if action_a(k)(I[n]) != action_b(k)(I[n])]
        for k in range(1, 7)
    }
    assert diffs == {
        1: [2, 3, 4, 5],
        2: [1, 3, 4, 6],
        3: [1, 2, 5, 6],
        4: [1, 2, 5, 6],
        5: [1, 3, 4, 6],
        6: [2, 3, 4, 5],
    }


def test_reflect_words_fix_i0(rng):
    for w in orbit_words(rng, 8):
        assert basis_table(w).column(0) == tuple(F(int(n == 0)) for n in range(8))


def test_word_composition_order():
    a, b = reflect_a(1), reflect_a(2)
    w = word(a, b)
    x = I[3] + 2 * I[5]
    assert w(x) == a(b(x))
    assert basis_table(w) == basis_table(a) @ basis_table(b)
    assert composition_contract_failures(basis_reflection_pairs(4)) == []


def test_apply_matches_matrix(rng):
    w = word(reflect_a(random_unit_imaginary(rng)), reflect_a(3))
    x = random_octonion(rng)
    assert Octonion(w.matrix.apply(x.coeffs)) == apply(w, x)


def test_orthogonality_examples():
    assert check_orthogonality(reflect_a(3)).status is Status.PASS
    assert check_orthogonality(action_a(4)).status is Status.PASS
    r = check_orthogonality(Matrix.identity(8, 2), name="scaled")
    assert r.status is Status.FAIL and r.witness is not None


def test_orthogonality_random_words(rng):
    for _ in range(5):
        w = GroupWord(reflect_a(random_unit_imaginary(rng)) for _ in range(4))
        assert check_orthogonality(w).status is Status.PASS


def test_equivariance_a1a2_m7():
    g = word(action_a(1), action_a(2))
    assert [n for n, _, _ in equivariance_failures(g, 7)] == [1, 2, 5, 6]
    # the hand witness p = i6: g(i6 i7) = g(i1) = -i1 but g(i6) i7 = +i1
    n, lhs, rhs = equivariance_failures(g, 7)[3]
    assert (n, lhs, rhs) == (6, -I[1], I[1])
    r = check_field_equivariance([g], 7)
    assert r.status is Status.FINDING
    assert r.witness.input == "g=actionA(1) o actionA(2), p=i1; got g(p*i7), expected g(p)*i7"


def test_equivariance_failures_other_m():
    g = word(action_a(1), action_a(2))
    got = {m: [n for n, _, _ in equivariance_failures(g, m)] for m in range(3, 7)}
    assert got == {3: [], 4: [1, 2, 5, 6], 5: [1, 2, 4, 7], 6: [1, 2, 4, 7]}


@pytest.mark.parametrize("m", range(1, 8))
def test_equivariance_trivial_groups(m):
    assert check_field_equivariance([GroupWord()], m).status is Status.PASS
    assert check_field_equivariance([word(reflect_a(1), reflect_a(1))], m).status is Status.PASS


@pytest.mark.parametrize("style", ["actionA", "actionB", "reflectA"])
def test_equivariance_spin2_m3(style):
    assert check_field_equivariance(spin_generators(2, style), 3).status is Status.PASS


def test_mixed_identity_examples():
    b, a = action_b(1), action_a(1)
    assert b(oct_mul(I[3], I[7])) == b(-I[4]) == I[4]
    assert -oct_mul(a(I[3]), I[7]) == I[4]
    assert b(oct_mul(I[0], I[7])) == -I[7] == -oct_mul(a(I[0]), I[7])
    b2, a2 = action_b(2), action_a(2)
    assert b2(oct_mul(I[1], I[7])) == I[6] == -oct_mul(a2(I[1]), I[7])


def test_mixed_identity_oracle_agrees():
    for k in range(1, 7):
        for n in range(8):
            lhs = oracle.action_b(k, oracle.mul(oracle.e(n), oracle.e(7)))
            rhs = oracle.neg(oracle.mul(oracle.action_a(k, oracle.e(n)), oracle.e(7)))
            assert lhs == rhs, (k, n)
        assert mixed_identity_failures(k) == []
        assert check_mixed_identity(k).status is Status.PASS


def test_parallelizability_examples():
    assert check_parallelizability(I[0]).status is Status.PASS
    assert check_parallelizability(F(3, 5) * I[0] + F(4, 5) * I[2]).status is Status.PASS
    assert check_parallelizability(2 * I[1]).status is Status.PASS
    with pytest.raises(ExactArithmeticError):
        check_parallelizability(Octonion())


def test_parallelizability_random(rng):
    for _ in range(16):
        assert check_parallelizability(random_octonion(rng, nonzero=True)).status is Status.PASS


def test_orbit_geometry_examples():
    w = word(reflect_a(2), reflect_a(5))
    assert w(I[0]) == I[0]
    assert reflect_a(3)(I[7]) == -I[7]
    v = F(3, 5) * I[0] + F(4, 5) * I[7]
    assert word(action_a(1), action_a(2))(v) == v


def test_orbit_geometry_all_pass():
    results = check_orbit_geometry(seed=11, n_random=16)
    assert [r.name for r in results] == [
        "orbits.a_pole_i0_fixed",
        "orbits.b_pin6_stabilizes_pm_i7",
        "orbits.b_pin5_stabilizes_pm_i6",
        "orbits.c_interior_point_fixed_by_spin6",
        "orbits.d_slice_form_preserved",
    ]
    assert all(r.status is Status.PASS for r in results)


def test_slice_point_validation_and_image():
    with pytest.raises(ValueError):
        SlicePoint(F(1, 2), F(1, 2), I[1])
    with pytest.raises(ValueError):
        SlicePoint(F(3, 5), F(4, 5), I[0])
    sp = SlicePoint(F(3, 5), F(4, 5), I[2])
    assert slice_image(action_a(2), sp) == -I[2]
    assert slice_image(word(action_a(1), action_a(2)), sp) == -I[2]
    # reflectA(i1) negates the i7 pole coordinate, leaving slice form
    pole7 = SlicePoint(F(3, 5), F(4, 5), I[1], pole=7)
    assert slice_image(reflect_a(1), pole7) is None


def test_norm_preserved_by_random_words():
    rng = random.Random(5)
    for _ in range(5):
        w = GroupWord(reflect_a(random_unit_imaginary(rng)) for _ in range(2))
        x = random_octonion(rng)
        assert norm_sq(w(x)) == norm_sq(x)
