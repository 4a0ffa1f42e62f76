from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octverify.exact import ExactArithmeticError, Matrix, det, gram, mat_mul, rat_arith

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6)


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rat_arith(Fraction(3, 5), Fraction(3, 5), "mul") == Fraction(9, 25)
    assert rat_arith(1, 4, "sub") == -3
    assert rat_arith(1, 4, "div") == Fraction(1, 4)


def test_rat_arith_zero_divisor():
    with pytest.raises(ExactArithmeticError, match="division by zero"):
        rat_arith(1, 0, "div")


def test_rat_arith_unknown_op():
    with pytest.raises(ValueError):
        rat_arith(1, 2, "pow")


def test_lowest_terms():
    r = rat_arith(Fraction(2, 4), Fraction(2, 4), "add")
    assert (r.numerator, r.denominator) == (1, 1)
    r = rat_arith(Fraction(1, 6), Fraction(-1, 3), "div")
    assert (r.numerator, r.denominator) == (-1, 2)


def test_no_overflow():
    big = Fraction(3**200, 7**150)
    assert rat_arith(big, big, "mul") == Fraction(3**400, 7**300)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    add = lambda x, y: rat_arith(x, y, "add")
    mul = lambda x, y: rat_arith(x, y, "mul")
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


def test_field_axioms_seeded(rng):
    for _ in range(500):
        a, b, c = (Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(3))
        assert (a + b) + c == rat_arith(a, rat_arith(b, c, "add"), "add")
        assert a * (b + c) == rat_arith(rat_arith(a, b, "mul"), rat_arith(a, c, "mul"), "add")


def test_mat_mul_identity_and_zero(rng):
    m = Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(8)] for _ in range(8)])
    assert mat_mul(Matrix.identity(8), m) == m
    assert mat_mul(m, Matrix.zeros(8)) == Matrix.zeros(8)


def test_mat_mul_involution():
    swap = Matrix([[0, 1], [1, 0]])
    assert swap @ swap == Matrix.identity(2)


def test_mat_mul_rational_entries():
    a = Matrix([[Fraction(1, 2), Fraction(1, 3)], [0, Fraction(2, 7)]])
    b = Matrix([[Fraction(6, 5), 0], [Fraction(3, 4), 1]])
    want = Matrix(
        [
            [Fraction(1, 2) * Fraction(6, 5) + Fraction(1, 3) * Fraction(3, 4), Fraction(1, 3)],
            [Fraction(2, 7) * Fraction(3, 4), Fraction(2, 7)],
        ]
    )
    assert a @ b == want


def test_mat_mul_mismatch():
    with pytest.raises(ExactArithmeticError):
        mat_mul(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


def test_gram_examples():
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert gram(basis) == Matrix.identity(3)
    assert gram([[1, 0], [1, 0]]) == Matrix([[1, 1], [1, 1]])
    rot = [[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]]
    assert gram(rot) == Matrix.identity(2)


def test_gram_errors():
    with pytest.raises(ExactArithmeticError):
        gram([])
    with pytest.raises(ExactArithmeticError):
        gram([[1, 2], [1, 2, 3]])


def test_gram_symmetric_with_norms_on_diagonal(rng):
    vs = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)] for _ in range(4)]
    g = gram(vs)
    assert g.is_symmetric()
    for i, v in enumerate(vs):
        assert g[i, i] == sum(x * x for x in v)


def _det_cofactor(rows):
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * _det_cofactor([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(len(rows))
    )


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_det_matches_cofactor_expansion(rng, n):
    for _ in range(5):
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        assert det(Matrix(rows)) == _det_cofactor(rows)


def test_det_singular_and_pivoting():
    assert det(Matrix([[1, 2], [2, 4]])) == 0
    assert det(Matrix([[0, 1], [1, 0]])) == -1
    assert det(Matrix.identity(8, Fraction(1, 2))) == Fraction(1, 256)


def test_matrix_immutable_equality_and_str():
    m = Matrix.diag([1, -1, 1])
    assert m == Matrix([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    assert str(m) == "diag(1, -1, 1)"
    assert str(Matrix.identity(4, -2)) == "-2*I4"
    assert hash(m) == hash(Matrix.diag([1, -1, 1]))
