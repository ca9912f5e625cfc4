from fractions import Fraction
from itertools import permutations, product

import pytest

from algebra import (
    CharPoly,
    QPoly,
    antisymmetrize,
    demazure_E,
    demazure_E_schur,
    permutation_sign,
    schur,
    schur_expand,
    schur_sum,
    straighten,
    vandermonde,
)
from algebra.characters import gl_rho
from models import InternalArithmeticError, InvalidInputError


# ================================================================
# QPoly
# ================================================================

def test_qpoly_rendering():
    assert str(QPoly({2: 1, 4: 1})) == "q + q^2"
    assert str(QPoly.one()) == "1"
    assert str(QPoly.zero()) == "0"
    assert str(QPoly({1: 1})) == "q^{1/2}"
    assert str(QPoly({0: 2, 2: -1})) == "2 - q"
    assert QPoly({4: 1}).to_latex() == "q^{2}"


def test_qpoly_half_integer_powers():
    assert QPoly.q(Fraction(1, 2)) == QPoly.monomial(1)
    assert not QPoly.q(Fraction(1, 2)).is_integral()
    with pytest.raises(ValueError):
        QPoly.q(Fraction(1, 3))


def test_qpoly_arithmetic():
    q = QPoly.q()
    assert (1 + q) * (1 - q) == 1 - q * q
    assert (q + q * q).at_one() == 2
    assert (q * q).bar() == QPoly.monomial(-4)
    assert q.shift(2) == q * q
    assert (q + 1) - (q + 1) == 0
    assert QPoly.sum([q, q, QPoly.one()]) == 2 * q + 1


def test_qpoly_inspection():
    p = QPoly({-2: 1, 0: 0, 6: 3})
    assert p.terms == {-2: 1, 6: 3}
    assert p.min_half() == -2
    assert p.max_half() == 6
    assert p.coefficient(6) == 3
    assert p.truncate(0) == QPoly.monomial(-2)
    assert p.has_nonnegative_coefficients()
    assert not (-p).has_nonnegative_coefficients()
    assert QPoly.zero().max_half() is None


def test_qpoly_refuses_foreign_types():
    with pytest.raises(TypeError):
        QPoly.one() + 1.5


# ================================================================
# CharPoly
# ================================================================

def test_charpoly_checks_variable_count():
    with pytest.raises(InvalidInputError):
        CharPoly(2, {(1, 0, 0): 1})
    with pytest.raises(InvalidInputError):
        CharPoly.one(2) + CharPoly.one(3)


def test_charpoly_truncations():
    x = CharPoly.monomial((1, 0), QPoly.q())
    y = CharPoly.monomial((2, 0), QPoly.monomial(4))
    f = x + y
    assert f.truncate_degree(1) == x
    assert f.truncate_q(2) == x
    assert f.at_q_one() == {(1, 0): 1, (2, 0): 1}


# ================================================================
# Characters
# ================================================================

def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1


def test_vandermonde_two_variables():
    assert vandermonde(2) == CharPoly(2, {(1, 0): 1, (0, 1): -1})


def test_schur_small_cases():
    assert schur((1, 0)) == CharPoly(2, {(1, 0): 1, (0, 1): 1})
    assert schur((1, 1)) == CharPoly.monomial((1, 1))
    s21 = schur((2, 1, 0))
    assert s21.coefficient((1, 1, 1)) == 2
    assert s21.coefficient((2, 1, 0)) == 1
    assert sum(c.at_one() for _, c in s21.items()) == 8


def test_schur_of_rational_weight():
    # s_{(1,-1)} in two variables is x1/x2 + 1 + x2/x1
    assert schur((1, -1)) == CharPoly(2, {(1, -1): 1, (0, 0): 1, (-1, 1): 1})


def test_schur_rejects_non_dominant():
    with pytest.raises(InvalidInputError):
        schur((0, 1))
    with pytest.raises(InvalidInputError):
        schur(())


def test_straighten():
    assert straighten((2, 0)) == (1, (2, 0))
    assert straighten((0, 1)) is None
    assert straighten((0, 2)) == (-1, (1, 1))


def test_demazure_E_agrees_with_straightening():
    f = CharPoly(2, {(0, 2): QPoly.q(), (2, 0): 1})
    expanded = demazure_E_schur(f)
    assert expanded == {(1, 1): -QPoly.q(), (2, 0): QPoly.one()}
    assert schur_expand(demazure_E(f)) == expanded


def test_antisymmetrize_of_symmetric_is_zero():
    f = CharPoly(2, {(1, 1): 1})
    assert antisymmetrize(f).is_zero()


def test_schur_expand_rejects_non_symmetric():
    with pytest.raises(InternalArithmeticError):
        schur_expand(CharPoly.monomial((0, 1)))


def _dot(perm, beta):
    rho = gl_rho(len(beta))
    shifted = [b + r for b, r in zip(beta, rho)]
    return tuple(shifted[p] - r for p, r in zip(perm, rho))


@pytest.mark.parametrize("n", [2, 3])
def test_demazure_E_shifted_antisymmetry(n):
    for beta in product(range(-1, 3), repeat=n):
        base = demazure_E(CharPoly.monomial(beta))
        for perm in permutations(range(n)):
            moved = demazure_E(CharPoly.monomial(_dot(perm, beta)))
            assert moved == base * permutation_sign(perm), (beta, perm)


@pytest.mark.parametrize("n", [2, 3])
def test_demazure_E_matches_its_schur_expansion_on_monomials(n):
    for beta in product(range(-1, 3), repeat=n):
        f = CharPoly.monomial(beta)
        assert schur_sum(demazure_E_schur(f), n) == demazure_E(f), beta


def test_demazure_E_is_linear_over_symmetric_polynomials():
    symmetric = [schur((1, 0, 0)), schur((1, 1, 0)), schur((0, 0, -1)), schur((2, 1, 0))]
    for beta in product(range(-1, 2), repeat=3):
        f = CharPoly.monomial(beta, QPoly.q()) + CharPoly.monomial((0, 1, 0))
        for g in symmetric:
            assert demazure_E(f * g) == g * demazure_E(f), beta


def test_every_exported_name_resolves():
    import algebra
    assert [name for name in algebra.__all__ if not hasattr(algebra, name)] == []
