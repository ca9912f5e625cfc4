import pytest

from algebra import CharPoly, QPoly
from lusztig import (
    PartitionFunctionCache,
    genfun_check,
    gl_coefficient,
    kl_poly,
    littlewood_expansion,
    partition_function,
    stable_kl,
    translate,
)
from lusztig.genfun import duality_pairs, verify_duality, verify_littlewood
from lusztig.verify import (
    negative_control,
    rank_for,
    theorem6_sides,
    verify_corollary7,
    verify_multiplicity,
    verify_prop5,
    verify_theorem6,
    verify_translation,
)
from models import ClassicalType, Diamond, InvalidInputError, Partition
from weights import lusztig_weights, root_system


def _p(*parts):
    return Partition(parts=parts)


def _t(family, n):
    return ClassicalType(family=family, n=n)


# ================================================================
# Partition function
# ================================================================

def test_partition_function_type_c():
    rs = root_system(_t("C", 2))
    assert partition_function((1, 1), rs) == QPoly({2: 1, 4: 1})
    assert partition_function((0, 0), rs) == QPoly.one()
    assert partition_function((-1, 1), rs).is_zero()


def test_partition_function_plain_count():
    rs = root_system(_t("C", 2), uniform_half=0)
    assert partition_function((1, 1), rs) == QPoly({0: 2})


def test_partition_function_half_weights_on_short_roots():
    rs = lusztig_weights(_t("B", 2))
    # ε1 alone, or (ε1 − ε2) + ε2
    assert partition_function((1, 0), rs) == QPoly({1: 1, 3: 1})


def test_partition_function_type_a():
    assert partition_function((1, -1), root_system(_t("A", 2))) == QPoly.q()


def test_partition_function_cache_checks_length():
    cache = PartitionFunctionCache(root_system(_t("C", 2)))
    with pytest.raises(InvalidInputError):
        cache((1, 1, 0))
    cache((2, 0))
    assert len(cache) > 0


# ================================================================
# KL and ∞KL
# ================================================================

def test_kl_type_c_small():
    t = _t("C", 2)
    assert kl_poly((1, 1), (0, 0), t) == QPoly.monomial(4)
    assert kl_poly((2, 0), (0, 0), t).at_one() == 2
    assert kl_poly((1, 1), (1, 1), t) == QPoly.one()


def test_kl_vanishes_off_the_dominance_order():
    t = _t("C", 2)
    assert kl_poly((1, 0), (0, 0), t).is_zero()
    assert kl_poly((0, 0), (1, 1), t).is_zero()


def test_kl_rejects_bad_weights():
    with pytest.raises(InvalidInputError):
        kl_poly((0, 1), (0, 0), _t("C", 2))
    with pytest.raises(InvalidInputError):
        kl_poly((1, 1, 0), (0, 0), _t("C", 2))
    with pytest.raises(InvalidInputError):
        stable_kl((0, 1), (0, 0), _t("A", 2))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_stable_kl_rank_one(r):
    assert stable_kl((r, -r), (0, 0), _t("A", 2)) == QPoly.monomial(2 * r)


def test_stable_kl_accepts_negative_entries():
    t = _t("C", 2)
    assert stable_kl((0, -1), (-1, -1), t) == stable_kl((1, 0), (0, 0), t)


def test_translate():
    assert translate((2, 0, -1), 3) == (5, 3, 2)


@pytest.mark.parametrize("lam,mu,t", [
    ((1, 0, -1), (0, 0, 0), _t("A", 3)),
    ((2, 0), (1, 1), _t("C", 2)),
    ((1, 1), (0, 0), _t("B", 2)),
])
def test_translation_invariance(lam, mu, t):
    report = verify_translation(lam, mu, t)
    assert report.passed, report.detail


@pytest.mark.parametrize("lam,mu,t", [((2, 0), (1, 1), _t("C", 2)), ((1, 1), (0, 0), _t("C", 2)),
                                      ((2, 0, 0), (1, 1, 0), _t("A", 3))])
def test_translated_kl_stabilizes(lam, mu, t):
    report = verify_prop5(lam, mu, t)
    assert report.passed, report.detail


@pytest.mark.parametrize("lam,mu", [((1, 1), (0, 0)), ((2, 0), (0, 0)), ((1, 0), (1, 0)), ((2, 2), (1, 1))])
def test_kl_at_one_is_a_weight_multiplicity(lam, mu):
    report = verify_multiplicity(lam, mu)
    assert report.passed, report.detail


# ================================================================
# K-polynomials through ∞KL
# ================================================================

def test_rank_for():
    assert rank_for(Diamond.ONE_ONE, 2) == 4
    assert rank_for(Diamond.EMPTY, 4) == 4
    assert rank_for(Diamond.TWO, 1, 5) == 5
    with pytest.raises(InvalidInputError):
        rank_for(Diamond.ONE, 3, 2)


def test_theorem6_sides_two_boxes():
    left, right = theorem6_sides(_p(), _p(1, 1), Diamond.ONE_ONE, 4)
    assert left == right == QPoly.monomial(4)


@pytest.mark.parametrize("lam,mu,diamond,n", [
    ((), (1, 1), Diamond.ONE_ONE, 4),
    ((1, 1), (1, 1), Diamond.ONE_ONE, 4),
    ((), (1,), Diamond.ONE, 2),
    ((), (2,), Diamond.TWO, 2),
    ((2, 1), (1, 1, 1), Diamond.EMPTY, None),
])
def test_theorem6_cells(lam, mu, diamond, n):
    report = verify_theorem6(_p(*lam), _p(*mu), diamond, n)
    assert report.passed, report.detail


def test_half_weight_is_needed_on_short_roots():
    report = negative_control(_p(), _p(1), 2)
    assert report.passed, report.detail
    assert report.x == "q^{1/2}"
    assert report.k == "1"


@pytest.mark.parametrize("lam,mu,diamond", [((), (1, 1), Diamond.ONE_ONE), ((1,), (1,), Diamond.EMPTY),
                                            ((2,), (1, 1), Diamond.EMPTY)])
def test_corollary7_cells(lam, mu, diamond):
    report = verify_corollary7(_p(*lam), _p(*mu), diamond)
    assert report.passed, report.detail


# ================================================================
# Generating functions
# ================================================================

@pytest.mark.parametrize("diamond,n", [(Diamond.EMPTY, 2), (Diamond.ONE, 2), (Diamond.TWO, 2), (Diamond.ONE_ONE, 3)])
def test_littlewood_identities(diamond, n):
    report = verify_littlewood(diamond, n, 4)
    assert report.passed, report.detail


def test_littlewood_expansion_of_empty_kind_is_one():
    assert littlewood_expansion(Diamond.EMPTY, 2, 3) == CharPoly.one(2)


def test_gl_coefficient():
    assert gl_coefficient((1, 0), (1,), (0, 0)) == 1
    assert gl_coefficient((1, -1), (1,), (0, -1)) == 1
    assert gl_coefficient((2, 0), (1, 1), (0, 0)) == 0


@pytest.mark.parametrize("mu,t", [((0, 0), _t("A", 2)), ((0, 0), _t("C", 2)), ((0, 0), _t("B", 2))])
def test_generating_function_window(mu, t):
    report = genfun_check(mu, t, degree_window=2)
    assert report.passed, report.detail


def test_generating_function_needs_positive_weights():
    t = _t("C", 2)
    with pytest.raises(InvalidInputError):
        genfun_check((0, 0), t, root_system(t, uniform_half=0), degree_window=1)


def test_star_duality():
    assert len(list(duality_pairs(2, 1))) == 7
    for lam, mu in duality_pairs(3, 1):
        report = verify_duality(lam, mu)
        assert report.passed, report.detail
