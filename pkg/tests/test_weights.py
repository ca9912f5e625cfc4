import pytest

from models import ClassicalType, Diamond, InvalidInputError
from weights import (
    conjugate,
    contains,
    decreasing_vectors,
    diamond_partitions,
    dominance_geq,
    dominates,
    doubled_rho,
    hat_pair,
    in_diamond_family,
    is_dominant,
    lusztig_weights,
    norms,
    pad,
    partitions_of,
    partitions_up_to,
    positive_roots,
    root_system,
    simple_root_coordinates,
    simple_roots,
    star,
    symmetric_group,
    weyl_group,
    weyl_order,
)


def _build_type(family, n):
    return ClassicalType(family=family, n=n)


# ================================================================
# Roots
# ================================================================

@pytest.mark.parametrize("family,n,count", [("A", 3, 3), ("B", 2, 4), ("C", 3, 9), ("D", 4, 12)])
def test_positive_root_counts(family, n, count):
    assert len(positive_roots(_build_type(family, n))) == count


def test_simple_roots_of_c2_and_d3():
    assert simple_roots(_build_type("C", 2)) == ((1, -1), (0, 2))
    assert simple_roots(_build_type("D", 3)) == ((1, -1, 0), (0, 1, -1), (0, 1, 1))


def test_doubled_rho():
    assert doubled_rho(_build_type("A", 3)) == (4, 2, 0)
    assert doubled_rho(_build_type("B", 2)) == (3, 1)
    assert doubled_rho(_build_type("C", 2)) == (4, 2)
    assert doubled_rho(_build_type("D", 3)) == (4, 2, 0)


def test_doubled_rho_is_sum_of_positive_roots():
    for family, n in [("B", 3), ("C", 3), ("D", 4)]:
        t = _build_type(family, n)
        total = tuple(sum(r[i] for r in positive_roots(t)) for i in range(n))
        assert total == doubled_rho(t)


def test_lusztig_weights_halve_only_short_b_roots():
    b2 = lusztig_weights(_build_type("B", 2))
    halves = dict(b2.weighted())
    assert halves[(1, 0)] == 1
    assert halves[(0, 1)] == 1
    assert halves[(1, 1)] == 2
    c2 = lusztig_weights(_build_type("C", 2))
    assert set(c2.l_half) == {2}
    assert root_system(_build_type("B", 2)).l_half == (2, 2, 2, 2)


def test_complement_of_a_roots():
    rs = root_system(_build_type("C", 2))
    assert rs.a_roots == ((1, -1),)
    assert {r for r, _ in rs.complement_of_a()} == {(1, 1), (2, 0), (0, 2)}


# ================================================================
# Lattice
# ================================================================

def test_norms_and_star():
    assert norms((2, 1, 1)) == (4, 3)
    assert star((3, 1, 0)) == (0, -1, -3)


def test_hat_pair_examples():
    # λ = ∅, μ = (1), m = 2: M = ⌈1 + 1/2⌉ = 2
    assert hat_pair((), (1,), 2) == ((2, 2), (2, 1), 2)
    # λ = (1,1), μ = (2,2,2), m = 3: M = ⌈2 + 2⌉ = 4
    assert hat_pair((1, 1), (2, 2, 2), 3) == ((4, 3, 3), (2, 2, 2), 4)
    lam_hat, mu_hat, big_m = hat_pair((1, 1), (2, 2, 2), 3, bump=1)
    assert big_m == 5 and lam_hat == (5, 4, 4)


def test_hat_pair_is_an_involution():
    for lam in partitions_up_to(4, 3):
        for mu in partitions_up_to(4, 3):
            lam_hat, mu_hat, big_m = hat_pair(lam, mu, 3)
            assert lam_hat == tuple(big_m + x for x in star(pad(lam, 3)))
            assert tuple(big_m + x for x in star(lam_hat)) == pad(lam, 3)
            assert tuple(big_m + x for x in star(mu_hat)) == pad(mu, 3)
            assert all(a >= b for a, b in zip(lam_hat, lam_hat[1:]))
            assert sum(mu_hat) - sum(lam_hat) == sum(lam) - sum(mu)


def test_hat_pair_rejects_too_many_parts():
    with pytest.raises(InvalidInputError):
        hat_pair((1, 1, 1), (1,), 2)


def test_simple_root_coordinates():
    c2 = _build_type("C", 2)
    assert simple_root_coordinates((1, 1), c2) == (1, 1)
    assert simple_root_coordinates((1, 0), c2) is None
    d4 = _build_type("D", 4)
    assert simple_root_coordinates((1, 1, 0, 0), d4) == (1, 2, 1, 1)
    assert simple_root_coordinates((1, 0, 0, 0), d4) is None


def test_dominance_by_type():
    assert dominance_geq((1, 1), (0, 0), _build_type("C", 2))
    assert not dominance_geq((1, 0), (0, 0), _build_type("C", 2))
    assert dominance_geq((1, 0), (0, 0), _build_type("B", 2))
    assert dominance_geq((2, 0, 0), (1, 1, 0), _build_type("A", 3))
    assert not dominance_geq((1, 1, 0), (2, 0, 0), _build_type("A", 3))


def test_is_dominant():
    assert is_dominant((1, 0, -1), _build_type("A", 3))
    assert not is_dominant((1, -1), _build_type("C", 2))
    assert is_dominant((1, 1, -1), _build_type("D", 3))
    assert not is_dominant((1, 0, -1), _build_type("D", 3))


# ================================================================
# Weyl groups
# ================================================================

@pytest.mark.parametrize("family,n", [("A", 3), ("B", 2), ("C", 3), ("D", 4)])
def test_weyl_group_orders(family, n):
    t = _build_type(family, n)
    elements = list(weyl_group(t))
    assert len(elements) == weyl_order(t)
    assert len({(w.perm, w.signs) for w in elements}) == len(elements)


def test_weyl_parity_sums_to_zero():
    assert sum(w.parity for w in weyl_group(_build_type("B", 3))) == 0
    assert sum(w.parity for w in symmetric_group(3)) == 0


@pytest.mark.parametrize("family,n", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3)])
def test_weyl_parity_counts_positive_roots_sent_negative(family, n):
    t = _build_type(family, n)
    positive = set(positive_roots(t))
    for w in weyl_group(t):
        images = [w.act(alpha) for alpha in positive]
        assert all(img in positive or tuple(-a for a in img) in positive for img in images)
        flipped = sum(1 for img in images if img not in positive)
        assert w.parity == (-1) ** flipped, (w.perm, w.signs)


def test_weyl_action():
    w = next(w for w in weyl_group(_build_type("C", 2)) if w.perm == (1, 0) and w.signs == (1, -1))
    assert w.act((3, 5)) == (-5, 3)
    assert w.parity == 1
    assert not w.is_permutation


# ================================================================
# Partitions
# ================================================================

def test_partitions_of():
    assert partitions_of(4, 2) == ((4,), (3, 1), (2, 2))
    assert partitions_of(0, 0) == ((),)
    assert len(partitions_of(5, 5)) == 7


def test_conjugate_and_dominance():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((2, 2), (3, 1))
    assert contains((3, 1), (2, 1))
    assert not contains((3,), (1, 1))


def test_diamond_families():
    assert in_diamond_family((), Diamond.EMPTY)
    assert not in_diamond_family((1,), Diamond.EMPTY)
    assert in_diamond_family((3, 1), Diamond.ONE)
    assert in_diamond_family((4, 2), Diamond.TWO)
    assert not in_diamond_family((2, 1, 1), Diamond.TWO)
    assert in_diamond_family((2, 1, 1), Diamond.ONE_ONE) is False
    assert in_diamond_family((2, 2, 1, 1), Diamond.ONE_ONE)
    assert diamond_partitions(4, 4, Diamond.ONE_ONE) == ((2, 2), (1, 1, 1, 1))


def test_decreasing_vectors():
    found = list(decreasing_vectors(2, (1, 1), -1, 0))
    assert found == [(1, -1), (0, 0)]
    assert list(decreasing_vectors(0, (), 0, 0)) == [()]
