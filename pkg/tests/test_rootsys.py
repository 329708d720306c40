"""Root system of B_l: enumeration, the normalized form, coroot pairings,
dominance and the Weyl dimension formula."""

import random
from fractions import Fraction

import pytest

from blvoa.rootsys import (
    Root,
    Weight,
    build_root_system,
    coroot_pairing,
    inner,
    weight_from_fundamental,
)


def eps(*coords):
    return Weight(coords)


def test_positive_roots_rank2():
    rs = build_root_system(2)
    got = {r.eps for r in rs.positive_roots}
    want = {
        eps(1, 0).eps,
        eps(0, 1).eps,
        eps(1, -1).eps,
        eps(1, 1).eps,
    }
    assert got == want


def test_positive_root_count_is_rank_squared():
    for l in range(2, 7):
        rs = build_root_system(l)
        assert len(rs.positive_roots) == l * l
        assert len(set(rs.positive_roots)) == l * l


def test_highest_root_and_simple_decomposition():
    rs = build_root_system(2)
    assert rs.highest_root == eps(1, 1)
    a1, a2 = rs.simple_roots
    assert rs.highest_root == a1 + 2 * a2
    for l in (3, 4):
        rsl = build_root_system(l)
        total = rsl.simple_roots[0]
        for a in rsl.simple_roots[1:]:
            total = total + 2 * a
        assert rsl.highest_root == total


def test_positive_roots_are_nonneg_simple_combinations():
    rs = build_root_system(3)
    # express each positive root in simple-root coordinates by peeling eps
    for beta in rs.positive_roots:
        # alpha_i = eps_i - eps_{i+1} (i<l), alpha_l = eps_l: coefficients
        # are partial sums c_i = beta_1 + ... + beta_i
        run = Fraction(0)
        for i, b in enumerate(beta.eps):
            run += b
            assert run >= 0 and run.denominator == 1


def test_rank_below_two_rejected():
    with pytest.raises(ValueError):
        build_root_system(1)


def test_inner_normalization():
    rs = build_root_system(2)
    theta = rs.highest_root
    assert inner(theta, theta) == 2
    assert inner(eps(1, 0), eps(0, 1)) == 0
    assert inner(eps(1, 0), eps(1, 0)) == 1


def test_inner_bilinear_symmetric():
    random.seed(20240811)
    for _ in range(25):
        a = Weight([Fraction(random.randint(-5, 5), random.randint(1, 4)) for _ in range(3)])
        b = Weight([Fraction(random.randint(-5, 5), random.randint(1, 4)) for _ in range(3)])
        c = Weight([Fraction(random.randint(-5, 5), random.randint(1, 4)) for _ in range(3)])
        s = Fraction(random.randint(-3, 3))
        assert inner(a, b) == inner(b, a)
        assert inner(a + s * b, c) == inner(a, c) + s * inner(b, c)


def test_inner_rank_mismatch():
    with pytest.raises(ValueError):
        inner(eps(1, 0), eps(1, 0, 0))


def test_inner_permutation_symmetry():
    # permuting epsilon slots of both arguments preserves the form
    random.seed(7)
    rs = build_root_system(4)
    roots = list(rs.positive_roots)
    for _ in range(30):
        a, b = random.choice(roots), random.choice(roots)
        perm = list(range(4))
        random.shuffle(perm)
        ap = Weight([a.eps[p] for p in perm])
        bp = Weight([b.eps[p] for p in perm])
        assert inner(ap, bp) == inner(a, b)


def test_coroot_pairing_examples():
    rs = build_root_system(2)
    w1 = rs.fundamental_weight(1)
    a1, a2 = rs.simple_roots
    assert coroot_pairing(w1, a1) == 1
    assert coroot_pairing(w1, a2) == 0
    assert coroot_pairing(2 * w1, eps(1, 0)) == 4


def test_coroot_pairing_zero_root_rejected():
    with pytest.raises(ValueError):
        coroot_pairing(eps(1, 0), Weight([0, 0]))


def test_fundamental_weights_dual_to_coroots():
    for l in (2, 3, 4):
        rs = build_root_system(l)
        for i in range(1, l + 1):
            wi = rs.fundamental_weight(i)
            for j, alpha in enumerate(rs.simple_roots, start=1):
                assert coroot_pairing(wi, alpha) == (1 if i == j else 0)


def test_fundamental_coordinates_round_trip():
    random.seed(3)
    for l in (2, 3, 5):
        for _ in range(20):
            c = [Fraction(random.randint(-9, 9), random.randint(1, 6)) for _ in range(l)]
            mu = weight_from_fundamental(c)
            assert list(mu.fundamental()) == c
            rs = build_root_system(l)
            for i, alpha in enumerate(rs.simple_roots):
                assert coroot_pairing(mu, alpha) == c[i]


def test_dominance():
    rs = build_root_system(2)
    assert rs.is_dominant_integral(2 * rs.fundamental_weight(1))
    assert not rs.is_dominant_integral(Fraction(-1, 2) * rs.fundamental_weight(1))
    assert rs.is_dominant_integral(rs.fundamental_weight(2))
    assert not rs.is_dominant_integral(Fraction(1, 3) * rs.fundamental_weight(1))


def test_weyl_dim_values():
    rs = build_root_system(2)
    assert rs.weyl_dim(2 * rs.fundamental_weight(1)) == 14
    for l in range(2, 7):
        rsl = build_root_system(l)
        assert rsl.weyl_dim(Weight([0] * l)) == 1
        assert rsl.weyl_dim(rsl.fundamental_weight(1)) == 2 * l + 1
        assert rsl.weyl_dim(2 * rsl.fundamental_weight(1)) == 2 * l * l + 3 * l


def test_weyl_dim_spin_representation():
    # the short fundamental weight carries the 2^l-dimensional module
    for l in (2, 3, 4):
        rs = build_root_system(l)
        assert rs.weyl_dim(rs.fundamental_weight(l)) == 2**l


def test_weyl_dim_rejects_non_dominant():
    rs = build_root_system(2)
    with pytest.raises(ValueError):
        rs.weyl_dim(Fraction(-1, 2) * rs.fundamental_weight(1))


def test_root_validation():
    Root([1, 0, 0])
    Root([1, -1, 0])
    with pytest.raises(ValueError):
        Root([2, 0])
    with pytest.raises(ValueError):
        Root([1, 1, 1])
    with pytest.raises(ValueError):
        Root([0, 0])
