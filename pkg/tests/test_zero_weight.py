"""The adjoint-module oracle: dimensions, the zero-weight polynomial span,
and the explicit closed-form polynomials."""

from fractions import Fraction

import pytest

from conftest import get_engine, get_lie

from blvoa.rootsys import Root, Weight, weight_from_fundamental
from blvoa.uea import CartanPolynomial, poly_in_span, spans_equal
from blvoa.zero_weight import (
    OracleCeilingExceeded,
    explicit_p,
    explicit_polys,
    explicit_q,
    generate_module,
    oracle_equals_explicit_span,
    p0_basis,
    singular_image,
    verify_membership,
)


def test_singular_image_weight():
    eng = get_engine(2)
    v = singular_image(eng, 1)
    assert eng.weight_of(v) == Weight([2, 0])
    assert singular_image(eng, 0) == eng.one()


@pytest.mark.parametrize(
    "l,n,dim,dim0",
    [
        (2, 1, 14, 2),
        (3, 1, 27, 3),
        # dim0 = 3 here is the oracle's ground truth: the zero-weight
        # multiplicity of the highest-weight 4 eps_1 module of B_2
        (2, 2, 55, 3),
    ],
)
def test_generate_module_dimensions(l, n, dim, dim0):
    eng = get_engine(l)
    module = generate_module(eng, n)
    assert module.dim == dim
    assert module.dim == eng.lie.rootsys.weyl_dim(
        Weight([2 * n] + [0] * (l - 1))
    )
    assert module.dim_zero == dim0


def test_generate_module_rank4():
    eng = get_engine(4)
    module = generate_module(eng, 1)
    assert module.dim == 2 * 16 + 12
    assert module.dim_zero <= 4


def test_oracle_ceiling():
    eng = get_engine(2)
    with pytest.raises(OracleCeilingExceeded):
        generate_module(eng, 1, ceiling=5)


def test_p0_basis_rank2():
    eng = get_engine(2)
    basis = p0_basis(eng, 1)
    assert len(basis) == 2
    h1 = CartanPolynomial.variable(2, 1)
    h2 = CartanPolynomial.variable(2, 2)
    p1 = h1 * (h1 + h2 + Fraction(1, 2))
    p2 = h2 * (h2 - 1)
    assert spans_equal(basis, [p1, p2])


def test_explicit_p_examples():
    lie2 = get_lie(2)
    h1 = CartanPolynomial.variable(2, 1)
    h2 = CartanPolynomial.variable(2, 2)
    assert explicit_p(lie2, 2, 1) == h2 * (h2 - 1)
    assert explicit_p(lie2, 1, 1) == h1 * (h1 + h2 + Fraction(1, 2))
    lie3 = get_lie(3)
    h3_2 = CartanPolynomial.variable(3, 2)
    h3_3 = CartanPolynomial.variable(3, 3)
    # p_2 at l=3, n=1: h_2 (h_2 + h_3 + 1/2) since h_{eps_2+eps_3} = h_2+h_3
    assert explicit_p(lie3, 2, 1) == h3_2 * (h3_2 + h3_3 + Fraction(1, 2))
    with pytest.raises(ValueError):
        explicit_p(lie2, 3, 1)


def test_explicit_p_rank2_n2():
    lie = get_lie(2)
    h1 = CartanPolynomial.variable(2, 1)
    h2 = CartanPolynomial.variable(2, 2)
    chain = h1 + h2   # h_{eps_1 + eps_2} at rank 2
    want = (
        h1
        * (h1 - 1)
        * (chain + Fraction(1, 2))
        * (chain - Fraction(1, 2))
    )
    assert explicit_p(lie, 1, 2) == want
    assert explicit_p(lie, 2, 2) == h2 * (h2 - 1) * (h2 - 2) * (h2 - 3)


def test_explicit_q_rank2():
    lie = get_lie(2)
    h1 = CartanPolynomial.variable(2, 1)
    h2 = CartanPolynomial.variable(2, 2)
    h_eps1 = 2 * h1 + h2
    want = Fraction(1, 4) * h_eps1 * (h_eps1 - 1) + h1
    assert explicit_q(lie, 1) == want


def test_explicit_q_vanishes_on_classified_weights():
    lie = get_lie(2)
    q = explicit_q(lie, 1)
    for coords in ([0, 0], [0, 1], [Fraction(-1, 2), 0], [Fraction(-3, 2), 1]):
        assert q.evaluate_weight(weight_from_fundamental(coords)) == 0


@pytest.mark.parametrize("l,n", [(2, 1), (3, 1), (2, 2)])
def test_membership(l, n):
    assert verify_membership(get_engine(l), n)


@pytest.mark.parametrize("l", [2, 3])
def test_span_equality_at_n1(l):
    eng = get_engine(l)
    assert oracle_equals_explicit_span(eng, 1)
    # both inclusions, spelled out
    oracle = p0_basis(eng, 1)
    explicit = explicit_polys(eng.lie, 1)
    from blvoa.uea import poly_echelon

    eo = poly_echelon(explicit)
    assert all(poly_in_span(p, eo) for p in oracle)
    oo = poly_echelon(oracle)
    assert all(poly_in_span(p, oo) for p in explicit)


def test_oracle_polys_vanish_at_origin():
    for l in (2, 3):
        basis = p0_basis(get_engine(l), 1)
        zero = Weight([0] * l)
        assert all(p.evaluate_weight(zero) == 0 for p in basis)


def test_span_comparison_at_n2_is_reported_not_assumed():
    # computed fact at (l, n) = (2, 2): the oracle span is 3-dimensional,
    # strictly larger than span{p_1, p_2}, and adding q closes the gap
    eng = get_engine(2)
    oracle = p0_basis(eng, 2)
    assert len(oracle) == 3
    ps = explicit_polys(eng.lie, 2)
    assert not spans_equal(oracle, ps)
    assert spans_equal(oracle, ps + [explicit_q(eng.lie, 2)])
