"""Brute-force oracle for the zero-weight polynomial span.

The adjoint submodule R of U(g) generated by the raising-operator image of
the singular vector is saturated breadth-first under ad(e_i) and ad(f_i),
with one exact echelon basis per weight space (hash-consed monomial
columns, smallest-monomial pivots).  Its zero-weight space, pushed through
the highest-weight eigenvalue map, yields the polynomial span that cuts
out the classified highest weights; the explicit closed-form polynomials
are transcribed independently so membership can be cross-checked.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .liealg import LieAlgebra
from .rootsys import Root, Weight
from .uea import (
    UEA,
    CartanPolynomial,
    Monomial,
    UEAElement,
    falling,
    poly_echelon,
    poly_in_span,
    spans_equal,
)

DEFAULT_DIM_CEILING = 2000


class OracleCeilingExceeded(RuntimeError):
    """The requested adjoint module is larger than the configured ceiling."""


def singular_image(engine: UEA, n: int) -> UEAElement:
    """(-1/4 e_{eps_1}^2 + sum_j e_{eps_1-eps_j} e_{eps_1+eps_j})^n in U(g)."""
    l = engine.lie.rank

    def eroot(a: int, b: int = 0, sign: int = 0) -> Root:
        coords = [0] * l
        coords[a - 1] = 1
        if b:
            coords[b - 1] = sign
        return Root(coords)

    base = Fraction(-1, 4) * engine.e(eroot(1), 2)
    for j in range(2, l + 1):
        base = base + engine.multiply(
            engine.e(eroot(1, j, -1)), engine.e(eroot(1, j, 1))
        )
    return engine.power(base, n)


class _EchelonSpace:
    """Reduced echelon basis of one weight space, pivoting on the smallest
    monomial present (monomials compare as tuples)."""

    def __init__(self) -> None:
        self.pivots: dict[Monomial, dict[Monomial, Fraction]] = {}

    def reduce(self, terms: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        work = dict(terms)
        while work:
            lead = min(work)
            row = self.pivots.get(lead)
            if row is None:
                return work
            c = work[lead]
            for m, v in row.items():
                nv = work.get(m, Fraction(0)) - c * v
                if nv:
                    work[m] = nv
                elif m in work:
                    del work[m]
        return work

    def insert(self, terms: dict[Monomial, Fraction]) -> Optional[dict]:
        """Reduce and, if independent, add as a new normalized row."""
        work = self.reduce(terms)
        if not work:
            return None
        lead = min(work)
        inv = Fraction(1) / work[lead]
        row = {m: inv * c for m, c in work.items()}
        for other in self.pivots.values():
            c = other.get(lead)
            if c:
                for m, v in row.items():
                    nv = other.get(m, Fraction(0)) - c * v
                    if nv:
                        other[m] = nv
                    elif m in other:
                        del other[m]
        self.pivots[lead] = row
        return row

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def rows(self) -> list[dict[Monomial, Fraction]]:
        return [self.pivots[p] for p in sorted(self.pivots)]


class AdModuleBasis:
    """Echelonized basis of the adjoint module, grouped by finite weight."""

    def __init__(self, rank: int, n: int):
        self.rank = rank
        self.n = n
        self.spaces: dict[tuple[Fraction, ...], _EchelonSpace] = {}

    def space(self, eps: tuple[Fraction, ...]) -> _EchelonSpace:
        if eps not in self.spaces:
            self.spaces[eps] = _EchelonSpace()
        return self.spaces[eps]

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.spaces.values())

    @property
    def dim_zero(self) -> int:
        zero = (Fraction(0),) * self.rank
        return self.spaces[zero].dim if zero in self.spaces else 0

    def zero_weight_rows(self) -> list[dict[Monomial, Fraction]]:
        zero = (Fraction(0),) * self.rank
        if zero not in self.spaces:
            return []
        return self.spaces[zero].rows()


def generate_module(
    engine: UEA, n: int, ceiling: int = DEFAULT_DIM_CEILING
) -> AdModuleBasis:
    """Saturate {v} under ad of the Chevalley generators, v the singular image.

    The result must close up at exactly the Weyl dimension of the module
    with highest weight 2n eps_1; any mismatch signals a structure-constant
    bug and raises.
    """
    lie = engine.lie
    l = lie.rank
    target_mu = Weight([2 * n] + [0] * (l - 1))
    expected = lie.rootsys.weyl_dim(target_mu)
    if expected > ceiling:
        raise OracleCeilingExceeded(
            f"dim {expected} exceeds oracle ceiling {ceiling}"
        )
    basis = AdModuleBasis(l, n)
    v0 = singular_image(engine, n)
    gens = [engine.gen(lie.e(a)) for a in lie.rootsys.simple_roots]
    gens += [engine.gen(lie.f(a)) for a in lie.rootsys.simple_roots]

    def try_insert(vec: UEAElement) -> Optional[UEAElement]:
        w = engine.weight_of(vec)
        row = basis.space(w.eps).insert(vec.terms)
        if row is None:
            return None
        return UEAElement(engine, row)

    queue = [try_insert(v0)]
    while queue:
        v = queue.pop(0)
        if v is None:
            continue
        for g in gens:
            u = engine.ad(g, v)
            if u.is_zero():
                continue
            added = try_insert(u)
            if added is not None:
                queue.append(added)
                if basis.dim > expected:
                    raise RuntimeError(
                        f"adjoint module did not close at dimension {expected}"
                    )
    if basis.dim != expected:
        raise RuntimeError(
            f"adjoint module closed at {basis.dim}, expected {expected}"
        )
    return basis


def p0_basis(
    engine: UEA, n: int, ceiling: int = DEFAULT_DIM_CEILING
) -> list[CartanPolynomial]:
    """Canonical basis of the highest-weight polynomials of the zero-weight
    space, computed from the oracle module."""
    module = generate_module(engine, n, ceiling)
    polys = [
        engine.hw_polynomial(UEAElement(engine, row))
        for row in module.zero_weight_rows()
    ]
    return poly_echelon(polys)


# ---------------------------------------------------------------------------
# explicit closed-form polynomials
# ---------------------------------------------------------------------------


def _hroot_poly(lie: LieAlgebra, coords: list[int]) -> CartanPolynomial:
    engine_rank = lie.rank
    poly = CartanPolynomial(engine_rank, {})
    for i, c in lie.h_of_root(Root(coords)).items():
        poly = poly + c * CartanPolynomial.variable(engine_rank, i)
    return poly


def explicit_p(lie: LieAlgebra, i: int, n: int) -> CartanPolynomial:
    """The i-th classifying polynomial (1-based, 1 <= i <= l).

    For i < l:  h_i (h_i - 1) ... (h_i - n + 1) times the falling chain of
    h_{eps_i + eps_{i+1}} from shift -(l - i - 1/2) of length n.
    For i = l:  h_l (h_l - 1) ... (h_l - 2n + 1).
    """
    l = lie.rank
    if not 1 <= i <= l:
        raise ValueError("index out of range")
    if i == l:
        return falling(CartanPolynomial.variable(l, l), 2 * n)
    head = falling(CartanPolynomial.variable(l, i), n)
    coords = [0] * l
    coords[i - 1] = 1
    coords[i] = 1
    hsum = _hroot_poly(lie, coords)
    offset = Fraction(2 * (l - i) - 1, 2)   # l - i - 1/2
    tail = falling(hsum + offset, n)
    return head * tail


def explicit_q(lie: LieAlgebra, n: int) -> CartanPolynomial:
    """The short-root-direction polynomial: a sum over compositions of n.

    Each composition (k_1..k_l) contributes 1/(k_1! 4^{k_1}) times a falling
    chain of h_{eps_1} of length 2 k_1 starting at shift 2(n - k_1), times,
    for each j = 2..l, a falling chain of h_{eps_1 - eps_j} of length k_j
    starting at shift k_2 + ... + k_{j-1}.
    """
    l = lie.rank
    h_eps1 = _hroot_poly(lie, [1] + [0] * (l - 1))
    h_diff = []
    for j in range(2, l + 1):
        coords = [0] * l
        coords[0] = 1
        coords[j - 1] = -1
        h_diff.append(_hroot_poly(lie, coords))
    total = CartanPolynomial(l, {})
    for ks in _compositions_of(n, l):
        k1 = ks[0]
        coeff = Fraction(1, math.factorial(k1) * 4**k1)
        term = falling(h_eps1, 2 * k1, start=2 * (n - k1))
        for j in range(2, l + 1):
            kj = ks[j - 1]
            if kj:
                shift = sum(ks[1 : j - 1])
                term = term * falling(h_diff[j - 2], kj, start=shift)
        total = total + coeff * term
    return total


def _compositions_of(n: int, m: int):
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions_of(n - first, m - 1):
            yield (first,) + rest


def explicit_polys(lie: LieAlgebra, n: int) -> list[CartanPolynomial]:
    return [explicit_p(lie, i, n) for i in range(1, lie.rank + 1)]


def verify_membership(
    engine: UEA, n: int, ceiling: int = DEFAULT_DIM_CEILING
) -> bool:
    """All explicit polynomials (p_1..p_l and q) lie in the oracle span."""
    oracle = p0_basis(engine, n, ceiling)
    for p in explicit_polys(engine.lie, n) + [explicit_q(engine.lie, n)]:
        if not poly_in_span(p, oracle):
            return False
    return True


def oracle_equals_explicit_span(
    engine: UEA, n: int, ceiling: int = DEFAULT_DIM_CEILING
) -> bool:
    """Does the oracle span coincide with span(p_1..p_l)?  (True for n = 1.)"""
    oracle = p0_basis(engine, n, ceiling)
    return spans_equal(oracle, explicit_polys(engine.lie, n))
