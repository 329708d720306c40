"""Root-system arithmetic for the simple Lie algebra of type B_l.

Weights and roots live in the rank-l epsilon-coordinate space with exact
Fraction entries.  The invariant form is the standard one normalized so
that the highest root has squared length 2, which makes the epsilon basis
orthonormal: (eps_i, eps_j) = delta_ij.  Short roots (the eps_i) then have
squared length 1 and long roots (eps_i +- eps_j) squared length 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


class Weight:
    """A weight of B_l, stored in exact epsilon-coordinates."""

    __slots__ = ("eps",)

    def __init__(self, coords: Iterable[Rat]):
        self.eps = tuple(Fraction(c) for c in coords)

    @property
    def rank(self) -> int:
        return len(self.eps)

    def fundamental(self) -> tuple[Fraction, ...]:
        """Values on the simple coroots h_1, ..., h_l.

        For B_l these are mu_i - mu_{i+1} for i < l and 2*mu_l for i = l.
        """
        mu = self.eps
        l = len(mu)
        vals = [mu[i] - mu[i + 1] for i in range(l - 1)]
        vals.append(2 * mu[l - 1])
        return tuple(vals)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.eps)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(a + b for a, b in zip(self.eps, other.eps))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(a - b for a, b in zip(self.eps, other.eps))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.eps)

    def __rmul__(self, scalar: Rat) -> "Weight":
        s = Fraction(scalar)
        return Weight(s * a for a in self.eps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weight) and self.eps == other.eps

    def __hash__(self) -> int:
        return hash(self.eps)

    def __repr__(self) -> str:
        return f"Weight({', '.join(str(c) for c in self.eps)})"


class Root(Weight):
    """A root of B_l: one nonzero entry +-1, or two nonzero entries +-1.

    The squared length is 1 (short) or 2 (long) under the normalized form.
    """

    __slots__ = ()

    def __init__(self, coords: Iterable[Rat]):
        super().__init__(coords)
        support = [c for c in self.eps if c != 0]
        if not (support and all(abs(c) == 1 for c in support) and len(support) <= 2):
            raise ValueError(f"not a B_l root: {tuple(self.eps)}")

    def is_short(self) -> bool:
        return inner(self, self) == 1

    def __repr__(self) -> str:
        return f"Root({', '.join(str(c) for c in self.eps)})"


def _check_rank(a: Weight, b: Weight) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def inner(a: Weight, b: Weight) -> Fraction:
    """Normalized invariant form on weight space; (eps_i, eps_j) = delta_ij."""
    _check_rank(a, b)
    return sum((x * y for x, y in zip(a.eps, b.eps)), Fraction(0))


def coroot_pairing(mu: Weight, alpha: Weight) -> Fraction:
    """<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha)."""
    norm = inner(alpha, alpha)
    if norm == 0:
        raise ValueError("zero root has no coroot")
    return 2 * inner(mu, alpha) / norm


def weight_from_fundamental(coords: Sequence[Rat]) -> Weight:
    """Inverse of Weight.fundamental: mu_l = c_l/2, mu_i = c_i + mu_{i+1}."""
    c = [Fraction(x) for x in coords]
    l = len(c)
    if l < 2:
        raise ValueError("rank must be at least 2")
    mu = [Fraction(0)] * l
    mu[l - 1] = c[l - 1] / 2
    for i in range(l - 2, -1, -1):
        mu[i] = c[i] + mu[i + 1]
    return Weight(mu)


class RootSystem:
    """The B_l root system with its positive roots and Weyl machinery.

    Positive roots are {eps_i} with {eps_i - eps_j} and {eps_i + eps_j}
    for i < j; there are l^2 of them.  They are enumerated in lexicographic
    order on epsilon-coordinates, which fixes a reproducible basis order
    for everything built on top.
    """

    def __init__(self, rank: int):
        if rank < 2:
            raise ValueError("rank must be at least 2 for type B")
        self.rank = rank
        roots: list[Root] = []
        for i in range(rank):
            coords = [0] * rank
            coords[i] = 1
            roots.append(Root(coords))
            for j in range(i + 1, rank):
                for sign in (-1, 1):
                    coords = [0] * rank
                    coords[i] = 1
                    coords[j] = sign
                    roots.append(Root(coords))
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(roots, key=lambda r: r.eps)
        )
        simple = []
        for i in range(rank - 1):
            coords = [0] * rank
            coords[i] = 1
            coords[i + 1] = -1
            simple.append(Root(coords))
        last = [0] * rank
        last[rank - 1] = 1
        simple.append(Root(last))
        self.simple_roots: tuple[Root, ...] = tuple(simple)
        theta = [0] * rank
        theta[0] = 1
        theta[1] = 1
        self.highest_root = Root(theta)
        # rho-bar = sum of fundamental weights = (l - i + 1/2) eps_i
        self.weyl_vector = Weight(
            Fraction(2 * (rank - i) + 1, 2) for i in range(1, rank + 1)
        )

    def fundamental_weight(self, i: int) -> Weight:
        """omega_i (1-based): eps_1 + ... + eps_i, halved for i = l."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"fundamental weight index {i} out of range")
        if i < self.rank:
            return Weight([1] * i + [0] * (self.rank - i))
        return Weight([Fraction(1, 2)] * self.rank)

    def is_dominant_integral(self, mu: Weight) -> bool:
        """mu is in P_+: nonnegative integer value on every simple coroot."""
        for alpha in self.simple_roots:
            v = coroot_pairing(mu, alpha)
            if v.denominator != 1 or v < 0:
                return False
        return True

    def weyl_dim(self, mu: Weight) -> int:
        """Dimension of the irreducible module with highest weight mu in P_+.

        Product over positive roots of (mu + rho, alpha) / (rho, alpha).
        """
        if not self.is_dominant_integral(mu):
            raise ValueError(f"weight {mu} is not dominant integral")
        shifted = mu + self.weyl_vector
        num = Fraction(1)
        for alpha in self.positive_roots:
            num *= inner(shifted, alpha) / inner(self.weyl_vector, alpha)
        if num.denominator != 1 or num <= 0:
            raise ArithmeticError(f"Weyl dimension came out as {num}")
        return int(num)


def build_root_system(rank: int) -> RootSystem:
    """Construct the B_l root system; rank below 2 is rejected."""
    return RootSystem(rank)
