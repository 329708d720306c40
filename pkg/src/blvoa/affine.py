"""The affinization of so(2l+1): vacuum modules, singular vectors and
admissible weights.

The generalized Verma module at level k is represented only as far as the
computations need it: vectors are finite combinations of normal-ordered
creation words applied to the vacuum, with annihilation operators commuted
rightward through the bracket

    [x(m), y(n)] = [x, y](m+n) + m delta_{m+n,0} (x, y) c,

the central element acting as the scalar level.  Admissibility of a weight
k Lambda_0 + mu is certified by a finite scan over real coroots together
with a monotonicity bound that settles all larger loop modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .liealg import LieAlgebra
from .rootsys import Root, RootSystem, Weight, inner
from .uea import MIXED, UEA, TermGuardExceeded, UEAElement

Rat = Union[int, Fraction]
CWord = tuple[tuple[int, int], ...]   # ((mode, basis index), ...) sorted, modes < 0


def dual_coxeter_number(rank: int) -> int:
    """h^vee = 2l - 1 for type B_l."""
    return 2 * rank - 1


def affine_bracket(
    lie: LieAlgebra, xm: tuple[int, int], yn: tuple[int, int]
) -> tuple[dict[tuple[int, int], Fraction], Fraction]:
    """[x(m), y(n)] as (loop terms {(index, m+n): coeff}, central coefficient)."""
    xi, m = xm
    yi, n = yn
    loop = {(k, m + n): c for k, c in lie.bracket(xi, yi).items()}
    central = Fraction(0)
    if m + n == 0:
        central = m * lie.invariant_form(lie.basis[xi], lie.basis[yi])
    return loop, central


class VermaVector:
    """Element of N(k, 0): rational combination of creation words times 1."""

    __slots__ = ("module", "terms")

    def __init__(self, module: "VacuumModule", terms: dict[CWord, Fraction]):
        self.module = module
        self.terms = {w: c for w, c in terms.items() if c != 0}

    @property
    def level(self) -> Fraction:
        return self.module.level

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return VermaVector(self.module, out)

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) - c
        return VermaVector(self.module, out)

    def __rmul__(self, scalar: Rat) -> "VermaVector":
        s = Fraction(scalar)
        return VermaVector(self.module, {w: s * c for w, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VermaVector)
            and self.terms == other.terms
            and self.module.level == other.module.level
        )

    def __hash__(self):
        return hash((self.module.level, frozenset(self.terms.items())))

    def finite_weight(self):
        """Common finite ad-h weight of all words, or "mixed"."""
        l = self.module.lie.rank
        found: Weight | None = None
        for word in self.terms:
            w = Weight([0] * l)
            for _, idx in word:
                w = w + self.module.lie.basis[idx].weight
            if found is None:
                found = w
            elif found != w:
                return MIXED
        return found if found is not None else Weight([0] * l)

    def mode_degree(self):
        """Common total mode (delta-degree) of all words, or "mixed"."""
        found: int | None = None
        for word in self.terms:
            d = sum(m for m, _ in word)
            if found is None:
                found = d
            elif found != d:
                return MIXED
        return found if found is not None else 0

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        lie = self.module.lie
        bits = []
        for word in sorted(self.terms):
            c = self.terms[word]
            w = "".join(f"{lie.basis[i]}({m})" for m, i in word) or "1"
            bits.append(f"{c}*{w}.1" if word else f"{c}*1")
        return " + ".join(bits)


class VacuumModule:
    """N(k, 0) machinery at a fixed rational level k."""

    def __init__(self, lie: LieAlgebra, level: Rat, term_guard: int = 5_000_000):
        self.lie = lie
        self.level = Fraction(level)
        self.term_guard = term_guard
        self._apply_cache: dict[tuple[int, int, CWord], dict[CWord, Fraction]] = {}

    def vacuum(self) -> VermaVector:
        return VermaVector(self, {(): Fraction(1)})

    def zero(self) -> VermaVector:
        return VermaVector(self, {})

    def element(self, terms: dict[CWord, Rat]) -> VermaVector:
        return VermaVector(self, {w: Fraction(c) for w, c in terms.items()})

    def apply_central(self, v: VermaVector) -> VermaVector:
        return self.level * v

    def apply(self, idx: int, mode: int, v: VermaVector) -> VermaVector:
        """x_idx(mode) . v, normal-ordered."""
        out: dict[CWord, Fraction] = {}
        budget = self.term_guard
        for word, c in v.terms.items():
            for w2, c2 in self._apply_letter(idx, mode, word).items():
                val = out.get(w2, Fraction(0)) + c * c2
                if val:
                    out[w2] = val
                elif w2 in out:
                    del out[w2]
                if len(out) > budget:
                    raise TermGuardExceeded("vacuum-module term guard exceeded")
        return VermaVector(self, out)

    def _apply_letter(
        self, idx: int, mode: int, word: CWord
    ) -> dict[CWord, Fraction]:
        if not word:
            if mode < 0:
                return {((mode, idx),): Fraction(1)}
            return {}
        key = (idx, mode, word)
        cached = self._apply_cache.get(key)
        if cached is not None:
            return cached
        m0, i0 = word[0]
        if mode < 0 and (mode, idx) <= (m0, i0):
            result = {((mode, idx),) + word: Fraction(1)}
            self._apply_cache[key] = result
            return result
        rest = word[1:]
        out: dict[CWord, Fraction] = {}

        def accumulate(w: CWord, c: Fraction) -> None:
            v = out.get(w, Fraction(0)) + c
            if v:
                out[w] = v
            elif w in out:
                del out[w]

        # head * (x(mode) . rest)
        for w2, c2 in self._apply_letter(idx, mode, rest).items():
            for w3, c3 in self._apply_letter(i0, m0, w2).items():
                accumulate(w3, c2 * c3)
        # [x(mode), head] . rest
        loop, central = affine_bracket(self.lie, (idx, mode), (i0, m0))
        for (k_idx, k_mode), c in loop.items():
            for w2, c2 in self._apply_letter(k_idx, k_mode, rest).items():
                accumulate(w2, c * c2)
        if central:
            accumulate(rest, central * self.level)
        self._apply_cache[key] = out
        return out

    def mul_creation(
        self, creation: dict[CWord, Rat], v: VermaVector
    ) -> VermaVector:
        """Left-multiply by a polynomial in creation operators."""
        out = self.zero()
        for word, c in creation.items():
            piece = v
            for mode, idx in reversed(word):
                if mode >= 0:
                    raise ValueError("creation words need negative modes")
                piece = self.apply(idx, mode, piece)
            out = out + Fraction(c) * piece
        return out


# ---------------------------------------------------------------------------
# the singular vector and its image in U(g)
# ---------------------------------------------------------------------------


def quadratic_creation_term(lie: LieAlgebra) -> dict[CWord, Fraction]:
    """-1/4 e_{eps_1}(-1)^2 + sum_j e_{eps_1-eps_j}(-1) e_{eps_1+eps_j}(-1).

    All factors commute, so the words need no correction terms.
    """
    l = lie.rank
    out: dict[CWord, Fraction] = {}

    def eidx(a: int, b: int = 0, sign: int = 0) -> int:
        coords = [0] * l
        coords[a - 1] = 1
        if b:
            coords[b - 1] = sign
        return lie.e(Root(coords)).index

    i1 = eidx(1)
    out[((-1, i1), (-1, i1))] = Fraction(-1, 4)
    for j in range(2, l + 1):
        pair = tuple(sorted([(-1, eidx(1, j, -1)), (-1, eidx(1, j, 1))]))
        out[pair] = out.get(pair, Fraction(0)) + 1
    return out


def build_singular_candidate(
    lie: LieAlgebra, n: int, level: Optional[Rat] = None
) -> VermaVector:
    """The candidate null vector at level n - l + 1/2 (or an override)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = Fraction(level) if level is not None else Fraction(2 * n - 2 * lie.rank + 1, 2)
    module = VacuumModule(lie, k)
    v = module.vacuum()
    u = quadratic_creation_term(lie)
    for _ in range(n):
        v = module.mul_creation(u, v)
    return v


@dataclass
class SingularReport:
    """Outcome of the raising-operator annihilation test."""

    rank: int
    n: int
    level: Fraction
    ok: bool
    residual_terms: int
    residuals: dict[str, VermaVector] = field(repr=False, default_factory=dict)


def check_singular(
    lie: LieAlgebra, n: int, level: Optional[Rat] = None
) -> SingularReport:
    """True iff e_i(0).v = 0 for all i and f_theta(1).v = 0 at this level."""
    v = build_singular_candidate(lie, n, level)
    module = v.module
    residuals: dict[str, VermaVector] = {}
    simple = lie.rootsys.simple_roots
    for i, alpha in enumerate(simple, start=1):
        r = module.apply(lie.e(alpha).index, 0, v)
        if not r.is_zero():
            residuals[f"e_{i}(0)"] = r
    f_theta = lie.f(lie.rootsys.highest_root)
    r = module.apply(f_theta.index, 1, v)
    if not r.is_zero():
        residuals["f_theta(1)"] = r
    total = sum(x.term_count() for x in residuals.values())
    return SingularReport(
        rank=lie.rank,
        n=n,
        level=module.level,
        ok=not residuals,
        residual_terms=total,
        residuals=residuals,
    )


def fz_image(v: VermaVector, engine: UEA) -> UEAElement:
    """Image of a mode -1 creation vector in U(g): reversed word product.

    Only words x_1(-1)...x_m(-1).1 are supported; the general map carries a
    sign (-1)^(sum of deeper modes) that is identically 1 here.
    """
    out = engine.zero()
    for word, c in v.terms.items():
        if any(mode != -1 for mode, _ in word):
            raise ValueError("fz_image supports mode -1 words only")
        piece = engine.one()
        for _, idx in reversed(word):
            piece = engine.multiply(piece, engine.gen(engine.lie.basis[idx]))
        out = out + c * piece
    return out


# ---------------------------------------------------------------------------
# affine weights and admissibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineWeight:
    """k Lambda_0 + mu: a level and a finite weight."""

    level: Fraction
    finite: Weight

    @classmethod
    def make(cls, level: Rat, finite: Weight) -> "AffineWeight":
        return cls(Fraction(level), finite)


@dataclass(frozen=True)
class AffineRealRoot:
    """alpha + m delta with m > 0 and alpha in Delta, or m = 0, alpha in Delta_+."""

    alpha: Weight
    m: int

    def __post_init__(self):
        support = [c for c in self.alpha.eps if c != 0]
        if not (support and all(abs(c) == 1 for c in support) and len(support) <= 2):
            raise ValueError(f"{self.alpha} is not a finite root")
        if self.m < 0:
            raise ValueError("loop mode must be nonnegative")
        if self.m == 0 and support[0] < 0:
            raise ValueError("mode 0 requires a positive finite root")

    def coroot_vector(self, rank: int) -> tuple[Fraction, ...]:
        """(2 alpha/(alpha,alpha), 2m/(alpha,alpha)) in h oplus Qc coordinates."""
        norm = inner(self.alpha, self.alpha)
        scale = Fraction(2) / norm
        return tuple(scale * c for c in self.alpha.eps) + (scale * self.m,)

    def describe(self, rs: RootSystem) -> str:
        for i, a in enumerate(rs.simple_roots, start=1):
            if self.m == 0 and self.alpha == a:
                return f"alpha_{i}^"
        parts = []
        if self.m:
            parts.append(f"{self.m}d" if self.m != 1 else "d")
        for i, c in enumerate(self.alpha.eps, start=1):
            if c:
                sign = "+" if c > 0 else "-"
                mag = abs(c)
                parts.append(f"{sign}{'' if mag == 1 else mag}e{i}")
        body = "".join(parts)
        if body.startswith("+"):
            body = body[1:]
        return f"({body})^"


def positive_real_roots(rs: RootSystem, m_max: int) -> list[AffineRealRoot]:
    """All alpha + m delta with 0 <= m <= m_max, in deterministic order."""
    out: list[AffineRealRoot] = []
    for alpha in rs.positive_roots:
        out.append(AffineRealRoot(alpha, 0))
    for m in range(1, m_max + 1):
        for alpha in rs.positive_roots:
            out.append(AffineRealRoot(alpha, m))
            out.append(AffineRealRoot(-alpha, m))
    out.sort(key=lambda r: (r.m, r.alpha.eps))
    return out


def shifted_pairing(lam: AffineWeight, root: AffineRealRoot, rs: RootSystem) -> Fraction:
    """<lambda + rho, (alpha + m delta)^vee> with rho = h^vee Lambda_0 + rho_bar."""
    norm = inner(root.alpha, root.alpha)
    hv = dual_coxeter_number(rs.rank)
    return (
        Fraction(2)
        / norm
        * (root.m * (lam.level + hv) + inner(rs.weyl_vector + lam.finite, root.alpha))
    )


@dataclass
class AdmissibilityResult:
    """Certificate for the admissibility check of one affine weight."""

    ok: bool
    weight: AffineWeight
    m_max: int
    integral_count: int
    span_rank: int
    simple_coroots: list[AffineRealRoot]
    violations: list[tuple[AffineRealRoot, Fraction]]

    def simple_names(self, rs: RootSystem) -> list[str]:
        return [r.describe(rs) for r in self.simple_coroots]


def _rank_of(vectors: list[tuple[Fraction, ...]]) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / pv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_admissible(
    lam: AffineWeight, rs: RootSystem, m_max: Optional[int] = None
) -> AdmissibilityResult:
    """Certify admissibility of k Lambda_0 + mu.

    (i) <lambda + rho, gamma> avoids -Z_+ for every positive real coroot:
    scanned for loop modes m <= m_max and certified for m > m_max because
    m (k + h^vee) then dominates |(rho_bar + mu, alpha)|.
    (ii) The integral coroots found in the window must span a space of
    rank l+1, and the simple ones among them (no two collected coroots sum
    to them) are reported.
    """
    l = rs.rank
    hv = dual_coxeter_number(l)
    shift = lam.level + hv
    if shift <= 0:
        raise ValueError("k + h^vee must be positive for the windowed check")
    if m_max is None:
        bound = max(
            abs(inner(rs.weyl_vector + lam.finite, alpha))
            for alpha in rs.positive_roots
        )
        m_max = 2 * max(1, math.ceil(bound / shift))
    roots = positive_real_roots(rs, m_max)
    violations: list[tuple[AffineRealRoot, Fraction]] = []
    integral: list[AffineRealRoot] = []
    for r in roots:
        p = shifted_pairing(lam, r, rs)
        if p.denominator == 1:
            if p <= 0:
                violations.append((r, p))
            integral.append(r)
    vectors = [r.coroot_vector(l) for r in integral]
    span_rank = _rank_of(vectors) if vectors else 0
    vec_set = {v: r for v, r in zip(vectors, integral)}
    simple: list[AffineRealRoot] = []
    for v, r in vec_set.items():
        decomposable = False
        for w in vec_set:
            diff = tuple(a - b for a, b in zip(v, w))
            if diff != ((Fraction(0),) * (l + 1)) and diff in vec_set:
                decomposable = True
                break
        if not decomposable:
            simple.append(r)
    simple.sort(key=lambda r: (r.m, r.alpha.eps))
    ok = not violations and span_rank == l + 1
    return AdmissibilityResult(
        ok=ok,
        weight=lam,
        m_max=m_max,
        integral_count=len(integral),
        span_rank=span_rank,
        simple_coroots=simple,
        violations=violations,
    )
