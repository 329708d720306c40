"""Enumeration of the classified highest weights at level n - l + 1/2.

Three lists are produced: the common zeros of the triangular polynomial
system (at most (2n)^l of them), the closed-form category-O list for n = 1
(two weights per subset of {1..l-1}, giving 2^l), and the dominant
integral weights with (mu, eps_1) <= n - 1/2.  Every entry can be
certified admissible as an affine weight k Lambda_0 + mu.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .affine import AdmissibilityResult, AffineWeight, is_admissible
from .liealg import LieAlgebra
from .rootsys import RootSystem, Weight, weight_from_fundamental
from .zero_weight import explicit_q


@dataclass
class Entry:
    weight: Weight
    tags: tuple[str, ...]
    s_label: Optional[str] = None
    admissible: Optional[bool] = None
    certificate: Optional[AdmissibilityResult] = field(default=None, repr=False)


@dataclass
class ClassificationResult:
    rank: int
    n: int
    level: Fraction
    entries: list[Entry]
    complete: bool   # False for the n > 1 candidate category-O list

    def weights(self) -> list[Weight]:
        return [e.weight for e in self.entries]


def level_of(rank: int, n: int) -> Fraction:
    return Fraction(2 * n - 2 * rank + 1, 2)


def _sorted_entries(entries: Iterable[Entry]) -> list[Entry]:
    return sorted(entries, key=lambda e: e.weight.fundamental())


def solve_triangular(rank: int, n: int) -> list[Weight]:
    """All common zeros of p_1, ..., p_l by back-substitution.

    p_l fixes h_l to one of 2n values; given h_{i+1}..h_l, each p_i fixes
    h_i to one of n integers or n shifted half-integers.  Solutions are
    deduplicated and returned sorted by fundamental coordinates.
    """
    if rank < 2 or n < 1:
        raise ValueError("need rank >= 2 and n >= 1")
    partial: list[list[Fraction]] = [
        [Fraction(t)] for t in range(2 * n)
    ]   # reversed coords: [c_l], then [c_i, ..., c_l]
    for i in range(rank - 1, 0, -1):
        grown: list[list[Fraction]] = []
        for tail in partial:
            # tail holds (c_{i+1}, ..., c_l)
            chain = 2 * sum(tail[:-1], Fraction(0)) + tail[-1]
            offset = Fraction(2 * (rank - i) - 1, 2)   # l - i - 1/2
            values = {Fraction(t) for t in range(n)}
            values |= {Fraction(t) - offset - chain for t in range(n)}
            for v in sorted(values):
                grown.append([v] + tail)
        partial = grown
    seen = set()
    out: list[Weight] = []
    for coords in partial:
        key = tuple(coords)
        if key not in seen:
            seen.add(key)
            out.append(weight_from_fundamental(coords))
    return sorted(out, key=lambda w: w.fundamental())


def mu_s(rs: RootSystem, subset: Sequence[int]) -> Weight:
    """The closed-form solution with h_l = 0 attached to a subset of {1..l-1}."""
    return _mu_subset(rs, subset, Fraction(2 * rs.rank - 1, 2), add_last=False)


def mu_s_prime(rs: RootSystem, subset: Sequence[int]) -> Weight:
    """The companion solution with h_l = 1: shifted constant plus omega_l."""
    return _mu_subset(rs, subset, Fraction(2 * rs.rank + 1, 2), add_last=True)


def _mu_subset(
    rs: RootSystem, subset: Sequence[int], const: Fraction, add_last: bool
) -> Weight:
    idxs = sorted(subset)
    if any(not 1 <= i <= rs.rank - 1 for i in idxs) or len(set(idxs)) != len(idxs):
        raise ValueError(f"subset {subset} not inside 1..{rs.rank - 1}")
    k = len(idxs)
    mu = Weight([0] * rs.rank)
    for j in range(k):   # 0-based j; the alternating signs use offsets only
        coeff = Fraction(idxs[j])
        for s in range(j + 1, k):
            coeff += 2 * (-1) ** (s - j) * idxs[s]
        coeff += (-1) ** (k - j) * const
        mu = mu + coeff * rs.fundamental_weight(idxs[j])
    if add_last:
        mu = mu + rs.fundamental_weight(rs.rank)
    return mu


def _subset_label(subset: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def _all_subsets(upper: int) -> Iterable[tuple[int, ...]]:
    out = [()]
    for i in range(1, upper + 1):
        out = out + [s + (i,) for s in out]
    return out


def classify_category_o(lie: LieAlgebra, n: int) -> ClassificationResult:
    """The category-O highest-weight list at level n - l + 1/2.

    For n = 1 this is the complete list: mu_S and mu_S' over all subsets
    S of {1..l-1}, 2^l entries.  For n > 1 the triangular-system zeros are
    filtered by the vanishing of the explicit q polynomial and flagged as
    candidates (complete=False): the full polynomial span could cut further.
    """
    rs = lie.rootsys
    k = level_of(rs.rank, n)
    if n == 1:
        entries = []
        for subset in _all_subsets(rs.rank - 1):
            entries.append(
                Entry(mu_s(rs, subset), ("category-O",), "S=" + _subset_label(subset))
            )
            entries.append(
                Entry(
                    mu_s_prime(rs, subset),
                    ("category-O",),
                    "S'=" + _subset_label(subset),
                )
            )
        return ClassificationResult(
            rs.rank, n, k, _sorted_entries(entries), complete=True
        )
    q = explicit_q(lie, n)
    entries = [
        Entry(w, ("category-O", "candidate"))
        for w in solve_triangular(rs.rank, n)
        if q.evaluate_weight(w) == 0
    ]
    return ClassificationResult(
        rs.rank, n, k, _sorted_entries(entries), complete=False
    )


def classify_finite_dim(rs: RootSystem, n: int) -> ClassificationResult:
    """Dominant integral weights with (mu, eps_1) <= n - 1/2.

    In fundamental coordinates the constraint reads
    c_1 + ... + c_{l-1} + c_l/2 <= n - 1/2 over nonnegative integers,
    which bounds the enumeration box outright.
    """
    l = rs.rank
    k = level_of(l, n)
    limit = Fraction(2 * n - 1, 2)
    entries: list[Entry] = []

    def rec(prefix: list[int], used: Fraction) -> None:
        i = len(prefix)
        if i == l:
            entries.append(
                Entry(weight_from_fundamental(prefix), ("finite-dim",))
            )
            return
        step = Fraction(1) if i < l - 1 else Fraction(1, 2)
        c = 0
        while used + c * step <= limit:
            rec(prefix + [c], used + c * step)
            c += 1

    rec([], Fraction(0))
    return ClassificationResult(l, n, k, _sorted_entries(entries), complete=True)


def merge_results(
    a: ClassificationResult, b: ClassificationResult
) -> ClassificationResult:
    """Union by weight; tags are merged, S labels kept when present."""
    if (a.rank, a.n) != (b.rank, b.n):
        raise ValueError("cannot merge classifications of different (rank, n)")
    by_weight: dict[tuple, Entry] = {}
    for e in list(a.entries) + list(b.entries):
        key = e.weight.fundamental()
        if key in by_weight:
            old = by_weight[key]
            tags = tuple(dict.fromkeys(old.tags + e.tags))
            by_weight[key] = replace(old, tags=tags, s_label=old.s_label or e.s_label)
        else:
            by_weight[key] = e
    return ClassificationResult(
        a.rank,
        a.n,
        a.level,
        _sorted_entries(by_weight.values()),
        complete=a.complete and b.complete,
    )


def certify(result: ClassificationResult, rs: RootSystem) -> ClassificationResult:
    """Attach an admissibility certificate to every entry."""
    certified = []
    for e in result.entries:
        lam = AffineWeight(result.level, e.weight)
        cert = is_admissible(lam, rs)
        certified.append(replace(e, admissible=cert.ok, certificate=cert))
    return replace(result, entries=certified)
