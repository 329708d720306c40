"""Matrix realization of the simple Lie algebra so(2l+1) of type B_l.

The algebra is realized as matrices antisymmetric about the antidiagonal
(X[i][j] = -X[j'][i'] with i' = N+1-i for N = 2l+1), so the Cartan
subalgebra is diagonal, diag(a_1, ..., a_l, 0, -a_l, ..., -a_1), and
ad-weights can be read off entrywise.  Root vectors are produced by fixed
nested-bracket formulas from the Chevalley generators, which pins every
normalization; in particular [e_alpha, f_alpha] is exactly the coroot
h_alpha for every positive root alpha.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .rootsys import Root, RootSystem, Weight, build_root_system, coroot_pairing

Matrix = tuple[tuple[Fraction, ...], ...]


def _zero(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _freeze(m: list[list[Fraction]]) -> Matrix:
    return tuple(tuple(row) for row in m)


def _unit(n: int, i: int, j: int, c: Fraction = Fraction(1)) -> Matrix:
    """c * E_{ij}, 1-based indices."""
    m = _zero(n)
    m[i - 1][j - 1] = c
    return _freeze(m)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Fraction, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
        for row in a
    )


def mat_bracket(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def trace_prod(a: Matrix, b: Matrix) -> Fraction:
    """tr(a b) without forming the product."""
    n = len(a)
    return sum(
        (a[i][j] * b[j][i] for i in range(n) for j in range(n)), Fraction(0)
    )


class BasisElement:
    """One member of the ordered basis: f(alpha), h(i) or e(alpha)."""

    __slots__ = ("kind", "label", "matrix", "weight", "index")

    def __init__(self, kind: str, label, matrix: Matrix, weight: Weight, index: int):
        self.kind = kind          # "f", "h" or "e"
        self.label = label        # Root for e/f, 1-based int for h
        self.matrix = matrix
        self.weight = weight      # ad-h weight: -alpha, 0 or +alpha
        self.index = index        # position in the fixed basis order

    def __repr__(self) -> str:
        if self.kind == "h":
            return f"h_{self.label}"
        bits = []
        for k, c in enumerate(self.label.eps):
            if c:
                bits.append(("+" if c > 0 and bits else "-" if c < 0 else "") + f"e{k + 1}")
        return f"{self.kind}({''.join(bits)})"


class LieAlgebra:
    """so(2l+1) with the basis f(Delta_+), h_1..h_l, e(Delta_+).

    The positive roots are enumerated lexicographically on their
    epsilon-coordinates; the f-block uses that order, then h_1..h_l, then
    the e-block in the same order.  Immutable after construction.
    """

    def __init__(self, rank: int):
        self.rootsys: RootSystem = build_root_system(rank)
        self.rank = rank
        self.n = 2 * rank + 1
        self._build_generators()
        self._build_root_vectors()
        self._build_basis()
        # Calibrate the invariant form from (e_theta, f_theta) = 1.
        theta = self.rootsys.highest_root
        t = trace_prod(self.e(theta).matrix, self.f(theta).matrix)
        self.form_scale = Fraction(1) / t
        self._brackets: Optional[dict] = None

    # -- construction -----------------------------------------------------

    def _build_generators(self) -> None:
        l, n = self.rank, self.n
        self._chev_e: list[Matrix] = []
        self._chev_f: list[Matrix] = []
        self._chev_h: list[Matrix] = []
        for i in range(1, l):
            e = mat_sub(_unit(n, i, i + 1), _unit(n, n - i, n + 1 - i))
            f = mat_sub(_unit(n, i + 1, i), _unit(n, n + 1 - i, n - i))
            self._chev_e.append(e)
            self._chev_f.append(f)
            self._chev_h.append(mat_bracket(e, f))
        e = mat_sub(_unit(n, l, l + 1), _unit(n, l + 1, l + 2))
        f = mat_scale(
            Fraction(2), mat_sub(_unit(n, l + 1, l), _unit(n, l + 2, l + 1))
        )
        self._chev_e.append(e)
        self._chev_f.append(f)
        self._chev_h.append(mat_bracket(e, f))

    def _build_root_vectors(self) -> None:
        l = self.rank
        e_pos: dict[tuple, Matrix] = {}
        f_pos: dict[tuple, Matrix] = {}

        def key(i: int, j: int, sign: int) -> tuple:
            coords = [0] * l
            coords[i - 1] = 1
            if j:
                coords[j - 1] = sign
            return tuple(Fraction(c) for c in coords)

        # e_{eps_i - eps_j} = [e_i, [e_{i+1}, [... [e_{j-2}, e_{j-1}] ...]]]
        for j in range(2, l + 1):
            for i in range(j - 1, 0, -1):
                m = self._chev_e[j - 2]
                for t in range(j - 2, i - 1, -1):
                    m = mat_bracket(self._chev_e[t - 1], m)
                e_pos[key(i, j, -1)] = m
                m = self._chev_f[i - 1]
                for t in range(i + 1, j):
                    m = mat_bracket(self._chev_f[t - 1], m)
                f_pos[key(i, j, -1)] = m
        # e_{eps_i} = [e_i, [e_{i+1}, [... [e_{l-1}, e_l] ...]]]
        for i in range(l, 0, -1):
            m = self._chev_e[l - 1]
            for t in range(l - 1, i - 1, -1):
                m = mat_bracket(self._chev_e[t - 1], m)
            e_pos[key(i, 0, 0)] = m
            m = self._chev_f[i - 1]
            for t in range(i + 1, l + 1):
                m = mat_bracket(self._chev_f[t - 1], m)
            f_pos[key(i, 0, 0)] = m
        # e_{eps_i + eps_j} = (1/2) [e_{eps_i}, e_{eps_j}], i < j
        half = Fraction(1, 2)
        for i in range(1, l):
            for j in range(i + 1, l + 1):
                e_pos[key(i, j, 1)] = mat_scale(
                    half, mat_bracket(e_pos[key(i, 0, 0)], e_pos[key(j, 0, 0)])
                )
                f_pos[key(i, j, 1)] = mat_scale(
                    half, mat_bracket(f_pos[key(j, 0, 0)], f_pos[key(i, 0, 0)])
                )
        self._e_pos = e_pos
        self._f_pos = f_pos

    def _build_basis(self) -> None:
        pos = self.rootsys.positive_roots
        basis: list[BasisElement] = []
        for r in pos:
            basis.append(BasisElement("f", r, self._f_pos[r.eps], -r, len(basis)))
        for i in range(1, self.rank + 1):
            zero = Weight([0] * self.rank)
            basis.append(
                BasisElement("h", i, self._chev_h[i - 1], zero, len(basis))
            )
        for r in pos:
            basis.append(BasisElement("e", r, self._e_pos[r.eps], r, len(basis)))
        self.basis: tuple[BasisElement, ...] = tuple(basis)
        self.h_start = len(pos)
        self.e_start = len(pos) + self.rank
        self._by_key = {}
        for b in basis:
            if b.kind == "h":
                self._by_key[("h", b.label)] = b
            else:
                self._by_key[(b.kind, b.label.eps)] = b

    # -- lookups -----------------------------------------------------------

    def e(self, alpha: Root) -> BasisElement:
        return self._by_key[("e", alpha.eps)]

    def f(self, alpha: Root) -> BasisElement:
        return self._by_key[("f", alpha.eps)]

    def h(self, i: int) -> BasisElement:
        return self._by_key[("h", i)]

    def root_vector(self, alpha: Root, sign: str) -> BasisElement:
        """e_alpha for sign="raising", f_alpha for sign="lowering"."""
        if ("e", alpha.eps) not in self._by_key:
            raise ValueError(f"{alpha} is not a positive root")
        return self.e(alpha) if sign == "raising" else self.f(alpha)

    def chevalley_generators(self) -> tuple[list[BasisElement], ...]:
        """(e_1..e_l, f_1..f_l, h_1..h_l) as basis elements."""
        simple = self.rootsys.simple_roots
        es = [self.e(a) for a in simple]
        fs = [self.f(a) for a in simple]
        hs = [self.h(i) for i in range(1, self.rank + 1)]
        return es, fs, hs

    # -- algebra operations --------------------------------------------------

    def invariant_form(self, x, y) -> Fraction:
        """Invariant bilinear form, normalized so (e_theta, f_theta) = 1.

        Equivalently the induced form on the dual of the Cartan satisfies
        (theta, theta) = 2, hence (e_alpha, f_alpha) = 2/(alpha, alpha).
        """
        mx = x.matrix if isinstance(x, BasisElement) else x
        my = y.matrix if isinstance(y, BasisElement) else y
        return self.form_scale * trace_prod(mx, my)

    def expand(self, m: Matrix) -> dict[int, Fraction]:
        """Expand a matrix of the algebra over the fixed basis."""
        out: dict[int, Fraction] = {}
        work = [list(row) for row in m]
        # Cartan part from the diagonal: a_j = sum of h-coefficients.
        a = [work[i][i] for i in range(self.rank)]
        c = [Fraction(0)] * self.rank
        run = Fraction(0)
        for j in range(self.rank - 1):
            run += a[j]
            c[j] = run
        c[self.rank - 1] = (a[self.rank - 1] + (run if self.rank > 1 else 0)) / 2
        for j, cj in enumerate(c):
            if cj:
                out[self.h_start + j] = cj
                hb = self.basis[self.h_start + j].matrix
                for r in range(self.n):
                    for s in range(self.n):
                        if hb[r][s]:
                            work[r][s] -= cj * hb[r][s]
        # Root-vector part: each root owns disjoint matrix cells.
        for b in self.basis:
            if b.kind == "h":
                continue
            cell = self._marker_cell(b)
            r, s = cell
            if work[r][s]:
                coeff = work[r][s] / b.matrix[r][s]
                out[b.index] = coeff
                for rr in range(self.n):
                    for ss in range(self.n):
                        if b.matrix[rr][ss]:
                            work[rr][ss] -= coeff * b.matrix[rr][ss]
        if any(x != 0 for row in work for x in row):
            raise ArithmeticError("matrix does not lie in the algebra span")
        return out

    def _marker_cell(self, b: BasisElement) -> tuple[int, int]:
        for r in range(self.n):
            for s in range(self.n):
                if b.matrix[r][s]:
                    return (r, s)
        raise AssertionError("zero basis matrix")

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """[x_i, x_j] expanded in the basis, by index."""
        return self.structure_constants()[(i, j)]

    def structure_constants(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """Full bracket table over ordered basis pairs (computed once)."""
        if self._brackets is None:
            table: dict[tuple[int, int], dict[int, Fraction]] = {}
            nb = len(self.basis)
            for i in range(nb):
                table[(i, i)] = {}
                for j in range(i + 1, nb):
                    exp = self.expand(
                        mat_bracket(self.basis[i].matrix, self.basis[j].matrix)
                    )
                    table[(i, j)] = exp
                    table[(j, i)] = {k: -v for k, v in exp.items()}
            self._brackets = table
        return self._brackets

    def h_of_root(self, alpha: Root) -> dict[int, Fraction]:
        """Coefficients of h_alpha = [e_alpha, f_alpha] over h_1..h_l (1-based)."""
        m = mat_bracket(self.e(alpha).matrix, self.f(alpha).matrix)
        exp = self.expand(m)
        out: dict[int, Fraction] = {}
        for idx, cf in exp.items():
            if not self.h_start <= idx < self.e_start:
                raise ArithmeticError("[e_alpha, f_alpha] is not Cartan")
            out[idx - self.h_start + 1] = cf
        return out

    def cartan_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """A[i][j] = alpha_j(h_i) = <alpha_j, alpha_i^vee> (0-based rows/cols)."""
        simple = self.rootsys.simple_roots
        return tuple(
            tuple(coroot_pairing(aj, ai) for aj in simple) for ai in simple
        )


def chevalley_generators(rank: int) -> tuple[list[BasisElement], ...]:
    """Convenience wrapper: Chevalley generators of a fresh algebra."""
    return LieAlgebra(rank).chevalley_generators()
