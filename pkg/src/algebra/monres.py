"""
Monomial ideals, their mapping-cone resolutions, and the rank and height
conditions on finite free complexes.

Complexes built from monomial data are multigraded: every basis element
carries a monomial degree and every matrix entry is c·X^(deg(col) − deg(row)).
Such a complex is stored by its scalar matrices over F_p; all minors are
then scalar·monomial, so ranks and heights reduce to linear algebra over F_p.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from src.algebra.groebner import dimension, radical_member
from src.algebra.polyring import (
    Monomial,
    Polynomial,
    PolyRing,
    grevlex_key,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    poly_substitute,
)
from src.algebra.quotient import QuotientRing
from src.utilis.errors import PreconditionError, ReesTypeError
from src.utilis.logger import logger

Matrix = List[List[Polynomial]]
ScalarMatrix = List[List[int]]

MAX_MINOR_SIZE = 8


# ---------------------------------------------------------------------------
# Monomial ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators in `nvars` variables."""

    gens: Tuple[Monomial, ...]
    nvars: int

    @classmethod
    def of(cls, gens: Sequence[Sequence[int]], nvars: Optional[int] = None) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        if nvars is None:
            if not gens:
                raise PreconditionError("give nvars for the zero ideal")
            nvars = len(gens[0])
        if any(len(g) != nvars for g in gens):
            raise PreconditionError("generators of different lengths")
        unique = sorted(set(gens), key=grevlex_key, reverse=True)
        minimal = [
            g for g in unique
            if not any(h != g and mono_divides(h, g) for h in unique)
        ]
        return cls(tuple(minimal), nvars)

    @property
    def one(self) -> Monomial:
        return (0,) * self.nvars

    def contains(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.gens)

    def is_unit(self) -> bool:
        return self.one in self.gens

    def is_zero(self) -> bool:
        return not self.gens

    def polynomials(self, ring: PolyRing) -> List[Polynomial]:
        return [ring.monomial(g) for g in self.gens]

    def __len__(self) -> int:
        return len(self.gens)


def monomial_ring(d: int, prime: Optional[int] = None, prefix: str = "X") -> PolyRing:
    return PolyRing([f"{prefix}{i}" for i in range(1, d + 1)], prime=prime)


def monomial_colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """I : m, generated by g / gcd(g, m)."""
    return MonomialIdeal.of([mono_div(g, mono_gcd(g, m)) for g in I.gens], I.nvars)


def is_stable(I: MonomialIdeal, variable_order: Optional[Sequence[int]] = None) -> bool:
    """Eliahou–Kervaire stability under `variable_order` (largest variable first).

    For each generator u, with x_top the smallest-ranked variable dividing u,
    every x_j ranked above it must give x_j·u / x_top ∈ I.
    """
    order = list(variable_order) if variable_order is not None else list(range(I.nvars))
    if sorted(order) != list(range(I.nvars)):
        raise PreconditionError(f"{order} is not a permutation of the variables")
    rank = {v: pos for pos, v in enumerate(order)}
    for u in I.gens:
        support = [i for i, e in enumerate(u) if e]
        if not support:
            continue
        last = max(support, key=lambda i: rank[i])
        for j in order[: rank[last]]:
            exps = list(u)
            exps[last] -= 1
            exps[j] += 1
            if not I.contains(tuple(exps)):
                return False
    return True


def lower_segment_ideal(n0: Monomial) -> MonomialIdeal:
    """Monomials of degree |n0| that are ≤ X^n0 in grevlex."""
    n = len(n0)
    degree = sum(n0)
    bound = grevlex_key(tuple(n0))
    gens = []
    for combo in itertools.combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        if grevlex_key(tuple(exps)) <= bound:
            gens.append(tuple(exps))
    return MonomialIdeal.of(gens, n)


def random_monomial_ideal(
    rng: random.Random,
    nvars: int,
    max_gens: int,
    max_exp: int,
) -> MonomialIdeal:
    """A proper nonzero monomial ideal with at most `max_gens` generators."""
    count = rng.randint(1, max_gens)
    gens = set()
    while len(gens) < count:
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        if any(exps):
            gens.add(exps)
    return MonomialIdeal.of(sorted(gens), nvars)


# ---------------------------------------------------------------------------
# Linear algebra over F_p
# ---------------------------------------------------------------------------

def _gf_matrix(rows: ScalarMatrix, ncols: int, p: int) -> DomainMatrix:
    K = GF(p)
    return DomainMatrix([[K(v) for v in row] for row in rows], (len(rows), ncols), K)


def scalar_rank(rows: ScalarMatrix, ncols: int, p: int) -> int:
    if not rows or ncols == 0:
        return 0
    return _gf_matrix(rows, ncols, p).rank()


def _solve(A: ScalarMatrix, rhs: List[int], ncols: int, p: int) -> Optional[List[int]]:
    """One solution of A·c = rhs over F_p, or None."""
    if ncols == 0 or not A:
        return [0] * ncols if all(v % p == 0 for v in rhs) else None
    K = GF(p)
    reduced, pivots = _gf_matrix([row + [b] for row, b in zip(A, rhs)], ncols + 1, p).rref()
    if ncols in pivots:
        return None
    entries = reduced.to_list()
    solution = [0] * ncols
    for r, c in enumerate(pivots):
        solution[c] = int(K.to_sympy(entries[r][ncols])) % p
    return solution


# ---------------------------------------------------------------------------
# Complexes
# ---------------------------------------------------------------------------

@dataclass
class FreeComplex:
    """0 → F_n → ... → F_1 → F_0 with α_i : F_i → F_{i-1}.

    `matrices[i-1]` is α_i with b_{i-1} rows and b_i columns. A multigraded
    complex also keeps `mdegs` and `scalars`; `parameters` are the images
    of the monomial variables (the variables themselves before base change).
    """

    ring: PolyRing
    ranks: List[int]
    matrices: List[Matrix]
    mdegs: Optional[List[List[Monomial]]] = None
    scalars: Optional[List[ScalarMatrix]] = None
    parameters: Optional[List[Polynomial]] = None
    base: Optional[QuotientRing] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if len(self.ranks) != len(self.matrices) + 1:
            raise PreconditionError("need one more module than maps")
        for i, M in enumerate(self.matrices, start=1):
            rows, cols = self.ranks[i - 1], self.ranks[i]
            if len(M) != rows or any(len(row) != cols for row in M):
                raise PreconditionError(f"α_{i} is not {rows}x{cols}")
        if self.parameters is None:
            self.parameters = self.ring.gens()

    @classmethod
    def multigraded(
        cls,
        ring: PolyRing,
        mdegs: List[List[Monomial]],
        scalars: List[ScalarMatrix],
    ) -> "FreeComplex":
        p = ring.prime
        matrices: List[Matrix] = []
        for i, S in enumerate(scalars, start=1):
            M: Matrix = []
            for r, row in enumerate(S):
                out = []
                for c, v in enumerate(row):
                    if v % p:
                        out.append(ring.monomial(mono_div(mdegs[i][c], mdegs[i - 1][r]), v))
                    else:
                        out.append(ring.zero)
                M.append(out)
            matrices.append(M)
        return cls(ring, [len(level) for level in mdegs], matrices, mdegs, scalars)

    @property
    def length(self) -> int:
        return len(self.matrices)

    def matrix(self, i: int) -> Matrix:
        return self.matrices[i - 1]

    def expected_rank(self, i: int) -> int:
        """r_i = Σ_{t ≥ i} (−1)^(t−i) b_t."""
        return sum((-1) ** (t - i) * self.ranks[t] for t in range(i, len(self.ranks)))

    def expected_ranks(self) -> List[int]:
        return [self.expected_rank(i) for i in range(1, self.length + 2)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "betti": list(self.ranks),
            "length": self.length,
            "expected_ranks": self.expected_ranks(),
            "matrices": [[[str(e) for e in row] for row in M] for M in self.matrices],
        }


def is_complex(C: FreeComplex, R: Optional[QuotientRing] = None) -> bool:
    """True iff α_i·α_{i+1} = 0 for every i (modulo R's ideal when given)."""
    p = C.ring.prime
    for i in range(1, C.length):
        if C.scalars is not None and (R is None or R.J.is_zero()):
            A, B = C.scalars[i - 1], C.scalars[i]
            for r in range(len(A)):
                for c in range(C.ranks[i + 1]):
                    if sum(A[r][k] * B[k][c] for k in range(C.ranks[i])) % p:
                        return False
            continue
        A, B = C.matrix(i), C.matrix(i + 1)
        for r in range(C.ranks[i - 1]):
            for c in range(C.ranks[i + 1]):
                entry = C.ring.zero
                for k in range(C.ranks[i]):
                    entry = entry + A[r][k] * B[k][c]
                if R is not None:
                    entry = R.normal_form(R.ring.convert(entry))
                if not entry.is_zero():
                    return False
    return True


def base_change(C: FreeComplex, R: QuotientRing, images: Sequence[Polynomial]) -> FreeComplex:
    """Tensor a complex over k[X_1..X_d] with R along X_i ↦ images[i]."""
    if len(images) != C.ring.nvars:
        raise PreconditionError(f"need {C.ring.nvars} images, got {len(images)}")
    images = [R.ring.convert(g) for g in images]
    assignment = dict(zip(C.ring.variables, images))
    matrices = [
        [[R.normal_form(poly_substitute(e, assignment, R.ring)) for e in row] for row in M]
        for M in C.matrices
    ]
    return FreeComplex(R.ring, list(C.ranks), matrices, parameters=images, base=R)


# ---------------------------------------------------------------------------
# Mapping cone
# ---------------------------------------------------------------------------

@dataclass
class _Graded:
    mdegs: List[List[Monomial]]
    maps: List[ScalarMatrix]

    def size(self, i: int) -> int:
        return len(self.mdegs[i]) if 0 <= i < len(self.mdegs) else 0

    def d(self, i: int) -> ScalarMatrix:
        """Scalar matrix of d_i, zero-sized outside the range."""
        if 1 <= i < len(self.mdegs):
            return self.maps[i - 1]
        return [[0] * self.size(i) for _ in range(self.size(i - 1))]

    def shifted(self, m: Monomial) -> "_Graded":
        return _Graded([[mono_mul(u, m) for u in level] for level in self.mdegs], self.maps)


def _split(gens: Sequence[Monomial]) -> Tuple[Monomial, List[Monomial]]:
    """The generator with the largest exponent of the last occurring variable."""
    last = max(i for g in gens for i, e in enumerate(g) if e)
    m = max(gens, key=lambda g: (g[last], grevlex_key(g)))
    return m, [g for g in gens if g != m]


def _chain_map(G: _Graded, F: _Graded, p: int) -> List[ScalarMatrix]:
    """Lift multiplication by the shift of F to a chain map F → G.

    Returns φ_0, φ_1, ... with φ_i of shape size_G(i) × size_F(i).
    """
    phis: List[ScalarMatrix] = [[[1]]]
    for i in range(1, len(F.mdegs)):
        dF, dG = F.d(i), G.d(i)
        prev = phis[i - 1]
        rows_prev = G.size(i - 1)
        phi = [[0] * F.size(i) for _ in range(G.size(i))]
        for f, mu in enumerate(F.mdegs[i]):
            rhs = [
                sum(prev[r][k] * dF[k][f] for k in range(F.size(i - 1))) % p
                for r in range(rows_prev)
            ]
            cols = [g for g in range(G.size(i)) if mono_divides(G.mdegs[i][g], mu)]
            rows = [r for r in range(rows_prev) if mono_divides(G.mdegs[i - 1][r], mu)]
            if any(rhs[r] for r in range(rows_prev) if r not in set(rows)):
                raise ReesTypeError("chain-map target leaves its multidegree")
            A = [[dG[r][g] for g in cols] for r in rows]
            solution = _solve(A, [rhs[r] for r in rows], len(cols), p)
            if solution is None:
                raise ReesTypeError(f"no lift of the comparison map in homological degree {i}")
            for g, value in zip(cols, solution):
                phi[g][f] = value
        phis.append(phi)
    return phis


def _cone(G: _Graded, F: _Graded, p: int) -> _Graded:
    phis = _chain_map(G, F, p)
    top = max(len(G.mdegs) - 1, len(F.mdegs))
    mdegs = [list(G.mdegs[0])]
    for i in range(1, top + 1):
        level = list(G.mdegs[i]) if i < len(G.mdegs) else []
        level += list(F.mdegs[i - 1]) if i - 1 < len(F.mdegs) else []
        mdegs.append(level)
    maps: List[ScalarMatrix] = []
    for i in range(1, top + 1):
        gr, fr = G.size(i - 1), F.size(i - 2)
        gc, fc = G.size(i), F.size(i - 1)
        block = [[0] * (gc + fc) for _ in range(gr + fr)]
        dG = G.d(i)
        for r in range(gr):
            for c in range(gc):
                block[r][c] = dG[r][c]
        phi = phis[i - 1] if i - 1 < len(phis) else [[0] * fc for _ in range(gr)]
        for r in range(gr):
            for c in range(fc):
                block[r][gc + c] = phi[r][c] % p
        if i >= 2:
            dF = F.d(i - 1)
            for r in range(fr):
                for c in range(fc):
                    block[gr + r][gc + c] = (-dF[r][c]) % p
        maps.append(block)
    return _Graded(mdegs, maps)


def _resolve(gens: Tuple[Monomial, ...], nvars: int, p: int) -> _Graded:
    zero = (0,) * nvars
    if not gens:
        return _Graded([[zero]], [])
    if len(gens) == 1:
        return _Graded([[zero], [gens[0]]], [[[1]]])
    m, rest = _split(gens)
    G = _resolve(MonomialIdeal.of(rest, nvars).gens, nvars, p)
    K = monomial_colon(MonomialIdeal.of(rest, nvars), m)
    F = _resolve(K.gens, nvars, p).shifted(m)
    return _cone(G, F, p)


def mapping_cone_resolution(
    I: MonomialIdeal,
    d: Optional[int] = None,
    ring: Optional[PolyRing] = None,
) -> FreeComplex:
    """Resolution of S/I by iterated mapping cones.

    I = (I', m) with m carrying the largest exponent of the last variable;
    the cone of the comparison map from the resolution of S/(I':m), shifted
    by m, to the resolution of S/I' resolves S/I.

    Args:
        I: Monomial ideal.
        d: Variable count; defaults to I.nvars.
        ring: Ring to realize the matrices in; defaults to k[X1..Xd].

    Returns:
        Multigraded FreeComplex of length ≤ d.
    """
    d = I.nvars if d is None else d
    if d != I.nvars:
        raise PreconditionError(f"ideal lives in {I.nvars} variables, not {d}")
    ring = ring or monomial_ring(d)
    graded = _resolve(I.gens, d, ring.prime)
    while len(graded.mdegs) > 1 and not graded.mdegs[-1]:
        graded.mdegs.pop()
        graded.maps.pop()
    C = FreeComplex.multigraded(ring, graded.mdegs, graded.maps)
    logger.info("mapping cone of %d generators: betti %s", len(I), C.ranks)
    return C


# ---------------------------------------------------------------------------
# Syzygy matrices
# ---------------------------------------------------------------------------

def _pairwise_scalars(gens: Sequence[Monomial]) -> Tuple[List[Monomial], ScalarMatrix]:
    pairs = list(itertools.combinations(range(len(gens)), 2))
    degrees = [mono_lcm(gens[i], gens[j]) for i, j in pairs]
    S = [[0] * len(pairs) for _ in gens]
    for c, (i, j) in enumerate(pairs):
        S[i][c] = -1
        S[j][c] = 1
    return degrees, S


def _to_matrix(ring: PolyRing, rows_deg: Sequence[Monomial], cols_deg: Sequence[Monomial], S: ScalarMatrix) -> Matrix:
    return [
        [
            ring.monomial(mono_div(cols_deg[c], rows_deg[r]), v) if v else ring.zero
            for c, v in enumerate(row)
        ]
        for r, row in enumerate(S)
    ]


def pairwise_syzygy_matrix(gens: Sequence[Monomial], ring: Optional[PolyRing] = None) -> Matrix:
    """One column per pair i < j: −lcm/g_i in row i and lcm/g_j in row j."""
    if len(gens) < 2:
        raise PreconditionError("need at least two generators")
    ring = ring or monomial_ring(len(gens[0]))
    degrees, S = _pairwise_scalars(gens)
    return _to_matrix(ring, gens, degrees, S)


def _ek_scalars(I: MonomialIdeal, order: Sequence[int]) -> Tuple[List[Monomial], ScalarMatrix]:
    rank = {v: pos for pos, v in enumerate(order)}
    index = {g: k for k, g in enumerate(I.gens)}
    degrees: List[Monomial] = []
    columns: List[Tuple[int, int]] = []
    for k, u in enumerate(I.gens):
        support = [i for i, e in enumerate(u) if e]
        last = max(support, key=lambda i: rank[i])
        for j in order[: rank[last]]:
            exps = list(u)
            exps[last] -= 1
            exps[j] += 1
            partner = index.get(tuple(exps))
            if partner is None:
                raise PreconditionError("ideal is not stable for this order")
            shifted = list(u)
            shifted[j] += 1
            degrees.append(tuple(shifted))
            columns.append((k, partner))
    S = [[0] * len(columns) for _ in I.gens]
    for c, (k, partner) in enumerate(columns):
        S[k][c] = 1
        S[partner][c] = -1
    return degrees, S


def stable_first_syzygies(
    I: MonomialIdeal,
    variable_order: Optional[Sequence[int]] = None,
    ring: Optional[PolyRing] = None,
) -> Matrix:
    """Eliahou–Kervaire first syzygies of an equigenerated stable ideal.

    The column for (u, x_j) is x_j·e_u − x_top·e_u' with u' = x_j·u / x_top.
    """
    order = list(variable_order) if variable_order is not None else list(range(I.nvars))
    if len({sum(g) for g in I.gens}) > 1:
        raise PreconditionError("generators must share one degree")
    if not is_stable(I, order):
        raise PreconditionError("ideal is not stable for this order")
    ring = ring or monomial_ring(I.nvars)
    degrees, S = _ek_scalars(I, order)
    return _to_matrix(ring, I.gens, degrees, S)


def syzygy_complex(
    I: MonomialIdeal,
    kind: str = "pairwise",
    variable_order: Optional[Sequence[int]] = None,
    ring: Optional[PolyRing] = None,
) -> FreeComplex:
    """The truncated complex S^syz → S^gens → S as a multigraded complex."""
    ring = ring or monomial_ring(I.nvars)
    if kind == "pairwise":
        degrees, S = _pairwise_scalars(I.gens)
    elif kind == "stable":
        order = list(variable_order) if variable_order is not None else list(range(I.nvars))
        stable_first_syzygies(I, order, ring)
        degrees, S = _ek_scalars(I, order)
    else:
        raise PreconditionError(f"unknown syzygy kind {kind!r}")
    mdegs = [[I.one], list(I.gens), degrees]
    return FreeComplex.multigraded(ring, mdegs, [[[1] * len(I.gens)], S])


# ---------------------------------------------------------------------------
# Ranks, minors and heights
# ---------------------------------------------------------------------------

class _Minors:
    """Memoized determinants of submatrices, reduced modulo R."""

    def __init__(self, R: QuotientRing, M: Matrix) -> None:
        self.R = R
        self.M = [[R.normal_form(R.ring.convert(e)) for e in row] for row in M]
        self.cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Polynomial] = {}

    def det(self, rows: Tuple[int, ...], cols: Tuple[int, ...]) -> Polynomial:
        key = (rows, cols)
        if key in self.cache:
            return self.cache[key]
        ring = self.R.ring
        if not rows:
            value = ring.one
        else:
            value = ring.zero
            r0, rest = rows[0], rows[1:]
            for k, c in enumerate(cols):
                entry = self.M[r0][c]
                if entry.is_zero():
                    continue
                sub = self.det(rest, cols[:k] + cols[k + 1:])
                if sub.is_zero():
                    continue
                term = entry * sub
                value = value + (term if k % 2 == 0 else -term)
            value = self.R.normal_form(value)
        self.cache[key] = value
        return value

    def of_size(self, t: int) -> List[Polynomial]:
        nrows, ncols = len(self.M), len(self.M[0]) if self.M else 0
        out = []
        for rows in itertools.combinations(range(nrows), t):
            for cols in itertools.combinations(range(ncols), t):
                value = self.det(rows, cols)
                if not value.is_zero():
                    out.append(value)
        return out

    def any_nonzero(self, t: int) -> bool:
        nrows, ncols = len(self.M), len(self.M[0]) if self.M else 0
        for rows in itertools.combinations(range(nrows), t):
            for cols in itertools.combinations(range(ncols), t):
                if not self.det(rows, cols).is_zero():
                    return True
        return False


def _check_size(M: Matrix) -> None:
    if len(M) > MAX_MINOR_SIZE or (M and len(M[0]) > MAX_MINOR_SIZE):
        raise PreconditionError(f"minor enumeration is limited to {MAX_MINOR_SIZE}x{MAX_MINOR_SIZE} matrices")


def rank_over_quotient(R: QuotientRing, M: Matrix) -> int:
    """Largest t with a t×t minor nonzero in R."""
    if not M or not M[0]:
        return 0
    _check_size(M)
    minors = _Minors(R, M)
    for t in range(min(len(M), len(M[0])), 0, -1):
        if minors.any_nonzero(t):
            return t
    return 0


def minors_ideal(R: QuotientRing, M: Matrix, t: int) -> List[Polynomial]:
    """Generators of I_t(M) modulo J; I_0 is the unit ideal."""
    if t <= 0:
        return [R.ring.one]
    if not M or t > min(len(M), len(M[0])):
        return []
    _check_size(M)
    return _Minors(R, M).of_size(t)


def _height_in(R: QuotientRing, gens: Sequence[Polynomial]) -> int:
    """dim R − dim R/(gens); the unit ideal reports dim R + 1."""
    dim_quotient = dimension(R.ideal(gens))
    if dim_quotient < 0:
        return R.dimension() + 1
    return R.dimension() - dim_quotient


def _product_supports(d: int, i: int) -> List[FrozenSet[int]]:
    """Minimal supports of the generators of Π_{|A|=i} (X_a : a ∈ A)."""
    subsets = list(itertools.combinations(range(d), i))
    supports = {frozenset(choice) for choice in itertools.product(*subsets)}
    return [s for s in supports if not any(o < s for o in supports)]


@dataclass
class ConditionRow:
    position: int
    expected_rank: int
    rank: int
    height: int
    radical: Optional[bool] = None

    @property
    def rank_ok(self) -> bool:
        return self.rank == self.expected_rank

    @property
    def height_ok(self) -> bool:
        return self.height >= self.position

    @property
    def passed(self) -> bool:
        return self.rank_ok and self.height_ok and self.radical is not False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "position": self.position,
            "expected_rank": self.expected_rank,
            "rank": self.rank,
            "rank_ok": self.rank_ok,
            "height": self.height,
            "height_ok": self.height_ok,
            "radical_containment": self.radical,
        }


@dataclass
class RankHeightReport:
    rows: List[ConditionRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def rank_ok(self) -> bool:
        return all(row.rank_ok for row in self.rows)

    @property
    def height_ok(self) -> bool:
        return all(row.height_ok for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "conditions": [row.to_dict() for row in self.rows]}


def _zeroed_rank(C: FreeComplex, i: int, killed: FrozenSet[int]) -> int:
    """Rank of α_i after setting the variables in `killed` to zero."""
    rows_deg, cols_deg = C.mdegs[i - 1], C.mdegs[i]
    S = C.scalars[i - 1]
    kept = [
        [
            v if v and all(cols_deg[c][k] == rows_deg[r][k] for k in killed) else 0
            for c, v in enumerate(row)
        ]
        for r, row in enumerate(S)
    ]
    return scalar_rank(kept, C.ranks[i], C.ring.prime)


def _graded_row(C: FreeComplex, i: int, expected: int, check_radical: bool) -> ConditionRow:
    n = C.ring.nvars
    rank = scalar_rank(C.scalars[i - 1], C.ranks[i], C.ring.prime)
    height = n + 1
    for size in range(0, n + 1):
        if any(
            _zeroed_rank(C, i, frozenset(V)) < expected
            for V in itertools.combinations(range(n), size)
        ):
            height = size
            break
    radical = None
    if check_radical and i <= n:
        everything = frozenset(range(n))
        radical = all(
            _zeroed_rank(C, i, everything - support) >= expected
            for support in _product_supports(n, i)
        )
    return ConditionRow(i, expected, rank, height, radical)


def _generic_row(R: QuotientRing, C: FreeComplex, i: int, expected: int, check_radical: bool) -> ConditionRow:
    M = C.matrix(i)
    rank = rank_over_quotient(R, M)
    minors = minors_ideal(R, M, expected)
    height = _height_in(R, minors)
    radical = None
    d = len(C.parameters)
    if check_radical and i <= d:
        target = R.ideal(minors)
        radical = True
        for support in _product_supports(d, i):
            product = R.ring.one
            for a in sorted(support):
                product = product * R.ring.convert(C.parameters[a])
            if not radical_member(product, target):
                radical = False
                break
    return ConditionRow(i, expected, rank, height, radical)


def verify_rank_height(
    R: QuotientRing,
    C: FreeComplex,
    positions: Optional[Sequence[int]] = None,
    expected: Optional[Dict[int, int]] = None,
    check_radical: bool = True,
) -> RankHeightReport:
    """Check rank α_i = r_i and height I_{r_i}(α_i) ≥ i for each position.

    Args:
        R: Ring the complex lives over.
        C: The complex.
        positions: Which α_i to check; all by default.
        expected: Overrides for r_i (for truncated, non-acyclic complexes).
        check_radical: Also test Π (x_{j1}, ..., x_{ji}) ⊆ √I_{r_i}(α_i).

    Raises:
        PreconditionError: if the complex is over a different ring.
    """
    if C.ring.variables != R.ring.variables:
        raise PreconditionError("complex and ring have different variables")
    positions = list(positions) if positions is not None else list(range(1, C.length + 1))
    expected = expected or {}
    graded = C.scalars is not None and R.J.is_zero()
    rows = []
    for i in positions:
        if not 1 <= i <= C.length:
            raise PreconditionError(f"no map α_{i} in a complex of length {C.length}")
        r_i = expected.get(i, C.expected_rank(i))
        if graded:
            rows.append(_graded_row(C, i, r_i, check_radical))
        else:
            rows.append(_generic_row(R, C, i, r_i, check_radical))
    report = RankHeightReport(rows)
    logger.info("rank/height check over %r: %s", R, "pass" if report.passed else "fail")
    return report
