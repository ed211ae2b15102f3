"""Root data for supported reductive groups and their polytopes.

Supported factors: TORUS(k), GL(n) and SL(n), combined by direct product.
Weight coordinates are always a basis of the character lattice, which pins
the measure normalization used everywhere downstream:

  * GL(n) uses standard coordinates on Z^n; pairings with the coroot of
    e_i - e_j read lambda_i - lambda_j, and the chamber is
    lambda_1 >= ... >= lambda_n.
  * SL(n) uses fundamental-weight coordinates on Z^(n-1); the pairing with
    the j-th simple coroot is the j-th coordinate, and root vectors are
    columns of the Cartan matrix.
  * Tori contribute coordinates with no roots at all.

The interface (pairing forms, root vectors, reflections, chamber) is uniform
over factors, so other classical types would slot in without reshaping it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .geometry import Polytope, convex_hull, intersect_halfspaces
from .linalg import inverse
from .polynomials import Polynomial, homogeneous_top, product_of_linear_forms

Factor = Tuple[str, int]
Weight = Tuple[int, ...]


class RootSystem:
    """Immutable descriptor of a product of torus, GL and SL factors."""

    __slots__ = (
        "factors", "rank", "group_dim", "weyl_order",
        "positive_pairings", "rho_pairings", "positive_roots",
        "simple_pairings", "simple_roots", "chamber", "inner", "rho_int",
    )

    def __init__(self, factors: Sequence[Factor]):
        factors = tuple((str(kind), int(size)) for kind, size in factors)
        if not factors:
            raise ValueError("need at least one factor")
        rank = 0
        group_dim = 0
        weyl_order = 1
        pos_pair, rho_pair, pos_root = [], [], []
        simp_pair, simp_root = [], []
        inner_blocks = []
        rho_int = []
        for kind, size in factors:
            if kind == "torus":
                if size < 1:
                    raise ValueError("torus factor needs rank >= 1")
                block = _TorusBlock(size)
            elif kind == "gl":
                if size < 1:
                    raise ValueError("GL factor needs n >= 1")
                block = _GLBlock(size)
            elif kind == "sl":
                if size < 2:
                    raise ValueError("SL factor needs n >= 2")
                block = _SLBlock(size)
            else:
                raise ValueError(f"unknown factor kind {kind!r}")
            offset = rank
            rank += block.rank
            group_dim += block.group_dim
            weyl_order *= block.weyl_order
            for p, rp, rv in block.positive:
                pos_pair.append((offset, p))
                rho_pair.append(rp)
                pos_root.append((offset, rv))
            for p, rv in block.simple:
                simp_pair.append((offset, p))
                simp_root.append((offset, rv))
            inner_blocks.append(block.inner)
            rho_int.extend(block.rho_int)

        def embed(offset_vec):
            offset, v = offset_vec
            out = [0] * rank
            for i, x in enumerate(v):
                out[offset + i] = x
            return tuple(out)

        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "group_dim", group_dim)
        object.__setattr__(self, "weyl_order", weyl_order)
        object.__setattr__(self, "positive_pairings",
                           tuple(embed(x) for x in pos_pair))
        object.__setattr__(self, "rho_pairings", tuple(rho_pair))
        object.__setattr__(self, "positive_roots",
                           tuple(embed(x) for x in pos_root))
        object.__setattr__(self, "simple_pairings",
                           tuple(embed(x) for x in simp_pair))
        object.__setattr__(self, "simple_roots",
                           tuple(embed(x) for x in simp_root))
        object.__setattr__(self, "chamber", tuple(
            (tuple(-x for x in pairing), Fraction(0))
            for pairing in self.simple_pairings
        ))
        gram = _block_diag(inner_blocks, rank)
        object.__setattr__(self, "inner", gram)
        object.__setattr__(self, "rho_int", tuple(rho_int))
        npos = len(self.positive_pairings)
        assert 2 * npos == group_dim - rank, "positive-root count is (m-n)/2"

    def __setattr__(self, *a):
        raise AttributeError("RootSystem is immutable")

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        bits = "x".join(f"{k.upper()}({s})" for k, s in self.factors)
        return f"RootSystem({bits})"

    def inner_product(self, u: Sequence, v: Sequence) -> Fraction:
        total = Fraction(0)
        for i, row in enumerate(self.inner):
            if u[i]:
                total += u[i] * sum(row[j] * v[j] for j in range(self.rank))
        return total


class _TorusBlock:
    def __init__(self, k):
        self.rank = k
        self.group_dim = k
        self.weyl_order = 1
        self.positive = []
        self.simple = []
        self.inner = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        self.rho_int = [0] * k


class _GLBlock:
    def __init__(self, n):
        self.rank = n
        self.group_dim = n * n
        self.weyl_order = math.factorial(n)
        self.positive = []
        for i in range(n):
            for j in range(i + 1, n):
                vec = tuple(1 if t == i else -1 if t == j else 0 for t in range(n))
                self.positive.append((vec, j - i, vec))
        self.simple = [
            (p, r) for (p, rp, r) in self.positive
            if rp == 1
        ]
        self.inner = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        self.rho_int = [n - 1 - i for i in range(n)]


class _SLBlock:
    def __init__(self, n):
        r = n - 1
        self.rank = r
        self.group_dim = n * n - 1
        self.weyl_order = math.factorial(n)
        cartan = [
            [2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)]
            for i in range(r)
        ]
        self.positive = []
        for i in range(n):
            for j in range(i + 1, n):
                # alpha_{i+1} + ... + alpha_j in simple roots (1-based window)
                pairing = tuple(1 if i <= t < j else 0 for t in range(r))
                root = tuple(
                    sum(cartan[t][k] for k in range(i, j) if k < r)
                    for t in range(r)
                )
                self.positive.append((pairing, j - i, root))
        self.simple = [
            (p, r_) for (p, rp, r_) in self.positive if rp == 1
        ]
        self.inner = inverse(cartan)
        self.rho_int = [1] * r


def _block_diag(blocks, rank):
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    offset = 0
    for block in blocks:
        k = len(block)
        for i in range(k):
            for j in range(k):
                gram[offset + i][offset + j] = Fraction(block[i][j])
        offset += k
    return tuple(tuple(row) for row in gram)


@lru_cache(maxsize=None)
def root_system(factors: Tuple[Factor, ...]) -> RootSystem:
    return RootSystem(factors)


def gl(n: int) -> RootSystem:
    return root_system((("gl", n),))


def sl(n: int) -> RootSystem:
    return root_system((("sl", n),))


def torus(k: int) -> RootSystem:
    return root_system((("torus", k),))


def pairing(form: Sequence[int], weight: Sequence) -> int:
    return sum(a * x for a, x in zip(form, weight))


def is_dominant(rd: RootSystem, weight: Sequence) -> bool:
    return all(pairing(p, weight) >= 0 for p in rd.simple_pairings)


def simple_reflect(rd: RootSystem, i: int, weight: Weight) -> Weight:
    c = pairing(rd.simple_pairings[i], weight)
    root = rd.simple_roots[i]
    return tuple(x - c * a for x, a in zip(weight, root))


def weyl_orbit(rd: RootSystem, weight: Sequence) -> set:
    """Full W-orbit by BFS over simple reflections."""
    start = tuple(int(x) for x in weight)
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for w in frontier:
            for i in range(len(rd.simple_pairings)):
                img = simple_reflect(rd, i, w)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    assert rd.weyl_order % len(seen) == 0 or len(seen) <= rd.weyl_order
    return seen


def dominant_representative(rd: RootSystem, weight: Sequence) -> Weight:
    """The unique chamber point in the orbit, by reflection descent."""
    w = tuple(int(x) for x in weight)
    for _ in range(100000):
        neg = next(
            (i for i, p in enumerate(rd.simple_pairings) if pairing(p, w) < 0),
            None,
        )
        if neg is None:
            return w
        w = simple_reflect(rd, neg, w)
    raise RuntimeError("reflection descent failed to terminate")


@lru_cache(maxsize=None)
def weyl_dim_polynomial(rd: RootSystem) -> Polynomial:
    """The polynomial whose value at a dominant weight is dim V_lambda."""
    forms = [
        (pairing_vec, rho)
        for pairing_vec, rho in zip(rd.positive_pairings, rd.rho_pairings)
    ]
    poly = product_of_linear_forms(forms, num_vars=rd.rank)
    denom = 1
    for rho in rd.rho_pairings:
        denom *= rho
    return poly * Fraction(1, denom)


@lru_cache(maxsize=None)
def phi_w(rd: RootSystem) -> Polynomial:
    """Top homogeneous part of the dimension polynomial."""
    return homogeneous_top(weyl_dim_polynomial(rd))


def weyl_dim(rd: RootSystem, weight: Sequence) -> int:
    """dim V_lambda by the direct product formula (fast path)."""
    num = 1
    den = 1
    for form, rho in zip(rd.positive_pairings, rd.rho_pairings):
        num *= pairing(form, weight) + rho
        den *= rho
    if num % den:
        raise ValueError(f"non-integral dimension at {tuple(weight)}")
    return num // den


@dataclass(frozen=True)
class WeightSet:
    """Finite nonempty set of lattice weights tagged with its root data."""

    rd: RootSystem
    points: tuple

    def __init__(self, rd: RootSystem, points):
        pts = tuple(sorted({tuple(int(x) for x in p) for p in points}))
        if not pts:
            raise ValueError("weight set must be nonempty")
        if any(len(p) != rd.rank for p in pts):
            raise ValueError("weight dimension does not match root data rank")
        object.__setattr__(self, "rd", rd)
        object.__setattr__(self, "points", pts)

    def is_dominant(self) -> bool:
        return all(is_dominant(self.rd, p) for p in self.points)


def _require_dominant(a: WeightSet):
    if not a.is_dominant():
        raise ValueError("weights must be dominant")


def weight_polytope(a: WeightSet) -> Polytope:
    """Convex hull of the union of Weyl orbits of the (dominant) weights."""
    _require_dominant(a)
    pts = set()
    for p in a.points:
        pts |= weyl_orbit(a.rd, p)
    return convex_hull(list(pts))


def moment_polytope(a: WeightSet) -> Polytope:
    """Weight polytope cut to the positive chamber; may be non-integral."""
    _require_dominant(a)
    return intersect_halfspaces(weight_polytope(a), a.rd.chamber)
