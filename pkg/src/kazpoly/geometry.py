"""Exact rational convex geometry.

Polytopes carry both a canonical V-representation (lexicographically sorted
irredundant vertex list) and an H-representation (primitive integer normals
with rational offsets, meaning <normal, x> <= offset).  Lower-dimensional
polytopes include their affine-hull equations as inequality pairs.  All
arithmetic is over Fraction; there is no floating point anywhere.

Volumes are lattice-normalized: the unit cell of Z^n has volume 1.  Every
object is immutable after construction and every operation is a pure
function, so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import (
    det,
    dot,
    frac_vec,
    hyperplane_normal,
    inverse,
    lattice_basis_of_span,
    nullspace,
    primitive,
    rank,
    solve,
    vec_add,
    vec_scale,
    vec_sub,
)

Point = tuple  # tuple of Fraction
Halfspace = tuple  # (normal tuple, offset) meaning <normal, x> <= offset


class Polytope:
    """Immutable rational polytope with canonical V- and H-representations."""

    __slots__ = ("ambient_dim", "vertices", "facets", "intrinsic_dim")

    def __init__(self, ambient_dim, vertices, facets, intrinsic_dim):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "intrinsic_dim", intrinsic_dim)

    def __setattr__(self, *a):
        raise AttributeError("Polytope is immutable")

    @staticmethod
    def empty(ambient_dim: int) -> "Polytope":
        return Polytope(ambient_dim, (), (), -1)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, point: Sequence) -> bool:
        if self.is_empty:
            return False
        p = frac_vec(point)
        return all(dot(normal, p) <= offset for normal, offset in self.facets)

    def __eq__(self, other) -> bool:
        # canonical vertex lists decide equality
        return (
            isinstance(other, Polytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        if self.is_empty:
            return f"Polytope.empty({self.ambient_dim})"
        return (
            f"Polytope(dim={self.intrinsic_dim}/{self.ambient_dim}, "
            f"{len(self.vertices)} vertices, {len(self.facets)} facets)"
        )


@dataclass(frozen=True)
class Simplex:
    """Affinely independent vertex tuple; the cell type used by triangulate."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(frac_vec(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        d = len(verts) - 1
        if d > 0:
            diffs = [vec_sub(v, verts[0]) for v in verts[1:]]
            if rank(diffs) != d:
                raise ValueError("degenerate simplex: vertices affinely dependent")

    @property
    def intrinsic_dim(self) -> int:
        return len(self.vertices) - 1


def _canonical_halfspace(normal: Sequence, offset) -> Halfspace:
    prim = primitive(normal)
    # positive scale factor carrying normal -> prim
    i = next(k for k, x in enumerate(prim) if x != 0)
    factor = Fraction(prim[i]) / Fraction(normal[i])
    return prim, Fraction(offset) * factor


def _point_facets(p: Point) -> list:
    """Axis-aligned equation pairs pinning a single point."""
    n = len(p)
    out = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        ne = tuple(-x for x in e)
        out.append((e, Fraction(p[i])))
        out.append((ne, -Fraction(p[i])))
    return sorted(out)


def _hull_1d(pts: list) -> tuple:
    lo, hi = pts[0], pts[-1]
    verts = (lo, hi)
    facets = sorted([((1,), Fraction(hi[0])), ((-1,), -Fraction(lo[0]))])
    return verts, facets


def _hull_full_dim(pts: list, simplex_pts: list) -> tuple:
    """Beneath-beyond hull of pts spanning R^d; simplex_pts seed the start.

    Facets are kept simplicial during insertion (coplanar pieces allowed) and
    merged into distinct supporting hyperplanes at the end; a candidate point
    is a vertex iff its tight hyperplane normals span R^d.
    """
    d = len(pts[0])
    if d == 1:
        return _hull_1d(pts)

    ref = vec_scale(
        tuple(sum(col) for col in zip(*simplex_pts)), Fraction(1, d + 1)
    )
    index = {p: i for i, p in enumerate(pts)}
    simplex_ids = [index[p] for p in simplex_pts]

    facets = {}  # fid -> (frozenset vertex ids, normal, offset)
    ridge_map = {}  # frozenset of d-1 ids -> set of fids
    next_fid = 0

    def oriented_hyperplane(vert_ids):
        vlist = [pts[i] for i in vert_ids]
        diffs = [vec_sub(v, vlist[0]) for v in vlist[1:]]
        normal = hyperplane_normal(diffs, d)
        if normal is None:
            raise ValueError("facet vertices affinely dependent")
        offset = dot(normal, vlist[0])
        side = dot(normal, ref)
        if side == offset:
            raise ValueError("interior reference on facet hyperplane")
        if side > offset:
            normal, offset = tuple(-x for x in normal), -offset
        return normal, offset

    def add_facet(vert_ids):
        nonlocal next_fid
        vs = frozenset(vert_ids)
        normal, offset = oriented_hyperplane(sorted(vs))
        fid = next_fid
        next_fid += 1
        facets[fid] = (vs, normal, offset)
        for drop in vs:
            ridge_map.setdefault(vs - {drop}, set()).add(fid)

    def remove_facet(fid):
        vs, _, _ = facets.pop(fid)
        for drop in vs:
            r = vs - {drop}
            ridge_map[r].discard(fid)
            if not ridge_map[r]:
                del ridge_map[r]

    for combo in itertools.combinations(simplex_ids, d):
        add_facet(combo)

    for p in pts:
        q = index[p]
        if q in simplex_ids:
            continue
        visible = [
            fid for fid, (_, normal, offset) in facets.items()
            if dot(normal, p) > offset
        ]
        if not visible:
            continue
        visible_set = set(visible)
        horizon = []
        for fid in visible:
            vs = facets[fid][0]
            for drop in vs:
                r = vs - {drop}
                others = ridge_map[r] - {fid}
                if others and next(iter(others)) not in visible_set:
                    horizon.append(r)
        for fid in visible:
            remove_facet(fid)
        for r in horizon:
            add_facet(r | {q})

    # merge coplanar simplicial pieces into distinct supporting hyperplanes
    hyperplanes = {}
    candidates = set()
    for vs, normal, offset in facets.values():
        hyperplanes[_canonical_halfspace(normal, offset)] = True
        candidates.update(vs)
    hs_list = sorted(hyperplanes)

    verts = []
    for q in sorted(candidates):
        p = pts[q]
        tight = [normal for normal, offset in hs_list if dot(normal, p) == offset]
        if rank(tight) == d:
            verts.append(p)
    return tuple(sorted(verts)), hs_list


def _affine_frame(pts: list) -> tuple:
    """Greedy affine basis: (base point, independent direction list)."""
    p0 = pts[0]
    dirs = []
    basis_pts = [p0]
    for p in pts[1:]:
        dv = vec_sub(p, p0)
        if rank(dirs + [dv]) > len(dirs):
            dirs.append(dv)
            basis_pts.append(p)
    return p0, dirs, basis_pts


def _intrinsic_chart(p0: Point, dirs: list, n: int):
    """Affine chart t(x) on aff(p0 + span dirs) and its facet-lifting data.

    Returns (to_t, lift) where to_t maps an ambient point into R^d and lift
    maps an intrinsic halfspace back to an ambient one.
    """
    d = len(dirs)
    cols = []
    for j in range(n):
        trial = cols + [j]
        if rank([[dirs[i][c] for c in trial] for i in range(d)]) == len(trial):
            cols.append(j)
        if len(cols) == d:
            break
    s_t = [[dirs[i][c] for i in range(d)] for c in cols]  # rows indexed by cols
    w = inverse(s_t)  # t = w @ (x - p0)[cols]

    def to_t(x):
        delta = [x[c] - p0[c] for c in cols]
        return tuple(dot(w[i], delta) for i in range(d))

    def lift(g, h):
        coeff = [dot(g, [w[i][k] for i in range(d)]) for k in range(d)]
        a = [Fraction(0)] * n
        for k, c in enumerate(cols):
            a[c] = coeff[k]
        b = Fraction(h) + dot(a, p0)
        return tuple(a), b

    return to_t, lift


def _affine_pairs(p0: Point, dirs: list, n: int) -> list:
    pairs = []
    for e in nullspace(dirs, n):
        b = dot(e, p0)
        pairs.append(_canonical_halfspace(e, b))
        pairs.append(_canonical_halfspace(tuple(-x for x in e), -b))
    return pairs


def convex_hull(points: Iterable[Sequence]) -> Polytope:
    """Canonical hull of a nonempty point set, any intrinsic dimension."""
    pts = [frac_vec(p) for p in points]
    if not pts:
        raise ValueError("empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("mixed ambient dimensions")
    if n < 1:
        raise ValueError("ambient dimension must be >= 1")
    pts = sorted(set(pts))

    p0, dirs, basis_pts = _affine_frame(pts)
    d = len(dirs)
    if d == 0:
        return Polytope(n, (p0,), tuple(_point_facets(p0)), 0)
    if d == n:
        verts, facets = _hull_full_dim(pts, basis_pts)
        return Polytope(n, verts, facets, n)

    # lower-dimensional: hull inside an intrinsic chart, then lift
    to_t, lift = _intrinsic_chart(p0, dirs, n)
    t_pts = sorted({to_t(p): None for p in pts})
    back = {to_t(p): p for p in pts}
    tp0, tdirs, tbasis = _affine_frame(t_pts)
    t_verts, t_facets = _hull_full_dim(t_pts, tbasis)
    verts = tuple(sorted(back[t] for t in t_verts))
    facets = [_canonical_halfspace(*lift(g, h)) for g, h in t_facets]
    facets.extend(_affine_pairs(p0, dirs, n))
    return Polytope(n, verts, tuple(sorted(set(facets))), d)


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    if p.ambient_dim != q.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if p.is_empty or q.is_empty:
        return Polytope.empty(p.ambient_dim)
    return convex_hull(
        [vec_add(u, v) for u in p.vertices for v in q.vertices]
    )


def scale(p: Polytope, c) -> Polytope:
    c = Fraction(c)
    if c < 0:
        raise ValueError("negative scale factor")
    if p.is_empty:
        return p
    if c == 0:
        origin = tuple(Fraction(0) for _ in range(p.ambient_dim))
        return convex_hull([origin])
    return convex_hull([vec_scale(v, c) for v in p.vertices])


def lattice_points(p: Polytope) -> set:
    """All integer points of p, by bounding-box scan + H-rep membership."""
    if p.is_empty:
        return set()
    n = p.ambient_dim
    ranges = []
    for i in range(n):
        coords = [v[i] for v in p.vertices]
        ranges.append(range(math.ceil(min(coords)), math.floor(max(coords)) + 1))
    facets = p.facets
    found = set()
    for candidate in itertools.product(*ranges):
        if all(
            sum(a * x for a, x in zip(normal, candidate)) <= offset
            for normal, offset in facets
        ):
            found.add(candidate)
    return found


def intersect_halfspaces(p: Polytope, halfspaces: Sequence[Halfspace]) -> Polytope:
    """V-rep of p cut by extra halfspaces, via exhaustive tight-subset solving.

    The enumeration runs inside p's affine hull (intrinsic_dim-subsets of the
    combined constraints), per the desk-scale contract.  An empty intersection
    is the distinguished empty polytope, not an error.
    """
    if p.is_empty:
        return p
    extra = [(frac_vec(a), Fraction(b)) for a, b in halfspaces]
    if any(len(a) != p.ambient_dim for a, _ in extra):
        raise ValueError("halfspace dimension mismatch")
    if not extra:
        return p
    if all(dot(a, v) <= b for a, b in extra for v in p.vertices):
        return p

    n = p.ambient_dim
    if p.intrinsic_dim == 0:
        v = p.vertices[0]
        ok = all(dot(a, v) <= b for a, b in extra)
        return p if ok else Polytope.empty(n)

    p0, dirs, _ = _affine_frame(list(p.vertices))
    d = len(dirs)
    to_t, _ = _intrinsic_chart(p0, dirs, n)

    # transform all constraints into the chart: <g, t> <= h
    constraints = []
    combined = [(frac_vec(a), Fraction(b)) for a, b in p.facets] + extra
    for a, b in combined:
        g = tuple(dot(a, dv) for dv in dirs)
        h = b - dot(a, p0)
        if all(x == 0 for x in g):
            if h < 0:
                return Polytope.empty(n)
            continue
        constraints.append((g, h))

    feasible_t = set()
    for subset in itertools.combinations(range(len(constraints)), d):
        rows = [constraints[i][0] for i in subset]
        rhs = [constraints[i][1] for i in subset]
        t = solve(rows, rhs)
        if t is None:
            continue
        if all(dot(g, t) <= h for g, h in constraints):
            feasible_t.add(t)
    if not feasible_t:
        return Polytope.empty(n)
    points = [vec_add(p0, tuple(dot([dv[i] for dv in dirs], t) for i in range(n)))
              for t in feasible_t]
    return convex_hull(points)


def box_polytope(bounds: Sequence[tuple]) -> Polytope:
    """Axis-aligned box from (lo, hi) bounds per coordinate."""
    corners = itertools.product(*[(Fraction(lo), Fraction(hi)) for lo, hi in bounds])
    return convex_hull(list(corners))


def polytope_from_halfspaces(
    halfspaces: Sequence[Halfspace], bounds: Sequence[tuple]
) -> Polytope:
    """V-rep of an H-rep known to fit inside the given bounding box."""
    return intersect_halfspaces(box_polytope(bounds), halfspaces)


def _facet_vertex_sets(p: Polytope) -> list:
    out = []
    for normal, offset in p.facets:
        tight = tuple(v for v in p.vertices if dot(normal, v) == offset)
        out.append(((normal, offset), tight))
    return out


def triangulate(p: Polytope) -> list:
    """Simplices coning the first canonical vertex over the boundary.

    Cells have disjoint interiors, union p, and use only vertices of p.
    Facets containing the apex (including the affine-hull equation pairs of
    lower-dimensional polytopes) contribute nothing.
    """
    if p.is_empty:
        return []
    d = p.intrinsic_dim
    if d == 0:
        return [Simplex((p.vertices[0],))]
    if len(p.vertices) == d + 1:
        return [Simplex(p.vertices)]
    apex = p.vertices[0]
    cells = []
    for (normal, offset), tight in _facet_vertex_sets(p):
        if dot(normal, apex) == offset:
            continue
        face = convex_hull(tight)
        for cell in triangulate(face):
            cells.append(Simplex(cell.vertices + (apex,)))
    return cells


def volume(p: Polytope) -> Fraction:
    """Top-dimensional lattice-normalized volume; 0 below ambient dimension."""
    if p.is_empty or p.intrinsic_dim < p.ambient_dim:
        return Fraction(0)
    n = p.ambient_dim
    total = Fraction(0)
    for cell in triangulate(p):
        diffs = [vec_sub(v, cell.vertices[0]) for v in cell.vertices[1:]]
        total += abs(det(diffs))
    return total / math.factorial(n)


def simplex_lattice_volume(s: Simplex) -> Fraction:
    """Volume of a simplex against the induced lattice measure on its hull.

    For a full-dimensional simplex this is |det|/d!; below ambient dimension
    the edge vectors are rewritten in a basis of Z^n intersected with their
    span, so a fundamental cell of that sublattice has volume 1.
    """
    d = s.intrinsic_dim
    if d == 0:
        return Fraction(1)
    n = len(s.vertices[0])
    diffs = [vec_sub(v, s.vertices[0]) for v in s.vertices[1:]]
    if d == n:
        return abs(det(diffs)) / math.factorial(d)
    basis = lattice_basis_of_span(diffs, n)
    # coordinates of each edge vector in the sublattice basis
    coords = []
    for dv in diffs:
        sol = _solve_rectangular(basis, dv)
        coords.append(sol)
    return abs(det(coords)) / math.factorial(d)


def _solve_rectangular(basis: list, target: Sequence) -> tuple:
    """Coefficients expressing target in the given independent spanning set."""
    k = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    rhs = [dot(basis[i], target) for i in range(k)]
    sol = solve(gram, rhs)
    if sol is None:
        raise ValueError("target outside the span")
    return sol
