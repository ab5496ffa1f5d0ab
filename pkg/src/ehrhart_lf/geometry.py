"""Polytopes given by vertex lists, with exact facet and fiber computations.

A :class:`Polytope` is full-dimensional in its ambient space R^d and stores
its vertices in the order supplied.  Projection ``project(p, k)`` forgets
the last ``k`` coordinates.  The fiber over ``y`` in R^{d-1} is the vertical
segment ``{(y, t)} ∩ P``; the nonnegative part Ω(P) keeps each fiber minus
its lowest point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .errors import DimensionError, GeneralPositionError
from .exactmath import bordered, determinant, point, rank, sign


@dataclass(frozen=True)
class Facet:
    """Supporting hyperplane ``normal·x <= offset`` with integer, primitive data."""

    normal: tuple
    offset: int
    vertex_indices: tuple

    def slack(self, x) -> Fraction:
        return self.offset - sum(n * c for n, c in zip(self.normal, x))


@dataclass(frozen=True)
class Fiber:
    base: tuple
    lo: Optional[Fraction]
    hi: Optional[Fraction]

    @property
    def empty(self) -> bool:
        return self.lo is None


@dataclass(frozen=True)
class Check:
    """Boolean verdict carrying the first violating witness, if any."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def _hyperplane(points: Sequence[tuple]) -> tuple[list[Fraction], Fraction]:
    """Coefficients of det([[1, x], [1, p_0], ...]) = c0 + sum c_j x_j."""
    d = len(points[0])
    rows = bordered(points, d)
    coeffs = []
    for col in range(d + 1):
        minor = [r[:col] + r[col + 1:] for r in rows]
        coeffs.append((-1) ** col * determinant(minor))
    return coeffs[1:], -coeffs[0]


def _primitive(normal, offset) -> tuple[tuple, int]:
    vals = list(normal) + [offset]
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def facets_of(points: Sequence[tuple]) -> list[Facet]:
    """Facets of conv(points) by brute force over d-subsets.

    ``points`` must affinely span R^d.  Normals are outward, integral and
    primitive; duplicate hyperplanes are merged.
    """
    d = len(points[0])
    found: dict = {}
    for combo in itertools.combinations(range(len(points)), d):
        normal, offset = _hyperplane([points[i] for i in combo])
        if all(c == 0 for c in normal):
            continue
        normal, offset = _primitive(normal, offset)
        if (normal, offset) in found or (tuple(-c for c in normal), -offset) in found:
            continue
        vals = [sum(n * c for n, c in zip(normal, p)) - offset for p in points]
        if all(v <= 0 for v in vals):
            pass
        elif all(v >= 0 for v in vals):
            normal, offset = tuple(-c for c in normal), -offset
        else:
            continue
        on = tuple(i for i, v in enumerate(vals) if v == 0)
        found[(normal, offset)] = Facet(normal, offset, on)
    return list(found.values())


def affine_rank(points: Sequence[tuple]) -> int:
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


@dataclass(frozen=True)
class Polytope:
    """Full-dimensional polytope given by its (ordered) vertex list."""

    vertices: tuple
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        verts = tuple(point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise DimensionError("a polytope needs at least one vertex")
        d = len(verts[0])
        if d < 1 or any(len(v) != d for v in verts):
            raise DimensionError("vertices must share one ambient dimension >= 1")
        if len(set(verts)) != len(verts):
            raise DimensionError("vertices must be pairwise distinct")
        if affine_rank(verts) != d:
            raise DimensionError(f"vertices do not span R^{d}; the polytope is not full-dimensional")
        if len(verts) > d + 1:
            bad = [i for i in range(len(verts)) if i not in _extreme_indices(verts, self.facets)]
            if bad:
                raise DimensionError(f"points {bad} are not vertices of the hull; use Polytope.hull")

    @classmethod
    def hull(cls, points, name=None) -> "Polytope":
        """Polytope on the extreme points of ``points`` (order of first occurrence kept)."""
        pts = []
        for p in points:
            p = point(p)
            if p not in pts:
                pts.append(p)
        if affine_rank(pts) != len(pts[0]):
            raise DimensionError("points are not full-dimensional")
        keep = _extreme_indices(pts, facets_of(pts))
        return cls(tuple(pts[i] for i in sorted(keep)), name=name)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    @cached_property
    def facets(self) -> list[Facet]:
        return facets_of(self.vertices)

    def scaled(self, m) -> "Polytope":
        m = Fraction(m)
        return Polytope(tuple(tuple(m * c for c in v) for v in self.vertices), name=self.name)

    def contains(self, x, mode: str = "full", scale: int = 1) -> bool:
        """Membership of ``x`` in ``scale * P``.

        ``mode`` is "full", "interior", or "omega"; the last keeps a point
        unless it is the lowest point of its vertical fiber, i.e. it must lie
        strictly inside every facet whose normal points downward.
        """
        for f in self.facets:
            lhs = sum(n * c for n, c in zip(f.normal, x))
            rhs = f.offset * scale
            if lhs > rhs:
                return False
            if lhs == rhs and (mode == "interior" or (mode == "omega" and f.normal[-1] < 0)):
                return False
        return True

    def bounding_box(self, scale: int = 1) -> list[tuple[int, int]]:
        """Integer ranges covering ``scale * P`` in each coordinate."""
        out = []
        for j in range(self.dim):
            vals = [v[j] * scale for v in self.vertices]
            out.append((math.floor(min(vals)), math.ceil(max(vals))))
        return out

    def __len__(self):
        return len(self.vertices)


def _extreme_indices(points, facets) -> set:
    d = len(points[0])
    keep = set()
    for i in range(len(points)):
        normals = [f.normal for f in facets if i in f.vertex_indices]
        if len(normals) >= d and rank(normals) == d:
            keep.add(i)
    return keep


def as_polytope(p) -> Polytope:
    return p if isinstance(p, Polytope) else Polytope(tuple(p))


# ---------------------------------------------------------------------------
# projections, triangulation, volume


def project_point(x, k: int = 1) -> tuple:
    return tuple(x[: len(x) - k])


def project(p: Polytope, k: int = 1) -> Polytope:
    """Image of ``p`` under the map forgetting the last ``k`` coordinates."""
    if not 0 <= k < p.dim:
        raise DimensionError(f"cannot drop {k} coordinates of a {p.dim}-polytope")
    if k == 0:
        return p
    return Polytope.hull([v[: p.dim - k] for v in p.vertices])


def _pulling(points: list[tuple], idx: list[int]) -> list[tuple]:
    """Pulling triangulation of conv(points[idx]) inside R^e (full-dimensional)."""
    e = len(points[idx[0]])
    if len(idx) == e + 1:
        return [tuple(idx)]
    if e == 1:
        lo = min(idx, key=lambda i: points[i][0])
        hi = max(idx, key=lambda i: points[i][0])
        return [tuple(sorted((lo, hi)))]
    apex = idx[0]
    sub = [points[i] for i in idx]
    out = []
    for f in facets_of(sub):
        members = [idx[j] for j in f.vertex_indices]
        if apex in members:
            continue
        # drop a coordinate along which the facet projects injectively
        c = next(j for j, n in enumerate(f.normal) if n != 0)
        reduced = {i: points[i][:c] + points[i][c + 1:] for i in members}
        order = sorted(members)
        local = [reduced[i] for i in order]
        for simplex in _pulling(local, list(range(len(order)))):
            out.append(tuple(sorted((apex,) + tuple(order[j] for j in simplex))))
    return out


def triangulate(p: Polytope) -> list[Polytope]:
    """Pulling triangulation from the lowest-indexed vertex, no new vertices.

    Each simplex keeps the relative order of the original vertex list.
    """
    if p.is_simplex:
        return [p]
    verts = list(p.vertices)
    return [Polytope(tuple(verts[i] for i in s)) for s in _pulling(verts, list(range(len(verts))))]


def simplex_volume(vertices) -> Fraction:
    d = len(vertices[0])
    return abs(determinant(bordered(vertices, d))) / math.factorial(d)


def volume(p: Polytope) -> Fraction:
    return sum((simplex_volume(s.vertices) for s in triangulate(p)), Fraction(0))


# ---------------------------------------------------------------------------
# fibers and the nonnegative part


def fiber(y, p: Polytope) -> Fiber:
    """Vertical segment of ``p`` over ``y`` in R^{d-1} (empty if y ∉ π(p))."""
    y = point(y)
    if len(y) != p.dim - 1:
        raise DimensionError(f"base point must have {p.dim - 1} coordinates")
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for f in p.facets:
        rest = f.offset - sum(n * c for n, c in zip(f.normal[:-1], y))
        nd = f.normal[-1]
        if nd == 0:
            if rest < 0:
                return Fiber(y, None, None)
        elif nd > 0:
            bound = Fraction(rest, nd)
            hi = bound if hi is None else min(hi, bound)
        else:
            bound = Fraction(rest, nd)
            lo = bound if lo is None else max(lo, bound)
    if lo is None or hi is None or lo > hi:
        return Fiber(y, None, None)
    return Fiber(y, lo, hi)


def omega_contains(x, p: Polytope) -> bool:
    """Whether ``x`` lies in P with its fiber's lowest point removed."""
    x = point(x)
    fb = fiber(x[:-1], p)
    if fb.empty:
        return False
    return fb.lo < x[-1] <= fb.hi


# ---------------------------------------------------------------------------
# general position and facet signs of simplices


def general_position_check(p: Polytope) -> Check:
    """Every (k+1)-subset of vertices projects to a k-simplex in R^k."""
    verts = p.vertices
    for k in range(1, p.dim):
        for subset in itertools.combinations(range(len(verts)), k + 1):
            if determinant(bordered([verts[i] for i in subset], k)) == 0:
                return Check(False, subset)
    return Check(True)


def x_matrix(vertices, sigma, k: int) -> list[list[Fraction]]:
    """Rows (1, x_1..x_k) of v_sigma(1..k) followed by the last vertex."""
    rows = [vertices[sigma[i]] for i in range(k)] + [vertices[-1]]
    return bordered(rows, k)


def y_matrix(vertices, sigma, k: int) -> list[list[Fraction]]:
    """Rows (1, x_1..x_{k-1}) of v_sigma(1..k)."""
    return bordered([vertices[sigma[i]] for i in range(k)], k - 1)


def facet_sign(p: Polytope, i: int) -> int:
    """Sign (+1 upper, -1 lower) of the facet opposite vertex ``i`` (0-based).

    Determinant route: for i < d pick a permutation ending in i and compare
    det X(σ,d) with det X(σ,d-1); the facet opposite the last vertex has sign
    -sign(det X(1,d)/det Y(1,d)).
    """
    if not p.is_simplex:
        raise DimensionError("facet signs are defined here for simplices only")
    d = p.dim
    verts = p.vertices
    if i < d:
        sigma = tuple(j for j in range(d) if j != i) + (i,)
        num = determinant(x_matrix(verts, sigma, d))
        den = determinant(x_matrix(verts, sigma, d - 1))
        if den == 0 or num == 0:
            raise GeneralPositionError("zero determinant in facet sign", subset=sigma)
        return sign(num) * sign(den)
    ident = tuple(range(d))
    num = determinant(x_matrix(verts, ident, d))
    den = determinant(y_matrix(verts, ident, d))
    if den == 0 or num == 0:
        raise GeneralPositionError("zero determinant in facet sign", subset=ident)
    return -sign(num) * sign(den)


def facet_sign_geometric(p: Polytope, i: int) -> int:
    """Facet sign from the definition: where does the facet centroid sit in its fiber."""
    others = [v for j, v in enumerate(p.vertices) if j != i]
    c = tuple(sum(col, Fraction(0)) / len(others) for col in zip(*others))
    fb = fiber(c[:-1], p)
    if fb.empty or fb.lo == fb.hi:
        return 0
    if c[-1] == fb.hi:
        return 1
    if c[-1] == fb.lo:
        return -1
    return 0


def lattice_points(box: Sequence[tuple[int, int]], step: Fraction = Fraction(1)) -> Iterator[tuple]:
    """All points of ``step * Z^d`` inside the integer box."""
    if step == 1:
        ranges = [range(lo, hi + 1) for lo, hi in box]
        return itertools.product(*ranges)
    q = Fraction(step)
    ranges = [
        [Fraction(t) * q for t in range(math.ceil(lo / q), math.floor(hi / q) + 1)] for lo, hi in box
    ]
    return itertools.product(*ranges)
