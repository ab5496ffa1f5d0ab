"""Lattice-face test, determinant ratios z(σ,k), and the normalising map T_σ.

Permutations are tuples of 0-based vertex indices: ``sigma[i]`` is the
vertex placed in row ``i``.  The last vertex of a simplex is never
permuted.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GeneralPositionError, NotLatticeFaceError
from .exactmath import bordered, determinant, format_rational, is_integer, solve_affine
from .geometry import Check, Polytope, x_matrix, y_matrix


@dataclass(frozen=True)
class LatticeFaceWitness:
    """First (k, U) pair violating the lattice-face conditions."""

    k: int
    subset: tuple
    reason: str  # "general_position" or "lattice"
    detail: str = ""

    def as_dict(self, p: Optional[Polytope] = None) -> dict:
        out = {"k": self.k, "subset": list(self.subset), "reason": self.reason, "detail": self.detail}
        if p is not None:
            out["points"] = [[format_rational(c) for c in p.vertices[i]] for i in self.subset]
        return out


def is_lattice_face(p: Polytope) -> Check:
    """Flat form of the lattice-face conditions.

    For each k < d and each (k+1)-subset U, the projection of U onto the
    first k coordinates must be affinely independent, and on the affine span
    of U every later coordinate must be an integer-affine function of the
    first k (so that dropping the last d-k coordinates maps the lattice of
    the span onto Z^k).
    """
    verts = p.vertices
    d = p.dim
    for k in range(d):
        for subset in itertools.combinations(range(len(verts)), k + 1):
            pts = [verts[i] for i in subset]
            if k and determinant(bordered(pts, k)) == 0:
                return Check(False, LatticeFaceWitness(k, subset, "general_position",
                                                       "projected points are affinely dependent"))
            base = solve_affine(pts, [0] * k)
            for j in range(k, d):
                if not is_integer(base[j]):
                    return Check(False, LatticeFaceWitness(
                        k, subset, "lattice",
                        f"x{j + 1} = {format_rational(base[j])} over the origin of the first {k} coordinates"))
            for t in range(k):
                unit = [0] * k
                unit[t] = 1
                w = solve_affine(pts, unit)
                for j in range(k, d):
                    slope = w[j] - base[j]
                    if not is_integer(slope):
                        return Check(False, LatticeFaceWitness(
                            k, subset, "lattice",
                            f"coefficient {format_rational(slope)} of x{t + 1} in x{j + 1}"))
    return Check(True)


def require_lattice_face(p: Polytope) -> None:
    chk = is_lattice_face(p)
    if not chk:
        w = chk.witness
        raise NotLatticeFaceError(f"not lattice-face at k={w.k}, subset {w.subset}: {w.detail}", witness=w)


# ---------------------------------------------------------------------------
# determinant ratios


@dataclass(frozen=True)
class ZVector:
    sigma: tuple
    values: tuple  # z(σ,1..d); z(σ,0) = 1 is implicit

    def with_zero(self) -> tuple:
        return (Fraction(1),) + self.values


def z_values(p: Polytope, sigma) -> ZVector:
    """z(σ,k) = det X(σ,k) / det Y(σ,k) for k = 1..d."""
    d = p.dim
    sigma = tuple(sigma)
    vals = []
    for k in range(1, d + 1):
        den = determinant(y_matrix(p.vertices, sigma, k))
        if den == 0:
            raise GeneralPositionError(f"det Y(σ,{k}) vanishes", subset=sigma[:k])
        vals.append(determinant(x_matrix(p.vertices, sigma, k)) / den)
    return ZVector(sigma, tuple(vals))


def ratio_integrality(zv: ZVector) -> bool:
    """z(σ,k)/z(σ,k-1) is an integer for every k."""
    zs = zv.with_zero()
    for prev, cur in zip(zs, zs[1:]):
        if prev == 0 or not is_integer(cur / prev):
            return False
    return True


def permutations(d: int):
    return itertools.permutations(range(d))


def perm_sign(sigma) -> int:
    s = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


# ---------------------------------------------------------------------------
# the affine map T_σ


@dataclass(frozen=True)
class AffineTransform:
    """x ↦ translation + x·matrix (row vector convention)."""

    translation: tuple
    matrix: tuple  # d x d, row-major

    def __call__(self, x) -> tuple:
        d = len(self.translation)
        return tuple(
            self.translation[k] + sum((Fraction(x[j]) * self.matrix[j][k] for j in range(d)), Fraction(0))
            for k in range(d)
        )

    def inverse(self, y) -> tuple:
        # unit upper triangular: solve coordinate by coordinate
        d = len(self.translation)
        x = []
        for k in range(d):
            acc = Fraction(y[k]) - self.translation[k]
            acc -= sum((x[j] * self.matrix[j][k] for j in range(k)), Fraction(0))
            x.append(acc)
        return tuple(x)

    @property
    def is_integral(self) -> bool:
        return all(is_integer(c) for c in self.translation) and all(
            is_integer(c) for row in self.matrix for c in row
        )

    @property
    def determinant(self) -> Fraction:
        return determinant(self.matrix)


def _minor(sigma, vertices, k: int, j: int) -> Fraction:
    """m(σ,k;j): minor of X~(σ,k;x) without the last row and column j."""
    rows = bordered([vertices[sigma[i]] for i in range(k)], k)
    return determinant([r[:j] + r[j + 1:] for r in rows])


def t_sigma(p: Polytope, sigma, require_integral: bool = False) -> AffineTransform:
    """The unit upper triangular map sending x to (det X~(σ,k;x)/det Y(σ,k))_k."""
    d = p.dim
    sigma = tuple(sigma)
    translation = []
    matrix = [[Fraction(int(j == k)) for k in range(d)] for j in range(d)]
    for k in range(1, d + 1):
        dy = _minor(sigma, p.vertices, k, k)
        if dy == 0:
            raise GeneralPositionError(f"det Y(σ,{k}) vanishes", subset=sigma[:k])
        translation.append((-1) ** k * _minor(sigma, p.vertices, k, 0) / dy)
        for j in range(1, k):
            matrix[j - 1][k - 1] = (-1) ** (k + j) * _minor(sigma, p.vertices, k, j) / dy
    t = AffineTransform(tuple(translation), tuple(tuple(r) for r in matrix))
    if require_integral and not t.is_integral:
        raise NotLatticeFaceError(f"T_σ for σ={sigma} has non-integer entries")
    return t


# ---------------------------------------------------------------------------
# vertex ordering and instance generation


def canonical_order(p: Polytope) -> Polytope:
    """First reordering (lexicographic in the index permutation) with det X(1,d) > 0 and det Y(1,d) > 0."""
    d = p.dim
    ident = tuple(range(d))
    for order in itertools.permutations(range(d + 1)):
        verts = tuple(p.vertices[i] for i in order)
        if determinant(x_matrix(verts, ident, d)) > 0 and determinant(y_matrix(verts, ident, d)) > 0:
            return Polytope(verts, name=p.name)
    raise GeneralPositionError("no vertex order makes det X and det Y positive")


def is_canonical(p: Polytope) -> bool:
    d = p.dim
    ident = tuple(range(d))
    return determinant(x_matrix(p.vertices, ident, d)) > 0 and determinant(y_matrix(p.vertices, ident, d)) > 0


def shear(points, rng: random.Random, spread: int = 1) -> list[tuple]:
    """Random unit upper triangular integer shear plus integer translation."""
    d = len(points[0])
    m = [[1 if j == k else (rng.randint(-spread, spread) if j < k else 0) for k in range(d)] for j in range(d)]
    shift = [rng.randint(-spread, spread) for _ in range(d)]
    return [tuple(shift[k] + sum(Fraction(x[j]) * m[j][k] for j in range(d)) for k in range(d)) for x in points]


def _curve_simplex(d: int, rng: random.Random, bound: int) -> list[tuple]:
    # Newton basis p_k(t) = prod_{i<k} (t - r_i): monic integer polynomials, hence a
    # unimodular shear of the moment curve; nodes r_i drawn from the sample keep values small
    width = d + 1 + rng.randint(0, max(0, min(2, bound - d - 1)))
    start = rng.randint(-width // 2, 0)
    ts = sorted(rng.sample(range(start, start + width), d + 1))
    roots = rng.sample(ts, d)
    pts = []
    for t in ts:
        coords, acc = [], 1
        for k in range(d):
            acc *= t - roots[k]
            coords.append(Fraction(acc))
        pts.append(tuple(coords))
    return pts


def generate_lattice_face_simplex(d: int, seed: int, bound: int = 10, attempts: int = 200) -> Polytope:
    """A verified lattice-face d-simplex, deterministic per seed.

    Tries rejection sampling of small integer vertex sets first, then falls
    back to points on a sheared moment curve.  The result is then randomly
    sheared, reflected in the last coordinate and occasionally dilated,
    all of which preserve the lattice-face property.
    """
    if not 1 <= d <= 4:
        raise ValueError("generator supports 1 <= d <= 4")
    rng = random.Random(seed)
    if d == 1:
        a = rng.randint(-bound, bound)
        return Polytope(((Fraction(a),), (Fraction(a + rng.randint(1, bound)),)))
    radius = max(1, bound // (2 if d <= 2 else 4))
    pts = None
    for _ in range(attempts if d <= 3 else attempts // 4):
        cand = [tuple(Fraction(rng.randint(-radius, radius)) for _ in range(d)) for _ in range(d + 1)]
        if len(set(cand)) < d + 1 or determinant(bordered(cand, d)) == 0:
            continue
        if is_lattice_face(Polytope(tuple(cand))):
            pts = cand
            break
    if pts is None:
        pts = _curve_simplex(d, rng, bound)
    pts = shear(pts, rng)
    if rng.random() < 0.5:
        pts = [x[:-1] + (-x[-1],) for x in pts]
    if d <= 3 and rng.random() < 0.2:
        pts = [tuple(2 * c for c in x) for x in pts]
    rng.shuffle(pts)
    poly = Polytope(tuple(pts))
    chk = is_lattice_face(poly)
    if not chk:
        raise RuntimeError(f"generator produced a non-lattice-face simplex (seed {seed}): {chk.witness}")
    return poly
