"""Closed-form Ehrhart polynomial for lattice-face input, and a brute-force counting oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import DEFAULT_BUDGET
from .errors import BudgetExceeded, DimensionError
from .exactmath import UniPoly, lagrange_interpolate
from .geometry import Polytope, lattice_points, project, volume
from .latticeface import require_lattice_face


@dataclass(frozen=True)
class EhrhartResult:
    poly: UniPoly
    per_level_volumes: tuple  # Vol_k of the (d-k)-fold projection, k = 0..d
    method: str  # "formula" or "interpolation"


def level_volumes(p: Polytope) -> tuple:
    """(1, Vol_1(π^{d-1} P), ..., Vol_d(P))."""
    vols = [Fraction(1)]
    for k in range(1, p.dim + 1):
        vols.append(volume(project(p, p.dim - k)))
    return tuple(vols)


def ehrhart_formula(p: Polytope) -> EhrhartResult:
    """i(P, m) = sum_k Vol_k(π^{(d-k)}(P)) m^k, for lattice-face P."""
    require_lattice_face(p)
    vols = level_volumes(p)
    return EhrhartResult(UniPoly(vols), vols, "formula")


def interior_formula(p: Polytope) -> UniPoly:
    """Interior count of mP: sum_k (-1)^{d-k} Vol_k(π^{(d-k)}(P)) m^k."""
    require_lattice_face(p)
    d = p.dim
    return UniPoly((-1) ** (d - k) * v for k, v in enumerate(level_volumes(p)))


def reciprocity_holds(p: Polytope) -> bool:
    """i(P, -m) = (-1)^d î(P, m) as polynomials."""
    poly = ehrhart_formula(p).poly
    return poly.compose_linear(-1) == interior_formula(p) * (-1) ** p.dim


def brute_count(p: Polytope, m: int = 1, region: str = "full", budget: int = DEFAULT_BUDGET) -> int:
    """Lattice points of mP by scanning its integer bounding box.

    ``region`` selects the closed polytope ("full"), its interior
    ("interior"), or its nonnegative part ("omega").
    """
    if region not in ("full", "interior", "omega"):
        raise ValueError(f"unknown region {region!r}")
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    if m == 0:
        if region != "full":
            return 0
        return 1 if all(c.denominator == 1 for v in p.vertices for c in v) else 0
    box = p.bounding_box(m)
    size = math.prod(hi - lo + 1 for lo, hi in box)
    if size > budget:
        raise BudgetExceeded(f"bounding box of {size} points exceeds budget {budget}")
    facets = p.facets
    count = 0
    for x in lattice_points(box):
        for f in facets:
            lhs = 0
            for n, c in zip(f.normal, x):
                lhs += n * c
            rhs = f.offset * m
            if lhs > rhs or (lhs == rhs and (region == "interior" or (region == "omega" and f.normal[-1] < 0))):
                break
        else:
            count += 1
    return count


def interpolate_ehrhart(p: Polytope, budget: int = DEFAULT_BUDGET) -> EhrhartResult:
    """Degree-d polynomial through brute counts at m = 1..d+1; checks i(P,0) = 1."""
    if any(c.denominator != 1 for v in p.vertices for c in v):
        raise DimensionError("interpolation needs an integral polytope")
    d = p.dim
    ms = list(range(1, d + 2))
    counts = [brute_count(p, m, "full", budget) for m in ms]
    poly = lagrange_interpolate(ms, counts)
    if poly(0) != 1:
        raise AssertionError(f"interpolated polynomial has constant term {poly(0)}, expected 1")
    vols = tuple(poly.coeff(k) for k in range(d + 1))
    return EhrhartResult(poly, vols, "interpolation")
