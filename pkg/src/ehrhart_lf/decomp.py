"""Signed decomposition of Ω(P) for a simplex in general position.

Each permutation σ of the first d vertices yields a chain of points
v_{σ,0}, ..., v_{σ,d} = v_{d+1} and a cell S_σ: the points whose k-fold
truncations lie in Ω of the truncated chain hulls.  Summing the cells with
signs sign(σ,P) recovers Ω(P) pointwise.  For lattice-face simplices the
cells can be counted in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .bernoulli import DEFAULT_BUDGET, g_d, nested_sum_signed
from .errors import BudgetExceeded, DimensionError, GeneralPositionError, NotLatticeFaceError
from .exactmath import bordered, determinant, format_rational, sign, solve_affine
from .geometry import Polytope, fiber, lattice_points, omega_contains, x_matrix
from .latticeface import (
    ZVector,
    canonical_order,
    is_canonical,
    perm_sign,
    permutations,
    ratio_integrality,
    require_lattice_face,
    z_values,
)


@dataclass
class VerifyReport:
    """Outcome of comparing a formula with an oracle or an identity's two sides."""

    name: str
    ok: bool
    values: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    checked: int = 0

    def as_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return format_rational(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            return v

        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "values": enc(self.values),
            "violations": enc(self.violations[:20]),
        }


def _require_simplex(p: Polytope) -> None:
    if not p.is_simplex:
        raise DimensionError("the signed decomposition is defined for simplices; triangulate first")


# ---------------------------------------------------------------------------
# cells


def chain_points(p: Polytope, sigma) -> tuple:
    """v_{σ,0..d}: v_{σ,k} shares its first k coordinates with the last vertex
    and lies on the affine span of v_σ(1), ..., v_σ(k+1)."""
    _require_simplex(p)
    d = p.dim
    last = p.vertices[-1]
    chain = []
    for k in range(d):
        pts = [p.vertices[sigma[i]] for i in range(k + 1)]
        try:
            chain.append(solve_affine(pts, last[:k]))
        except GeneralPositionError:
            raise GeneralPositionError("chain point undefined", subset=tuple(sigma[: k + 1])) from None
    chain.append(last)
    return tuple(chain)


def cell_sign(p: Polytope, sigma, zv: Optional[ZVector] = None) -> int:
    """sign(det X(σ,d)) * sign(prod z(σ,i))."""
    _require_simplex(p)
    zv = zv or z_values(p, sigma)
    if any(z == 0 for z in zv.values):
        raise GeneralPositionError("zero z-value", subset=tuple(sigma))
    s = sign(determinant(x_matrix(p.vertices, tuple(sigma), p.dim)))
    for z in zv.values:
        s *= sign(z)
    return s


@dataclass(frozen=True)
class CellDescriptor:
    sigma: tuple
    sign: int
    chain: tuple
    zvec: ZVector
    avec: tuple  # a(σ,k) = z(σ,k)/|z(σ,k-1)|
    levels: tuple = field(repr=False, compare=False)  # truncated chain hulls, one per k

    def contains(self, x) -> bool:
        """Membership in S_σ via the precomputed level simplices."""
        for k, level in enumerate(self.levels, start=1):
            if not level.contains(x[:k], mode="omega"):
                return False
        return True


def describe_cell(p: Polytope, sigma) -> CellDescriptor:
    sigma = tuple(sigma)
    zv = z_values(p, sigma)
    chain = chain_points(p, sigma)
    zs = zv.with_zero()
    avec = tuple(zs[k] / abs(zs[k - 1]) for k in range(1, len(zs)))
    levels = tuple(Polytope(tuple(c[:k] for c in chain[: k + 1])) for k in range(1, p.dim + 1))
    return CellDescriptor(sigma, cell_sign(p, sigma, zv), chain, zv, avec, levels)


def decompose(p: Polytope) -> list[CellDescriptor]:
    _require_simplex(p)
    return [describe_cell(p, s) for s in permutations(p.dim)]


def cell_contains(x, cell: CellDescriptor, p: Optional[Polytope] = None) -> bool:
    """Reference membership in S_σ through fibers (slow path; see CellDescriptor.contains)."""
    x = tuple(Fraction(c) for c in x)
    d = len(cell.chain) - 1
    for k in range(1, d + 1):
        level = Polytope(tuple(c[:k] for c in cell.chain[: k + 1]))
        if not omega_contains(x[:k], level):
            return False
    return True


# ---------------------------------------------------------------------------
# counting


def count_cell(p: Polytope, sigma, budget: int = DEFAULT_BUDGET, check: bool = True) -> int:
    """|L(S_σ)| for a canonically ordered lattice-face simplex, by two routes.

    The nested enumeration with bounds nbar(a(σ,k) s_{k-1}) and the signed
    g_d value are both computed; disagreement is a bug and raises.
    """
    _require_simplex(p)
    if check:
        require_lattice_face(p)
    if not is_canonical(p):
        raise GeneralPositionError("vertex order is not canonical; call canonical_order first")
    zv = z_values(p, sigma)
    if not ratio_integrality(zv):
        raise NotLatticeFaceError(f"z-ratios are not integral for σ={tuple(sigma)}")
    zs = zv.with_zero()
    avec = [zs[k] / abs(zs[k - 1]) for k in range(1, len(zs))]
    enumerated = nested_sum_signed(avec, budget)
    s = 1
    for z in zv.values:
        s *= sign(z)
    closed = s * g_d(zv.values)
    if closed != enumerated:
        raise AssertionError(f"cell count mismatch for σ={tuple(sigma)}: {enumerated} vs {closed}")
    return enumerated


def signed_gd_sum(p: Polytope) -> Fraction:
    """sum_σ sign(σ) g_d(z(σ,1), ..., z(σ,d))."""
    total = Fraction(0)
    for sigma in permutations(p.dim):
        total += perm_sign(sigma) * g_d(z_values(p, sigma).values)
    return total


def count_omega(p: Polytope, check: bool = True) -> int:
    """|L(Ω(P))| of a lattice-face simplex via the signed g_d sum."""
    _require_simplex(p)
    if check:
        require_lattice_face(p)
    if not is_canonical(p):
        p = canonical_order(p)
    total = signed_gd_sum(p)
    if total.denominator != 1:
        raise AssertionError(f"non-integral lattice count {total}")
    return int(total)


def grid_box(p: Polytope, margin: int = 1) -> list[tuple[int, int]]:
    return [(lo - margin, hi + margin) for lo, hi in p.bounding_box()]


def _scan(box, step, budget):
    size = 1
    for lo, hi in box:
        size *= max(0, math.floor((hi - lo) / step) + 1)
    if size > budget:
        raise BudgetExceeded(f"grid of {size} points exceeds budget {budget}")
    return lattice_points(box, step)


def scan_cell(p: Polytope, sigma, budget: int = DEFAULT_BUDGET) -> int:
    """|L(S_σ)| by scanning the bounding box of the chain."""
    cell = describe_cell(p, sigma)
    hull = [(math.floor(min(c[j] for c in cell.chain)), math.ceil(max(c[j] for c in cell.chain)))
            for j in range(p.dim)]
    return sum(1 for x in _scan(hull, 1, budget) if cell.contains(x))


# ---------------------------------------------------------------------------
# verification


def decomposition_multiset_check(
    p: Polytope, grid=None, step: Fraction = Fraction(1), budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    """Pointwise check of Ω(P) = ⊕_σ sign(σ,P) S_σ on a grid of points."""
    _require_simplex(p)
    cells = decompose(p)
    box = grid if grid is not None else grid_box(p)
    violations = []
    checked = 0
    in_omega = 0
    for x in _scan(box, step, budget):
        checked += 1
        lhs = sum(c.sign for c in cells if c.contains(x))
        rhs = 1 if p.contains(x, mode="omega") else 0
        in_omega += rhs
        if lhs != rhs:
            violations.append({"point": [format_rational(c) for c in x], "cells": lhs, "omega": rhs})
    signs = [c.sign for c in cells]
    return VerifyReport(
        "fdecomp", not violations,
        {"cells": len(cells), "positive": signs.count(1), "negative": signs.count(-1), "omega_points": in_omega},
        violations, checked,
    )


def identity_gsigma(p: Polytope) -> VerifyReport:
    """sum_σ sign(σ) g_d(z(σ,·)) = det X(1,d) / d!."""
    _require_simplex(p)
    d = p.dim
    lhs = signed_gd_sum(p)
    rhs = determinant(x_matrix(p.vertices, tuple(range(d)), d)) / math.factorial(d)
    return VerifyReport("gsigma", lhs == rhs, {"lhs": lhs, "rhs": rhs},
                        [] if lhs == rhs else [{"lhs": lhs, "rhs": rhs}], 1)


def _shifted(p: Polytope) -> list[tuple]:
    last = p.vertices[-1]
    return [tuple(a - b for a, b in zip(v, last)) for v in p.vertices[:-1]]


def zhat_values(p: Polytope, sigma) -> tuple:
    """ẑ(σ,k) from the vertices translated so the last one is the origin."""
    xs = _shifted(p)
    out = []
    for k in range(1, p.dim + 1):
        rows = [xs[sigma[i]] for i in range(k)]
        num = determinant([list(r[:k]) for r in rows])
        den = determinant(bordered(rows, k - 1))
        if den == 0:
            raise GeneralPositionError("zero Ŷ determinant", subset=tuple(sigma[:k]))
        out.append(num / den)
    return tuple(out)


def identity_det2(p: Polytope) -> VerifyReport:
    """sum_σ sign(σ) prod ẑ(σ,j) = (-1)^{d(d-1)/2} det X̂(1,d), and ẑ(σ,k) = (-1)^k z(σ,k)."""
    _require_simplex(p)
    d = p.dim
    lhs = Fraction(0)
    violations = []
    for sigma in permutations(d):
        zh = zhat_values(p, sigma)
        z = z_values(p, sigma).values
        for k, (a, b) in enumerate(zip(zh, z), start=1):
            if a != (-1) ** k * b:
                violations.append({"sigma": list(sigma), "k": k, "zhat": a, "z": b})
        term = Fraction(perm_sign(sigma))
        for v in zh:
            term *= v
        lhs += term
    xs = _shifted(p)
    rhs = (-1) ** (d * (d - 1) // 2) * determinant([list(r[:d]) for r in xs])
    if lhs != rhs:
        violations.append({"lhs": lhs, "rhs": rhs})
    return VerifyReport("det2", not violations, {"lhs": lhs, "rhs": rhs}, violations, math.factorial(d))


QFunctional = Callable[[tuple], Fraction]


def identity_zero5(p: Polytope, ell: int, k: int, q: QFunctional = lambda zs: Fraction(1)) -> VerifyReport:
    """sum_σ sign(σ) q(z(σ,1..ℓ)) prod_{j>ℓ} z(σ,j) / z(σ,ℓ+1)^{k+1} = 0, for ℓ+k <= d-2."""
    _require_simplex(p)
    d = p.dim
    if not (ell >= 0 and k >= 0 and ell + k <= d - 2):
        raise ValueError(f"need 0 <= ℓ+k <= d-2, got ℓ={ell}, k={k}, d={d}")
    total = Fraction(0)
    for sigma in permutations(d):
        z = z_values(p, sigma).values
        term = perm_sign(sigma) * Fraction(q(z[:ell]))
        for j in range(ell, d):
            term *= z[j]
        total += term / z[ell] ** (k + 1)
    return VerifyReport(f"zero5[l={ell},k={k}]", total == 0, {"sum": total},
                        [] if total == 0 else [{"sum": total}], 1)


def q_family(ell: int) -> list[tuple[str, QFunctional]]:
    """Sampled test functionals of the first ℓ z-values: constants, coordinates, products."""
    fams: list[tuple[str, QFunctional]] = [("one", lambda zs: Fraction(1)), ("const", lambda zs: Fraction(-7, 3))]
    for i in range(ell):
        fams.append((f"z{i + 1}", lambda zs, i=i: zs[i]))
        fams.append((f"z{i + 1}^2+1", lambda zs, i=i: zs[i] ** 2 + 1))
    if ell >= 2:
        fams.append(("z1*z2", lambda zs: zs[0] * zs[1]))
    if ell >= 1:
        fams.append(("prod", lambda zs: math.prod(zs, start=Fraction(1))))
        fams.append(("1/z1", lambda zs: 1 / zs[0]))
    return fams


def zero5_suite(p: Polytope) -> VerifyReport:
    """identity_zero5 over every valid (ℓ, k) and the sampled q-functionals."""
    d = p.dim
    violations = []
    checked = 0
    for ell in range(0, d - 1):
        for k in range(0, d - 1 - ell):
            for name, q in q_family(ell):
                checked += 1
                rep = identity_zero5(p, ell, k, q)
                if not rep.ok:
                    violations.append({"l": ell, "k": k, "q": name, "sum": rep.values["sum"]})
    return VerifyReport("zero5", not violations, {"cases": checked}, violations, checked)


def cell_count_report(p: Polytope, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Both per-cell methods on every σ of a lattice-face simplex, plus the signed total."""
    p = p if is_canonical(p) else canonical_order(p)
    counts = {}
    violations = []
    total = 0
    for sigma in permutations(p.dim):
        try:
            c = count_cell(p, sigma, budget, check=False)
        except AssertionError as exc:
            violations.append({"sigma": list(sigma), "error": str(exc)})
            continue
        counts["".join(str(i + 1) for i in sigma)] = c
        total += cell_sign(p, sigma) * c
    return VerifyReport("cells", not violations, {"counts": counts, "signed_total": total}, violations, len(counts))


def count_omega_grid(p: Polytope, budget: int = DEFAULT_BUDGET, pointwise: bool = False) -> int:
    """|L(Ω(P))| by scanning the integer bounding box.

    By default each vertical fiber over a lattice base point is computed once
    and the integers in (lo, hi] are counted; ``pointwise`` tests every box
    point with omega_contains instead.
    """
    box = p.bounding_box()
    if pointwise:
        return sum(1 for x in _scan(box, 1, budget) if omega_contains(x, p))
    if p.dim == 1:
        xs = [v[0] for v in p.vertices]
        return math.floor(max(xs)) - math.floor(min(xs))
    total = 0
    for y in _scan(box[:-1], 1, budget):
        fb = fiber(y, p)
        if not fb.empty:
            total += math.floor(fb.hi) - math.floor(fb.lo)
    return total
