"""Exact rational scalars, matrices and univariate polynomials.

Scalars are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Matrices are plain row-major
sequences of sequences; nothing here mutates its arguments.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionError, GeneralPositionError

Rational = Fraction
Point = tuple  # tuple of Fraction
Matrix = Sequence[Sequence[Fraction]]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rat(x) -> Fraction:
    """Coerce an int, Fraction or rational text ("-3/4") to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"invalid rational {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(text)


def format_rational(q) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def point(coords: Iterable) -> tuple:
    return tuple(rat(c) for c in coords)


def is_integer(q) -> bool:
    return rat(q).denominator == 1


def sign(q) -> int:
    return (q > 0) - (q < 0)


# ---------------------------------------------------------------------------
# matrices


def _check_square(m: Matrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionError(f"matrix is not square: {n} rows, row of length {len(row)}")
    return n


def _bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination; ``rows`` is consumed."""
    n = len(rows)
    if n == 0:
        return 1
    det_sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    det_sign = -det_sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return det_sign * rows[n - 1][n - 1]


def determinant(m: Matrix) -> Fraction:
    """Exact determinant of a square rational matrix.

    Each row is scaled to integers by the lcm of its denominators, the
    integer determinant is taken by Bareiss elimination, and the scale is
    divided back out.
    """
    n = _check_square(m)
    scale = 1
    int_rows = []
    for row in m:
        row = [rat(x) for x in row]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale *= lcm
        int_rows.append([x.numerator * (lcm // x.denominator) for x in row])
    if n == 0:
        return Fraction(1)
    return Fraction(_bareiss(int_rows), scale)


def matmul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    if a and len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x?")
    cols = len(b[0]) if b else 0
    return [
        [sum((rat(row[t]) * rat(b[t][j]) for t in range(len(b))), Fraction(0)) for j in range(cols)]
        for row in a
    ]


def solve(a: Matrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``a x = rhs`` exactly by Gauss-Jordan elimination.

    Raises :class:`GeneralPositionError` when ``a`` is singular.
    """
    n = _check_square(a)
    if len(rhs) != n:
        raise DimensionError("right-hand side length does not match the matrix")
    aug = [[rat(x) for x in row] + [rat(r)] for row, r in zip(a, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise GeneralPositionError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def bordered(points: Sequence[Sequence], ncoords: int) -> list[list[Fraction]]:
    """Rows ``(1, x_1, ..., x_ncoords)`` for each point."""
    return [[Fraction(1)] + [rat(c) for c in p[:ncoords]] for p in points]


def solve_affine(points: Sequence[Sequence], fixed_prefix: Sequence) -> tuple:
    """The unique point in the affine span of ``points`` with a given prefix.

    ``points`` holds k+1 points of R^d and ``fixed_prefix`` k coordinates.
    The projections of the points onto their first k coordinates must be
    affinely independent, otherwise :class:`GeneralPositionError` is raised.
    """
    pts = [point(p) for p in points]
    if not pts:
        raise DimensionError("need at least one point")
    k = len(fixed_prefix)
    if len(pts) != k + 1:
        raise DimensionError(f"{len(pts)} points given for a prefix of length {k}")
    d = len(pts[0])
    if k > d:
        raise DimensionError("prefix longer than the ambient dimension")
    base = pts[0]
    if k == 0:
        return base
    prefix = [rat(y) for y in fixed_prefix]
    # w = base + sum_j lam_j (p_j - base); match the first k coordinates
    a = [[pts[j + 1][i] - base[i] for j in range(k)] for i in range(k)]
    rhs = [prefix[i] - base[i] for i in range(k)]
    try:
        lam = solve(a, rhs)
    except GeneralPositionError:
        raise GeneralPositionError(
            "projected points are affinely dependent", subset=tuple(range(k + 1))
        ) from None
    w = [base[i] + sum((lam[j] * (pts[j + 1][i] - base[i]) for j in range(k)), Fraction(0)) for i in range(d)]
    w[:k] = prefix
    return tuple(w)


# ---------------------------------------------------------------------------
# univariate polynomials

Scalar = Union[int, Fraction]


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def linear(cls, a, b=0) -> "UniPoly":
        """The polynomial a*x + b."""
        return cls([b, a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = rat(other)
            return UniPoly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = rat(c)
        return UniPoly(a / c for a in self.coeffs)

    def __pow__(self, n: int):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        """Evaluate at a rational, or compose when ``x`` is a polynomial."""
        if isinstance(x, UniPoly):
            return self.compose(x)
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def compose_linear(self, a, b=0) -> "UniPoly":
        return self.compose(UniPoly.linear(a, b))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            var = "" if k == 0 else ("m" if k == 1 else f"m^{k}")
            body = var if (mag == "1" and var) else (mag + ("*" + var if var else ""))
            terms.append(("-" if c < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for op, body in terms[1:]:
            s += f" {op} {body}"
        return s


def lagrange_interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Exact interpolating polynomial through (xs[i], ys[i])."""
    xs = [rat(x) for x in xs]
    ys = [rat(y) for y in ys]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = UniPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly.linear(1, -xj)
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def rank(m: Matrix) -> int:
    """Rank of a rational matrix (any shape)."""
    rows = [[rat(x) for x in row] for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
