"""Bernoulli and power-sum polynomials, extended sums, and the nested-sum functionals."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import BudgetExceeded
from .exactmath import UniPoly, rat

DEFAULT_BUDGET = 10**7


@lru_cache(maxsize=None)
def bernoulli_poly(k: int) -> UniPoly:
    """B_k(x), from sum_{j<=k} C(k+1, j) B_j(x) = (k+1) x^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    acc = UniPoly([0] * k + [k + 1])
    for j in range(k):
        acc = acc - bernoulli_poly(j) * math.comb(k + 1, j)
    return acc / (k + 1)


def bernoulli_number(k: int) -> Fraction:
    return bernoulli_poly(k)(0)


@lru_cache(maxsize=None)
def power_sum_poly(k: int) -> UniPoly:
    """P_k(x) = (B_{k+1}(x+1) - B_{k+1}) / (k+1); P_k(n) = sum_{i=0}^n i^k."""
    b = bernoulli_poly(k + 1)
    return (b.compose_linear(1, 1) - b(0)) / (k + 1)


class PowerSumTable:
    """P_0..P_max_k, built once."""

    def __init__(self, max_k: int):
        self.max_k = max_k
        self.polys = [power_sum_poly(k) for k in range(max_k + 1)]

    def __getitem__(self, k: int) -> UniPoly:
        return self.polys[k]


Bound = Union[int, Fraction, UniPoly]


def extended_sum(h: UniPoly, u: Bound):
    """sum_{s=1}^u h(s) := h_0 u + sum_{k>=1} h_k P_k(u), for rational or polynomial u."""
    if isinstance(u, UniPoly):
        out = u * h.coeff(0)
        for k in range(1, len(h.coeffs)):
            if h.coeffs[k]:
                out = out + power_sum_poly(k).compose(u) * h.coeffs[k]
        return out
    u = rat(u)
    out = h.coeff(0) * u
    for k in range(1, len(h.coeffs)):
        if h.coeffs[k]:
            out += h.coeffs[k] * power_sum_poly(k)(u)
    return out


def f_d(a: Sequence) -> Fraction:
    """sum_{s1=1}^{a1} sum_{s2=1}^{a2 s1} ... 1, extended to rational arguments.

    Evaluated back to front: F_{d+1} = 1, F_j(t) = sum_{s=1}^{a_j t} F_{j+1}(s),
    and the value is F_1(1).
    """
    a = [rat(x) for x in a]
    if not a:
        raise ValueError("f_d needs at least one argument")
    inner = UniPoly([1])
    for aj in reversed(a):
        inner = extended_sum(inner, UniPoly.linear(aj))
    return inner(1)


def g_d(b: Sequence) -> Fraction:
    """f_d(b1/b0, b2/b1, ..., bd/b_{d-1}) with b0 = 1."""
    b = [rat(x) for x in b]
    if any(x == 0 for x in b):
        raise ValueError("g_d arguments must be nonzero")
    prev = Fraction(1)
    ratios = []
    for x in b:
        ratios.append(x / prev)
        prev = x
    return f_d(ratios)


def nbar(x) -> Fraction:
    """x for x >= 0, -x-1 for x < 0."""
    x = rat(x)
    return x if x >= 0 else -x - 1


def nested_sum_signed(a: Sequence, budget: int = DEFAULT_BUDGET) -> int:
    """Literal count sum_{s1=1}^{nbar⌊a1⌋} sum_{s2=1}^{nbar⌊a2 s1⌋} ... 1.

    Every s_i is positive, so each bound is nbar(floor(a_k * s_{k-1})).  The
    innermost level contributes its bound directly; ``budget`` caps the
    number of loop iterations over the outer levels.
    """
    a = [rat(x) for x in a]
    if not a:
        raise ValueError("need at least one bound")
    d = len(a)
    spent = 0

    def bound(k: int, s_prev: int) -> int:
        return int(nbar(math.floor(a[k] * s_prev)))

    def walk(k: int, s_prev: int) -> int:
        nonlocal spent
        top = bound(k, s_prev)
        if k == d - 1:
            return top
        spent += top
        if spent > budget:
            raise BudgetExceeded(f"nested sum exceeds budget {budget}")
        return sum(walk(k + 1, s) for s in range(1, top + 1))

    return walk(0, 1)


def signed_count(b: Sequence, budget: int = DEFAULT_BUDGET) -> int:
    """sign(prod b) times the nested count with a_k = b_k/|b_{k-1}|; equals g_d(b) when b_d > 0."""
    b = [rat(x) for x in b]
    prev = Fraction(1)
    a = []
    s = 1
    for x in b:
        a.append(x / abs(prev))
        prev = x
        s *= 1 if x > 0 else -1
    return s * nested_sum_signed(a, budget)
