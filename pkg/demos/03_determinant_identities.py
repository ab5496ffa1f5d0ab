"""Three exact identities over the permutation sweep, on random rational simplices.

None of them needs the lattice-face property, only general position, so we
feed in simplices with fractional coordinates.
"""

import random
from fractions import Fraction

from ehrhart_lf import Polytope, general_position_check, identity_det2, identity_gsigma
from ehrhart_lf.decomp import zero5_suite

rng = random.Random(1)


def random_simplex(d: int) -> Polytope:
    while True:
        pts = [tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 3)) for _ in range(d)) for _ in range(d + 1)]
        try:
            p = Polytope(tuple(pts))
        except ValueError:
            continue
        if general_position_check(p):
            return p


for d in (2, 3, 4):
    p = random_simplex(d)
    g = identity_gsigma(p)
    print(f"d={d}: signed g_d sum {g.values['lhs']} vs det/d! {g.values['rhs']} -> {g.ok}")
    print(f"      shifted determinant identity -> {identity_det2(p).ok}")
    z = zero5_suite(p)
    print(f"      vanishing sums over {z.checked} (l, k, q) cases -> {z.ok}")
