"""The nonnegative part of a simplex as a signed sum of d! cells.

For each permutation σ of the first d vertices we build the chain of points
v_{σ,0}, ..., v_{σ,d}, a sign, and a cell.  Adding the cells with their signs
counts every point of Ω(P) once.  On a lattice-face simplex each cell's
lattice points can be counted by a nested sum or by a closed form.
"""

from ehrhart_lf import Polytope, count_cell, count_omega, decompose, decomposition_multiset_check
from ehrhart_lf.exactmath import format_rational
from ehrhart_lf.geometry import lattice_points, omega_contains

p = Polytope(((0, 0, 0), (4, 0, 0), (3, 6, 0), (2, 2, 10)))

total = 0
for cell in decompose(p):
    name = "".join(str(i + 1) for i in cell.sigma)
    n = count_cell(p, cell.sigma)
    total += cell.sign * n
    chain = " -> ".join("(" + ",".join(format_rational(c) for c in pt) + ")" for pt in cell.chain)
    zs = ", ".join(format_rational(z) for z in cell.zvec.values)
    print(f"σ={name} sign={cell.sign:+d} count={n:3d} z=({zs})  {chain}")

print(f"signed total {total}; count_omega {count_omega(p)}")

grid = sum(1 for x in lattice_points(p.bounding_box()) if omega_contains(x, p))
print(f"grid count of Ω(P): {grid}")

rep = decomposition_multiset_check(p)
print(f"pointwise check over {rep.checked} grid points: {'ok' if rep.ok else rep.violations[:3]}")
