"""Lattice points of a lattice-face tetrahedron, three ways.

The tetrahedron with vertices (0,0,0), (4,0,0), (3,6,0), (2,2,10k) is
lattice-face for every positive k.  Its Ehrhart polynomial is read off from
volumes of successive projections, and we compare that with a grid scan and
with interpolation through brute-force counts.
"""

from ehrhart_lf import Polytope, brute_count, ehrhart_formula, interpolate_ehrhart, is_lattice_face, project, volume
from ehrhart_lf.ehrhart import interior_formula


def tetrahedron(k: int) -> Polytope:
    return Polytope(((0, 0, 0), (4, 0, 0), (3, 6, 0), (2, 2, 10 * k)), name=f"P{k}")


for k in (1, 2, 3):
    p = tetrahedron(k)
    print(f"{p.name}: lattice-face = {bool(is_lattice_face(p))}, volume = {volume(p)}")

    res = ehrhart_formula(p)
    print(f"  i({p.name}, m) = {res.poly}")
    print(f"  volumes of projections (dims 0..3): {[str(v) for v in res.per_level_volumes]}")

    for m in (1, 2, 3):
        print(f"  m={m}: formula {res.poly(m)}, grid scan {brute_count(p, m)}")

    print(f"  interpolated from counts: {interpolate_ehrhart(p).poly}")
    print(f"  interior polynomial:      {interior_formula(p)}")

# dropping the last coordinate leaves a lattice-face triangle; the tetrahedron's
# polynomial is its volume term plus the triangle's polynomial
tri = project(tetrahedron(1), 1)
corners = ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in tri.vertices)
print(f"\nprojection conv{{{corners}}}: i = {ehrhart_formula(tri).poly}")
