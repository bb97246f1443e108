"""
Blow-up lattice basics
======================

Divisor classes on a rational elliptic surface, written as (d; m1..m9) in
the basis coming from blowing up nine plane points, with the signature
(1, 9) intersection form.
"""

from pencilforge import (
    CANONICAL,
    FIBRE,
    NumericalClass,
    arithmetic_genus,
    degree_to_base,
    exceptional,
    intersect,
    mw_rank_bound,
    unirationality_check,
)

# Two distinct lines in the plane meet once; the canonical class squares to
# zero, which is what makes the surface rational elliptic.
line1 = NumericalClass(1, (1, 0, 0, 0, 0, 0, 0, 0, 0))
line2 = NumericalClass(1, (0, 1, 0, 0, 0, 0, 0, 0, 0))
print("line1 . line2 =", intersect(line1, line2))
print("K . K =", intersect(CANONICAL, CANONICAL))
print("F = -K =", FIBRE)

# A line through one base point maps 2:1 to the base of the fibration
# (it meets the cubics twice more), while exceptional curves are sections.
print("\ndeg(line through p1 -> base) =", degree_to_base(line1))
print("deg(E_j -> base) =", [degree_to_base(exceptional(j)) for j in (1, 5, 9)])

# The workhorse example: sections of the square anticanonical sheaf on a
# degree-five del Pezzo surface, with multiplicity four at one point --
# encoded in the plane basis as (6; 2,2,2,2,4,1,1,1,1).
conic_pencil = NumericalClass(6, (2, 2, 2, 2, 4, 1, 1, 1, 1))
print("\nconic pencil class:", conic_pencil)
print("  genus      :", arithmetic_genus(conic_pencil))
print("  deg to base:", degree_to_base(conic_pencil))
print("  self-int   :", intersect(conic_pencil, conic_pencil))

# Rank bookkeeping: a cubic pencil with s distinct base points bounds the
# geometric Mordell-Weil rank by s - 1, and Picard rank at least five over
# the ground field forces unirationality.
print("\nrank bound for 9 base points:", mw_rank_bound(9))
print("rank bound for 4 base points:", mw_rank_bound(4))
print("unirational at Picard rank 5?", unirationality_check(5))
print("unirational at Picard rank 4?", unirationality_check(4))
