"""
Genus-zero pencils on minimal models
====================================

For each minimal model and Galois orbit configuration of the blown-up
points, two linear pencils of rational curves mapping 2:1 to the base are
constructed; a brute-force search recovers them independently.
"""

from pencilforge import (
    OrbitStructure,
    Unsupported,
    construct_pencils,
    search_pencils,
    to_numerical_class,
    verify,
)
from pencilforge.cremona import is_connected_class

CASES = [
    ("plane", OrbitStructure((1,) * 9), None),
    ("plane", OrbitStructure((1, 2)), (3, 3, 3)),
    ("plane", OrbitStructure((1, 3)), None),
    ("plane", OrbitStructure((1, 4)), None),
    ("plane", OrbitStructure((1, 5)), None),
    ("plane", OrbitStructure((1, 6)), None),
    ("plane", OrbitStructure((1, 7)), None),
    ("plane", OrbitStructure((1, 8)), None),
    ("dp8", OrbitStructure((1, 7)), None),
    ("dp6", OrbitStructure((1, 2, 3)), None),
    ("dp6", OrbitStructure((1, 1, 2, 2)), None),
    ("dp6", OrbitStructure((1, 5)), None),
    ("dp5", OrbitStructure((1, 4)), None),
    ("dp4", OrbitStructure((1, 3)), None),
]

for model, orbits, pattern in CASES:
    label = f"{model} {list(orbits.sizes)}"
    result = construct_pencils(model, orbits, pattern)
    if isinstance(result, Unsupported):
        print(f"{label:22s} unsupported: {result.reason}")
        continue
    for name, member in zip(("L1", "L2"), result):
        report = verify(member)
        print(f"{label:22s} {name}: level {member.level:3d} mults {list(member.mults)}"
              f"  dim>={report.dim_lower_bound} g<={report.genus_upper_bound}"
              f" deg={report.degree_to_base}")
    label = ""

# Every constructed pencil class passes the connectedness certificate once
# written in the plane basis (the one-tangency conic case included).
pair = construct_pencils("dp5", OrbitStructure((1, 4)))
print("\ndp5 L1 as a plane class:", to_numerical_class(pair[0]))
print("connected?", is_connected_class(to_numerical_class(pair[0])))

# The search sweeps all orbit-constant multiplicity vectors; unlike the
# hand constructions it also reports every further valid candidate.
found = search_pencils("dp4", OrbitStructure((1, 3)), n_max=7)
print(f"\ndp4 search up to level 7: {len(found)} candidates")
for spec in found:
    print("  level", spec.level, "mults", list(spec.mults))
