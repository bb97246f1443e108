"""
Cremona reduction certificates
==============================

A quadratic Cremona transformation centred at three points acts on numerical
classes; chaining transformations at the three largest multiplicities drives
the degree down.  Reaching a line class certifies that the class is
represented by a connected curve (for points in general position).
"""

from pencilforge import (
    FIBRE,
    NumericalClass,
    arithmetic_genus,
    is_connected_class,
    quadratic_transform,
    reduce_to_line,
)

# The conic-pencil class on the degree-five del Pezzo model reduces to a
# line through the last point in exactly three steps.
start = NumericalClass(6, (2, 2, 2, 2, 4, 1, 1, 1, 1))
cert = reduce_to_line(start)
print("reducing", start)
for step in cert.chain:
    print(f"  centre {step.indices}: {step.before} -> {step.after}")
print("terminal:", cert.terminal, "| success:", cert.success)

# A single transformation is an involution: applying it twice is a no-op.
once = quadratic_transform(start, 1, 2, 5)
twice = quadratic_transform(once, 1, 2, 5)
print("\ninvolution check:", twice == start)

# Adding a full fibre raises the genus to two.  Cremona transformations
# preserve genus and line classes have genus at most zero, so no chain can
# reduce the sum; the greedy certificate honestly fails.
fattened = start + FIBRE
print("\nfattened class:", fattened, "genus", arithmetic_genus(fattened))
print("connected certificate?", is_connected_class(fattened))
stuck = reduce_to_line(fattened)
print("greedy walk sticks at", stuck.terminal, "after", len(stuck.chain), "steps")
