"""The virtual trefoil under every invariant in the package."""

from parityknots import (
    GaussDiagram,
    delta,
    delta_compact,
    parse_virtual_code,
    vassiliev_value,
)

trefoil = parse_virtual_code("O1+ O2+ U1+ U2+")
mirror = parse_virtual_code("O1- O2- U1- U2-")
reversed_arrows = parse_virtual_code("U1+ U2+ O1+ O2+")
unknot = GaussDiagram((), {}, {})

print("virtual trefoil  ", delta(trefoil, 1), delta(trefoil, 2))
print("mirror image     ", delta(mirror, 1))
print("arrows reversed  ", delta(reversed_arrows, 1))
print("unknot           ", delta(unknot, 1))

# the classical trefoil dies: all of its chords are even at every stage
classical = parse_virtual_code("O1+ U2+ O3+ U1+ O2+ U3+")
print("classical trefoil", delta(classical, 1), delta(classical, 2))

print()
for k in (0, 1, 2):
    print(f"G_{k} image:", vassiliev_value(trefoil, 1, k))
print("unknot in G_1:", vassiliev_value(unknot, 1, 1))

# closed up, the value survives as a rotation-orbit minimum
closed = parse_virtual_code("O1+ O2+ U1+ U2+", closed=True)
print()
print("closed trefoil   ", delta_compact(closed, 1))
