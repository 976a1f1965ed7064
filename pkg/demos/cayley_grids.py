"""Cayley balls of the value groups: DOT output and growth counts.

The flat group G_1 is a line of lattice points with a toggle fibre; its
spheres stabilize at 4 nodes per radius.  The signed group doubles the
lattice directions, so its balls grow faster.
"""

from parityknots import FLAT, SIGNED, cayley_ball, cayley_dot

print(cayley_dot(cayley_ball(FLAT, 1, 1)))

for group in (FLAT, SIGNED):
    sizes = [len(cayley_ball(group, 1, r).nodes) for r in range(7)]
    spheres = [sizes[0]] + [b - a for a, b in zip(sizes, sizes[1:])]
    print(f"{group:>6} m=1: ball sizes {sizes}")
    print(f"{'':>6}      sphere sizes {spheres}")

ball = cayley_ball(FLAT, 2, 2)
print(f"\nflat m=2 radius-2 ball: {len(ball.nodes)} nodes, {len(ball.edges)} edges")
