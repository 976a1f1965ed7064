"""Alternating sums over singular chords collapse in low quotients.

Resolving s singular chords in all 2^s ways with alternating signs
kills every term of degree below s, so the sum vanishes in the k-th
quotient whenever s >= k + 1.  The virtual trefoil with both chords
singular shows the boundary case: zero in degree 1, but a genuine
degree-2 leftover.
"""

import random

from parityknots import (
    SingularKnot,
    alternating_sum,
    parse_virtual_code,
    random_diagram,
)

trefoil = parse_virtual_code("O1+ O2+ U1+ U2+")
both = SingularKnot(trefoil, frozenset({0, 1}))
print("trefoil, 2 singular chords:")
print("  in degree 1:", alternating_sum(both, 1, 1))
print("  in degree 2:", alternating_sum(both, 1, 2))

rng = random.Random(0)
print("\nrandom 6-chord knots, k+1 singular chords, degree k:")
for k in (0, 1, 2):
    worst = None
    for _ in range(50):
        d = random_diagram(6, signed=True, rng_seed=rng.getrandbits(32))
        singular = frozenset(rng.sample(sorted(d.chord_ids()), k + 1))
        value = alternating_sum(SingularKnot(d, singular), 2, k)
        if not value.is_zero():
            worst = (d, singular, value)
    print(f"  k={k}: {'all vanished' if worst is None else f'FAILED {worst}'}")
