"""Invariance fuzzing, and what a violation looks like when one exists.

The first run hammers the signed compact invariant with random move
walks; nothing changes, as it must.  The second run feeds the fuzzer a
deliberately presentation-dependent value (a chord's type flipped by
the parity of its first endpoint position) and replays the first
violation log move by move.
"""

from parityknots import (
    apply_move,
    diagram_from_json,
    fuzz_invariance,
    move_from_json,
)
from parityknots.groups import KIND_ONE, KIND_TWO, Letter, toggle
from parityknots.invariants import _fold_flat
from parityknots.parity import TYPE_ONE, assignments

report = fuzz_invariance(trials=300, m=2, signed=True, closed=True, seed=42)
print("honest invariant:", "ok" if report.ok else "VIOLATED", f"({report.trials} trials)")

report = fuzz_invariance(trials=300, m=1, seed=42)
stats = report.flat_stats
print("flat stats over start values:", stats["values"], "values,",
      stats["bit_nonzero"], "nonzero bits, level-0 mod 4:", stats["level_mod4"][0])


def positional_gamma(diagram):
    # broken on purpose: the letter kind depends on where the chord sits
    index, ctype = assignments(diagram, 1)
    first = {}
    for pos, c in enumerate(diagram.word):
        first.setdefault(c, pos)
    letters = []
    for c in diagram.word:
        if index[c] >= 1:
            letters.append(toggle(1))
            continue
        kind = KIND_ONE if ctype[c] == TYPE_ONE else KIND_TWO
        letters.append(Letter(0, kind if first[c] % 2 else 3 - kind, 1))
    return _fold_flat(1, letters)


report = fuzz_invariance(trials=300, m=1, seed=42, value_fn=positional_gamma)
print(f"\nbroken value: {len(report.violations)} violations in {report.trials} trials")
first = report.violations[0]
state = diagram_from_json(first["start"])
print("replaying trial", first["trial"], "from", state.word)
for blob in first["log"]:
    move = move_from_json(blob)
    state = apply_move(state, move)
    print(f"  {move.kind.value:<10} -> {positional_gamma(state)}")
print("reported before/after:", first["value_before"], first["value_after"])
