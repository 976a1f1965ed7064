"""Walk through the parity filtration on a small free diagram.

The word 1 2 1 3 2 3 has three chords; chord 2 crosses both others,
chords 1 and 3 cross only chord 2.  Deleting odd chords once removes
chord 2 and leaves 1 and 3 crossing nothing, so they turn odd only at
the next stage... except they never do: with nothing left to cross they
are even forever, and their index saturates at the chosen depth m.
"""

from parityknots import ChordDiagram, TypeRule, parse_free_code
from parityknots.parity import assignments, f_step, odd_chords

diagram = parse_free_code("1 2 1 3 2 3")
print("word:", diagram.word)

stage = diagram.word
for step in range(3):
    odd = odd_chords(ChordDiagram(stage))
    print(f"stage {step}: word {stage}, odd chords {sorted(odd)}")
    nxt = f_step(ChordDiagram(stage)).word
    if nxt == stage:
        print(f"stage {step + 1}: stationary")
        break
    stage = nxt

for m in (1, 2, 3):
    index, ctype = assignments(diagram, m)
    print(f"m={m}: index {dict(sorted(index.items()))}, types {dict(sorted(ctype.items()))}")

# the two conventions give complementary types for every finite-index chord
for rule in TypeRule:
    _, ctype = assignments(diagram, 2, rule)
    print(f"rule {rule.value}: types {dict(sorted(ctype.items()))}")
