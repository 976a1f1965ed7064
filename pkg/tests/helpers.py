"""Brute-force oracles and small validators shared by the test modules.

The oracles restate the definitions as directly as possible, with none of
the incremental bookkeeping the library uses, so agreement is meaningful.
"""

from __future__ import annotations

import re

from hypothesis import strategies as st

from parityknots import TYPE_ONE, TYPE_TWO, random_diagram

# pass/fail lines collected by the acceptance tests; printed by conftest
acceptance_lines: list[str] = []


def interleaved_in(word, c: int, d: int) -> bool:
    """Definition-level chord interleaving: ends alternate around the circle."""
    pc = [i for i, x in enumerate(word) if x == c]
    pd = [i for i, x in enumerate(word) if x == d]
    return (pc[0] < pd[0] < pc[1]) != (pc[0] < pd[1] < pc[1])


def brute_odd(word) -> set[int]:
    ids = set(word)
    return {
        c
        for c in ids
        if sum(1 for d in ids if d != c and interleaved_in(word, c, d)) % 2 == 1
    }


def brute_assignments(word, m: int, even_rule: bool = True):
    """Index and type maps computed by literally rebuilding every stage."""
    stage = list(word)
    stages = []
    index: dict[int, int] = {}
    for k in range(m):
        stages.append(list(stage))
        odd = brute_odd(stage)
        for c in odd:
            index[c] = k
        stage = [x for x in stage if x not in odd]
    for c in set(word):
        index.setdefault(c, m)
    ctype: dict[int, int] = {}
    for c, k in index.items():
        if k >= m:
            continue
        w = stages[k]
        odd = brute_odd(w)
        neighbours = [d for d in set(w) if d != c and interleaved_in(w, c, d)]
        count = sum(1 for d in neighbours if (d not in odd) == even_rule)
        ctype[c] = TYPE_ONE if count % 2 == 0 else TYPE_TWO
    return index, ctype


_DOT_HEAD = re.compile(r"^digraph\s+[A-Za-z_][A-Za-z0-9_]*\s*\{$")
_DOT_NODE = re.compile(r'^\s*"[^"\\]+"\s*\[label="[^"\\]*"\];$')
_DOT_EDGE = re.compile(r'^\s*"[^"\\]+"\s*->\s*"[^"\\]+"\s*\[label="[^"\\]*"\];$')


def dot_is_valid(text: str) -> bool:
    """Accepts the graph-description subset the package emits."""
    lines = [line for line in text.strip().splitlines() if line.strip()]
    if len(lines) < 2 or not _DOT_HEAD.match(lines[0]) or lines[-1].strip() != "}":
        return False
    return all(_DOT_NODE.match(line) or _DOT_EDGE.match(line) for line in lines[1:-1])


@st.composite
def diagrams(draw, max_n: int = 6, signed: bool = False, closed: bool | None = None):
    n = draw(st.integers(min_value=0, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**20))
    closed_flag = draw(st.booleans()) if closed is None else closed
    return random_diagram(n, signed=signed, rng_seed=seed, closed=closed_flag)
