"""Parity-based lattice-valued invariants of free and virtual knots.

The pipeline: a knot diagram is a double-occurrence word (``diagram``),
iterated parity deletion grades its chords (``parity``), the graded walk
evaluates in a lattice-shaped group (``groups``, ``invariants``), and the
signed value projects into truncated polynomial quotients whose graded
pieces behave like finite-type invariants (``algebra``).  ``moves``
implements the Reidemeister calculus and the invariance fuzzer, ``cli``
the command line front end.
"""

from .algebra import (
    AlgebraElement,
    ParameterMismatch,
    TruncatedPoly,
    algebra_to_json,
    binom_power,
    poly_to_json,
    project,
)
from .diagram import (
    NEGATIVE,
    OVER_FIRST,
    OVER_SECOND,
    POSITIVE,
    ChordDiagram,
    CodeSyntaxError,
    Diagram,
    DiagramError,
    GaussDiagram,
    LabelCountError,
    NotClosed,
    OUMismatch,
    SignMismatch,
    UnknownChord,
    diagram_from_json,
    diagram_to_json,
    endpoints,
    linked,
    parse_free_code,
    parse_virtual_code,
    random_diagram,
    rotate_basepoint,
    serialize_free_code,
    serialize_virtual_code,
)
from .groups import (
    FLAT,
    SIGNED,
    BitNotZero,
    BoundExceeded,
    CayleyBall,
    Letter,
    cayley_ball,
    cayley_dot,
    coords_to_word,
    eval_word,
    flat_conjugacy_canonical,
    generators,
    identity,
    inv,
    letter_name,
    mul,
    relations,
    rewrite_equal,
    rewrite_reduce,
    shift,
    toggle,
    word_name,
)
from .invariants import (
    CanonicalMismatch,
    SingularKnot,
    alternating_sum,
    delta,
    delta_compact,
    gamma,
    gamma_compact,
    position_letters,
    vassiliev_value,
)
from .moves import (
    FuzzReport,
    MoveInstance,
    MoveKind,
    StaleMove,
    apply_move,
    enumerate_moves,
    fuzz_invariance,
    move_from_json,
    move_to_json,
    random_walk,
)
from .parity import (
    TYPE_ONE,
    TYPE_TWO,
    IndexAssignment,
    TypeAssignment,
    TypeRule,
    assignments,
    f_step,
    index_assignment,
    odd_chords,
    type_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BitNotZero",
    "BoundExceeded",
    "CanonicalMismatch",
    "CayleyBall",
    "ChordDiagram",
    "CodeSyntaxError",
    "Diagram",
    "DiagramError",
    "FLAT",
    "FuzzReport",
    "GaussDiagram",
    "IndexAssignment",
    "LabelCountError",
    "Letter",
    "MoveInstance",
    "MoveKind",
    "NEGATIVE",
    "NotClosed",
    "OUMismatch",
    "OVER_FIRST",
    "OVER_SECOND",
    "POSITIVE",
    "ParameterMismatch",
    "SIGNED",
    "SignMismatch",
    "SingularKnot",
    "StaleMove",
    "TruncatedPoly",
    "TYPE_ONE",
    "TYPE_TWO",
    "TypeAssignment",
    "TypeRule",
    "UnknownChord",
    "algebra_to_json",
    "alternating_sum",
    "apply_move",
    "assignments",
    "binom_power",
    "cayley_ball",
    "cayley_dot",
    "coords_to_word",
    "delta",
    "delta_compact",
    "diagram_from_json",
    "diagram_to_json",
    "endpoints",
    "enumerate_moves",
    "eval_word",
    "f_step",
    "flat_conjugacy_canonical",
    "fuzz_invariance",
    "gamma",
    "gamma_compact",
    "generators",
    "identity",
    "index_assignment",
    "inv",
    "letter_name",
    "linked",
    "move_from_json",
    "move_to_json",
    "mul",
    "odd_chords",
    "parse_free_code",
    "parse_virtual_code",
    "poly_to_json",
    "position_letters",
    "project",
    "random_diagram",
    "random_walk",
    "relations",
    "rewrite_equal",
    "rewrite_reduce",
    "rotate_basepoint",
    "serialize_free_code",
    "serialize_virtual_code",
    "shift",
    "toggle",
    "type_assignment",
    "vassiliev_value",
    "word_name",
    "__version__",
]
