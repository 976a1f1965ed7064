"""Command line front end.

Subcommands:

* invariant        compute the walk invariants of one or more codes
* compare          try to distinguish two codes across a range of depths
* fuzz             random-walk invariance fuzzing
* vassiliev-check  alternating sums over k+1 singular chords must vanish
* cayley           lattice group balls, DOT graphs and sphere counts
* random           emit a random diagram code

Free codes are whitespace-separated chord labels, each appearing twice
("1 2 1 2"); virtual codes are Gauss-code tokens ("O1+ U2+ O3- ...").
The flavour is auto-detected from the first token.

Defaults can be overridden through PARITYKNOTS_M, _K, _TYPE_RULE, _SEED,
_TRIALS, _STEPS, _FORMAT and _MAX_CHORDS; command line flags win.

Exit codes: 0 success, 1 invariance or vanishing violation found,
2 usage or input error, 3 internal soundness failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .algebra import algebra_to_json, project
from .diagram import (
    ChordDiagram,
    Diagram,
    DiagramError,
    GaussDiagram,
    diagram_to_json,
    parse_free_code,
    parse_virtual_code,
    random_diagram,
    serialize_free_code,
    serialize_virtual_code,
)
from .groups import (
    FLAT,
    SIGNED,
    BitNotZero,
    BoundExceeded,
    cayley_ball,
    cayley_dot,
    coords_to_word,
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
)
from .moves import MoveKind, fuzz_invariance
from .parity import TypeRule


class _CliError(Exception):
    """Usage-level problem; reported on stderr with exit code 2."""


# --- environment-backed defaults -------------------------------------------


def _env(name: str, fallback: str) -> str:
    return os.environ.get("PARITYKNOTS_" + name, fallback)


def _env_int(name: str, fallback: int) -> int:
    raw = _env(name, str(fallback))
    try:
        return int(raw)
    except ValueError:
        raise _CliError(f"PARITYKNOTS_{name} must be an integer, got {raw!r}") from None


def _rule(args) -> TypeRule:
    try:
        return TypeRule(args.type_rule)
    except ValueError:
        choices = ", ".join(r.value for r in TypeRule)
        raise _CliError(f"type rule must be one of {choices}, got {args.type_rule!r}") from None


def _format(args, allowed: tuple[str, ...]) -> str:
    if args.format not in allowed:
        raise _CliError(f"format must be one of {', '.join(allowed)}, got {args.format!r}")
    return args.format


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if value < minimum:
        raise _CliError(f"{name} must be >= {minimum}, got {value}")
    return value


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise _CliError(f"expected a comma separated integer list, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise _CliError(f"depth list needs positive integers, got {text!r}")
    return values


def _parse_kinds(text: str | None):
    if not text:
        return None
    kinds = set()
    for name in text.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            kinds.add(MoveKind(name))
        except ValueError:
            choices = ", ".join(k.value for k in MoveKind)
            raise _CliError(f"unknown move kind {name!r}; choices: {choices}") from None
    return kinds or None


# --- input and output -------------------------------------------------------


def _parse_code(text: str, closed: bool) -> Diagram:
    tokens = text.split()
    if tokens and tokens[0][:1] in ("O", "U"):
        return parse_virtual_code(text, closed)
    return parse_free_code(text, closed)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
        return
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        print(f"{key}: {value}")


def _invariant_report(diagram: Diagram, m: int, k: int, rule: TypeRule) -> dict:
    signed = isinstance(diagram, GaussDiagram)
    report: dict = {
        "kind": "virtual" if signed else "free",
        "closed": diagram.closed,
        "chords": diagram.n,
        "m": m,
        "rule": rule.value,
    }
    if not signed:
        if diagram.closed:
            report["gamma_canonical"] = list(gamma_compact(diagram, m, rule))
        else:
            value = gamma(diagram, m, rule)
            report["gamma"] = list(value)
            report["gamma_word"] = word_name(coords_to_word(FLAT, m, value))
    else:
        if diagram.closed:
            report["delta_canonical"] = list(delta_compact(diagram, m, rule))
        else:
            value = delta(diagram, m, rule)
            report["delta"] = list(value)
            report["delta_word"] = word_name(coords_to_word(SIGNED, m, value))
            report["k"] = k
            report["vassiliev"] = algebra_to_json(project(value, k))
    return report


# --- subcommands -------------------------------------------------------------


def _cmd_invariant(args) -> int:
    fmt = _format(args, ("table", "json"))
    rule = _rule(args)
    _positive("--m", args.m)
    _positive("--k", args.k, 0)

    entries: list[tuple[str, str]] = [(f"arg {i}", code) for i, code in enumerate(args.codes, 1)]
    if args.batch is not None:
        if args.batch == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                with open(args.batch, encoding="utf-8") as handle:
                    lines = handle.read().splitlines()
            except OSError as err:
                raise _CliError(f"cannot read batch file: {err}") from None
        batch_entries = [
            (f"line {no}", line.strip())
            for no, line in enumerate(lines, 1)
            if line.strip()
        ]
        if not batch_entries and not args.codes:
            batch_entries = [("unknot", "")]
        entries += batch_entries
    if not entries:
        raise _CliError("nothing to do: pass codes or --batch FILE")

    first = True
    for label, text in entries:
        try:
            diagram = _parse_code(text, args.closed)
        except DiagramError as err:
            print(f"{label}: {err}", file=sys.stderr)
            if args.lenient:
                continue
            return 2
        report = {"input": text, **_invariant_report(diagram, args.m, args.k, rule)}
        if fmt == "table" and not first:
            print()
        _emit(report, fmt)
        first = False
    return 0


def _value_fn_for(signed: bool, closed: bool):
    if signed:
        return delta_compact if closed else delta
    return gamma_compact if closed else gamma


def _cmd_compare(args) -> int:
    fmt = _format(args, ("table", "json"))
    rule = _rule(args)
    depths = _parse_int_list(args.m)
    a = _parse_code(args.code_a, args.closed)
    b = _parse_code(args.code_b, args.closed)
    signed = isinstance(a, GaussDiagram)
    if signed != isinstance(b, GaussDiagram):
        raise _CliError("cannot compare a free code with a virtual code")
    value_fn = _value_fn_for(signed, args.closed)

    per_m: dict[str, dict] = {}
    distinguishing = None
    for m in depths:
        va = value_fn(a, m, rule)
        vb = value_fn(b, m, rule)
        per_m[str(m)] = {"a": list(va), "b": list(vb), "equal": va == vb}
        if va != vb and distinguishing is None:
            distinguishing = m
    report = {
        "kind": "virtual" if signed else "free",
        "closed": args.closed,
        "rule": rule.value,
        "depths": depths,
        "values": per_m,
        "distinguished": distinguishing is not None,
        "distinguishing_m": distinguishing,
    }
    _emit(report, fmt)
    return 0


def _cmd_fuzz(args) -> int:
    fmt = _format(args, ("table", "json"))
    rule = _rule(args)
    _positive("--m", args.m)
    _positive("--trials", args.trials)
    report = fuzz_invariance(
        trials=args.trials,
        m=args.m,
        rule=rule,
        signed=args.virtual,
        closed=args.closed,
        seed=args.seed,
        max_steps=_positive("--steps", args.steps, 0),
        start_chords=_positive("--start-chords", args.start_chords, 0),
        max_chords=_positive("--max-chords", args.max_chords),
        kinds=_parse_kinds(args.kinds),
        add_bias=args.add_bias,
    )
    payload: dict = {
        "settings": report.settings,
        "violations": len(report.violations),
        "ok": report.ok,
    }
    if report.flat_stats is not None:
        payload["flat_stats"] = report.flat_stats
    if fmt == "json":
        payload["violation_records"] = report.violations
        _emit(payload, fmt)
    else:
        _emit(payload, fmt)
        for record in report.violations:
            print("violation: " + json.dumps(record, sort_keys=True))
    return 0 if report.ok else 1


def _cmd_vassiliev_check(args) -> int:
    fmt = _format(args, ("table", "json"))
    rule = _rule(args)
    _positive("--m", args.m)
    _positive("--k", args.k, 0)
    _positive("--trials", args.trials)
    master = random.Random(args.seed)
    failures = []
    for trial in range(args.trials):
        n = max(args.chords, args.k + 1)
        diagram = random_diagram(n, signed=True, rng_seed=master.getrandbits(32))
        singular = master.sample(list(diagram.chord_ids()), args.k + 1)
        value = alternating_sum(
            SingularKnot(diagram, frozenset(singular)), args.m, args.k, rule
        )
        if not value.is_zero():
            failures.append(
                {
                    "trial": trial,
                    "diagram": diagram_to_json(diagram),
                    "singular": sorted(singular),
                    "value": algebra_to_json(value),
                }
            )
    payload: dict = {
        "m": args.m,
        "k": args.k,
        "singular_chords": args.k + 1,
        "trials": args.trials,
        "failures": len(failures),
        "ok": not failures,
    }
    if fmt == "json":
        payload["failure_records"] = failures
        _emit(payload, fmt)
    else:
        _emit(payload, fmt)
        for record in failures:
            print("failure: " + json.dumps(record, sort_keys=True))
    return 0 if not failures else 1


def _cmd_cayley(args) -> int:
    fmt = _format(args, ("dot", "json", "table"))
    _positive("m", args.m)
    _positive("radius", args.radius, 0)
    ball = cayley_ball(args.group, args.m, args.radius)
    if fmt == "dot":
        print(cayley_dot(ball))
        return 0
    spheres = [0] * (args.radius + 1)
    for value in ball.dist.values():
        spheres[value] += 1
    report = {
        "group": args.group,
        "m": args.m,
        "radius": args.radius,
        "nodes": len(ball.nodes),
        "spheres": spheres,
    }
    _emit(report, fmt)
    return 0


def _cmd_random(args) -> int:
    fmt = _format(args, ("code", "json"))
    _positive("--chords", args.chords, 0)
    diagram = random_diagram(
        args.chords, signed=args.virtual, rng_seed=args.seed, closed=args.closed
    )
    if fmt == "json":
        print(json.dumps(diagram_to_json(diagram), sort_keys=True))
    elif isinstance(diagram, GaussDiagram):
        print(serialize_virtual_code(diagram))
    else:
        print(serialize_free_code(diagram))
    return 0


# --- wiring ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parityknots",
        description="Parity-based lattice-valued invariants of free and virtual knots.",
        epilog=(
            "Environment overrides: PARITYKNOTS_M, _K, _TYPE_RULE, _SEED, _TRIALS, "
            "_STEPS, _FORMAT, _MAX_CHORDS.  Exit codes: 0 ok, 1 violation found, "
            "2 input error, 3 internal soundness failure."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rules = [r.value for r in TypeRule]

    p = sub.add_parser("invariant", help="compute invariants of one or more codes")
    p.add_argument("codes", nargs="*", help="free or virtual codes (auto-detected)")
    p.add_argument("--batch", help="file with one code per line, or - for stdin")
    p.add_argument("--lenient", action="store_true", help="skip unparsable batch lines")
    p.add_argument("--m", type=int, default=_env_int("M", 2), help="parity depth")
    p.add_argument("--k", type=int, default=_env_int("K", 2), help="truncation degree")
    p.add_argument("--type-rule", default=_env("TYPE_RULE", rules[0]), choices=rules)
    p.add_argument("--closed", action="store_true", help="treat codes as closed knots")
    p.add_argument("--format", default=_env("FORMAT", "table"))
    p.set_defaults(handler=_cmd_invariant)

    p = sub.add_parser("compare", help="try to distinguish two codes")
    p.add_argument("code_a")
    p.add_argument("code_b")
    p.add_argument("--m", default=_env("M", "1,2,3"), help="comma separated depths")
    p.add_argument("--type-rule", default=_env("TYPE_RULE", rules[0]), choices=rules)
    p.add_argument("--closed", action="store_true")
    p.add_argument("--format", default=_env("FORMAT", "table"))
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("fuzz", help="random-walk invariance fuzzing")
    p.add_argument("--trials", type=int, default=_env_int("TRIALS", 100))
    p.add_argument("--steps", type=int, default=_env_int("STEPS", 30), help="max walk length")
    p.add_argument("--start-chords", type=int, default=8, help="max chords in start diagrams")
    p.add_argument("--m", type=int, default=_env_int("M", 2))
    p.add_argument("--type-rule", default=_env("TYPE_RULE", rules[0]), choices=rules)
    p.add_argument("--virtual", action="store_true", help="fuzz signed diagrams")
    p.add_argument("--closed", action="store_true")
    p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    p.add_argument("--max-chords", type=int, default=_env_int("MAX_CHORDS", 64))
    p.add_argument("--kinds", help="comma separated move kinds, e.g. R2Add,R2Remove")
    p.add_argument("--add-bias", type=float, default=0.5)
    p.add_argument("--format", default=_env("FORMAT", "table"))
    p.set_defaults(handler=_cmd_fuzz)

    p = sub.add_parser("vassiliev-check", help="alternating sums over k+1 singular chords")
    p.add_argument("--m", type=int, default=_env_int("M", 2))
    p.add_argument("--k", type=int, default=_env_int("K", 2))
    p.add_argument("--trials", type=int, default=_env_int("TRIALS", 50))
    p.add_argument("--chords", type=int, default=6, help="chords per random diagram")
    p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    p.add_argument("--type-rule", default=_env("TYPE_RULE", rules[0]), choices=rules)
    p.add_argument("--format", default=_env("FORMAT", "table"))
    p.set_defaults(handler=_cmd_vassiliev_check)

    p = sub.add_parser("cayley", help="lattice group balls as DOT or counts")
    p.add_argument("group", choices=[FLAT, SIGNED])
    p.add_argument("m", type=int)
    p.add_argument("radius", type=int)
    p.add_argument("--format", default="dot", help="dot, json or table")
    p.set_defaults(handler=_cmd_cayley)

    p = sub.add_parser("random", help="emit a random diagram code")
    p.add_argument("--chords", type=int, default=6)
    p.add_argument("--virtual", action="store_true")
    p.add_argument("--closed", action="store_true")
    p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    p.add_argument("--format", default="code", help="code or json")
    p.set_defaults(handler=_cmd_random)

    return parser


def main(argv=None) -> int:
    try:
        parser = _build_parser()
    except _CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except _CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except DiagramError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except (CanonicalMismatch, BitNotZero, BoundExceeded, AssertionError) as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
