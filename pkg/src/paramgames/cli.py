"""Command line interface.

Exit status: 0 when the answer favours Player 1 (or the command simply
succeeded), 1 when it favours Player 2 / is false, 2 on usage or input
errors. Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import GameError
from .formats import GameFile, format_game, parse_game_file, to_dot
from .gallery import GadgetSpec, build_helpme, build_linear, sperner_gadget
from .gameform import (GraphGameForm, circuit_function, format_bits, format_circuit,
                       ggf_to_circuit, parse_circuit, repetition_number, swap_circuit)
from .param import ParamQuery, eval_query, exists_winning_params, iterate_profiles, parse_prefix
from .unfold import wins_with_params


class UsageError(Exception):
    pass


def _csv(text: str | None) -> tuple[int, ...]:
    if text is None or not text.strip():
        return ()
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated naturals, got {text!r}") from None
    if any(v < 0 for v in vals):
        raise UsageError("values must be natural numbers")
    return vals


def _load(path: str) -> GameFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_game_file(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _start(f: GameFile, override: str | None) -> str:
    s = override or f.start
    if s is None:
        raise UsageError("no start vertex: add a 'start' line or pass --start")
    return s


def _vec(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def cmd_solve(args, out) -> int:
    f = _load(args.file)
    start = _start(f, args.start)
    params = _csv(args.params)
    won = wins_with_params(f.game, params, start)
    who = 1 if won else 2
    print(f"player {who} wins from {start} at {_vec(params)}", file=out)
    return 0 if won else 1


def cmd_exists(args, out) -> int:
    f = _load(args.file)
    w = exists_winning_params(f.game, _start(f, args.start))
    print(_vec(w) if w is not None else "none", file=out)
    return 0 if w is not None else 1


def cmd_query(args, out) -> int:
    f = _load(args.file)
    try:
        prefix = parse_prefix(args.prefix)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    override = None
    if args.bounds:
        b = _csv(args.bounds)
        if len(b) != f.arena.counter_count:
            raise UsageError(f"--bounds needs {f.arena.counter_count} values")
        override = {j + 1: v for j, v in enumerate(b)}
    try:
        q = ParamQuery(f.game, _start(f, args.start), prefix, override)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = eval_query(q)
    print("true" if res.value else "false", file=out)
    if res.assignment:
        print(" ".join(f"n{c}={v}" for c, v in sorted(res.assignment.items())), file=out)
    return 0 if res.value else 1


def cmd_profiles(args, out) -> int:
    f = _load(args.file)
    start = args.start or f.start
    t = iterate_profiles(f.game, args.counter, _csv(args.fixed), start)
    print(f"counter {t.counter_class}: {' '.join(t.vertices)}", file=out)
    if t.fixed:
        print(f"fixed {_vec(t.fixed)}", file=out)
    for n, w in enumerate(t.profiles):
        line = f"n={n} {format_bits(w)}"
        if t.start_wins:
            line += f" {t.start}={'win' if t.start_wins[n] else 'lose'}"
        print(line, file=out)
    print(f"preperiod {t.preperiod}", file=out)
    print(f"period {t.period}", file=out)
    return 0


def cmd_extract(args, out) -> int:
    f = _load(args.file)
    if not f.outputs:
        raise UsageError("extract-circuit needs 'output' lines (and usually 'input' lines)")
    g = GraphGameForm(f.game, f.inputs, f.outputs)
    out.write(format_circuit(ggf_to_circuit(g)))
    return 0


def cmd_rn(args, out) -> int:
    try:
        with open(args.circuit, encoding="utf-8") as fh:
            c = parse_circuit(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.circuit}: {exc.strerror}") from None
    print(repetition_number(circuit_function(c)), file=out)
    return 0


EXAMPLES = ("linear", "helpme", "helpme-param", "swap-gadget")


def cmd_example(args, out) -> int:
    name = args.name
    if name == "linear":
        game = build_linear(args.n)
    elif name in ("helpme", "helpme-param"):
        game = build_helpme(name == "helpme-param").payoff_at_least(args.threshold)
    elif name == "swap-gadget":
        game = sperner_gadget(GadgetSpec.from_word(swap_circuit(), (0, 1))).game
    else:
        raise UsageError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    out.write(to_dot(game.arena, game.condition) if args.dot else format_game(game))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paramgames", description="Counter-parameterized games on graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="who wins at the given parameter values")
    s.add_argument("file")
    s.add_argument("--params", default="")
    s.add_argument("--start")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("exists", help="least winning parameter vector within the bounds")
    s.add_argument("file")
    s.add_argument("--start")
    s.set_defaults(func=cmd_exists)

    s = sub.add_parser("query", help="evaluate a quantified parameter statement")
    s.add_argument("file")
    s.add_argument("--prefix", required=True, help='e.g. "A1 E2"')
    s.add_argument("--bounds", help="per-counter upper bounds, comma separated")
    s.add_argument("--start")
    s.set_defaults(func=cmd_query)

    s = sub.add_parser("profiles", help="win profiles of one counter class")
    s.add_argument("file")
    s.add_argument("--counter", type=int, required=True)
    s.add_argument("--fixed", default="")
    s.add_argument("--start")
    s.set_defaults(func=cmd_profiles)

    s = sub.add_parser("extract-circuit", help="monotone circuit of a reachability game form")
    s.add_argument("file")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("rn", help="repetition number of a circuit's function")
    s.add_argument("--circuit", required=True)
    s.set_defaults(func=cmd_rn)

    s = sub.add_parser("example", help="print a built-in game")
    s.add_argument("name", choices=EXAMPLES)
    s.add_argument("--n", type=int, default=4, help="chain length for 'linear'")
    s.add_argument("--threshold", type=int, choices=(1, 2), default=1, help="payoff threshold for help-me")
    s.add_argument("--dot", action="store_true", help="emit Graphviz instead of the arena format")
    s.set_defaults(func=cmd_example)
    return p


def run_command(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (UsageError, GameError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run_command())
