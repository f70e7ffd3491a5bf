"""Line-oriented arena files.

::

    # chain of counter vertices
    vertex v0 c1
    vertex l1 leaf prio=2
    vertex l2 leaf
    edge v0 l1 green
    edge v0 l2 red
    start v0

Owners are ``p1``, ``p2``, ``c<j>`` or ``leaf``; the priority defaults to 1.
Edge colours (``red``/``green``) are required on edges leaving counter
vertices and forbidden elsewhere. Leaf self-loops are implicit. Graph game
forms add ordered ``input <leaf>`` and ``output <vertex>`` lines.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (LEAF, PLAIN, Arena, GameError, ParamGame, ParityCondition, counter_class,
                   is_valid_owner, validate_arena)


class ParseError(GameError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class GameFile:
    game: ParamGame
    inputs: tuple[str, ...] = ()
    outputs: tuple[str, ...] = ()

    @property
    def arena(self) -> Arena:
        return self.game.arena

    @property
    def condition(self) -> ParityCondition:
        return self.game.condition

    @property
    def start(self) -> str | None:
        return self.game.start


def parse_game_file(text: str) -> GameFile:
    owner: dict[str, str] = {}
    prio: dict[str, int] = {}
    edges: list[tuple[int, str, str, str]] = []
    start = None
    inputs: list[str] = []
    outputs: list[str] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "vertex":
            if len(tok) not in (3, 4):
                raise ParseError(no, "expected 'vertex <id> <owner> [prio=<n>]'")
            v, o = tok[1], tok[2]
            if v in owner:
                raise ParseError(no, f"duplicate vertex {v}")
            if not is_valid_owner(o):
                raise ParseError(no, f"unknown owner {o!r}")
            p = 1
            if len(tok) == 4:
                key, _, val = tok[3].partition("=")
                if key != "prio" or not val.isdigit():
                    raise ParseError(no, f"bad attribute {tok[3]!r}; expected prio=<n>")
                p = int(val)
            owner[v], prio[v] = o, p
        elif kw == "edge":
            if len(tok) not in (3, 4):
                raise ParseError(no, "expected 'edge <from> <to> [red|green]'")
            color = tok[3] if len(tok) == 4 else PLAIN
            if color not in ("red", "green", PLAIN):
                raise ParseError(no, f"unknown colour {color!r}")
            edges.append((no, tok[1], tok[2], color))
        elif kw in ("start", "input", "output"):
            if len(tok) != 2:
                raise ParseError(no, f"expected '{kw} <id>'")
            if kw == "start":
                if start is not None:
                    raise ParseError(no, "duplicate start line")
                start = tok[1]
            else:
                (inputs if kw == "input" else outputs).append(tok[1])
        else:
            raise ParseError(no, f"unknown statement {kw!r}")
    if not owner:
        raise ParseError(0, "no vertices declared")
    for no, a, b, color in edges:
        if a not in owner:
            continue
        is_counter = counter_class(owner[a]) is not None
        if is_counter and color == PLAIN:
            raise ParseError(no, f"edge from counter vertex {a} needs a colour")
        if not is_counter and color != PLAIN:
            raise ParseError(no, f"colour on edge from non-counter vertex {a}")
    for kw, vs in (("start", [start] if start else []), ("input", inputs), ("output", outputs)):
        for v in vs:
            if v not in owner:
                raise ParseError(0, f"{kw} vertex {v!r} is not declared")
    arena = validate_arena(owner, [(a, b, c) for _, a, b, c in edges])
    game = ParamGame(arena, ParityCondition(prio), start)
    return GameFile(game, tuple(inputs), tuple(outputs))


def parse_arena(text: str) -> tuple[Arena, ParityCondition, str | None]:
    f = parse_game_file(text)
    return f.arena, f.condition, f.start


def format_arena(arena: Arena, condition: ParityCondition, start: str | None = None,
                 inputs=(), outputs=()) -> str:
    lines = []
    for v in arena.vertices:
        p = condition.priority[v]
        lines.append(f"vertex {v} {arena.owner[v]}" + (f" prio={p}" if p != 1 else ""))
    for e in arena.edges:
        if arena.owner[e.source] == LEAF:
            continue
        lines.append(f"edge {e.source} {e.target}" + (f" {e.color}" if e.color != PLAIN else ""))
    lines += [f"input {v}" for v in inputs]
    lines += [f"output {v}" for v in outputs]
    if start is not None:
        lines.append(f"start {start}")
    return "\n".join(lines) + "\n"


def format_game(game: ParamGame, inputs=(), outputs=()) -> str:
    return format_arena(game.arena, game.condition, game.start, inputs, outputs)


def to_dot(arena: Arena, condition: ParityCondition) -> str:
    """Graphviz rendering: boxes for Player 2, diamonds for counters."""
    shapes = {"p1": "circle", "p2": "box", LEAF: "doublecircle"}
    out = ["digraph arena {"]
    for v in arena.vertices:
        o = arena.owner[v]
        shape = shapes.get(o, "diamond")
        out.append(f'  "{v}" [shape={shape}, label="{v}\\n{o} p={condition.priority[v]}"];')
    for e in arena.edges:
        attr = f" [color={e.color}]" if e.color != PLAIN else ""
        out.append(f'  "{e.source}" -> "{e.target}"{attr};')
    out.append("}")
    return "\n".join(out) + "\n"
