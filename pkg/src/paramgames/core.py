"""Arenas, parity conditions and single-step run semantics.

Vertex ids are opaque strings. Owners are one of ``"p1"``, ``"p2"``,
``"leaf"`` or ``"c<j>"`` for counter class ``j`` (1-based). Edges carry a
colour: ``"plain"`` everywhere except counter vertices, which have exactly
one ``"red"`` (taken when the counter is zero) and one ``"green"`` edge
(taken, with a decrement, when it is positive).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

P1 = "p1"
P2 = "p2"
LEAF = "leaf"
PLAIN, RED, GREEN = "plain", "red", "green"
COLORS = (PLAIN, RED, GREEN)

_COUNTER_RE = re.compile(r"c([1-9][0-9]*)\Z")


def counter_class(owner: str) -> int | None:
    """Return ``j`` for a ``"c<j>"`` owner, else ``None``."""
    m = _COUNTER_RE.match(owner)
    return int(m.group(1)) if m else None


def is_valid_owner(owner: str) -> bool:
    return owner in (P1, P2, LEAF) or counter_class(owner) is not None


class Edge(NamedTuple):
    source: str
    target: str
    color: str = PLAIN


class Violation(NamedTuple):
    code: str
    vertex: str | None
    message: str


class GameError(Exception):
    """Base class for errors raised by this package."""


class ArenaError(GameError):
    """Raised by :func:`validate_arena` with every violation found."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        lines = [f"{v.code}: {v.message}" for v in self.violations]
        super().__init__("invalid arena:\n  " + "\n  ".join(lines))

    @property
    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


class IllegalChoice(GameError):
    pass


class NotALeaf(GameError):
    pass


@dataclass(frozen=True)
class Arena:
    """A validated parameterized arena. Build through :func:`validate_arena`."""

    owner: Mapping[str, str]
    edges: tuple[Edge, ...]
    counter_count: int

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.owner))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def successors(self) -> dict[str, tuple[str, ...]]:
        """Plain successors of p1/p2/leaf vertices, lexicographically sorted."""
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            if e.color == PLAIN:
                out[e.source].append(e.target)
        return {v: tuple(sorted(ts)) for v, ts in out.items()}

    @cached_property
    def red(self) -> dict[str, str]:
        return {e.source: e.target for e in self.edges if e.color == RED}

    @cached_property
    def green(self) -> dict[str, str]:
        return {e.source: e.target for e in self.edges if e.color == GREEN}

    @cached_property
    def leaves(self) -> frozenset[str]:
        return frozenset(v for v, o in self.owner.items() if o == LEAF)

    def counter_vertices(self, j: int) -> tuple[str, ...]:
        """Vertices of counter class ``j`` in lexicographic order."""
        tag = f"c{j}"
        return tuple(v for v in self.vertices if self.owner[v] == tag)

    def all_successors(self, v: str) -> tuple[str, ...]:
        """Every edge target of ``v`` regardless of colour."""
        if counter_class(self.owner[v]) is not None:
            return tuple(sorted({self.red[v], self.green[v]}))
        return self.successors[v]

    def __len__(self) -> int:
        return len(self.owner)


def validate_arena(
    owner: Mapping[str, str],
    edges: Iterable[Edge | tuple],
    counter_count: int | None = None,
) -> Arena:
    """Check a raw vertex/edge listing and return an :class:`Arena`.

    Leaf self-loops are added when missing. ``counter_count`` defaults to
    the largest counter class in use; every class ``1..N`` must be inhabited.
    Raises :class:`ArenaError` listing all violations.
    """
    bad: list[Violation] = []
    owner = dict(owner)
    for v, o in owner.items():
        if not isinstance(v, str) or not v or any(c.isspace() for c in v):
            bad.append(Violation("BadVertexId", str(v), f"invalid vertex id {v!r}"))
        if not is_valid_owner(o):
            bad.append(Violation("BadOwner", v, f"unknown owner {o!r} for {v}"))

    norm: list[Edge] = []
    for raw in edges:
        e = Edge(*raw)
        if e.color not in COLORS:
            bad.append(Violation("BadColor", e.source, f"unknown colour {e.color!r}"))
            continue
        missing = [x for x in (e.source, e.target) if x not in owner]
        if missing:
            for x in missing:
                bad.append(Violation("UnknownVertex", x, f"edge {e.source}->{e.target} uses undeclared {x}"))
            continue
        norm.append(e)
    if len(set(norm)) != len(norm):
        dups = sorted({e for e in norm if norm.count(e) > 1})
        for e in dups:
            bad.append(Violation("DuplicateEdge", e.source, f"duplicate edge {e.source}->{e.target}"))
    norm = sorted(set(norm))

    out: dict[str, list[Edge]] = {v: [] for v in owner}
    for e in norm:
        out[e.source].append(e)

    used: set[int] = set()
    for v in sorted(owner):
        o = owner[v]
        es = out[v]
        j = counter_class(o) if is_valid_owner(o) else None
        if j is not None:
            used.add(j)
            reds = [e for e in es if e.color == RED]
            greens = [e for e in es if e.color == GREEN]
            plains = [e for e in es if e.color == PLAIN]
            if not reds:
                bad.append(Violation("MissingRedEdge", v, f"counter vertex {v} has no red edge"))
            if not greens:
                bad.append(Violation("MissingGreenEdge", v, f"counter vertex {v} has no green edge"))
            if len(reds) > 1 or len(greens) > 1 or plains:
                bad.append(Violation("ExtraCounterEdge", v, f"counter vertex {v} needs exactly one red and one green edge"))
        elif o == LEAF:
            others = [e for e in es if e.target != v or e.color != PLAIN]
            if others:
                bad.append(Violation("BadLeaf", v, f"leaf {v} has edges other than its self-loop"))
            if not any(e.target == v and e.color == PLAIN for e in es):
                norm.append(Edge(v, v, PLAIN))
        elif o in (P1, P2):
            if not es:
                bad.append(Violation("DeadEnd", v, f"{o} vertex {v} has no successor"))
            if any(e.color != PLAIN for e in es):
                bad.append(Violation("ColoredPlayerEdge", v, f"{o} vertex {v} has a coloured edge"))
            if any(e.target == v for e in es):
                bad.append(Violation("SelfLoop", v, f"non-leaf vertex {v} has a self-loop"))

    n = max(used, default=0) if counter_count is None else counter_count
    for j in range(1, n + 1):
        if j not in used:
            bad.append(Violation("EmptyCounterClass", None, f"counter class {j} has no vertices"))
    for j in sorted(used):
        if j > n:
            bad.append(Violation("BadCounterClass", None, f"counter class {j} exceeds counter_count {n}"))
    if not owner:
        bad.append(Violation("EmptyArena", None, "arena has no vertices"))
    if bad:
        raise ArenaError(bad)
    return Arena(owner=owner, edges=tuple(sorted(norm)), counter_count=n)


@dataclass(frozen=True)
class ParityCondition:
    """Max-even parity: Player 1 wins iff the largest priority seen
    infinitely often is even."""

    priority: Mapping[str, int]

    def __post_init__(self):
        for v, p in self.priority.items():
            if not isinstance(p, int) or p < 0:
                raise ValueError(f"priority of {v} must be a natural number, got {p!r}")

    def check(self, arena: Arena) -> None:
        if set(self.priority) != set(arena.owner):
            missing = set(arena.owner) - set(self.priority)
            extra = set(self.priority) - set(arena.owner)
            raise ValueError(f"priority map not total on arena (missing {sorted(missing)}, extra {sorted(extra)})")

    def lasso_winner(self, prefix: Iterable[str], cycle: Iterable[str]) -> int:
        """Winner (1 or 2) of the run ``prefix cycle^omega``."""
        top = max(self.priority[v] for v in cycle)
        return 1 if top % 2 == 0 else 2


@dataclass(frozen=True)
class ParamGame:
    """Arena plus winning condition, optionally with a default start vertex."""

    arena: Arena
    condition: ParityCondition
    start: str | None = None

    def __post_init__(self):
        self.condition.check(self.arena)
        if self.start is not None and self.start not in self.arena.owner:
            raise ValueError(f"start vertex {self.start!r} not in arena")

    def resolve_start(self, start: str | None) -> str:
        s = self.start if start is None else start
        if s is None:
            raise ValueError("no start vertex given")
        if s not in self.arena.owner:
            raise ValueError(f"unknown start vertex {s!r}")
        return s

    def with_condition(self, condition: ParityCondition) -> "ParamGame":
        return ParamGame(self.arena, condition, self.start)


@dataclass(frozen=True)
class RunState:
    vertex: str
    counters: tuple[int, ...]
    step_index: int = 0


def initial_state(arena: Arena, start: str, params: Iterable[int]) -> RunState:
    params = check_params(arena, params)
    if start not in arena.owner:
        raise ValueError(f"unknown start vertex {start!r}")
    return RunState(start, params, 0)


def check_params(arena: Arena, params: Iterable[int]) -> tuple[int, ...]:
    params = tuple(int(x) for x in params)
    if len(params) != arena.counter_count:
        raise ValueError(f"expected {arena.counter_count} parameter values, got {len(params)}")
    if any(x < 0 for x in params):
        raise ValueError("parameter values must be natural numbers")
    return params


def step(arena: Arena, state: RunState, choice: str | None = None) -> RunState:
    """Advance a run by one move.

    Player vertices need ``choice``; counter vertices and leaves must not
    get one.
    """
    v = state.vertex
    o = arena.owner[v]
    j = counter_class(o)
    nxt = state.step_index + 1
    if j is not None or o == LEAF:
        if choice is not None:
            raise IllegalChoice(f"no choice allowed at {o} vertex {v}")
        if o == LEAF:
            return RunState(v, state.counters, nxt)
        c = list(state.counters)
        if c[j - 1] == 0:
            return RunState(arena.red[v], state.counters, nxt)
        c[j - 1] -= 1
        return RunState(arena.green[v], tuple(c), nxt)
    if choice not in arena.successors[v]:
        raise IllegalChoice(f"{choice!r} is not a successor of {v}")
    return RunState(choice, state.counters, nxt)


def _leaf_set(arena: Arena, vs: Iterable[str]) -> set[str]:
    vs = set(vs)
    for v in sorted(vs):
        if arena.owner.get(v) != LEAF:
            raise NotALeaf(f"{v!r} is not a leaf")
    return vs


def reach_condition(arena: Arena, targets: Iterable[str]) -> ParityCondition:
    """Player 1 wins exactly the runs absorbed in one of ``targets``."""
    ts = _leaf_set(arena, targets)
    return ParityCondition({v: 2 if v in ts else 1 for v in arena.vertices})


def safety_condition(arena: Arena, bad: Iterable[str]) -> ParityCondition:
    """Player 1 wins exactly the runs that never reach a leaf in ``bad``."""
    bs = _leaf_set(arena, bad)
    return ParityCondition({v: 1 if v in bs else 0 for v in arena.vertices})
