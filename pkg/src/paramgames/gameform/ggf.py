"""Graph game forms: games with designated input leaves and output vertices.

A form with inputs ``l_1..l_m`` and outputs ``s_1..s_n`` computes a
boolean function: for an input vector ``b`` the leaf ``l_i`` is made
winning for Player 1 iff ``b_i = 1``, and output bit ``j`` says whether
Player 1 wins from ``s_j``. Leaves are absorbing, so overriding a
designated leaf's priority (even = win, odd = lose) realises exactly this.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..core import (LEAF, P1, P2, PLAIN, Edge, GameError, ParamGame, ParityCondition,
                    check_params, counter_class, reach_condition, validate_arena)
from ..solver import zielonka
from ..unfold import indexed_product
from .circuits import AND, CONST, INPUT, OR, Gate, MonotoneCircuit
from .functions import ArityMismatch, BoolFunction, _guard, code_to_bits

WIN_PRIORITY, LOSE_PRIORITY = 0, 1


class NotReachability(GameError):
    pass


class HasCounters(GameError):
    pass


class EmptyCounterClass(GameError):
    pass


class GameFormError(GameError):
    pass


@dataclass(frozen=True)
class GraphGameForm:
    game: ParamGame
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    fixed_params: tuple[int, ...] = ()

    def __post_init__(self):
        arena = self.game.arena
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        object.__setattr__(self, "fixed_params", check_params(arena, self.fixed_params))
        if len(set(self.inputs)) != len(self.inputs):
            raise GameFormError("designated leaves must be distinct")
        if len(set(self.outputs)) != len(self.outputs):
            raise GameFormError("designated outputs must be distinct")
        for v in self.inputs:
            if arena.owner.get(v) != LEAF:
                raise GameFormError(f"designated input {v!r} is not a leaf")
        for v in self.outputs:
            if v not in arena.owner:
                raise GameFormError(f"unknown output vertex {v!r}")
            if v in self.inputs:
                raise GameFormError(f"output {v!r} is also a designated input leaf")

    @property
    def m(self) -> int:
        return len(self.inputs)

    @property
    def n(self) -> int:
        return len(self.outputs)

    def size(self) -> int:
        return len(self.game.arena)


class _Evaluator:
    """Unfolds a form once; each evaluation only rewrites leaf priorities."""

    def __init__(self, g: GraphGameForm):
        self.g = g
        self.n = g.n
        if not g.outputs:
            return
        self.product, states = indexed_product(g.game, g.fixed_params, g.outputs)
        pos = {v: i for i, v in enumerate(g.inputs)}
        self.base_prio = self.product.priority.copy()
        self.slot = np.array([pos.get(v, -1) for v, _ in states], dtype=np.int64)
        self.designated = self.slot >= 0

    def __call__(self, bits: Sequence[int]) -> tuple[int, ...]:
        if len(bits) != self.g.m:
            raise ArityMismatch(f"expected {self.g.m} input bits, got {len(bits)}")
        if not self.n:
            return ()
        b = np.asarray(bits, dtype=np.int64)
        prio = self.base_prio.copy()
        d = self.designated
        prio[d] = np.where(b[self.slot[d]] == 1, WIN_PRIORITY, LOSE_PRIORITY)
        (w1, _), _ = zielonka(self.product.with_priority(prio))
        return tuple(int(x) for x in w1[: self.n])


def evaluate_ggf(g: GraphGameForm, bits: Sequence[int]) -> tuple[int, ...]:
    """Output bits of ``g`` on input ``bits``, in the order of ``g.outputs``."""
    return _Evaluator(g)(bits)


def define_function(g: GraphGameForm) -> BoolFunction:
    """Tabulate ``g`` over all ``2**m`` inputs."""
    _guard(g.m)
    ev = _Evaluator(g)
    rows = [ev(code_to_bits(c, g.m)) for c in range(1 << g.m)]
    return BoolFunction(g.m, g.n, np.array(rows, dtype=np.uint8).reshape(1 << g.m, g.n))


# ---------------------------------------------------------------------------
# circuits -> games


def _gate_vertex(gid: str) -> str:
    return f"g:{gid}"


def circuit_to_ggf(c: MonotoneCircuit) -> GraphGameForm:
    """Reachability form computing ``c``: OR gates belong to Player 1, AND
    gates to Player 2, inputs become designated leaves ``in:k`` and
    constants become fixed leaves ``const:0`` / ``const:1``."""
    owner: dict[str, str] = {f"in:{k}": LEAF for k in range(1, c.n_inputs + 1)}
    edges: list[Edge] = []

    def target(gid: str) -> str:
        g = c.gates[gid]
        if g.kind == INPUT:
            return f"in:{g.args[0]}"
        if g.kind == CONST:
            return f"const:{g.args[0]}"
        return _gate_vertex(gid)

    for gid, g in c.gates.items():
        if g.kind == CONST:
            owner[f"const:{g.args[0]}"] = LEAF
        elif g.kind in (AND, OR):
            v = _gate_vertex(gid)
            owner[v] = P1 if g.kind == OR else P2
            edges.extend(Edge(v, t, PLAIN) for t in sorted({target(ch) for ch in g.args}))

    outputs = []
    for j, gid in enumerate(c.outputs, 1):
        t = target(gid)
        if c.gates[gid].kind in (AND, OR) and t not in outputs:
            outputs.append(t)
        else:
            # inputs, constants and repeated outputs get their own source
            s = f"out:{j}"
            owner[s] = P1
            edges.append(Edge(s, t, PLAIN))
            outputs.append(s)
    if not owner:
        owner["const:0"] = LEAF
    arena = validate_arena(owner, edges)
    cond = reach_condition(arena, [v for v in ("const:1",) if v in owner])
    inputs = tuple(f"in:{k}" for k in range(1, c.n_inputs + 1))
    return GraphGameForm(ParamGame(arena, cond), inputs, tuple(outputs))


# ---------------------------------------------------------------------------
# games -> circuits

_WIN = ("1",)
_LOSE = ("0",)


def is_reachability_form(g: GraphGameForm) -> bool:
    arena, prio = g.game.arena, g.game.condition.priority
    return all(prio[v] % 2 == 1 for v in arena.vertices if arena.owner[v] != LEAF)


def ggf_to_circuit(g: GraphGameForm) -> MonotoneCircuit:
    """Extract a monotone circuit from a counter-free reachability form.

    Each output is unfolded into a tree; a vertex repeating one of its
    ancestors becomes a losing leaf. Fixed leaves are then eliminated
    bottom-up (a Player 1 vertex with a winning child wins, losing children
    are dropped, no children left means losing; dually for Player 2).
    Copies of designated leaves collapse onto one INPUT gate per input and
    identical subtrees are shared. The depth never exceeds the number of
    vertices of ``g``.
    """
    arena = g.game.arena
    if arena.counter_count:
        raise HasCounters("circuit extraction needs a form without counters")
    if not is_reachability_form(g):
        raise NotReachability("every non-leaf vertex must have odd priority")
    prio = g.game.condition.priority
    slot = {v: i for i, v in enumerate(g.inputs, 1)}
    memo: dict[tuple[str, frozenset], tuple] = {}

    def node(v: str, path: frozenset) -> tuple:
        if v in path:
            return _LOSE
        key = (v, path)
        if key in memo:
            return memo[key]
        o = arena.owner[v]
        if o == LEAF:
            res = ("x", slot[v]) if v in slot else (_WIN if prio[v] % 2 == 0 else _LOSE)
        else:
            sub = path | {v}
            kids = [node(u, sub) for u in arena.successors[v]]
            absorbing, neutral, op = (_WIN, _LOSE, OR) if o == P1 else (_LOSE, _WIN, AND)
            if absorbing in kids:
                res = absorbing
            else:
                kids = list(dict.fromkeys(k for k in kids if k != neutral))
                if not kids:
                    res = neutral
                elif len(kids) == 1:
                    res = kids[0]
                else:
                    res = (op, tuple(kids))
        memo[key] = res
        return res

    gates: dict[str, Gate] = {}
    names: dict[tuple, str] = {}
    counter = itertools.count()

    def emit(nd: tuple) -> str:
        if nd in names:
            return names[nd]
        if nd == _WIN or nd == _LOSE:
            gid = "one" if nd == _WIN else "zero"
            gates[gid] = Gate(CONST, (1 if nd == _WIN else 0,))
        elif nd[0] == "x":
            gid = f"x{nd[1]}"
            gates[gid] = Gate(INPUT, (nd[1],))
        else:
            kids = tuple(emit(k) for k in nd[1])
            gid = f"n{next(counter)}"
            gates[gid] = Gate(nd[0], kids)
        names[nd] = gid
        return gid

    outs = tuple(emit(node(s, frozenset())) for s in g.outputs)
    return MonotoneCircuit(gates, outs, g.m)


# ---------------------------------------------------------------------------
# least fixed points


def lfp_ggf(g: GraphGameForm, m_x: int, keep: str = "x") -> GraphGameForm:
    """Form for the least fixed point in the first ``m_x`` coordinates.

    Each x-input leaf ``l_i`` becomes a Player 1 vertex with a single edge
    to ``s_i``. It gets an odd priority above every other priority, so
    plays cycling through the feedback edges forever are lost by Player 1,
    which is what makes the fixed point the least one. The remaining
    inputs are the y-block; the outputs are ``s_1..s_{m_x}`` (``keep="x"``,
    the fixed point itself) or ``s_{m_x+1}..s_n`` (``keep="y"``).
    """
    if g.m != g.n:
        raise ArityMismatch(f"least fixed points need m == n, got {g.m} and {g.n}")
    if not 0 <= m_x <= g.m:
        raise ArityMismatch(f"x-block size {m_x} out of range for m = {g.m}")
    if keep not in ("x", "y"):
        raise ValueError("keep must be 'x' or 'y'")
    arena = g.game.arena
    xs = g.inputs[:m_x]
    owner = dict(arena.owner)
    for v in xs:
        owner[v] = P1
    edges = [e for e in arena.edges if e.source not in xs]
    edges += [Edge(l, s, PLAIN) for l, s in zip(xs, g.outputs[:m_x])]
    new_arena = validate_arena(owner, edges, arena.counter_count)
    prio = dict(g.game.condition.priority)
    top = max(prio.values())
    feedback = top + 1 if (top + 1) % 2 == 1 else top + 2
    for v in xs:
        prio[v] = feedback
    outs = g.outputs[:m_x] if keep == "x" else g.outputs[m_x:]
    game = ParamGame(new_arena, ParityCondition(prio), g.game.start)
    return GraphGameForm(game, g.inputs[m_x:], outs, g.fixed_params)


# ---------------------------------------------------------------------------
# induced forms


def in_copy(v: str) -> str:
    return f"{v}^in"


def out_copy(v: str) -> str:
    return f"{v}^out"


def induced_ggf(pg: ParamGame, j: int, fixed: Iterable[int] = ()) -> GraphGameForm:
    """Form obtained by cutting counter class ``j`` open.

    Every ``v`` of class ``j`` splits into a source ``v^in`` (keeps only its
    green edge, now plain, and loses all incoming edges) and a designated
    leaf ``v^out`` (receives every edge that entered ``v``). Inputs and
    outputs follow the lexicographic order of ``v``. Higher counter classes
    shift down by one; ``fixed`` gives their values.
    """
    arena = pg.arena
    if not 1 <= j <= arena.counter_count or not arena.counter_vertices(j):
        raise EmptyCounterClass(f"counter class {j} is empty")
    cut = arena.counter_vertices(j)
    cutset = set(cut)
    for v in cut:
        for name in (in_copy(v), out_copy(v)):
            if name in arena.owner:
                raise GameFormError(f"vertex id {name!r} clashes with the split copies")

    def renumber(o: str) -> str:
        k = counter_class(o)
        return f"c{k - 1}" if k is not None and k > j else o

    owner = {v: renumber(o) for v, o in arena.owner.items() if v not in cutset}
    prio = {v: p for v, p in pg.condition.priority.items() if v not in cutset}
    for v in cut:
        owner[in_copy(v)] = P1
        owner[out_copy(v)] = LEAF
        prio[in_copy(v)] = prio[out_copy(v)] = pg.condition.priority[v]

    def redirect(t: str) -> str:
        return out_copy(t) if t in cutset else t

    edges = [Edge(e.source, redirect(e.target), e.color)
             for e in arena.edges if e.source not in cutset]
    edges += [Edge(in_copy(v), redirect(arena.green[v]), PLAIN) for v in cut]
    new_arena = validate_arena(owner, edges, arena.counter_count - 1)
    start = pg.start if pg.start is not None and pg.start not in cutset else None
    game = ParamGame(new_arena, ParityCondition(prio), start)
    return GraphGameForm(game, tuple(out_copy(v) for v in cut), tuple(in_copy(v) for v in cut),
                         tuple(fixed))
