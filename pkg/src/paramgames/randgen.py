"""Random instances for property tests and benchmarks.

All generators take a ``numpy.random.Generator`` and only produce inputs
that pass validation.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import LEAF, P1, P2, Edge, ParamGame, ParityCondition, reach_condition, validate_arena
from .gameform.circuits import AND, CONST, INPUT, OR, Gate, MonotoneCircuit
from .gameform.functions import BoolFunction
from .gameform.ggf import GraphGameForm


def _pick(rng, items, k):
    idx = rng.choice(len(items), size=k, replace=False)
    return [items[i] for i in sorted(idx)]


def random_param_game(rng: np.random.Generator, n_vertices: int = 8,
                      counter_sizes: Sequence[int] = (2,), n_leaves: int = 2,
                      max_out: int = 2, n_priorities: int = 3,
                      reach: bool = False) -> ParamGame:
    """Random game with the given counter class sizes.

    With ``reach=True`` the condition is reachability of a random nonempty
    subset of the leaves; otherwise priorities are uniform in
    ``0..n_priorities-1``. The start is a random non-leaf vertex.
    """
    counters = [f"k{j}_{i}" for j, s in enumerate(counter_sizes, 1) for i in range(s)]
    leaves = [f"l{i}" for i in range(n_leaves)]
    n_players = n_vertices - len(counters) - len(leaves)
    if n_players < 0:
        raise ValueError("too many counter vertices and leaves for n_vertices")
    players = [f"p{i}" for i in range(n_players)]
    owner = {v: LEAF for v in leaves}
    for j, s in enumerate(counter_sizes, 1):
        for i in range(s):
            owner[f"k{j}_{i}"] = f"c{j}"
    for v in players:
        owner[v] = P1 if rng.random() < 0.5 else P2
    allv = sorted(owner)
    edges = []
    for v in players:
        targets = [u for u in allv if u != v]
        k = int(rng.integers(1, min(max_out, len(targets)) + 1))
        edges += [Edge(v, u) for u in _pick(rng, targets, k)]
    for v in counters:
        edges.append(Edge(v, allv[rng.integers(len(allv))], "red"))
        edges.append(Edge(v, allv[rng.integers(len(allv))], "green"))
    arena = validate_arena(owner, edges)
    if reach:
        if not leaves:
            raise ValueError("reachability needs at least one leaf")
        k = int(rng.integers(1, len(leaves) + 1))
        cond = reach_condition(arena, _pick(rng, leaves, k))
    else:
        cond = ParityCondition({v: int(rng.integers(n_priorities)) for v in allv})
    inner = [v for v in allv if owner[v] != LEAF]
    start = inner[rng.integers(len(inner))] if inner else allv[0]
    return ParamGame(arena, cond, start)


def random_parity_game(rng: np.random.Generator, n_vertices: int = 8, n_priorities: int = 3,
                       max_out: int = 3, leaf_prob: float = 0.1) -> ParamGame:
    """Counter-free game; a few vertices may be leaves."""
    names = [f"v{i}" for i in range(n_vertices)]
    owner = {}
    for v in names:
        r = rng.random()
        owner[v] = LEAF if r < leaf_prob else (P1 if r < (1 + leaf_prob) / 2 else P2)
    if n_vertices == 1:
        owner[names[0]] = LEAF
    edges = []
    for v in names:
        if owner[v] == LEAF:
            continue
        targets = [u for u in names if u != v]
        k = int(rng.integers(1, min(max_out, len(targets)) + 1))
        edges += [Edge(v, u) for u in _pick(rng, targets, k)]
    arena = validate_arena(owner, edges)
    cond = ParityCondition({v: int(rng.integers(n_priorities)) for v in names})
    return ParamGame(arena, cond, names[0])


def random_monotone_circuit(rng: np.random.Generator, m: int, n: int, n_gates: int = 5,
                            max_fanin: int = 3, const_prob: float = 0.15) -> MonotoneCircuit:
    gates: dict[str, Gate] = {f"x{i}": Gate(INPUT, (i,)) for i in range(1, m + 1)}
    if not gates or rng.random() < const_prob:
        gates["k1"] = Gate(CONST, (1,))
    if rng.random() < const_prob:
        gates["k0"] = Gate(CONST, (0,))
    for g in range(n_gates):
        pool = list(gates)
        k = int(rng.integers(1, min(max_fanin, len(pool)) + 1))
        kind = AND if rng.random() < 0.5 else OR
        gates[f"g{g}"] = Gate(kind, tuple(_pick(rng, pool, k)))
    pool = list(gates)
    outs = tuple(pool[i] for i in rng.integers(len(pool), size=n))
    return MonotoneCircuit(gates, outs, m)


def random_ggf(rng: np.random.Generator, m: int, n: int, n_inner: int = 5,
               max_out: int = 2, reach: bool = True, n_priorities: int = 3,
               counter_size: int = 0, param: int = 0) -> GraphGameForm:
    """Random graph game form, with cycles among inner vertices.

    Inner vertices belong to Player 1 or 2 at random; ``counter_size`` of
    them become counter vertices of class 1 fixed at ``param``. Besides the
    ``m`` designated leaves there are fixed leaves ``win`` and ``lose``.
    """
    if n > n_inner:
        raise ValueError("need at least as many inner vertices as outputs")
    inner = [f"s{i}" for i in range(n_inner)]
    ins = [f"in{i}" for i in range(1, m + 1)]
    owner = {v: LEAF for v in ins + ["win", "lose"]}
    for k, v in enumerate(inner):
        if k < counter_size:
            owner[v] = "c1"
        else:
            owner[v] = P1 if rng.random() < 0.5 else P2
    allv = sorted(owner)
    edges = []
    for v in inner:
        targets = [u for u in allv if u != v]
        if owner[v] == "c1":
            edges.append(Edge(v, targets[rng.integers(len(targets))], "red"))
            edges.append(Edge(v, targets[rng.integers(len(targets))], "green"))
            continue
        k = int(rng.integers(1, max_out + 1))
        edges += [Edge(v, u) for u in _pick(rng, targets, k)]
    arena = validate_arena(owner, edges)
    if reach:
        cond = reach_condition(arena, ["win"])
    else:
        prio = {v: int(rng.integers(n_priorities)) for v in allv}
        prio["win"], prio["lose"] = 0, 1
        cond = ParityCondition(prio)
    outs = _pick(rng, inner, n)
    rng.shuffle(outs)
    fixed = (param,) if counter_size else ()
    return GraphGameForm(ParamGame(arena, cond), tuple(ins), tuple(outs), fixed)


def random_table(rng: np.random.Generator, m: int, n: int) -> BoolFunction:
    return BoolFunction(m, n, rng.integers(0, 2, size=(1 << m, n), dtype=np.uint8))
