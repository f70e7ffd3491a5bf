"""Instantiating parameterized games at concrete counter values.

Two product constructions live here:

* :func:`unfold` materialises only the states reachable from the start,
  with readable string ids (``"v0[3]"``), and returns an ordinary game.
* :func:`win_grid` builds the full product ``V x {0..B_1} x ... x {0..B_N}``
  with numpy and solves it once, giving the winner for every vertex and
  every parameter vector up to the bounds in a single table.

The two are independent routes to the same answer and are cross-checked in
the tests.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import (LEAF, P1, P2, PLAIN, Arena, Edge, ParamGame, ParityCondition,
                   check_params, counter_class)
from .solver import IndexedGame, OrdinaryGame, solve, zielonka

State = tuple[str, tuple[int, ...]]


def state_id(v: str, counters: Sequence[int]) -> str:
    return f"{v}[{','.join(str(c) for c in counters)}]"


@dataclass(frozen=True)
class UnfoldedGame:
    game: OrdinaryGame
    back_map: dict[str, State]
    starts: tuple[str, ...]

    @property
    def start(self) -> str:
        return self.starts[0]


def _successor_states(arena: Arena, v: str, c: tuple[int, ...]) -> list[State]:
    j = counter_class(arena.owner[v])
    if j is None:
        return [(u, c) for u in arena.successors[v]]
    if c[j - 1] == 0:
        return [(arena.red[v], c)]
    d = list(c)
    d[j - 1] -= 1
    return [(arena.green[v], tuple(d))]


def reachable_states(arena: Arena, roots: Iterable[State]) -> tuple[list[State], list[tuple[int, int]]]:
    """BFS over product states. Returns states in discovery order and the
    edge list as index pairs."""
    index: dict[State, int] = {}
    states: list[State] = []
    edges: list[tuple[int, int]] = []
    queue: deque[State] = deque()
    for r in roots:
        if r not in index:
            index[r] = len(states)
            states.append(r)
            queue.append(r)
    while queue:
        s = queue.popleft()
        k = index[s]
        for t in _successor_states(arena, *s):
            if t not in index:
                index[t] = len(states)
                states.append(t)
                queue.append(t)
            edges.append((k, index[t]))
    return states, edges


def _as_starts(pg: ParamGame, start) -> tuple[str, ...]:
    if start is None or isinstance(start, str):
        return (pg.resolve_start(start),)
    starts = tuple(start)
    for s in starts:
        pg.resolve_start(s)
    return starts


def unfold(pg: ParamGame, params: Iterable[int], start: str | Iterable[str] | None = None) -> UnfoldedGame:
    """Product of ``pg`` with the counter values reachable from
    ``(start, params)``. ``start`` may also be a list of vertices."""
    arena = pg.arena
    params = check_params(arena, params)
    starts = _as_starts(pg, start)
    states, edges = reachable_states(arena, [(s, params) for s in starts])
    ids = [state_id(v, c) for v, c in states]
    owner = {}
    for (v, c), sid in zip(states, ids):
        o = arena.owner[v]
        owner[sid] = o if o in (P2, LEAF) else P1
    prod = Arena(owner=owner,
                 edges=tuple(sorted(Edge(ids[a], ids[b], PLAIN) for a, b in edges)),
                 counter_count=0)
    cond = ParityCondition({sid: pg.condition.priority[v] for (v, _), sid in zip(states, ids)})
    return UnfoldedGame(OrdinaryGame(prod, cond),
                        dict(zip(ids, states)),
                        tuple(state_id(s, params) for s in starts))


def indexed_product(pg: ParamGame, params: Sequence[int], starts: Sequence[str],
                    priority: dict[str, int] | None = None):
    """Reachable product as an :class:`IndexedGame` plus its state list
    (state ``k`` is index ``k``; the roots come first)."""
    arena = pg.arena
    prio = pg.condition.priority if priority is None else priority
    states, edges = reachable_states(arena, [(s, tuple(params)) for s in starts])
    e = np.array(edges, dtype=np.int64).reshape(-1, 2)
    owner = [1 if arena.owner[v] == P2 else 0 for v, _ in states]
    pr = [prio[v] for v, _ in states]
    return IndexedGame(len(states), e[:, 0], e[:, 1], owner, pr), states


def wins_from(pg: ParamGame, params: Iterable[int], starts: Sequence[str]) -> dict[str, bool]:
    """Player 1 winning status at ``params`` for each vertex in ``starts``."""
    params = check_params(pg.arena, params)
    starts = list(dict.fromkeys(starts))
    if not starts:
        return {}
    g, states = indexed_product(pg, params, starts)
    (w1, _), _ = zielonka(g)
    return {s: bool(w1[k]) for k, s in enumerate(starts)}


def wins_with_params(pg: ParamGame, params: Iterable[int], start: str | None = None) -> bool:
    """Does Player 1 win ``pg`` from ``start`` with the given parameters?"""
    u = unfold(pg, params, start)
    return u.start in solve(u.game).win1


@dataclass(frozen=True)
class WinGrid:
    """Winner table over ``vertices x {0..bounds[0]} x ... x {0..bounds[N-1]}``."""

    vertices: tuple[str, ...]
    bounds: tuple[int, ...]
    table: np.ndarray

    def at(self, v: str, params: Sequence[int]) -> bool:
        return bool(self.table[(self.vertices.index(v), *params)])

    def for_vertex(self, v: str) -> np.ndarray:
        return self.table[self.vertices.index(v)]


def product_arrays(pg: ParamGame, bounds: Sequence[int]):
    """Edges, owners and priorities of the full product, state index
    ``v * K + flat(counters)`` with ``K = prod(b + 1)``."""
    arena = pg.arena
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != arena.counter_count or any(b < 0 for b in bounds):
        raise ValueError(f"need {arena.counter_count} non-negative bounds")
    shape = tuple(b + 1 for b in bounds)
    K = int(np.prod(shape, dtype=np.int64))
    strides = [int(np.prod(shape[j + 1:], dtype=np.int64)) for j in range(len(shape))]
    idx = arena.index
    ks = np.arange(K, dtype=np.int64)
    srcs, dsts = [], []
    for v in arena.vertices:
        base = idx[v] * K
        j = counter_class(arena.owner[v])
        if j is None:
            for u in arena.successors[v]:
                srcs.append(base + ks)
                dsts.append(idx[u] * K + ks)
        else:
            st = strides[j - 1]
            zero = (ks // st) % shape[j - 1] == 0
            srcs.append(base + ks)
            dsts.append(np.where(zero, idx[arena.red[v]] * K + ks, idx[arena.green[v]] * K + ks - st))
    owner = np.repeat([1 if arena.owner[v] == P2 else 0 for v in arena.vertices], K)
    prio = np.repeat([pg.condition.priority[v] for v in arena.vertices], K)
    return np.concatenate(srcs), np.concatenate(dsts), owner, prio, shape


def win_grid(pg: ParamGame, bounds: Sequence[int]) -> WinGrid:
    """Solve the full product once and tabulate Player 1's winning status."""
    src, dst, owner, prio, shape = product_arrays(pg, bounds)
    n = len(pg.arena.vertices) * int(np.prod(shape, dtype=np.int64))
    (w1, _), _ = zielonka(IndexedGame(n, src, dst, owner, prio))
    return WinGrid(pg.arena.vertices, tuple(b - 1 for b in shape),
                   w1.reshape((len(pg.arena.vertices),) + shape))
