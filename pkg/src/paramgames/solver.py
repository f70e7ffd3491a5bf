"""Finite parity games without counters: Zielonka's recursive algorithm.

Vertices are solved through an integer-indexed copy of the game
(:class:`IndexedGame`) whose index order is the lexicographic order of the
vertex ids. All tie-breaking picks the smallest index, so results are
reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .core import P1, P2, Arena, GameError, ParityCondition, counter_class


class IncompleteStrategy(GameError):
    pass


@dataclass(frozen=True)
class OrdinaryGame:
    arena: Arena
    condition: ParityCondition

    def __post_init__(self):
        if self.arena.counter_count or any(counter_class(o) is not None for o in self.arena.owner.values()):
            raise ValueError("an ordinary game has no counter vertices")
        self.condition.check(self.arena)


@dataclass
class Solution:
    win1: frozenset[str]
    win2: frozenset[str]
    strategy1: dict[str, str]
    strategy2: dict[str, str]

    def winner(self, v: str) -> int:
        return 1 if v in self.win1 else 2

    def region(self, player: int) -> frozenset[str]:
        return self.win1 if player == 1 else self.win2

    def strategy(self, player: int) -> dict[str, str]:
        return self.strategy1 if player == 1 else self.strategy2


class IndexedGame:
    """CSR adjacency over vertices ``0..n-1``.

    ``owner`` holds 0 for vertices where Player 1 moves (including leaves and
    single-edge vertices) and 1 for Player 2.
    """

    def __init__(self, n: int, src, dst, owner, priority):
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        self.n = n
        self.edge_src = src
        self.succ_idx = dst
        self.succ_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=self.succ_ptr[1:])
        porder = np.lexsort((src, dst))
        self.pred_idx = src[porder]
        self.pred_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(dst, minlength=n), out=self.pred_ptr[1:])
        self.owner = np.ascontiguousarray(owner, dtype=np.int8)
        self.priority = np.asarray(priority, dtype=np.int64)
        if n and np.any(self.succ_ptr[1:] == self.succ_ptr[:-1]):
            raise ValueError("every vertex needs a successor")

    def with_priority(self, priority) -> "IndexedGame":
        g = object.__new__(IndexedGame)
        g.__dict__.update(self.__dict__)
        g.priority = np.asarray(priority, dtype=np.int64)
        return g

    @classmethod
    def from_game(cls, game: OrdinaryGame) -> "IndexedGame":
        arena = game.arena
        idx = arena.index
        src = [idx[e.source] for e in arena.edges]
        dst = [idx[e.target] for e in arena.edges]
        owner = [1 if arena.owner[v] == P2 else 0 for v in arena.vertices]
        prio = [game.condition.priority[v] for v in arena.vertices]
        return cls(len(arena.vertices), src, dst, owner, prio)


def compress_priorities(priority) -> np.ndarray:
    """Relabel priorities preserving order and parity, using the smallest
    possible values (so every result is below ``2 * n``)."""
    priority = np.asarray(priority, dtype=np.int64)
    out = np.empty_like(priority)
    cur = -1
    for p in np.unique(priority):
        cur += 1
        if cur % 2 != p % 2:
            cur += 1
        out[priority == p] = cur
    return out


def _first_successor(g: IndexedGame, vertices, allowed) -> np.ndarray:
    """For each vertex in mask ``vertices``, the smallest successor index in
    mask ``allowed`` (-1 if none)."""
    res = np.full(g.n, -1, dtype=np.int64)
    ok = vertices[g.edge_src] & allowed[g.succ_idx]
    e = np.flatnonzero(ok)
    if e.size:
        srcs, first = np.unique(g.edge_src[e], return_index=True)
        res[srcs] = g.succ_idx[e[first]]
    return res


def attractor_indexed(g: IndexedGame, live, target, player: int):
    """Attractor of ``target`` for ``player`` (0 = Player 1, 1 = Player 2)
    in the subgame ``live``. Returns ``(mask, strategy)`` where strategy maps
    each ``player`` vertex of ``mask & ~target`` to a successor one level
    closer to ``target``."""
    level = _kernels.attractor_levels(g, live, target, player)
    mask = level >= 0
    movers = mask & (level > 0) & (g.owner == player)
    ok = movers[g.edge_src] & (level[g.succ_idx] >= 0) & (level[g.succ_idx] < level[g.edge_src])
    strat = np.full(g.n, -1, dtype=np.int64)
    e = np.flatnonzero(ok)
    if e.size:
        srcs, first = np.unique(g.edge_src[e], return_index=True)
        strat[srcs] = g.succ_idx[e[first]]
    return mask, strat


def zielonka(g: IndexedGame, live=None):
    """Solve the subgame ``live`` (every live vertex must keep a live
    successor). Returns ``(win, strategy)``: ``win`` is a pair of masks for
    Player 1 and Player 2; ``strategy[v]`` is set for every vertex in its
    owner's winning region."""
    if live is None:
        live = np.ones(g.n, dtype=bool)
    prio = compress_priorities(g.priority) if g.n else g.priority
    return _zielonka(g, prio, live)


def _zielonka(g, prio, live):
    n = g.n
    strat = np.full(n, -1, dtype=np.int64)
    if not live.any():
        empty = np.zeros(n, dtype=bool)
        return (empty, empty.copy()), strat
    top = prio[live].max()
    i = int(top % 2)
    top_set = live & (prio == top)
    attr, attr_strat = attractor_indexed(g, live, top_set, i)
    (sub_w, sub_s) = _zielonka(g, prio, live & ~attr)
    if not sub_w[1 - i].any():
        win = [None, None]
        win[i] = live.copy()
        win[1 - i] = np.zeros(n, dtype=bool)
        mine = g.owner == i
        rest = live & ~attr
        strat[rest] = sub_s[rest]
        a = attr & ~top_set & mine
        strat[a] = attr_strat[a]
        t = top_set & mine
        strat[t] = _first_successor(g, t, live)[t]
        return (win[0], win[1]), strat
    opp = sub_w[1 - i]
    battr, battr_strat = attractor_indexed(g, live, opp, 1 - i)
    (w2, s2) = _zielonka(g, prio, live & ~battr)
    win = [None, None]
    win[1 - i] = w2[1 - i] | battr
    win[i] = w2[i]
    rest = live & ~battr
    strat[rest] = s2[rest]
    theirs = g.owner == 1 - i
    keep = opp & theirs
    strat[keep] = sub_s[keep]
    b = battr & ~opp & theirs
    strat[b] = battr_strat[b]
    return (win[0], win[1]), strat


def _normalize_player(player) -> int:
    if player in (1, P1):
        return 1
    if player in (2, P2):
        return 2
    raise ValueError(f"unknown player {player!r}")


def attractor(game: OrdinaryGame, player, targets: Iterable[str]):
    """Least set of vertices from which ``player`` can force a visit to
    ``targets``, with a positional strategy realising it."""
    p = _normalize_player(player)
    g = IndexedGame.from_game(game)
    vs = game.arena.vertices
    idx = game.arena.index
    target = np.zeros(g.n, dtype=bool)
    for t in targets:
        target[idx[t]] = True
    mask, strat = attractor_indexed(g, np.ones(g.n, dtype=bool), target, p - 1)
    region = frozenset(vs[k] for k in np.flatnonzero(mask))
    owned = P1 if p == 1 else P2
    strategy = {vs[k]: vs[strat[k]] for k in np.flatnonzero(strat >= 0)
                if game.arena.owner[vs[k]] == owned}
    return region, strategy


def solve(game: OrdinaryGame) -> Solution:
    g = IndexedGame.from_game(game)
    (w1, w2), strat = zielonka(g)
    vs = game.arena.vertices
    owner = game.arena.owner
    s1, s2 = {}, {}
    for k in np.flatnonzero(strat >= 0):
        v = vs[k]
        if owner[v] == P1 and w1[k]:
            s1[v] = vs[strat[k]]
        elif owner[v] == P2 and w2[k]:
            s2[v] = vs[strat[k]]
    return Solution(
        win1=frozenset(vs[k] for k in np.flatnonzero(w1)),
        win2=frozenset(vs[k] for k in np.flatnonzero(w2)),
        strategy1=s1,
        strategy2=s2,
    )


def verify_strategy(game: OrdinaryGame, player, strategy: Mapping[str, str],
                    region: Iterable[str]) -> bool:
    """Check that ``strategy`` wins for ``player`` from every vertex of
    ``region``.

    Restrict the player's vertices to their strategy edge, take everything
    reachable from ``region`` and look for a cycle whose top priority has
    the opponent's parity. Raises :class:`IncompleteStrategy` if a player
    vertex reachable in this graph has no legal strategy move.
    """
    p = _normalize_player(player)
    arena = game.arena
    prio = game.condition.priority
    owned = P1 if p == 1 else P2

    def moves(v):
        if arena.owner[v] == owned:
            if v not in strategy:
                raise IncompleteStrategy(f"strategy undefined at {v}")
            if strategy[v] not in arena.successors[v]:
                raise IncompleteStrategy(f"strategy move {v}->{strategy[v]} is not an edge")
            return (strategy[v],)
        return arena.successors[v]

    seen = set(region)
    stack = list(seen)
    edges = []
    while stack:
        v = stack.pop()
        for u in moves(v):
            edges.append((v, u))
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if not seen:
        return True
    order = sorted(seen)
    pos = {v: k for k, v in enumerate(order)}
    pr = np.array([prio[v] for v in order])
    src = np.array([pos[a] for a, _ in edges])
    dst = np.array([pos[b] for _, b in edges])
    self_loop = np.zeros(len(order), dtype=bool)
    self_loop[src[src == dst]] = True
    losing_parity = 1 if p == 1 else 0
    for bad in np.unique(pr[pr % 2 == losing_parity]):
        keep = (pr[src] <= bad) & (pr[dst] <= bad)
        m = csr_matrix((np.ones(keep.sum()), (src[keep], dst[keep])), shape=(len(order),) * 2)
        _, label = connected_components(m, directed=True, connection="strong")
        sizes = np.bincount(label)
        on_cycle = (sizes[label] > 1) | self_loop
        if np.any(on_cycle & (pr == bad)):
            return False
    return True


__all__ = [
    "IncompleteStrategy", "IndexedGame", "OrdinaryGame", "Solution",
    "attractor", "attractor_indexed", "compress_priorities", "solve",
    "verify_strategy", "zielonka",
]
