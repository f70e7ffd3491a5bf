"""Slow, independent reference implementations used to check the library.

None of these call the solver, the unfolding or the circuit evaluator.
"""
from __future__ import annotations

import itertools

import numpy as np

from paramgames.core import P1, P2, initial_state, step
from paramgames.gameform.circuits import AND, CONST, INPUT, OR


def positional_regions(arena, priority):
    """Winning regions of a counter-free parity game by trying every pair of
    positional strategies.

    For each pair the play from every vertex is a lasso; its winner is the
    parity of the top priority on the loop. Player 1 wins ``v`` iff some
    strategy of hers beats every strategy of Player 2 from ``v``.
    """
    vs = arena.vertices
    idx = arena.index
    n = len(vs)
    succ = arena.successors
    prio = np.array([priority[v] for v in vs])
    choice_lists = [[idx[u] for u in succ[v]] for v in vs]
    p1 = [k for k, v in enumerate(vs) if arena.owner[v] == P1]
    p2 = [k for k, v in enumerate(vs) if arena.owner[v] == P2]
    fixed = np.array([c[0] for c in choice_lists])  # leaves: the self-loop

    combos = list(itertools.product(*[choice_lists[k] for k in p2]))
    t_combos = np.array(combos, dtype=np.int64).reshape(len(combos), len(p2))
    win1 = np.zeros(n, dtype=bool)
    rows = np.arange(len(t_combos))[:, None]
    for s in itertools.product(*[choice_lists[k] for k in p1]):
        nxt = np.tile(fixed, (len(t_combos), 1))
        nxt[:, p1] = s
        nxt[:, p2] = t_combos
        pos = np.tile(np.arange(n), (len(t_combos), 1))
        for _ in range(n):
            pos = nxt[rows, pos]
        top = prio[pos]
        cur = pos
        for _ in range(n):
            cur = nxt[rows, cur]
            top = np.maximum(top, prio[cur])
        win1 |= (top % 2 == 0).all(axis=0)
    return {v for k, v in enumerate(vs) if win1[k]}


def first_cycle_winner(pg, params, start, budget=200_000):
    """Winner of the parameterized game by exploring the game tree with the
    step semantics until the first repeated state on the current play.

    A play closing a loop is won by Player 1 iff the top priority on the
    loop is even. For parity games this first-cycle game has the same
    winner as the infinite game. Returns ``None`` if the tree is larger
    than ``budget`` nodes.
    """
    arena = pg.arena
    prio = pg.condition.priority
    count = [0]

    def value(state, path, index):
        count[0] += 1
        if count[0] > budget:
            raise OverflowError
        key = (state.vertex, state.counters)
        if key in index:
            loop = path[index[key]:]
            return max(prio[v] for v, _ in loop) % 2 == 0
        index[key] = len(path)
        path.append(key)
        owner = arena.owner[state.vertex]
        try:
            if owner in (P1, P2):
                outcomes = (value(step(arena, state, u), path, index) for u in arena.successors[state.vertex])
                return any(outcomes) if owner == P1 else all(outcomes)
            return value(step(arena, state), path, index)
        finally:
            path.pop()
            del index[key]

    try:
        return value(initial_state(arena, start, params), [], {})
    except OverflowError:
        return None


def reachable_product_size(arena, start, params):
    """Count (vertex, counters) states reachable by stepping, without the
    unfolding module."""
    seen = set()
    todo = [initial_state(arena, start, params)]
    while todo:
        s = todo.pop()
        key = (s.vertex, s.counters)
        if key in seen:
            continue
        seen.add(key)
        if arena.owner[s.vertex] in (P1, P2):
            todo += [step(arena, s, u) for u in arena.successors[s.vertex]]
        else:
            todo.append(step(arena, s))
    return seen


def circuit_value(c, bits):
    """Recursive evaluation straight from the gate definitions."""
    memo = {}

    def val(gid):
        if gid not in memo:
            g = c.gates[gid]
            if g.kind == INPUT:
                memo[gid] = int(bits[g.args[0] - 1])
            elif g.kind == CONST:
                memo[gid] = int(g.args[0])
            elif g.kind == AND:
                memo[gid] = int(all(val(a) for a in g.args))
            elif g.kind == OR:
                memo[gid] = int(any(val(a) for a in g.args))
            else:  # pragma: no cover
                raise ValueError(g.kind)
        return memo[gid]

    return tuple(val(o) for o in c.outputs)


def circuit_iterate(c, w, k):
    for _ in range(k):
        w = circuit_value(c, w)
    return tuple(w)


def leq(u, w):
    return all(a <= b for a, b in zip(u, w))


def lfp_by_search(table, m_x):
    """Least fixed point by listing all fixed points and taking the one
    below all others (exists for monotone functions)."""
    m = len(next(iter(table)))
    n_y = m - m_x
    out = {}
    for y in itertools.product((0, 1), repeat=n_y):
        fps = [x for x in itertools.product((0, 1), repeat=m_x) if table[x + y][:m_x] == x]
        least = [x for x in fps if all(leq(x, z) for z in fps)]
        assert len(least) == 1
        out[y] = least[0]
    return out
