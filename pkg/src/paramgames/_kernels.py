"""Hot loops with two interchangeable backends.

``numba`` kernels are used when numba imports and ``PARAMGAMES_DISABLE_NUMBA``
is unset (or ``0``). The numpy path computes identical results and is what
runs when numba is missing. Both backends are always importable so the
benchmark and the tests can compare them.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _env_disabled() -> bool:
    return os.environ.get("PARAMGAMES_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


# ---------------------------------------------------------------------------
# attractor levels
#
# level[v] == 0 for targets, k > 0 if v joins the attractor in round k,
# -1 if v is outside it. A vertex owned by `player` joins one round after its
# earliest successor; an opponent vertex one round after its latest one.


def attractor_levels_numpy(succ_ptr, succ_idx, edge_src, owner, live, target, player):
    n = owner.shape[0]
    level = np.full(n, -1, dtype=np.int64)
    inside = target & live
    level[inside] = 0
    live_edge = live[succ_idx] & live[edge_src]
    n_live = np.bincount(edge_src, weights=live_edge, minlength=n)
    mine = owner == player
    rnd = 0
    while True:
        rnd += 1
        hit = np.bincount(edge_src, weights=live_edge & inside[succ_idx], minlength=n)
        new = live & ~inside & np.where(mine, hit > 0, (hit == n_live) & (n_live > 0))
        if not new.any():
            return level
        level[new] = rnd
        inside |= new


def _attractor_levels_loop(succ_ptr, succ_idx, pred_ptr, pred_idx, owner, live, target, player):
    n = owner.shape[0]
    level = np.full(n, -1, dtype=np.int64)
    remaining = np.zeros(n, dtype=np.int64)
    for v in range(n):
        if live[v]:
            c = 0
            for k in range(succ_ptr[v], succ_ptr[v + 1]):
                if live[succ_idx[k]]:
                    c += 1
            remaining[v] = c
    queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    for v in range(n):
        if live[v] and target[v]:
            level[v] = 0
            queue[tail] = v
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(pred_ptr[u], pred_ptr[u + 1]):
            p = pred_idx[k]
            if not live[p] or level[p] >= 0:
                continue
            if owner[p] == player:
                level[p] = level[u] + 1
                queue[tail] = p
                tail += 1
            else:
                remaining[p] -= 1
                if remaining[p] == 0:
                    level[p] = level[u] + 1
                    queue[tail] = p
                    tail += 1
    return level


# ---------------------------------------------------------------------------
# rho lengths of a functional graph
#
# For every x, the number of distinct values in x, f(x), f(f(x)), ... which is
# the length of the longest repeat-free prefix of its orbit.


def _rho_lengths_loop(table):
    n = table.shape[0]
    rho = np.zeros(n, dtype=np.int64)
    mark = np.full(n, -1, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)
    path = np.empty(n, dtype=np.int64)
    for s in range(n):
        if rho[s] > 0:
            continue
        length = 0
        x = s
        while rho[x] == 0 and mark[x] != s:
            mark[x] = s
            pos[x] = length
            path[length] = x
            length += 1
            x = table[x]
        if rho[x] == 0:
            # closed a new cycle at x
            cyc = length - pos[x]
            for k in range(pos[x], length):
                rho[path[k]] = cyc
            base = cyc
            stop = pos[x]
        else:
            base = rho[x]
            stop = length
        for k in range(stop - 1, -1, -1):
            base += 1
            rho[path[k]] = base
    return rho


def rho_lengths_numpy(table):
    # orbit-by-orbit walk; pure python over numpy buffers
    return _rho_lengths_loop(np.asarray(table, dtype=np.int64))


if HAVE_NUMBA:
    _attractor_levels_jit = njit(cache=True)(_attractor_levels_loop)
    _rho_lengths_jit = njit(cache=True)(_rho_lengths_loop)


_backend = "numba" if HAVE_NUMBA and not _env_disabled() else "numpy"


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    """Select ``"numba"`` or ``"numpy"`` at runtime (benchmarks, tests)."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    _backend = name


def attractor_levels(g, live, target, player):
    """Attractor levels of ``target`` for ``player`` (0 or 1) inside ``live``
    on an :class:`~paramgames.solver.IndexedGame`."""
    if _backend == "numba":
        return _attractor_levels_jit(g.succ_ptr, g.succ_idx, g.pred_ptr, g.pred_idx,
                                     g.owner, live, target, np.int8(player))
    return attractor_levels_numpy(g.succ_ptr, g.succ_idx, g.edge_src, g.owner, live, target, player)


def rho_lengths(table):
    table = np.ascontiguousarray(table, dtype=np.int64)
    if _backend == "numba":
        return _rho_lengths_jit(table)
    return rho_lengths_numpy(table)
