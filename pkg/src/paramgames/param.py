"""Deciding questions that quantify over counter values.

If Player 1 wins for some parameter vector, there is such a vector with every
counter ``j`` at most ``2 ** |V_c^j|``; the same holds for Player 2, so
prefixes of one quantifier only are decided exactly inside those bounds.
With a single counter the win pattern is even periodic from there on (see
:func:`iterate_profiles`, which computes it). Once several counters
interact, one counter's pattern may keep changing past its bound while the
others are held fixed. The bounded searches below solve one full product
per query (a :class:`~paramgames.unfold.WinGrid`), which doubles as the
memo table for all parameter vectors inside the bounds.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import ParamGame
from .gameform.functions import ArityMismatch
from .gameform.ggf import EmptyCounterClass, induced_ggf
from .solver import IndexedGame, zielonka
from .unfold import product_arrays, win_grid

FORALL, EXISTS = "A", "E"


def default_bounds(pg: ParamGame) -> tuple[int, ...]:
    """``2 ** |V_c^j|`` for every counter class ``j``."""
    return tuple(2 ** len(pg.arena.counter_vertices(j)) for j in range(1, pg.arena.counter_count + 1))


def exists_winning_params(pg: ParamGame, start: str | None = None,
                          bounds: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """Lexicographically least parameter vector within ``bounds`` (default
    :func:`default_bounds`) at which Player 1 wins from ``start``; ``None``
    if there is none, in which case Player 1 wins for no values at all."""
    start = pg.resolve_start(start)
    bounds = default_bounds(pg) if bounds is None else tuple(bounds)
    grid = win_grid(pg, bounds).for_vertex(start)
    hits = np.argwhere(grid)
    if not len(hits):
        return None
    return tuple(int(x) for x in hits[0])


@dataclass
class ProfileTrajectory:
    counter_class: int
    fixed: tuple[int, ...]
    vertices: tuple[str, ...]
    profiles: list[tuple[int, ...]]
    preperiod: int
    period: int
    start: str | None = None
    start_wins: list[bool] = field(default_factory=list)

    def profile_at(self, n: int) -> tuple[int, ...]:
        """Win profile at counter value ``n``, for any ``n``."""
        return self.profiles[self._fold(n)]

    def start_wins_at(self, n: int) -> bool:
        return self.start_wins[self._fold(n)]

    def _fold(self, n: int) -> int:
        if n < self.preperiod:
            return n
        return self.preperiod + (n - self.preperiod) % self.period


def _full_params(j: int, fixed: Sequence[int], value: int) -> tuple[int, ...]:
    p = list(fixed)
    p.insert(j - 1, value)
    return tuple(p)


def iterate_profiles(pg: ParamGame, j: int, fixed: Iterable[int] = (),
                     start: str | None = None) -> ProfileTrajectory:
    """Win profiles of counter class ``j`` for values ``0, 1, 2, ...``.

    The profile at 0 comes from solving the game with counter ``j`` at 0.
    Each next profile comes from the induced form, with the previous one
    fed into its leaves. The other counters can still tick down between
    two visits to class ``j``, so the state carried from step to step is
    the profile for every vector of other values up to ``fixed``, and the
    induced form is solved on its product over those vectors. Without
    other counters this is plain iteration of the induced form's function.

    ``preperiod`` and ``period`` are the least ones for the returned
    sequence of (profile, start win) pairs. With other counters a profile
    may come back before the sequence turns periodic.
    """
    arena = pg.arena
    fixed = tuple(int(x) for x in fixed)
    if not 1 <= j <= arena.counter_count or not arena.counter_vertices(j):
        raise EmptyCounterClass(f"counter class {j} is empty")
    if len(fixed) != arena.counter_count - 1:
        raise ArityMismatch(f"need {arena.counter_count - 1} fixed values, got {len(fixed)}")
    if any(x < 0 for x in fixed):
        raise ValueError("fixed values must be non-negative")
    cut = arena.counter_vertices(j)
    start = pg.resolve_start(start) if start is not None or pg.start is not None else None

    g = induced_ggf(pg, j, fixed)
    src, dst, owner, prio, shape = product_arrays(g.game, fixed)
    K = int(np.prod(shape, dtype=np.int64))
    base = IndexedGame(len(g.game.arena) * K, src, dst, owner, prio)
    ks = np.arange(K, dtype=np.int64)
    idx = g.game.arena.index
    leaf_states = np.array([idx[v] for v in g.inputs])[:, None] * K + ks
    src_states = np.array([idx[v] for v in g.outputs])[:, None] * K + ks
    start_state = idx[start] * K + K - 1 if start is not None and start not in cut else None
    prio = prio.copy()

    # counter j at 0 only, the others anywhere up to fixed
    grid = win_grid(pg, _full_params(j, fixed, 0)).table
    w = np.take(grid[[arena.index[v] for v in cut]], 0, axis=j).reshape(len(cut), K)

    seen: dict[bytes, int] = {}
    seq: list[tuple[tuple[int, ...], bool]] = []
    while (key := w.tobytes()) not in seen:
        seen[key] = len(seq)
        prio[leaf_states] = np.where(w, 0, 1)
        (w1, _), _ = zielonka(base.with_priority(prio))
        profile = tuple(int(x) for x in w[:, K - 1])
        if start is None:
            won = False
        elif start_state is None:
            won = bool(w[cut.index(start), K - 1])
        else:
            won = bool(w1[start_state])
        seq.append((profile, won))
        w = w1[src_states]
    pre, per = _least_cycle(seq, seen[w.tobytes()])
    seq = seq[:pre + per]
    return ProfileTrajectory(j, fixed, cut, [p for p, _ in seq], pre, per, start,
                             [b for _, b in seq] if start is not None else [])


def _least_cycle(seq: Sequence, pre: int) -> tuple[int, int]:
    """Least preperiod and period of the sequence that runs through ``seq``
    and then repeats ``seq[pre:]`` forever."""
    per = len(seq) - pre

    def at(k):
        return seq[k] if k < len(seq) else seq[pre + (k - pre) % per]

    d = next(d for d in range(1, per + 1)
             if per % d == 0 and all(at(k) == at(k + d) for k in range(pre, pre + per)))
    p = pre
    while p > 0 and at(p - 1) == at(p - 1 + d):
        p -= 1
    return p, d


@dataclass(frozen=True)
class ParamQuery:
    """``prefix`` lists ``(quantifier, counter)`` pairs outermost first,
    with quantifier ``"A"`` or ``"E"`` and counters 1-based."""

    game: ParamGame
    start: str
    prefix: tuple[tuple[str, int], ...]
    bound_override: Mapping[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple((q, int(c)) for q, c in self.prefix))
        n = self.game.arena.counter_count
        counters = [c for _, c in self.prefix]
        if sorted(counters) != list(range(1, n + 1)):
            raise ValueError(f"prefix must bind each of the counters 1..{n} exactly once")
        if any(q not in (FORALL, EXISTS) for q, _ in self.prefix):
            raise ValueError("quantifiers must be 'A' or 'E'")
        self.game.resolve_start(self.start)

    def bounds(self) -> tuple[int, ...]:
        b = list(default_bounds(self.game))
        for c, v in (self.bound_override or {}).items():
            b[c - 1] = int(v)
        return tuple(b)


_PREFIX_TOKEN = re.compile(r"([AE])([1-9][0-9]*)\Z")


def parse_prefix(text: str) -> tuple[tuple[str, int], ...]:
    """``"A1 E2"`` -> ``(("A", 1), ("E", 2))``."""
    out = []
    for tok in text.split():
        m = _PREFIX_TOKEN.match(tok.upper())
        if not m:
            raise ValueError(f"bad quantifier {tok!r}; expected A<j> or E<j>")
        out.append((m.group(1), int(m.group(2))))
    return tuple(out)


@dataclass(frozen=True)
class QueryResult:
    value: bool
    assignment: dict[int, int]
    bounds: tuple[int, ...]

    def __bool__(self):
        return self.value


def eval_query(q: ParamQuery) -> QueryResult:
    """Evaluate the quantified statement over ``{0..B_j}`` per counter.

    ``assignment`` reports the leading block of like quantifiers: a witness
    when that block is existential and the statement holds, a
    counterexample when it is universal and fails, otherwise empty. Among
    several candidates the lexicographically least is returned.

    A prefix made of one quantifier only is exact: the bounds never hide a
    winning (or losing) vector. Alternations are only decided over the
    bounded domain. In a game won iff ``n1 > n2``, ``A2 E1`` is false for
    every choice of bounds although each ``n2`` has a winning ``n1``.
    """
    bounds = q.bounds()
    grid = win_grid(q.game, bounds).for_vertex(q.start)
    order = [c - 1 for _, c in q.prefix]
    table = np.transpose(grid, order) if order else grid
    quants = [k for k, _ in q.prefix]
    reduced = [table]
    for k in reversed(quants):
        t = reduced[-1]
        reduced.append(t.any(axis=-1) if k == EXISTS else t.all(axis=-1))
    value = bool(reduced[-1])
    assignment: dict[int, int] = {}
    if quants:
        lead = quants[0]
        block = 1
        while block < len(quants) and quants[block] == lead:
            block += 1
        if (lead == EXISTS) == value:
            inner = reduced[len(quants) - block]
            hits = np.argwhere(inner if lead == EXISTS else ~inner)
            if len(hits):
                for (_, c), x in zip(q.prefix[:block], hits[0]):
                    assignment[c] = int(x)
    return QueryResult(value, assignment, bounds)
