"""Builders for concrete games: the counter chain, Help-me, Sperner gadgets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import LEAF, P1, P2, PLAIN, RED, GREEN, Edge, ParamGame, reach_condition, validate_arena
from .gameform.circuits import MonotoneCircuit, circuit_eval
from .gameform.ggf import circuit_to_ggf


def build_linear(n: int) -> ParamGame:
    """Counter chain ``v0 .. v{n-1}`` linked by green edges into the winning
    leaf ``l1``; every red edge goes to the losing leaf ``l2``. Player 1
    wins from ``v0`` iff the parameter is at least ``n``."""
    if n < 1:
        raise ValueError("the chain needs at least one counter vertex")
    chain = [f"v{i}" for i in range(n)]
    owner = {v: "c1" for v in chain}
    owner.update(l1=LEAF, l2=LEAF)
    edges = [Edge(a, b, GREEN) for a, b in zip(chain, chain[1:] + ["l1"])]
    edges += [Edge(v, "l2", RED) for v in chain]
    arena = validate_arena(owner, edges)
    return ParamGame(arena, reach_condition(arena, ["l1"]), "v0")


@dataclass(frozen=True)
class HelpMe:
    """The Help-me game with its payoff split into two thresholds.

    Payoff 0 for looping forever, 1 for ending in ``l1``, 2 for ``l2``.
    """

    at_least_1: ParamGame
    at_least_2: ParamGame

    def payoff_at_least(self, k: int) -> ParamGame:
        if k == 1:
            return self.at_least_1
        if k == 2:
            return self.at_least_2
        raise ValueError("thresholds are 1 and 2")


def build_helpme(parameterized: bool = False) -> HelpMe:
    """Player 1 owns ``v0`` (to ``v1`` or ``l1``), Player 2 owns ``v1`` (to
    ``v0`` or ``l2``). The parameterized variant makes ``v0`` a counter
    vertex: loop while the counter lasts, then go to ``l1``."""
    if parameterized:
        owner = {"v0": "c1", "v1": P2, "l1": LEAF, "l2": LEAF}
        edges = [Edge("v0", "v1", GREEN), Edge("v0", "l1", RED)]
    else:
        owner = {"v0": P1, "v1": P2, "l1": LEAF, "l2": LEAF}
        edges = [Edge("v0", "v1"), Edge("v0", "l1")]
    edges += [Edge("v1", "v0"), Edge("v1", "l2")]
    arena = validate_arena(owner, edges)
    return HelpMe(
        at_least_1=ParamGame(arena, reach_condition(arena, ["l1", "l2"]), "v0"),
        at_least_2=ParamGame(arena, reach_condition(arena, ["l2"]), "v0"),
    )


@dataclass(frozen=True)
class GadgetSpec:
    circuit: MonotoneCircuit
    w: tuple[int, ...]
    fw: tuple[int, ...]

    def __post_init__(self):
        c = self.circuit
        if c.n_inputs != c.n:
            raise ValueError("gadget circuits need as many outputs as inputs")
        object.__setattr__(self, "w", tuple(int(b) for b in self.w))
        object.__setattr__(self, "fw", tuple(int(b) for b in self.fw))
        if len(self.w) != c.n or len(self.fw) != c.n:
            raise ValueError("w and fw must have the circuit's arity")
        if circuit_eval(c, self.w) != self.fw:
            raise ValueError("fw must equal the circuit applied to w")

    @classmethod
    def from_word(cls, circuit: MonotoneCircuit, w: Sequence[int]) -> "GadgetSpec":
        return cls(circuit, tuple(w), circuit_eval(circuit, w))


@dataclass(frozen=True)
class SpernerGame:
    game: ParamGame
    degenerate: bool


def sperner_gadget(spec: GadgetSpec) -> SpernerGame:
    """Single-counter game won at parameter ``N`` iff ``f^N(fw) >= w``.

    Built from the circuit's reachability form: designated leaf ``k`` turns
    into a counter vertex whose green edge re-enters output ``k`` and whose
    red edge ends the play, won iff ``fw[k] == 1``. Player 2 starts and picks
    one of the former leaves ``k`` with ``w[k] == 1``. For ``w == 0...0``
    the start vertex only leads to the winning leaf and the result is
    flagged ``degenerate``.
    """
    g = circuit_to_ggf(spec.circuit)
    arena = g.game.arena
    for name in ("start", "win", "lose"):
        if name in arena.owner:
            raise ValueError(f"vertex id {name!r} already used by the circuit game")
    designated = set(g.inputs)
    owner = dict(arena.owner)
    for v in g.inputs:
        owner[v] = "c1"
    owner.update(start=P2, win=LEAF, lose=LEAF)
    edges = [e for e in arena.edges if e.source not in designated]
    for k, (leaf, src) in enumerate(zip(g.inputs, g.outputs)):
        edges.append(Edge(leaf, src, GREEN))
        edges.append(Edge(leaf, "win" if spec.fw[k] else "lose", RED))
    picks = [leaf for leaf, bit in zip(g.inputs, spec.w) if bit]
    edges += [Edge("start", t, PLAIN) for t in picks] or [Edge("start", "win", PLAIN)]
    new_arena = validate_arena(owner, edges)
    targets = ["win"] + [v for v in ("const:1",) if v in owner]
    return SpernerGame(ParamGame(new_arena, reach_condition(new_arena, targets), "start"),
                       degenerate=not picks)
