"""Monotone circuits and their line-oriented text format.

Format, one statement per line (``#`` starts a comment)::

    inputs 2            # optional, defaults to the largest INPUT index
    gate g AND a b
    gate a INPUT 1
    gate b INPUT 2
    gate t CONST 1
    outputs g t
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Mapping, Sequence

import numpy as np

from ..core import GameError
from .functions import ArityMismatch, BoolFunction, _guard, all_inputs

AND, OR, INPUT, CONST = "AND", "OR", "INPUT", "CONST"
_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_.:\-]*\Z")


class CircuitError(GameError):
    pass


class CircuitParseError(CircuitError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class Gate:
    kind: str
    args: tuple

    @property
    def children(self) -> tuple[str, ...]:
        return self.args if self.kind in (AND, OR) else ()


@dataclass(frozen=True)
class MonotoneCircuit:
    gates: Mapping[str, Gate]
    outputs: tuple[str, ...]
    n_inputs: int

    def __post_init__(self):
        for gid, g in self.gates.items():
            if g.kind in (AND, OR):
                if not g.args:
                    raise CircuitError(f"gate {gid} has no inputs")
                for c in g.args:
                    if c not in self.gates:
                        raise CircuitError(f"gate {gid} refers to unknown gate {c}")
            elif g.kind == INPUT:
                if len(g.args) != 1 or not 1 <= g.args[0] <= self.n_inputs:
                    raise CircuitError(f"gate {gid}: input index must be in 1..{self.n_inputs}")
            elif g.kind == CONST:
                if g.args not in ((0,), (1,)):
                    raise CircuitError(f"gate {gid}: constant must be 0 or 1")
            else:
                raise CircuitError(f"gate {gid}: unknown kind {g.kind}")
        for o in self.outputs:
            if o not in self.gates:
                raise CircuitError(f"unknown output gate {o}")
        self.order  # raises on cycles

    @cached_property
    def order(self) -> tuple[str, ...]:
        """Gates with children before parents."""
        ts = TopologicalSorter({gid: g.children for gid, g in sorted(self.gates.items())})
        try:
            return tuple(ts.static_order())
        except CycleError as exc:
            raise CircuitError(f"circuit has a cycle through {exc.args[1]}") from None

    @property
    def m(self) -> int:
        return self.n_inputs

    @property
    def n(self) -> int:
        return len(self.outputs)

    def depth(self) -> int:
        """Longest gate-to-gate path, counted in wires."""
        d: dict[str, int] = {}
        for gid in self.order:
            ch = self.gates[gid].children
            d[gid] = 1 + max(d[c] for c in ch) if ch else 0
        return max((d[o] for o in self.outputs), default=0)


def _eval_columns(c: MonotoneCircuit, inputs: np.ndarray) -> np.ndarray:
    """Evaluate on a batch of inputs (rows) at once."""
    val: dict[str, np.ndarray] = {}
    rows = inputs.shape[0]
    for gid in c.order:
        g = c.gates[gid]
        if g.kind == INPUT:
            val[gid] = inputs[:, g.args[0] - 1].astype(bool)
        elif g.kind == CONST:
            val[gid] = np.full(rows, bool(g.args[0]))
        elif g.kind == AND:
            val[gid] = np.logical_and.reduce([val[ch] for ch in g.args])
        else:
            val[gid] = np.logical_or.reduce([val[ch] for ch in g.args])
    if not c.outputs:
        return np.zeros((rows, 0), dtype=np.uint8)
    return np.stack([val[o] for o in c.outputs], axis=1).astype(np.uint8)


def circuit_eval(c: MonotoneCircuit, bits: Sequence[int]) -> tuple[int, ...]:
    if len(bits) != c.n_inputs:
        raise ArityMismatch(f"expected {c.n_inputs} input bits, got {len(bits)}")
    row = _eval_columns(c, np.array([bits], dtype=np.uint8).reshape(1, c.n_inputs))[0]
    return tuple(int(b) for b in row)


def circuit_function(c: MonotoneCircuit) -> BoolFunction:
    _guard(c.n_inputs)
    return BoolFunction(c.n_inputs, c.n, _eval_columns(c, all_inputs(c.n_inputs)))


def parse_circuit(text: str) -> MonotoneCircuit:
    gates: dict[str, Gate] = {}
    outputs = None
    declared = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "gate":
            if len(tok) < 3:
                raise CircuitParseError(no, "expected 'gate <id> <kind> ...'")
            gid, kind, args = tok[1], tok[2].upper(), tok[3:]
            if not _ID.match(gid):
                raise CircuitParseError(no, f"bad gate id {gid!r}")
            if gid in gates:
                raise CircuitParseError(no, f"duplicate gate {gid}")
            if kind in (AND, OR):
                if not args:
                    raise CircuitParseError(no, f"{kind} gate needs successors")
                gates[gid] = Gate(kind, tuple(args))
            elif kind in (INPUT, CONST):
                if len(args) != 1 or not args[0].isdigit():
                    raise CircuitParseError(no, f"{kind} gate needs one number")
                gates[gid] = Gate(kind, (int(args[0]),))
            else:
                raise CircuitParseError(no, f"unknown gate kind {tok[2]!r}")
        elif tok[0] == "outputs":
            if outputs is not None:
                raise CircuitParseError(no, "duplicate outputs line")
            outputs = tuple(tok[1:])
        elif tok[0] == "inputs":
            if len(tok) != 2 or not tok[1].isdigit():
                raise CircuitParseError(no, "expected 'inputs <m>'")
            declared = int(tok[1])
        else:
            raise CircuitParseError(no, f"unknown statement {tok[0]!r}")
    if outputs is None:
        raise CircuitParseError(0, "missing outputs line")
    used = max((g.args[0] for g in gates.values() if g.kind == INPUT), default=0)
    m = used if declared is None else declared
    if m < used:
        raise CircuitParseError(0, f"inputs {m} smaller than largest INPUT index {used}")
    try:
        return MonotoneCircuit(gates, outputs, m)
    except CircuitError as exc:
        raise CircuitParseError(0, str(exc)) from None


def format_circuit(c: MonotoneCircuit) -> str:
    lines = [f"inputs {c.n_inputs}"]
    for gid in c.order:
        g = c.gates[gid]
        lines.append(f"gate {gid} {g.kind} {' '.join(str(a) for a in g.args)}")
    lines.append("outputs " + " ".join(c.outputs) if c.outputs else "outputs")
    return "\n".join(lines) + "\n"


def wire(m: int, k: int) -> MonotoneCircuit:
    """Circuit passing input ``k`` (1-based) straight through."""
    return MonotoneCircuit({f"x{i}": Gate(INPUT, (i,)) for i in range(1, m + 1)}, (f"x{k}",), m)


def swap_circuit() -> MonotoneCircuit:
    """The 2-bit swap ``(a, b) -> (b, a)``."""
    return MonotoneCircuit({"x1": Gate(INPUT, (1,)), "x2": Gate(INPUT, (2,))}, ("x2", "x1"), 2)


def identity_circuit(m: int) -> MonotoneCircuit:
    gates = {f"x{i}": Gate(INPUT, (i,)) for i in range(1, m + 1)}
    return MonotoneCircuit(gates, tuple(f"x{i}" for i in range(1, m + 1)), m)
