"""Explicit boolean functions {0,1}^m -> {0,1}^n and what we compute on them.

Bit vectors are tuples ``(b_1, ..., b_m)``. Inside tables they are encoded
as integers with ``b_1`` as the most significant bit, so ``(0, 0, 0, 1)``
is code 1 and tables list inputs in the usual binary counting order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .. import _kernels
from ..core import GameError

#: largest input arity for which explicit tables are built
TABLE_GUARD = 16


class ArityTooLarge(GameError):
    pass


class ArityMismatch(GameError):
    pass


class NotMonotone(GameError):
    pass


def bits_to_code(bits: Sequence[int]) -> int:
    code = 0
    for b in bits:
        code = (code << 1) | (1 if b else 0)
    return code


def code_to_bits(code: int, m: int) -> tuple[int, ...]:
    return tuple((code >> (m - 1 - i)) & 1 for i in range(m))


def all_inputs(m: int) -> np.ndarray:
    """``(2**m, m)`` uint8 array of every input, in code order."""
    codes = np.arange(1 << m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts) & 1).astype(np.uint8)


def format_bits(bits: Iterable[int]) -> str:
    return "".join(str(int(b)) for b in bits)


def _guard(m: int) -> None:
    if m > TABLE_GUARD:
        raise ArityTooLarge(f"input arity {m} exceeds table guard {TABLE_GUARD}")


@dataclass(frozen=True, eq=False)
class BoolFunction:
    """Truth table: ``table[code]`` is the output bit row for input ``code``."""

    m: int
    n: int
    table: np.ndarray

    def __post_init__(self):
        _guard(self.m)
        t = np.asarray(self.table, dtype=np.uint8).reshape(1 << self.m, self.n)
        if np.any(t > 1):
            raise ValueError("table entries must be 0 or 1")
        object.__setattr__(self, "table", t)

    @classmethod
    def from_callable(cls, m: int, n: int, fn: Callable[[tuple[int, ...]], Sequence[int]]) -> "BoolFunction":
        _guard(m)
        rows = [tuple(fn(code_to_bits(c, m))) for c in range(1 << m)]
        return cls(m, n, np.array(rows, dtype=np.uint8).reshape(1 << m, n))

    @classmethod
    def from_map(cls, m: int, codes: Sequence[int]) -> "BoolFunction":
        """Function {0,1}^m -> {0,1}^m given as a code -> code array."""
        codes = np.asarray(codes, dtype=np.int64)
        return cls(m, m, (codes[:, None] >> np.arange(m - 1, -1, -1)) & 1)

    @classmethod
    def identity(cls, m: int) -> "BoolFunction":
        return cls.from_map(m, np.arange(1 << m))

    def __call__(self, bits: Sequence[int]) -> tuple[int, ...]:
        if len(bits) != self.m:
            raise ArityMismatch(f"expected {self.m} input bits, got {len(bits)}")
        return tuple(int(b) for b in self.table[bits_to_code(bits)])

    def codes(self) -> np.ndarray:
        """Output codes per input code."""
        w = np.int64(1) << np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return (self.table.astype(np.int64) * w).sum(axis=1) if self.n else np.zeros(1 << self.m, dtype=np.int64)

    def __eq__(self, other):
        if not isinstance(other, BoolFunction):
            return NotImplemented
        return self.m == other.m and self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.m, self.n, self.table.tobytes()))

    def __repr__(self):
        rows = ", ".join(f"{format_bits(code_to_bits(c, self.m))}->{format_bits(r)}"
                         for c, r in enumerate(self.table))
        return f"BoolFunction({self.m}->{self.n}: {rows})"


def find_monotonicity_violation(f: BoolFunction):
    """Return a pair ``(u, w)`` with ``u <= w`` but ``f(u) !<= f(w)``, or
    ``None`` if ``f`` is monotone. Single-bit flips suffice by transitivity."""
    codes = np.arange(1 << f.m, dtype=np.int64)
    for i in range(f.m):
        bit = 1 << (f.m - 1 - i)
        lo = codes[(codes & bit) == 0]
        hi = lo | bit
        bad = np.any(f.table[lo] > f.table[hi], axis=1)
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            return code_to_bits(int(lo[k]), f.m), code_to_bits(int(hi[k]), f.m)
    return None


def is_monotone(f: BoolFunction) -> bool:
    return find_monotonicity_violation(f) is None


def lfp_bruteforce(f: BoolFunction, m_x: int, keep: str = "x") -> BoolFunction:
    """Least fixed point in the first ``m_x`` coordinates, by Kleene iteration.

    ``f`` takes ``(x, y)`` with the x-block first and must have ``m == n``.
    For each ``y`` start from ``x = 0`` and iterate ``x <- f(x, y)[:m_x]``.
    With ``keep="x"`` the result maps ``y`` to that fixed point; with
    ``keep="y"`` it maps ``y`` to the y-block of ``f`` at the fixed point.
    """
    if f.m != f.n:
        raise ArityMismatch("least fixed points need m == n")
    if not 0 <= m_x <= f.m:
        raise ArityMismatch(f"x-block size {m_x} out of range for m = {f.m}")
    if keep not in ("x", "y"):
        raise ValueError("keep must be 'x' or 'y'")
    if not is_monotone(f):
        raise NotMonotone("least fixed point iteration needs a monotone function")
    n_y = f.m - m_x
    rows = []
    for y in range(1 << n_y):
        x = 0
        for _ in range(m_x + 2):
            out = bits_to_code(f.table[(x << n_y) | y][:m_x])
            if out == x:
                break
            x = out
        else:  # pragma: no cover - monotone iteration from 0 stabilises in m_x steps
            raise AssertionError("fixed point iteration did not stabilise")
        row = f.table[(x << n_y) | y]
        rows.append(code_to_bits(x, m_x) if keep == "x" else tuple(row[m_x:]))
    width = m_x if keep == "x" else n_y
    return BoolFunction(n_y, width, np.array(rows, dtype=np.uint8).reshape(1 << n_y, width))


def orbit(f: BoolFunction, w: Sequence[int]) -> list[tuple[int, ...]]:
    """Repeat-free prefix ``w, f(w), f(f(w)), ...`` up to the first repeat."""
    if f.m != f.n:
        raise ArityMismatch("orbits need m == n")
    seen = set()
    out = []
    cur = tuple(w)
    while cur not in seen:
        seen.add(cur)
        out.append(cur)
        cur = f(cur)
    return out


def repetition_number(f: BoolFunction) -> int:
    """Largest k such that some orbit has k pairwise distinct first terms."""
    if f.m != f.n:
        raise ArityMismatch(f"repetition number needs m == n, got {f.m} -> {f.n}")
    _guard(f.m)
    return int(_kernels.rho_lengths(f.codes()).max())
