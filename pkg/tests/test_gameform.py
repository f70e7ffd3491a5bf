import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import circuit_value
from paramgames.core import LEAF, P1, P2, ParamGame, ParityCondition, reach_condition, validate_arena
from paramgames.gallery import build_linear
from paramgames.gameform import (AND, CONST, INPUT, OR, ArityMismatch, ArityTooLarge,
                                 BoolFunction, CircuitError, CircuitParseError, EmptyCounterClass,
                                 Gate, GameFormError, GraphGameForm, HasCounters, MonotoneCircuit,
                                 NotMonotone, NotReachability, all_inputs, bits_to_code,
                                 circuit_eval, circuit_function, circuit_to_ggf, code_to_bits,
                                 define_function, evaluate_ggf, find_monotonicity_violation,
                                 format_bits, format_circuit, ggf_to_circuit, identity_circuit, induced_ggf,
                                 is_monotone, lfp_bruteforce, lfp_ggf, orbit, parse_circuit,
                                 repetition_number, swap_circuit, wire)
from paramgames.randgen import random_ggf, random_monotone_circuit, random_table


def and_circuit():
    return parse_circuit("gate g AND a b\ngate a INPUT 1\ngate b INPUT 2\noutputs g\n")


def table_of(f):
    return {format_bits(code_to_bits(c, f.m)): format_bits(row) for c, row in enumerate(f.table)}


def ggf(owner, edges, targets, inputs, outputs):
    a = validate_arena(owner, edges)
    return GraphGameForm(ParamGame(a, reach_condition(a, targets)), inputs, outputs)


# -- bit vectors and tables ---------------------------------------------------

def test_bit_codes():
    assert bits_to_code((0, 0, 0, 1)) == 1
    assert bits_to_code((1, 0)) == 2
    assert code_to_bits(6, 3) == (1, 1, 0)
    assert all_inputs(2).tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_bool_function_basics():
    f = BoolFunction.identity(3)
    assert f((1, 0, 1)) == (1, 0, 1)
    assert f.codes().tolist() == list(range(8))
    assert f == BoolFunction.from_callable(3, 3, lambda b: b)
    assert hash(f) == hash(BoolFunction.identity(3))
    assert "101->101" in repr(f)
    with pytest.raises(ArityMismatch):
        f((1, 0))
    with pytest.raises(ValueError):
        BoolFunction(1, 1, [[2], [0]])
    with pytest.raises(ArityTooLarge):
        BoolFunction.identity(17)


# -- evaluation ---------------------------------------------------------------

def test_and_form_evaluation():
    g = circuit_to_ggf(and_circuit())
    assert evaluate_ggf(g, (1, 1)) == (1,)
    assert evaluate_ggf(g, (0, 1)) == (0,)
    with pytest.raises(ArityMismatch):
        evaluate_ggf(g, (1,))


def test_and_form_shape():
    g = circuit_to_ggf(and_circuit())
    a = g.game.arena
    # root, two inputs; no constants needed
    assert len(a) == 3 and a.owner[g.outputs[0]] == P2
    assert define_function(g) == circuit_function(and_circuit())


def test_zero_inputs():
    owner = {"s": P1, "t": P2, "w": LEAF, "l": LEAF}
    g = ggf(owner, [("s", "w"), ("s", "l"), ("t", "w"), ("t", "l")], ["w"], (), ("s", "t"))
    f = define_function(g)
    assert f.m == 0 and f.table.tolist() == [[1, 0]]


def crossing():
    owner = {"s1": P1, "s2": P1, "l1": LEAF, "l2": LEAF}
    return ggf(owner, [("s1", "l2"), ("s2", "l1")], [], ("l1", "l2"), ("s1", "s2"))


def test_swap_crossing_game():
    assert table_of(define_function(crossing())) == {"00": "00", "01": "10", "10": "01", "11": "11"}


def test_all_ones_dominates_all_zeros():
    rng = np.random.default_rng(3)
    for _ in range(30):
        g = random_ggf(rng, 3, 3, reach=bool(rng.random() < 0.5))
        lo, hi = evaluate_ggf(g, (0, 0, 0)), evaluate_ggf(g, (1, 1, 1))
        assert all(a <= b for a, b in zip(lo, hi))


def test_form_validation():
    owner = {"s": P1, "l": LEAF, "m": LEAF}
    a = validate_arena(owner, [("s", "l"), ("s", "m")])
    pg = ParamGame(a, reach_condition(a, []))
    with pytest.raises(GameFormError):
        GraphGameForm(pg, ("s",), ("s",))
    with pytest.raises(GameFormError):
        GraphGameForm(pg, ("l", "l"), ("s",))
    with pytest.raises(GameFormError):
        GraphGameForm(pg, ("l",), ("s", "s"))
    with pytest.raises(GameFormError):
        GraphGameForm(pg, ("l",), ("l",))
    with pytest.raises(GameFormError):
        GraphGameForm(pg, ("l",), ("zz",))
    # a non-designated leaf may be an output
    assert define_function(GraphGameForm(pg, ("l",), ("m",))).table.tolist() == [[0], [0]]


# -- monotonicity -------------------------------------------------------------

def test_is_monotone_examples():
    assert is_monotone(BoolFunction.identity(3))
    neg = BoolFunction(1, 1, [[1], [0]])
    assert not is_monotone(neg)
    assert find_monotonicity_violation(neg) == ((0,), (1,))
    assert find_monotonicity_violation(BoolFunction.identity(2)) is None


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(0, 4), n=st.integers(1, 4), reach=st.booleans(),
       cs=st.integers(0, 2))
def test_defined_functions_are_monotone(seed, m, n, reach, cs):
    g = random_ggf(np.random.default_rng(seed), m, n, n_inner=max(n, cs, 4), reach=reach,
                   counter_size=cs, param=seed % 4)
    assert is_monotone(define_function(g))


@given(st.integers(1, 4), st.data())
def test_violation_is_real(m, data):
    table = data.draw(st.lists(st.lists(st.integers(0, 1), min_size=2, max_size=2),
                               min_size=1 << m, max_size=1 << m))
    f = BoolFunction(m, 2, table)
    v = find_monotonicity_violation(f)
    brute = all(all(a <= b for a, b in zip(f(u), f(w)))
                for u in itertools.product((0, 1), repeat=m) for w in itertools.product((0, 1), repeat=m)
                if all(x <= y for x, y in zip(u, w)))
    assert (v is None) == brute
    if v is not None:
        u, w = v
        assert all(x <= y for x, y in zip(u, w))
        assert not all(a <= b for a, b in zip(f(u), f(w)))


# -- circuits -----------------------------------------------------------------

def test_circuit_eval_examples():
    assert circuit_function(wire(1, 1)) == BoolFunction.identity(1)
    c = parse_circuit("gate g OR a b\ngate a INPUT 1\ngate b INPUT 2\noutputs g\n")
    assert circuit_eval(c, (1, 0)) == (1,)
    k = MonotoneCircuit({"t": Gate(CONST, (1,)), "a": Gate(INPUT, (1,))}, ("t",), 1)
    assert [circuit_eval(k, (b,)) for b in (0, 1)] == [(1,), (1,)]
    with pytest.raises(ArityMismatch):
        circuit_eval(c, (1,))


def test_circuit_validation():
    with pytest.raises(CircuitError):
        MonotoneCircuit({"g": Gate(AND, ())}, ("g",), 0)
    with pytest.raises(CircuitError):
        MonotoneCircuit({"g": Gate(AND, ("h",))}, ("g",), 0)
    with pytest.raises(CircuitError):
        MonotoneCircuit({"a": Gate(INPUT, (3,))}, ("a",), 2)
    with pytest.raises(CircuitError):
        MonotoneCircuit({"a": Gate(CONST, (2,))}, ("a",), 0)
    with pytest.raises(CircuitError):
        MonotoneCircuit({"g": Gate(AND, ("h",)), "h": Gate(OR, ("g",))}, ("g",), 0)
    with pytest.raises(CircuitError):
        MonotoneCircuit({"a": Gate("XOR", ())}, ("a",), 0)


@pytest.mark.parametrize("text", [
    "gate g AND\noutputs g\n",
    "gate g NAND a\noutputs g\n",
    "gate a INPUT x\noutputs a\n",
    "gate a INPUT 1\n",
    "gate a INPUT 1\ngate a INPUT 2\noutputs a\n",
    "gate a INPUT 1\noutputs a\noutputs a\n",
    "inputs 1\ngate a INPUT 2\noutputs a\n",
    "bogus\n",
    "gate g OR g\noutputs g\n",
])
def test_circuit_parse_errors(text):
    with pytest.raises(CircuitParseError):
        parse_circuit(text)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(0, 4), n=st.integers(0, 4))
def test_circuit_format_round_trip(seed, m, n):
    c = random_monotone_circuit(np.random.default_rng(seed), m, n)
    d = parse_circuit(format_circuit(c))
    assert d == c
    assert circuit_function(d) == circuit_function(c)


def test_depth():
    assert wire(2, 1).depth() == 0
    assert and_circuit().depth() == 1
    c = parse_circuit("gate a INPUT 1\ngate b OR a\ngate c AND b a\noutputs c a\n")
    assert c.depth() == 2


# -- circuits <-> games -------------------------------------------------------

def test_circuit_to_game_examples():
    assert define_function(circuit_to_ggf(and_circuit())) == BoolFunction(2, 1, [[0], [0], [0], [1]])
    assert define_function(circuit_to_ggf(wire(1, 1))) == BoolFunction.identity(1)
    assert define_function(circuit_to_ggf(identity_circuit(3))) == BoolFunction.identity(3)
    assert table_of(define_function(circuit_to_ggf(swap_circuit()))) == table_of(define_function(crossing()))


def test_circuit_to_game_constants_and_repeats():
    c = parse_circuit("inputs 1\ngate t CONST 1\ngate z CONST 0\ngate g OR z t\noutputs t z g g\n")
    f = define_function(circuit_to_ggf(c))
    assert f.table.tolist() == [[1, 0, 1, 1], [1, 0, 1, 1]]


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(0, 4), n=st.integers(1, 4))
def test_circuit_to_game_property(seed, m, n):
    c = random_monotone_circuit(np.random.default_rng(seed), m, n, n_gates=6)
    f = define_function(circuit_to_ggf(c))
    for bits in itertools.product((0, 1), repeat=m):
        assert f(bits) == circuit_value(c, bits)


def test_round_trip_and():
    g = circuit_to_ggf(and_circuit())
    c = ggf_to_circuit(g)
    assert [circuit_eval(c, b) for b in itertools.product((0, 1), repeat=2)] == [(0,), (0,), (0,), (1,)]


def test_extract_constant():
    owner = {"s": P1, "t": P2, "w": LEAF, "x": LEAF}
    g = ggf(owner, [("s", "t"), ("t", "w")], ["w"], ("x",), ("s",))
    c = ggf_to_circuit(g)
    assert c.gates[c.outputs[0]] == Gate(CONST, (1,))


def test_extract_cycle_is_losing():
    owner = {"a": P1, "b": P1, "x": LEAF}
    g = ggf(owner, [("a", "b"), ("b", "a"), ("b", "x")], [], ("x",), ("a", "b"))
    c = ggf_to_circuit(g)
    assert circuit_function(c) == define_function(g)
    assert circuit_eval(c, (0,)) == (0, 0)


def test_extract_rejects():
    with pytest.raises(HasCounters):
        pg = build_linear(2)
        ggf_to_circuit(GraphGameForm(pg, (), ("v0",), (1,)))
    owner = {"a": P1, "x": LEAF}
    a = validate_arena(owner, [("a", "x")])
    g = GraphGameForm(ParamGame(a, ParityCondition({"a": 2, "x": 1})), ("x",), ("a",))
    with pytest.raises(NotReachability):
        ggf_to_circuit(g)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(0, 4), n=st.integers(1, 4))
def test_extract_property(seed, m, n):
    g = random_ggf(np.random.default_rng(seed), m, n, n_inner=max(n, 6), max_out=3)
    c = ggf_to_circuit(g)
    assert circuit_function(c) == define_function(g)
    assert c.depth() <= g.size()


# -- least fixed points -------------------------------------------------------

def xy_form(kind):
    """f(x, y) = (x op y, y) as a reachability form."""
    op = {"or": P1, "and": P2}[kind]
    owner = {"s1": op, "s2": P1, "lx": LEAF, "ly": LEAF}
    return ggf(owner, [("s1", "lx"), ("s1", "ly"), ("s2", "ly")], [], ("lx", "ly"), ("s1", "s2"))


def test_lfp_examples():
    f_or, f_and = define_function(xy_form("or")), define_function(xy_form("and"))
    assert define_function(lfp_ggf(xy_form("or"), 1)).table.tolist() == [[0], [1]]
    assert define_function(lfp_ggf(xy_form("and"), 1)).table.tolist() == [[0], [0]]
    assert lfp_bruteforce(f_or, 1).table.tolist() == [[0], [1]]
    assert lfp_bruteforce(f_and, 1).table.tolist() == [[0], [0]]
    # keep="y" reports the remaining outputs at the fixed point
    assert define_function(lfp_ggf(xy_form("or"), 1, keep="y")) == lfp_bruteforce(f_or, 1, keep="y")


def test_lfp_bruteforce_examples():
    ident = BoolFunction.identity(3)
    assert lfp_bruteforce(ident, 2).table.tolist() == [[0, 0], [0, 0]]
    swap_xy = BoolFunction.from_callable(2, 2, lambda b: (b[1], b[0]))
    assert lfp_bruteforce(swap_xy, 1).table.tolist() == [[0], [1]]
    full = lfp_bruteforce(ident, 3)
    assert full.m == 0 and full.table.tolist() == [[0, 0, 0]]


def test_lfp_errors():
    with pytest.raises(NotMonotone):
        lfp_bruteforce(BoolFunction(1, 1, [[1], [0]]), 1)
    with pytest.raises(ArityMismatch):
        lfp_bruteforce(BoolFunction(1, 2, [[0, 0], [0, 0]]), 1)
    with pytest.raises(ArityMismatch):
        lfp_ggf(circuit_to_ggf(and_circuit()), 1)
    with pytest.raises(ArityMismatch):
        lfp_ggf(crossing(), 3)
    with pytest.raises(ValueError):
        lfp_ggf(crossing(), 1, keep="z")


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 4), data=st.data())
def test_lfp_property(seed, m, data):
    m_x = data.draw(st.integers(0, m))
    g = circuit_to_ggf(random_monotone_circuit(np.random.default_rng(seed), m, m, n_gates=5))
    got = define_function(lfp_ggf(g, m_x))
    assert got == lfp_bruteforce(define_function(g), m_x)
    assert is_monotone(got)


# -- repetition numbers -------------------------------------------------------

def test_repetition_examples():
    for m in range(1, 5):
        assert repetition_number(BoolFunction.identity(m)) == 1
    swap = circuit_function(swap_circuit())
    assert repetition_number(swap) == 2
    assert orbit(swap, (0, 1)) == [(0, 1), (1, 0)]
    shift = BoolFunction.from_map(3, [(c + 1) % 8 for c in range(8)])
    assert repetition_number(shift) == 8
    with pytest.raises(ArityMismatch):
        repetition_number(BoolFunction(1, 2, [[0, 0], [0, 0]]))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 4))
def test_rn_bound(seed, m):
    f = random_table(np.random.default_rng(seed), m, m)
    r = repetition_number(f)
    assert 1 <= r <= 2 ** m
    assert r == max(len(orbit(f, w)) for w in itertools.product((0, 1), repeat=m))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 4))
def test_monotone_orbits(seed, m):
    f = circuit_function(random_monotone_circuit(np.random.default_rng(seed), m, m, n_gates=5))
    r = repetition_number(f)
    for w in itertools.product((0, 1), repeat=m):
        o = orbit(f, w)
        assert len(o) <= r
        # entering a cycle: the next value after the orbit is already in it
        assert f(o[-1]) in o


# -- induced forms ------------------------------------------------------------

def test_chain4_induced():
    g = induced_ggf(build_linear(4), 1)
    assert g.m == g.n == 4
    assert g.inputs == ("v0^out", "v1^out", "v2^out", "v3^out")
    assert g.outputs == ("v0^in", "v1^in", "v2^in", "v3^in")
    assert evaluate_ggf(g, (0, 0, 0, 1))[2] == 1
    f = define_function(g)
    for w in itertools.product((0, 1), repeat=4):
        assert f(w) == (w[1], w[2], w[3], 1)


def test_induced_self_loop_is_identity():
    a = validate_arena({"v": "c1", "l": LEAF}, [("v", "v", "green"), ("v", "l", "red")])
    g = induced_ggf(ParamGame(a, reach_condition(a, [])), 1)
    assert g.game.arena.successors["v^in"] == ("v^out",)
    assert define_function(g) == BoolFunction.identity(1)


def test_induced_green_to_win_is_constant():
    a = validate_arena({"v": "c1", "w": LEAF, "l": LEAF}, [("v", "w", "green"), ("v", "l", "red")])
    g = induced_ggf(ParamGame(a, reach_condition(a, ["w"])), 1)
    assert define_function(g).table.tolist() == [[1], [1]]


def test_induced_renumbers_and_fixes():
    owner = {"x": "c1", "y": "c2", "l": LEAF, "w": LEAF}
    a = validate_arena(owner, [("x", "y", "green"), ("x", "l", "red"), ("y", "x", "green"), ("y", "w", "red")])
    pg = ParamGame(a, reach_condition(a, ["w"]))
    g = induced_ggf(pg, 1, (2,))
    assert g.game.arena.owner["y"] == "c1" and g.fixed_params == (2,)
    with pytest.raises(EmptyCounterClass):
        induced_ggf(pg, 3, (0,))
    with pytest.raises(ValueError):
        induced_ggf(pg, 1, ())
