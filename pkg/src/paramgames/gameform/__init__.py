"""Graph game forms, the monotone functions they define, and circuits."""
from .circuits import (AND, CONST, INPUT, OR, CircuitError, CircuitParseError, Gate,
                       MonotoneCircuit, circuit_eval, circuit_function, format_circuit,
                       identity_circuit, parse_circuit, swap_circuit, wire)
from .functions import (TABLE_GUARD, ArityMismatch, ArityTooLarge, BoolFunction, NotMonotone,
                        all_inputs, bits_to_code, code_to_bits, find_monotonicity_violation,
                        format_bits, is_monotone, lfp_bruteforce, orbit, repetition_number)
from .ggf import (EmptyCounterClass, GameFormError, GraphGameForm, HasCounters, NotReachability,
                  circuit_to_ggf, define_function, evaluate_ggf, ggf_to_circuit, in_copy,
                  induced_ggf, is_reachability_form, lfp_ggf, out_copy)

__all__ = [
    "AND", "CONST", "INPUT", "OR", "ArityMismatch", "ArityTooLarge", "BoolFunction",
    "CircuitError", "CircuitParseError", "EmptyCounterClass", "GameFormError", "Gate",
    "GraphGameForm", "HasCounters", "MonotoneCircuit", "NotMonotone", "NotReachability",
    "TABLE_GUARD", "all_inputs", "bits_to_code", "circuit_eval", "circuit_function",
    "circuit_to_ggf", "code_to_bits", "define_function", "evaluate_ggf",
    "find_monotonicity_violation", "format_bits", "format_circuit", "ggf_to_circuit",
    "identity_circuit", "in_copy", "induced_ggf", "is_monotone", "is_reachability_form",
    "lfp_bruteforce", "lfp_ggf", "orbit", "out_copy", "parse_circuit", "repetition_number",
    "swap_circuit", "wire",
]
