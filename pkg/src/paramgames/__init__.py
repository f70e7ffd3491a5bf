"""Counter-parameterized games on finite graphs.

Arenas with Player 1, Player 2 and counter vertices; parity winning
conditions; unfolding at fixed parameters; graph game forms and monotone
circuits; bounded decision procedures for quantified parameter questions.
"""
from .core import (Arena, ArenaError, Edge, IllegalChoice, NotALeaf, ParamGame, ParityCondition,
                   RunState, initial_state, reach_condition, safety_condition, step, validate_arena)
from .param import (ParamQuery, ProfileTrajectory, eval_query, exists_winning_params,
                    iterate_profiles)
from .solver import OrdinaryGame, Solution, attractor, solve, verify_strategy
from .unfold import UnfoldedGame, unfold, win_grid, wins_with_params

__version__ = "0.1.0"

__all__ = [
    "Arena", "ArenaError", "Edge", "IllegalChoice", "NotALeaf", "OrdinaryGame", "ParamGame",
    "ParamQuery", "ParityCondition", "ProfileTrajectory", "RunState", "Solution",
    "UnfoldedGame", "attractor", "eval_query", "exists_winning_params", "initial_state",
    "iterate_profiles", "reach_condition", "safety_condition", "solve", "step", "unfold",
    "validate_arena", "verify_strategy", "win_grid", "wins_with_params",
]
