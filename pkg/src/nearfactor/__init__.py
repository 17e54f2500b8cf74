"""Edge-length realizations of near 1-factors of complete graphs of odd order."""

from .blocks import (
    compose,
    compose_all,
    inflate,
    patterned_starter,
    perfect_odd_list,
    perfect_xx,
    realize_12,
    realize_1y,
    realize_constant,
    times,
)
from .feasibility import FeasibilityVerdict, check_condition, violations
from .model import (
    Infeasible,
    InvalidInput,
    Kind,
    LengthList,
    Mode,
    NearOneFactor,
    PreconditionViolation,
    Realization,
    SlotSequence,
    WrongSolver,
    from_sequence,
    multiply,
    to_sequence,
    translate,
    validate,
)
from .onetwot import (
    realize_12t,
    realize_12t_big,
    realize_12t_coprime,
    realize_12t_example_patterns,
    realize_12t_shared,
    realize_12t_small,
)
from .oracle import SearchLimitExceeded, SearchOptions, SweepReport, enumerate_lists, search_realization, sweep
from .solve import SolveResult, solve
from .two import realize_two

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
