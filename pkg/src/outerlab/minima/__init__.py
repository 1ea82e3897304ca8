from .line import LineOfMinima, balancing_projection, exp_half, line_of_minima, make_grid
from .lp import solve, solve_standard
from .search import SimplexProgram, is_local_minimum, min_search, neighbours, search, simplex_min

__all__ = [
    "LineOfMinima",
    "SimplexProgram",
    "balancing_projection",
    "exp_half",
    "is_local_minimum",
    "line_of_minima",
    "make_grid",
    "min_search",
    "neighbours",
    "search",
    "simplex_min",
    "solve",
    "solve_standard",
]
