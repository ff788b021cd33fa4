"""Cross-country Jacobian accumulation by vertex elimination.

Trace a straight-line program into a computational graph whose edges carry
sparsity-coded partial derivatives, count the multiplications of any
elimination order, search for cheap orders, and run the chosen order
numerically.
"""

__version__ = "0.1.0"

from .elimination import CostReport, eliminate_vertex, order_cost, run_order
from .errors import CrossCountryError
from .graph import CompGraph
from .interpreter import accumulate_jacobian, evaluate_primal, reference_jacobian
from .program import Program, ProgramBuilder
from .search import SearchConfig, brute_force, mcts_search, portfolio_search, simulated_annealing
from .sparsity import JacobianSpec, contract, merge_add
from .strategies import baseline_order
from .tasks import build_task
from .trace import trace

__all__ = [
    "CompGraph",
    "CostReport",
    "CrossCountryError",
    "JacobianSpec",
    "Program",
    "ProgramBuilder",
    "SearchConfig",
    "accumulate_jacobian",
    "baseline_order",
    "brute_force",
    "build_task",
    "contract",
    "eliminate_vertex",
    "evaluate_primal",
    "mcts_search",
    "merge_add",
    "order_cost",
    "portfolio_search",
    "reference_jacobian",
    "run_order",
    "simulated_annealing",
    "trace",
]
