"""Exact domination polynomials and average dominating-set order for small graphs."""

from .canon import canonical_code
from .dompoly import (
    DomPolynomial,
    EvalPair,
    avd,
    brute_force,
    compute,
    count_dominating_avoiding,
    eval_pair,
    gamma,
    split_by_vertex,
    star_poly,
)
from .errors import GraphError, GuardExceeded, HypothesisNotMet
from .graph import Graph, from_edge_list

__version__ = "0.1.0"
