"""Exact domination numbers, Cartesian products and block-counting
certificates for checking Vizing's inequality on concrete graph pairs."""

from .blocks import (Outcome, Partition, RepartitionTrace, audit_trace, build_partition,
                     classify_block, projection_set, run_repartitioning, verify_observation)
from .errors import (BudgetExceededError, CapExceededError, InvalidInputError, ParseError,
                     PreconditionError, VizingError)
from .formats import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .graph import Graph, closed_neighborhood, erdos_renyi, is_dominating, members, vset
from .product import ProductGraph, cartesian_product, project_to_g, project_to_h
from .solver import (GammaResult, enumerate_minimum_dominating_sets, gamma_bruteforce,
                     gamma_exact, greedy_dominating, two_packing_lower_bound)
from .verify import (PairReport, check_corollary_bound, check_pair,
                     check_theorem_condition)

__version__ = "0.1.0"
