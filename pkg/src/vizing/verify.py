"""Instance checks for Vizing's inequality and the related order conditions."""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceededError, InvalidInputError, PreconditionError
from .product import cartesian_product
from .solver import DEFAULT_NODE_BUDGET, gamma_exact

# Absolute tolerance on the log_q scale for the order-bound comparison.
COROLLARY_LOG_TOL = 1e-9


@dataclass(frozen=True)
class PairReport:
    gamma_g: int
    gamma_h: int
    gamma_product: int
    vizing_holds: bool
    suen_tarr_holds: bool
    theorem_condition: bool
    corollary_bound_holds: Optional[bool] = None
    p_used: Optional[float] = None


def vizing_holds(gamma_g, gamma_h, gamma_product):
    return gamma_product >= gamma_g * gamma_h


def suen_tarr_holds(gamma_g, gamma_h, gamma_product):
    # gamma(GxH) >= gg*gh/2 + min/2, doubled to stay in integers
    return 2 * gamma_product >= gamma_g * gamma_h + min(gamma_g, gamma_h)


def check_theorem_condition(g, h, gamma_g, gamma_h):
    need = gamma_g * gamma_h
    return g.n >= need and h.n >= need


def check_corollary_bound(g_order, h_order, p):
    """Whether |G| <= q ** (|H| / log_q |H|) with q = 1 / (1 - p).

    Compared as log_q |G| <= |H| / log_q |H| with an absolute tolerance of
    ``COROLLARY_LOG_TOL``, since the right-hand power overflows quickly.
    """
    if not 0.0 <= p < 1.0:
        raise InvalidInputError(f"edge probability {p} must lie in [0, 1)")
    if p == 0.0:
        raise InvalidInputError("p = 0 gives q = 1, where log_q is undefined")
    if h_order < 2:
        raise InvalidInputError("|H| must be at least 2 so that log_q |H| > 0")
    if g_order < h_order:
        raise PreconditionError(f"the order bound assumes |G| >= |H| (got {g_order} < {h_order})")
    ln_q = -math.log1p(-p)
    log_g = math.log(g_order) / ln_q
    log_h = math.log(h_order) / ln_q
    return log_g <= h_order / log_h + COROLLARY_LOG_TOL


def max_order_under_bound(h_order, p, cap):
    """Largest |G| in [|H|, cap] passing :func:`check_corollary_bound`, or None."""
    if cap < h_order or not check_corollary_bound(h_order, h_order, p):
        return None
    lo, hi = h_order, cap
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if check_corollary_bound(mid, h_order, p):
            lo = mid
        else:
            hi = mid - 1
    return lo


def _solve(graph, label, budget):
    try:
        return gamma_exact(graph, budget)
    except BudgetExceededError as exc:
        raise BudgetExceededError(exc.budget, label) from None


def check_pair(g, h, p=None, budget=DEFAULT_NODE_BUDGET):
    """Compute gamma(G), gamma(H), gamma(G □ H) and evaluate every check.

    ``p`` is only used for the order-bound column; it is left as None when p
    is not given or the bound's preconditions fail.
    """
    gg = _solve(g, "gamma(G)", budget).gamma
    gh = _solve(h, "gamma(H)", budget).gamma
    gp = _solve(cartesian_product(g, h).graph, "gamma(G x H)", budget).gamma
    corollary = None
    if p is not None:
        big, small = max(g.n, h.n), min(g.n, h.n)
        try:
            corollary = check_corollary_bound(big, small, p)
        except (InvalidInputError, PreconditionError):
            corollary = None
    return PairReport(
        gamma_g=gg,
        gamma_h=gh,
        gamma_product=gp,
        vizing_holds=vizing_holds(gg, gh, gp),
        suen_tarr_holds=suen_tarr_holds(gg, gh, gp),
        theorem_condition=check_theorem_condition(g, h, gg, gh),
        corollary_bound_holds=corollary,
        p_used=p,
    )
