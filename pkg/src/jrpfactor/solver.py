"""Exact minimization of the two-item objectives over integer periods.

The scan is exhaustive over a certified box and therefore exponential in
the bit length of the coefficients; a cell budget turns runaway
instances into a clean error instead of a hang.  Pruning relies only on
proven cost floors:

* cost >= H1*q1 + item-2 cost for both variants (the aperiodic discount
  K0/lcm never exceeds K1/q1 because K0 <= K1 and lcm >= q1),
* for the periodic variant additionally joint >= K0/q2.

Columns (fixed q2) are visited outward from the single-item optimum of
item 2, where the item-2 cost is unimodal, so each direction stops at
the first hopeless column.  Candidates are combined through the total
order (cost, q1, q2); the result is independent of visiting order, so
the scan could be partitioned across workers without changing answers.

Costs are compared with integer cross-multiplication; a Fraction is
materialized only for the returned solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded
from .model import (JrpInstance, JrpSolution, Variant, eoq_best_integer,
                    instance_cost)

DEFAULT_CELL_BUDGET = 10 ** 7


@dataclass(frozen=True)
class SearchBounds:
    """Box [1, bound1] x [1, bound2] certified to contain every optimum."""

    bound1: int
    bound2: int

    def __post_init__(self):
        if self.bound1 < 1 or self.bound2 < 1:
            raise ValueError("search bounds must be >= 1")


def derive_bounds(inst: JrpInstance) -> SearchBounds:
    """Box from the incumbent at the per-item optima.

    With incumbent cost c at (q1, q2) = per-item integer optima,
    bound_i = floor(c / H_i) + 1: any q_i beyond that already pays more
    than c in holding cost alone, so every optimum lies in the box.
    """
    e1 = eoq_best_integer(inst.K1, inst.H1)
    e2 = eoq_best_integer(inst.K2, inst.H2)
    incumbent = instance_cost(inst, e1, e2)
    b1 = incumbent.numerator // (incumbent.denominator * inst.H1) + 1
    b2 = incumbent.numerator // (incumbent.denominator * inst.H2) + 1
    return SearchBounds(b1, b2)


def _cost_pair(inst: JrpInstance, q1: int, q2: int) -> tuple[int, int]:
    # Objective as an integer pair (numerator, denominator=q1*q2).
    g = math.gcd(q1, q2)
    D = q1 * q2
    N = (inst.K1 + inst.H1 * q1 * q1) * q2 + (inst.K2 + inst.H2 * q2 * q2) * q1
    if inst.variant is Variant.PERIODIC:
        N += inst.K0 * (D // g)  # K0/gcd over denominator q1*q2
    else:
        N -= inst.K0 * g         # K0/lcm over denominator q1*q2
    return N, D


def solve_exact(inst: JrpInstance, bounds: SearchBounds | None = None,
                budget: int = DEFAULT_CELL_BUDGET) -> JrpSolution:
    """Exact argmin over the box, ties broken by smallest q1 then q2."""
    if bounds is None:
        bounds = derive_bounds(inst)
    b1, b2 = bounds.bound1, bounds.bound2
    K0, K1, K2, H1, H2 = inst.K0, inst.K1, inst.K2, inst.H1, inst.H2
    periodic = inst.variant is Variant.PERIODIC
    jf = K0 if periodic else 0  # floor of the joint term over denominator q2

    e2 = eoq_best_integer(K2, H2)
    start1 = min(eoq_best_integer(K1, H1), b1)
    start2 = min(e2, b2)
    seed_n, seed_d = _cost_pair(inst, start1, start2)
    best = [seed_n, seed_d, start1, start2]
    cells = 0

    def scan_column(q2: int) -> None:
        nonlocal cells
        bN, bD, bq1, bq2 = best
        phi = K2 + H2 * q2 * q2  # item-2 cost over denominator q2
        T = bN * q2 - bD * (phi + jf)
        step = bD * H1 * q2
        if T < step:
            return  # q1 = 1 already hopeless here
        limit = min(T // step, b1)
        q1 = 1
        while q1 <= limit:
            cells += 1
            if cells > budget:
                raise BudgetExceeded(
                    f"cell budget {budget} exceeded scanning box "
                    f"[1, {b1}] x [1, {b2}]",
                    bound1=b1, bound2=b2, budget=budget)
            g = math.gcd(q1, q2)
            D = q1 * q2
            N = (K1 + H1 * q1 * q1) * q2 + phi * q1
            if periodic:
                N += K0 * (D // g)
            else:
                N -= K0 * g
            diff = N * bD - bN * D
            if diff < 0 or (diff == 0 and (q1, q2) < (bq1, bq2)):
                bN, bD, bq1, bq2 = N, D, q1, q2
                best[0], best[1], best[2], best[3] = N, D, q1, q2
                T = bN * q2 - bD * (phi + jf)
                limit = min(limit, T // (bD * H1 * q2))
            q1 += 1

    def column_hopeless_for_break(q2: int) -> bool:
        # Floor without the joint term: monotone away from e2 in each
        # direction, so it may end a directional sweep.
        bN, bD = best[0], best[1]
        return (H1 * q2 + K2 + H2 * q2 * q2) * bD > bN * q2

    for q2 in range(start2, b2 + 1):
        if q2 > e2 and column_hopeless_for_break(q2):
            break
        scan_column(q2)
    for q2 in range(start2 - 1, 0, -1):
        if q2 < e2 and column_hopeless_for_break(q2):
            break
        scan_column(q2)

    return JrpSolution(q1=best[2], q2=best[3], cost=Fraction(best[0], best[1]),
                       bound1=b1, bound2=b2)


def solve_fixed_q2(inst: JrpInstance, q2: int, q1_max: int) -> JrpSolution:
    """Argmin over q1 in [1, q1_max] with q2 pinned; same tie-break."""
    if q2 < 1 or q1_max < 1:
        raise ValueError("q2 and q1_max must be >= 1")
    bN = bD = bq1 = None
    for q1 in range(1, q1_max + 1):
        N, D = _cost_pair(inst, q1, q2)
        if bq1 is None or N * bD < bN * D:
            bN, bD, bq1 = N, D, q1
    return JrpSolution(q1=bq1, q2=q2, cost=Fraction(bN, bD),
                       bound1=q1_max, bound2=q2)


def decide(inst: JrpInstance, z: Fraction,
           budget: int = DEFAULT_CELL_BUDGET) -> bool:
    """True iff the optimal cost is at most z."""
    return solve_exact(inst, budget=budget).cost <= z
