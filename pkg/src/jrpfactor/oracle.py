"""Brute-force ground truth for tests and the CLI --oracle flag.

Everything here favors obviousness over speed: costs are rebuilt from
first principles in Fraction arithmetic and scanned without pruning, so
this module shares no scan or cost code with the solver it checks.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BudgetExceeded
from .model import JrpInstance, JrpSolution, Variant

_SUBSET_LIMIT = 24


def trial_division_factor(M: int) -> list[int]:
    """Prime factorization (with multiplicity, ascending) by trial division."""
    if M < 2:
        raise ValueError("factorization needs M >= 2")
    factors = []
    while M % 2 == 0:
        factors.append(2)
        M //= 2
    d = 3
    while d * d <= M:
        while M % d == 0:
            factors.append(d)
            M //= d
        d += 2
    if M > 1:
        factors.append(M)
    return factors


def brute_force_jrp(inst: JrpInstance, b1: int, b2: int,
                    budget: int = 10 ** 7) -> JrpSolution:
    """Unpruned double loop over [1, b1] x [1, b2].

    Same (cost, q1, q2) tie-break as the solver, so the two must agree
    exactly on any shared box.
    """
    if b1 < 1 or b2 < 1:
        raise ValueError("bounds must be >= 1")
    if b1 * b2 > budget:
        raise BudgetExceeded(
            f"brute-force box [1, {b1}] x [1, {b2}] exceeds budget {budget}",
            bound1=b1, bound2=b2, budget=budget)
    periodic = inst.variant is Variant.PERIODIC
    best = None
    for q1 in range(1, b1 + 1):
        item1 = Fraction(inst.K1, q1) + inst.H1 * q1
        for q2 in range(1, b2 + 1):
            cost = item1 + Fraction(inst.K2, q2) + inst.H2 * q2
            if periodic:
                cost += Fraction(inst.K0, math.gcd(q1, q2))
            else:
                cost -= Fraction(inst.K0 * math.gcd(q1, q2), q1 * q2)
            key = (cost, q1, q2)
            if best is None or key < best:
                best = key
    return JrpSolution(q1=best[1], q2=best[2], cost=best[0],
                       bound1=b1, bound2=b2)


def has_divisor_in_range(M: int, L: int, U: int) -> bool:
    """True iff some divisor of M lies in [L, U] (checked directly).

    Short intervals are scanned; long ones fall back to enumerating all
    divisors from the trial-division factorization.
    """
    if not M >= U >= L >= 1:
        raise ValueError("need M >= U >= L >= 1")
    hi = min(U, M)
    if hi - L <= 2_000_000:
        return any(M % d == 0 for d in range(L, hi + 1))
    divisors = {1}
    for p in trial_division_factor(M):
        divisors |= {d * p for d in divisors}
    return any(L <= d <= U for d in divisors)


def subset_sum_exists(items: list[int], target: int) -> bool:
    """True iff some subset of items sums to target, by sweeping all
    2**n subset sums (n <= 24) through one reachability bitset."""
    if len(items) > _SUBSET_LIMIT:
        raise BudgetExceeded(
            f"subset enumeration limited to {_SUBSET_LIMIT} items, got {len(items)}",
            items=len(items), budget=2 ** _SUBSET_LIMIT)
    if any(i < 0 for i in items):
        raise ValueError("items must be nonnegative")
    if target < 0:
        return False
    reachable = 1  # bit s set <=> some subset sums to s
    for item in items:
        reachable |= reachable << item
    return bool(reachable >> target & 1)
