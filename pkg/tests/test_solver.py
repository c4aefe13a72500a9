from fractions import Fraction

import pytest

from conftest import random_jrp_instances
from jrpfactor import (BudgetExceeded, JrpInstance, SearchBounds, Variant,
                       decide, derive_bounds, eoq_cost, solve_exact,
                       solve_fixed_q2)
from jrpfactor import oracle

SEPARABLE = JrpInstance(Variant.APERIODIC, K0=0, K1=4, H1=1, K2=9, H2=1)
APERIODIC_M9 = JrpInstance(Variant.APERIODIC, K0=72, K1=72, H1=4,
                           K2=58320, H2=720)
PERIODIC_M15 = JrpInstance(Variant.PERIODIC, K0=15, K1=0, H1=1,
                           K2=54000, H2=240)


def test_derive_bounds_separable():
    b = derive_bounds(SEPARABLE)
    # incumbent 10 at the per-item optima (2, 3)
    assert (b.bound1, b.bound2) == (11, 11)


def test_derive_bounds_contains_heavy_item_optimum():
    b = derive_bounds(PERIODIC_M15)
    # incumbent 7216 at (1, 15); H2 = 240
    assert b.bound2 == 31
    assert b.bound2 >= 15


def test_derive_bounds_shrink_with_stiff_holding():
    stiff = JrpInstance(Variant.PERIODIC, K0=1, K1=10, K2=10, H1=1, H2=10 ** 6)
    assert derive_bounds(stiff).bound2 <= 2


def test_solve_exact_separable():
    sol = solve_exact(SEPARABLE)
    assert (sol.q1, sol.q2, sol.cost) == (2, 3, Fraction(10))


def test_solve_exact_periodic_walkthrough_with_tie():
    # q1 = 5 attains the same cost 7208; the tie-break picks q1 = 3
    sol = solve_exact(PERIODIC_M15)
    assert (sol.q1, sol.q2, sol.cost) == (3, 15, Fraction(7208))
    from jrpfactor import periodic_cost
    assert periodic_cost(PERIODIC_M15, 5, 15) == 7208


def test_solve_exact_aperiodic_walkthrough():
    sol = solve_exact(APERIODIC_M9)
    assert (sol.q1, sol.q2, sol.cost) == (3, 9, Fraction(12988))


def test_solve_fixed_q2_scans():
    sol = solve_fixed_q2(APERIODIC_M9, 9, 18)
    assert sol.q1 == 3
    assert sol.cost - eoq_cost(9, 58320, 720) == 28
    sol = solve_fixed_q2(PERIODIC_M15, 15, 15)
    assert sol.q1 == 3
    # truncated range: q1 = 1 costs 7216, q1 = 2 costs 7217
    sol = solve_fixed_q2(PERIODIC_M15, 15, 2)
    assert sol.q1 == 1 and sol.cost == 7216


def test_decide_threshold():
    assert decide(PERIODIC_M15, Fraction(7208)) is True
    assert decide(PERIODIC_M15, Fraction(7207)) is False
    from jrpfactor import periodic_cost
    assert decide(PERIODIC_M15, periodic_cost(PERIODIC_M15, 1, 1)) is True


def test_budget_error_names_bounds():
    with pytest.raises(BudgetExceeded) as err:
        solve_exact(PERIODIC_M15, budget=3)
    message = str(err.value)
    assert "7217" in message and "31" in message
    assert err.value.details["budget"] == 3


def test_solution_records_box():
    sol = solve_exact(PERIODIC_M15)
    assert sol.q1 <= sol.bound1 and sol.q2 <= sol.bound2
    assert (sol.bound1, sol.bound2) == (7217, 31)


def test_agrees_with_unpruned_oracle():
    for inst in random_jrp_instances(1702, 40):
        b = derive_bounds(inst)
        fast = solve_exact(inst)
        slow = oracle.brute_force_jrp(inst, b.bound1, b.bound2)
        assert (fast.cost, fast.q1, fast.q2) == (slow.cost, slow.q1, slow.q2)


def test_enlarging_the_box_changes_nothing():
    for inst in random_jrp_instances(88, 50):
        b = derive_bounds(inst)
        sol = solve_exact(inst)
        wide = solve_exact(inst, bounds=SearchBounds(2 * b.bound1, 2 * b.bound2))
        assert (sol.q1, sol.q2, sol.cost) == (wide.q1, wide.q2, wide.cost)


def test_pinning_consistency():
    for inst in random_jrp_instances(5151, 30):
        sol = solve_exact(inst)
        pinned = solve_fixed_q2(inst, sol.q2, sol.bound1)
        assert pinned.q1 == sol.q1
        assert pinned.cost == sol.cost


def test_small_custom_box_is_respected():
    sol = solve_exact(PERIODIC_M15, bounds=SearchBounds(1, 1))
    assert (sol.q1, sol.q2) == (1, 1)
    assert sol.cost == 15 + 0 + 1 + 54000 + 240


def test_search_bounds_validate():
    with pytest.raises(ValueError):
        SearchBounds(0, 5)
