from rxtx.plan import (count_scheme_additions, naive_plan,
                       optimized_rxtx_plan, plan_consistent_with_scheme)
from rxtx.scheme import rxtx_scheme, strassen_xxt_scheme


def test_naive_rxtx_plan_counts():
    plan = naive_plan(rxtx_scheme())
    assert plan.stage1_additions() == 77
    assert plan.stage2_additions() == 62
    assert plan.total_additions() == 139


def test_optimized_rxtx_plan_counts():
    plan = optimized_rxtx_plan()
    assert plan.stage1_additions() == 53
    assert plan.stage2_additions() == 47
    assert plan.total_additions() == 100


def test_count_scheme_additions_default_is_naive():
    assert count_scheme_additions(rxtx_scheme()) == (77, 62, 139)
    assert count_scheme_additions(rxtx_scheme(),
                                  optimized_rxtx_plan()) == (53, 47, 100)


def test_strassen_plan_three_additions_per_level():
    plan = naive_plan(strassen_xxt_scheme())
    assert plan.total_additions() == 3


def test_plans_consistent_with_scheme():
    s = rxtx_scheme()
    assert plan_consistent_with_scheme(s, naive_plan(s)) == []
    assert plan_consistent_with_scheme(s, optimized_rxtx_plan()) == []
    t = strassen_xxt_scheme()
    assert plan_consistent_with_scheme(t, naive_plan(t)) == []
