"""Tests for the Euler equation system and its linear diophantine form."""
import pytest

from torusrank.cfrac.expansion import expand
from torusrank.cfrac.surd import canonicalize
from torusrank.complexity.estimator import arithmetic_complexity
from torusrank.euler.system import (
    build_euler_system,
    entry_variables,
    euler_report,
    full_system_rank,
    linear_diophantine_form,
    rational_dimension_upper_bound,
    select_branch,
    substitution_residual,
    symbolic_continuants,
)
from torusrank.models.complexity import SearchConfig
from torusrank.models.polynomial import IntegerPolynomial
from torusrank.rank.table1 import TABLE1


def test_entry_variables():
    assert entry_variables(1, 2) == ["g1", "k1", "k2", "D"]
    assert entry_variables(0, 1) == ["k1", "D"]


def test_symbolic_continuants_period_two():
    """Test A_1 = k1 k2 + 1 and B_1 = k2 for the period (k1, k2)."""
    A_n, A_1, A_2, B_n, B_1, B_2 = symbolic_continuants(1, 2)
    point = {"g1": 9, "k1": 9, "k2": 18, "D": 83}
    assert (A_n.evaluate(point), A_1.evaluate(point), A_2.evaluate(point)) == (163, 9, 1)
    assert (B_n.evaluate(point), B_1.evaluate(point), B_2.evaluate(point)) == (18, 1, 0)
    assert A_n.total_degree == 2


def test_symbolic_continuants_match_numeric():
    """Test the symbolic continuants against the numeric recurrence on short periods."""
    for length in range(1, 9):
        period = [(3 * i) % 7 + 1 for i in range(length)]
        polys = symbolic_continuants(0, length)
        A, B = [0, 1], [1, 0]
        for k in period:
            A.append(k * A[-1] + A[-2])
            B.append(k * B[-1] + B[-2])
        point = period + [0]
        assert [p.evaluate(point) for p in polys] == [A[-1], A[-2], A[-3], B[-1], B[-2], B[-3]]


def test_sqrt83_system():
    theta = canonicalize(0, 1, 1, 83)
    system = build_euler_system(theta, expand(theta))
    assert system.variables == ["g1", "k1", "k2", "D"]
    assert system.index == 1
    assert (system.c1, system.c2) == (162, 36)
    assert system.scale == 324
    assert system.evaluate(system.base_point) == [0, 0, 0]
    assert system.closing_entry == "k2"


def test_sqrt7_system(sqrt7):
    system = build_euler_system(sqrt7, expand(sqrt7))
    assert system.base_point == [2, 1, 1, 1, 4, 7]
    assert (system.c1, system.c2) == (12, 18)
    assert system.scale == 36
    assert system.n == 5


def test_golden_mean_system(golden_mean):
    system = build_euler_system(golden_mean, expand(golden_mean))
    assert system.variables == ["k1", "D"]
    assert (system.c1, system.c2) == (1, 2)
    assert system.scale == 1
    sign, form = select_branch(system)
    assert sign == 1
    assert form.evaluate([1, 5]) == 0
    assert form.evaluate([3, 13]) == 0
    assert rational_dimension_upper_bound(system) == 1


def test_equations_off_the_base_point(sqrt7):
    system = build_euler_system(sqrt7, expand(sqrt7))
    assert system.evaluate([2, 1, 1, 2, 4, 7]) != [0, 0, 0]


@pytest.mark.parametrize("d, sign, bound", [(83, -1, 2), (7, -1, 4)])
def test_branch_and_dimension_bound(d, sign, bound):
    theta = canonicalize(0, 1, 1, d)
    system = build_euler_system(theta, expand(theta))
    assert select_branch(system)[0] == sign
    assert linear_diophantine_form(system).evaluate(system.base_point) == 0
    assert rational_dimension_upper_bound(system) == bound
    assert 1 <= full_system_rank(system) <= len(system.variables)


def test_substitution_is_identically_zero(sqrt7):
    system = build_euler_system(sqrt7, expand(sqrt7))
    assert substitution_residual(system).is_zero


def test_euler_report(sqrt7):
    report = euler_report(sqrt7, expand(sqrt7))
    assert report.branch == -1
    assert report.substitution_zero
    assert report.rational_dimension_upper_bound == 4
    assert report.system.continuant_values()[:2] == [14, 3]


@pytest.mark.parametrize("entry", [e for e in TABLE1 if len(e.period) <= 6], ids=lambda e: f"p{e.p}")
def test_table_primes_coherent(entry):
    """Test branch sign (-1)^n and the vanishing substitution for short periods."""
    theta = canonicalize(0, 1, 1, entry.p)
    report = euler_report(theta, expand(theta))
    assert report.branch == (-1) ** report.system.index
    assert report.substitution_zero
    assert report.rational_dimension_upper_bound >= 1
    complexity = arithmetic_complexity(theta, SearchConfig(window_max=5000, workers=1))
    assert report.rational_dimension_upper_bound >= complexity.c


@pytest.mark.slow
@pytest.mark.parametrize("entry", [e for e in TABLE1 if len(e.period) > 6], ids=lambda e: f"p{e.p}")
def test_table_primes_coherent_long_periods(entry):
    theta = canonicalize(0, 1, 1, entry.p)
    report = euler_report(theta, expand(theta))
    assert report.branch == (-1) ** report.system.index
    assert report.substitution_zero
    assert report.rational_dimension_upper_bound >= arithmetic_complexity(theta, SearchConfig()).c


def test_integer_polynomial_gradient():
    poly = IntegerPolynomial.from_dict(["x", "y"], {(2, 1): 3, (0, 1): -1, (0, 0): 5})
    assert poly.evaluate([2, 3]) == 3 * 4 * 3 - 3 + 5
    assert poly.gradient([2, 3]) == [3 * 2 * 2 * 3, 3 * 4 - 1]
    assert IntegerPolynomial.from_poly(poly.to_poly()) == poly
    with pytest.raises(ValueError):
        poly.evaluate([1])
