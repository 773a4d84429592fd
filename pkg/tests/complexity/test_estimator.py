"""Tests for the arithmetic complexity estimate."""
import pytest

from torusrank.cfrac.surd import canonicalize
from torusrank.complexity.estimator import arithmetic_complexity
from torusrank.models.complexity import SearchConfig


def test_complexity_sqrt3_small_window():
    report = arithmetic_complexity(canonicalize(0, 1, 1, 3), SearchConfig(window_max=100, workers=1))
    assert report.n == 3
    assert report.independence == 2
    assert report.c == 2
    assert len(report.witness_lines) == 2
    assert report.diagnostics.normal_form
    assert not report.diagnostics.window_below_base


@pytest.mark.parametrize("d", [3, 11, 83])
def test_complexity_two_lines(d):
    report = arithmetic_complexity(canonicalize(0, 1, 1, d), SearchConfig(window_max=5000, workers=1))
    assert report.c == 2
    assert report.fiber_dimension >= 1
    assert report.diagnostics.lines_accepted == len(report.witness_lines)


def test_complexity_sqrt83_second_line():
    """Test the line [g; 9, 2g] through sqrt(83) is fitted with step 9."""
    theta = canonicalize(0, 1, 1, 83)
    wide = arithmetic_complexity(theta, SearchConfig(window_max=4000, workers=1))
    assert wide.c == 2
    line = next(line for line in wide.witness_lines if line.direction == [1, 0, 2])
    assert [m.x for m in line.members] == [83, 2035, 3983]
    assert line.radicand == (83, 164, 81)
    assert [m.t for m in line.members] == [0, 4, 6]


def test_complexity_window_below_base():
    """Test a window under the base radicand is flagged and still scanned."""
    report = arithmetic_complexity(canonicalize(0, 1, 1, 83), SearchConfig(window_max=50, workers=1))
    assert report.diagnostics.window_below_base
    assert report.c == 1
    assert report.diagnostics.shape_matches > 0


def test_complexity_clamped_to_length(golden_mean):
    report = arithmetic_complexity(golden_mean, SearchConfig(window_max=400, workers=1))
    assert report.n == 1
    assert report.c == 1


def test_complexity_with_cache_is_transparent(cache):
    theta = canonicalize(0, 1, 1, 3)
    cfg = SearchConfig(window_max=300, workers=1)
    plain = arithmetic_complexity(theta, cfg)
    first = arithmetic_complexity(theta, cfg, cache=cache)
    second = arithmetic_complexity(theta, cfg, cache=cache)
    assert plain.c == first.c == second.c
    assert plain.members_used == first.members_used == second.members_used
    assert cache.hits > 0
