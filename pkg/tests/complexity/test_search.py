"""Tests for the window scan, line fitting and independence dimension."""
from fractions import Fraction

import numpy as np
import pytest

from torusrank.cfrac.expansion import expand
from torusrank.cfrac.surd import canonicalize, is_square_free
from torusrank.complexity.estimator import arithmetic_complexity, family_config, is_normal_form
from torusrank.complexity.fitting import fit_lines_through_base, integral_step, interpolate, primitive_direction
from torusrank.complexity.independence import fiber_dimension, independence_dimension
from torusrank.complexity.sieve import square_free_mask, square_free_range
from torusrank.complexity.window import shape_mask, enumerate_window
from torusrank.errors import TorusRankValidationError
from torusrank.models.complexity import SearchConfig, SearchDiagnostics
from torusrank.models.surd import CFExpansion


def _window(d: int, window_max: int, **kwargs):
    theta = canonicalize(0, 1, 1, d)
    cfg = family_config(theta, SearchConfig(window_max=window_max, workers=1, **kwargs))
    return theta, cfg, enumerate_window(cfg, expand(theta))


def test_square_free_sieve():
    assert square_free_range(1, 20).tolist() == [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]
    assert square_free_mask(0, 5).tolist() == [False, True, True, True, False]
    mask = square_free_mask(1000, 3000)
    assert mask.tolist() == [is_square_free(x) for x in range(1000, 3000)]


def test_shape_mask_matches_expansion():
    xs = square_free_range(2, 400)
    mask = shape_mask(xs, 0, 1, 1, False, (1, 2))
    expected = [expand(canonicalize(0, 1, 1, int(x))).shape == (1, 2) for x in xs]
    assert mask.tolist() == expected


def test_shape_mask_object_path():
    """Test radicands past the int64-safe bound use exact Python integers."""
    g = 2**26 + 1
    xs = np.array([g * g + 2, g * g + 1, g * g + 2 * g], dtype=object)
    assert shape_mask(xs, 0, 1, 1, False, (1, 2)).tolist() == [True, False, True]
    assert shape_mask(xs, 0, 1, 1, False, (1, 1)).tolist() == [False, True, False]


def test_window_members_sqrt3():
    _, _, pool = _window(3, 100)
    xs = [theta.d for theta, _ in pool]
    assert xs == sorted(xs)
    assert {3, 6, 11, 15, 35} <= set(xs)
    assert all(exp.shape == (1, 2) for _, exp in pool)


def test_window_members_sqrt7():
    _, _, pool = _window(7, 250)
    xs = {theta.d for theta, _ in pool}
    assert {7, 23, 215} <= xs


def test_window_independent_of_workers():
    theta = canonicalize(0, 1, 1, 3)
    base = expand(theta)
    single = family_config(theta, SearchConfig(window_max=5000, workers=1, chunk_size=1024))
    threaded = single.model_copy(update={"workers": 4})
    assert [t.d for t, _ in enumerate_window(single, base)] == [t.d for t, _ in enumerate_window(threaded, base)]


def test_family_config_rejects_other_constants():
    theta = canonicalize(0, 1, 1, 3)
    with pytest.raises(TorusRankValidationError):
        family_config(theta, SearchConfig(c=2))


def test_primitive_direction():
    assert primitive_direction((-2, 0, -4)) == ((1, 0, 2), -2)
    assert primitive_direction((0, 3, 6)) == ((0, 1, 2), 3)
    with pytest.raises(ValueError):
        primitive_direction((0, 0))


def test_interpolate_and_step():
    assert interpolate(3, (2, 15), (4, 35)) == (Fraction(4), Fraction(1))
    assert integral_step(Fraction(20, 3), Fraction(1)) == 3
    assert integral_step(Fraction(4), Fraction(1)) == 1


def test_fit_lines_sqrt3():
    theta, cfg, pool = _window(3, 100)
    lines = fit_lines_through_base(cfg, theta, expand(theta), pool)
    by_direction = {tuple(line.direction): line for line in lines}
    line = by_direction[(1, 0, 2)]
    assert line.radicand == (3, 4, 1)
    assert [m.x for m in line.members][:3] == [3, 15, 35]
    diagonal = by_direction[(1, 1, 2)]
    assert diagonal.radicand == (3, 2, 1)
    assert 11 in [m.x for m in diagonal.members]
    assert 3 in diagonal.skipped


def _sqrt3_pool(x_at_four: int):
    """Members of sqrt(3)'s line [1 + t; 1, 2 + 2t] at t = 2 and t = 4."""
    return [
        (canonicalize(0, 1, 1, 15), CFExpansion(preperiod=[3], period=[1, 6])),
        (canonicalize(0, 1, 1, x_at_four), CFExpansion(preperiod=[5], period=[1, 10])),
    ]


def test_fit_keeps_line_with_only_non_square_free_gaps():
    theta = canonicalize(0, 1, 1, 3)
    cfg = family_config(theta, SearchConfig(window_max=100, workers=1))
    diagnostics = SearchDiagnostics(window_max=100)
    lines = fit_lines_through_base(cfg, theta, expand(theta), _sqrt3_pool(35), diagnostics)
    assert len(lines) == 1
    assert lines[0].radicand == (3, 4, 1)
    assert lines[0].skipped == [1, 3]
    assert diagnostics.off_line_breaks == 0


def test_fit_drops_line_leaving_its_entries():
    """Test x(t) = 3 + 2t + 2t^2 through 3, 15, 43 is dropped: x(1) = 7 expands as [2; 1,1,1,4]."""
    theta = canonicalize(0, 1, 1, 3)
    cfg = family_config(theta, SearchConfig(window_max=100, workers=1))
    diagnostics = SearchDiagnostics(window_max=100)
    lines = fit_lines_through_base(cfg, theta, expand(theta), _sqrt3_pool(43), diagnostics)
    assert lines == []
    assert diagnostics.off_line_breaks == 1
    assert diagnostics.lines_accepted == 0


def test_witness_lines_have_no_square_free_gaps(sqrt7):
    """Test every in-window parameter between members is a member or skipped."""
    window = 20000
    report = arithmetic_complexity(sqrt7, SearchConfig(window_max=window, workers=1))
    assert report.witness_lines
    for line in report.witness_lines:
        on_line = {member.t for member in line.members}
        for u in range(line.members[0].t, line.members[-1].t + 1):
            x = line.radicand_at(u)
            if u in on_line or x < 2 or x > window:
                continue
            assert not is_square_free(x), (line.direction, u, x)
            assert u in line.skipped


def test_fit_lines_integral_step_sqrt11():
    theta, cfg, pool = _window(11, 300)
    lines = fit_lines_through_base(cfg, theta, expand(theta), pool)
    line = next(line for line in lines if line.direction == [1, 0, 2])
    assert line.radicand == (11, 20, 9)
    assert [(m.t, m.x) for m in line.members] == [(0, 11), (2, 87), (4, 235)]
    assert line.entries_at(2) == [9, 3, 18]


def test_independence_dimension():
    assert independence_dimension((0, 0), [(1, 0), (0, 1), (1, 1)]) == 2
    assert independence_dimension((0, 0), [(1, 1), (2, 2)]) == 1
    assert independence_dimension((0, 0), []) == 0
    assert independence_dimension((0, 0, 0), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3


def test_fiber_dimension_drops_radicand():
    base = (1, 1, 2, 3)
    members = [(3, 1, 6, 15), (3, 3, 6, 11), (2, 2, 4, 6)]
    assert independence_dimension(base, members) == 2
    assert fiber_dimension(base, members, period_end=2) == 2


def test_normal_form(sqrt7, golden_mean):
    assert is_normal_form(expand(sqrt7))
    assert not is_normal_form(expand(golden_mean))
