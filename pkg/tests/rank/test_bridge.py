"""Tests for curve descriptors, class numbers, rank reports and dimension groups."""
import math
import random

import pytest
from pydantic import ValidationError

from torusrank.cfrac.expansion import expand
from torusrank.cfrac.surd import canonicalize
from torusrank.errors import BadDiscriminant, InvalidCurveDescriptor, PerfectSquareDiscriminant
from torusrank.models.complexity import SearchConfig
from torusrank.models.rank import GeneratorSet, IrrationalAngle, RationalFamilyCurve, RootOfUnity
from torusrank.rank.bridge import dimension_group_rank, rank_report
from torusrank.rank.classnumber import class_number_imag_quadratic, reduced_forms
from torusrank.rank.curves import cm_curve, eb_expansion_check, explicit_curve, rational_family, theta_of_curve
from torusrank.rank.table1 import TABLE1_PRIMES


@pytest.mark.parametrize("b", range(3, 101))
def test_eb_expansion(b):
    assert eb_expansion_check(b)

def test_theta_of_rational_family():
    assert theta_of_curve(rational_family(3)).key == (3, 1, 2, 5, 0)
    assert theta_of_curve(rational_family(4)).key == (2, 1, 1, 3, 0)
    assert str(expand(theta_of_curve(rational_family(4)))) == "[3; (1,2)]"

def test_curve_descriptor_errors():
    with pytest.raises(InvalidCurveDescriptor):
        rational_family(2)
    with pytest.raises(InvalidCurveDescriptor):
        cm_curve(5)
    with pytest.raises(InvalidCurveDescriptor):
        cm_curve(7, f=2)
    with pytest.raises(PerfectSquareDiscriminant):
        theta_of_curve(RationalFamilyCurve.model_construct(b=2))

def test_theta_of_cm_curve():
    assert theta_of_curve(cm_curve(83)).is_pure_surd
    theta = canonicalize(1, 1, 2, 5)
    assert theta_of_curve(explicit_curve(theta)) == theta

def _count_reduced_forms(p: int) -> int:
    """Primitive reduced forms ax^2 + bxy + cy^2 of discriminant -p, counted by exhaustion."""
    count = 0
    for a in range(1, p + 1):
        for b in range(-a, a + 1):
            if (b * b + p) % (4 * a):
                continue
            c = (b * b + p) // (4 * a)
            if c < a or math.gcd(math.gcd(a, b), c) != 1:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            count += 1
    return count

@pytest.mark.parametrize("p, h", [(3, 1), (7, 1), (11, 1), (23, 3), (47, 5)])
def test_class_numbers(p, h):
    assert _count_reduced_forms(p) == h
    assert class_number_imag_quadratic(p) == h

@pytest.mark.parametrize("p", TABLE1_PRIMES)
def test_class_numbers_match_form_count(p):
    assert class_number_imag_quadratic(p) == _count_reduced_forms(p)

def test_reduced_forms_disc_23():
    assert reduced_forms(-23) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]

def test_class_number_rejects_bad_primes():
    for p in (2, 5, 9, 13, 15):
        with pytest.raises(BadDiscriminant):
            class_number_imag_quadratic(p)

def test_rank_report_rational_family(small_search):
    report = rank_report(rational_family(4), small_search)
    assert report.n == 3
    assert report.rank_bound == 2
    assert 0 <= report.rank_estimate <= report.rank_bound
    assert report.twist_n == 2
    assert report.twist_rank_bound == 1
    assert report.class_number is None

def test_rank_report_b3_twist(small_search):
    """Test the twist of (3 + sqrt(5))/2 is the golden mean with bound 0."""
    report = rank_report(rational_family(3), small_search)
    assert report.rank_bound == 1
    assert report.twist_n == 1
    assert report.twist_rank_estimate == 0
    assert report.twist_rank_bound == 0

def test_rank_report_cm_curve():
    report = rank_report(cm_curve(3), SearchConfig(window_max=100, workers=1))
    assert report.c == 2
    assert report.rank_estimate == 1
    assert report.class_number == 1
    assert report.rank_full == 2
    assert report.twist_rank_bound == 1

def test_rank_report_explicit_reuses_complexity(small_search):
    theta = canonicalize(1, 1, 2, 5)
    report = rank_report(explicit_curve(theta), small_search)
    assert report.twist_c == report.c
    assert report.rank_bound == 0

def test_root_of_unity_validation():
    with pytest.raises(ValidationError):
        RootOfUnity(p=2, q=4)
    with pytest.raises(ValidationError):
        RootOfUnity(p=3, q=2)

def test_dimension_group_rank():
    golden = IrrationalAngle(omega=canonicalize(1, 1, 2, 5))
    assert dimension_group_rank(GeneratorSet(generators=[golden])) == 2
    assert dimension_group_rank(GeneratorSet(generators=[RootOfUnity(p=1, q=3)])) == 1
    assert dimension_group_rank(GeneratorSet(generators=[RootOfUnity(p=1, q=3), golden])) == 2

def test_dimension_group_rank_random():
    rng = random.Random(5)
    for _ in range(50):
        roots = [RootOfUnity(p=1, q=rng.randint(2, 40)) for _ in range(rng.randint(0, 4))]
        angles = [IrrationalAngle(omega=canonicalize(rng.randint(-5, 5), 1, 1, rng.choice([2, 3, 5, 7])))
                  for _ in range(rng.randint(0 if roots else 1, 4))]
        gens = GeneratorSet(generators=roots + angles)
        assert dimension_group_rank(gens) == len(angles) + 1
