"""Tests for canonical quadratic irrationalities."""
import pytest
from pydantic import ValidationError

from torusrank.cfrac.surd import (
    Surd,
    canonicalize,
    from_state,
    is_square_free,
    one_minus,
    square_free_decomposition,
)
from torusrank.errors import NegativeIrrationalPart, NotSquareFree, TorusRankValidationError, ZeroDenominator
from torusrank.models.surd import QuadraticIrrational


def test_canonicalize_reduces_gcd():
    """Test that common factors of a, b, c are removed."""
    theta = canonicalize(2, 2, 4, 5)
    assert theta.key == (1, 1, 2, 5, 0)
    assert str(theta) == "(1+sqrt(5))/2"


def test_canonicalize_negative_denominator():
    """Test that a negative c is absorbed by negating a, b and c."""
    theta = canonicalize(1, -1, -2, 5)
    assert (theta.a, theta.b, theta.c) == (-1, 1, 2)


def test_canonicalize_pure_surd(sqrt7):
    assert sqrt7.is_pure_surd
    assert sqrt7.D == 7
    assert str(sqrt7) == "sqrt(7)"


def test_canonicalize_errors():
    with pytest.raises(ZeroDenominator):
        canonicalize(1, 1, 0, 5)
    with pytest.raises(NotSquareFree) as exc:
        canonicalize(0, 1, 1, 12)
    assert exc.value.code == "NOT_SQUARE_FREE"
    assert exc.value.details["square_factor"] == 2
    with pytest.raises(NegativeIrrationalPart):
        canonicalize(0, -1, 1, 5)
    with pytest.raises(TorusRankValidationError):
        canonicalize(1, 0, 1, 5)


def test_model_rejects_non_canonical():
    with pytest.raises(ValidationError):
        QuadraticIrrational(a=2, b=2, c=2, d=5)
    with pytest.raises(ValidationError):
        QuadraticIrrational(a=0, b=1, c=1, d=9)


def test_square_free_helpers():
    assert is_square_free(30)
    assert not is_square_free(50)
    assert square_free_decomposition(72) == (6, 2)
    assert square_free_decomposition(7) == (1, 7)


def test_square_free_large_radicand():
    """Test the check on a 64-bit radicand."""
    assert is_square_free(2**61 - 1)
    assert not is_square_free(3 * 1000003 ** 2)


def test_one_minus_flips_branch(golden_mean):
    flipped = one_minus(golden_mean)
    assert flipped.key == (1, 1, 2, 5, 1)
    assert flipped.value_float() == pytest.approx(1 - golden_mean.value_float())


def test_from_state_scaled_radicand():
    """Test (P + sqrt(f^2 d))/Q is brought back to radicand d."""
    theta = from_state(2, 4, 4 * 7, 7)
    assert theta.key == (1, 1, 2, 7, 0)
    assert from_state(2, -4, 28, 7).key == (-1, 1, 2, 7, 1)


def test_surd_equality_without_factoring():
    assert Surd.quotient(6, 28, 2) == Surd.of(canonicalize(3, 1, 1, 7))
    assert Surd.quotient(6, 28, 2) != Surd.of(canonicalize(3, 1, 1, 7, conjugate=True))
    assert Surd.quotient(6, 28, 2) != Surd.of(canonicalize(3, 1, 1, 6))
