"""
Unit tests for the exact rational helpers.
"""
from fractions import Fraction

import pytest
import sympy as sp

from common.errors import DimensionMismatch
from common.rational import (
    add,
    format_vector,
    integer_direction,
    matrix_rank,
    parse_vector,
    rational_gcd,
    solve_square,
    to_fraction,
)


class TestConversion:
    """Tests for to_fraction and formatting."""

    def test_accepted_types(self):
        """Test that ints, strings, Fractions and sympy rationals convert exactly."""
        assert to_fraction(3) == Fraction(3)
        assert to_fraction(" -1/2 ") == Fraction(-1, 2)
        assert to_fraction(sp.Rational(2, 6)) == Fraction(1, 3)

    def test_float_rejected(self):
        """Test that floats are refused."""
        with pytest.raises(TypeError):
            to_fraction(0.5)

    def test_format_and_parse(self):
        """Test p/q formatting of a vector and parsing it back."""
        v = (Fraction(3, 2), Fraction(-2), Fraction(0))
        assert format_vector(v) == ["3/2", "-2", "0"]
        assert parse_vector(format_vector(v)) == v


class TestArithmetic:
    """Tests for the vector and matrix helpers."""

    def test_length_mismatch(self):
        """Test that adding vectors of different lengths raises DimensionMismatch."""
        with pytest.raises(DimensionMismatch):
            add((1, 2), (1,))

    def test_integer_direction(self):
        """Test that denominators are cleared and the content removed."""
        assert integer_direction((Fraction(1, 2), Fraction(-3, 2), 0)) == (1, -3, 0)
        assert integer_direction((4, 6)) == (2, 3)

    def test_rational_gcd(self):
        """Test the largest rational step dividing every entry."""
        assert rational_gcd((Fraction(1, 2), Fraction(3, 4))) == Fraction(1, 4)
        assert rational_gcd((0, 0)) == 0

    def test_rank_and_solve(self):
        """Test exact rank and a square solve."""
        assert matrix_rank([(1, 2), (2, 4)]) == 1
        assert solve_square([(2, 0), (0, 3)], (1, 1)) == (Fraction(1, 2), Fraction(1, 3))
