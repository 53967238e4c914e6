"""
Exact rational helpers.

Vectors over the edges of a graph are plain tuples of Fraction indexed by
edge id. Nothing here ever touches floating point.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import sympy as sp

from common.errors import DimensionMismatch


def to_fraction(value):
    """Coerce an int, Fraction, sympy Rational or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        # construct from string to avoid rounding problems
        return Fraction(value.strip())
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; pass a 'p/q' string")
    return Fraction(value)


def vector(values):
    return tuple(to_fraction(v) for v in values)


def zero_vector(n):
    return (Fraction(0),) * n


def format_rational(q):
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_vector(v):
    return [format_rational(x) for x in v]


def parse_vector(items):
    return vector(items)


def check_dims(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"vectors of length {len(a)} and {len(b)}")


def dot(a, b):
    check_dims(a, b)
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a, b):
    check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    check_dims(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(a, k):
    k = to_fraction(k)
    return tuple(x * k for x in a)


def common_denominator(values):
    return reduce(lcm, (to_fraction(v).denominator for v in values), 1)


def integer_direction(values):
    """Clear denominators and divide by the content: the primitive integer vector on the same ray."""
    values = [to_fraction(v) for v in values]
    d = common_denominator(values)
    ints = [int(v * d) for v in values]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def rational_gcd(values):
    """Largest positive rational q with every value an integer multiple of q (0 for the zero vector)."""
    values = [to_fraction(v) for v in values]
    d = common_denominator(values)
    g = reduce(gcd, (abs(int(v * d)) for v in values), 0)
    return Fraction(g, d)


def is_integral(values):
    return all(to_fraction(v).denominator == 1 for v in values)


def matrix_rank(rows):
    """Exact rank of a list of rational row vectors."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in map(to_fraction, r)]
                      for r in rows]).rank()


def solve_square(matrix, rhs):
    """Solve matrix * x = rhs exactly; matrix is a list of rows, result a tuple of Fractions."""
    m = sp.Matrix([[sp.Rational(to_fraction(x).numerator, to_fraction(x).denominator) for x in row]
                   for row in matrix])
    b = sp.Matrix([sp.Rational(to_fraction(x).numerator, to_fraction(x).denominator) for x in rhs])
    return tuple(to_fraction(x) for x in m.LUsolve(b))
