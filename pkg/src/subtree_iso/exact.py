"""Exact comparisons against powers with fractional exponents.

Bounds such as ``5^(n/4)`` or ``3 * 2^(n/2 - 1)`` are irrational for most
``n``; both sides are raised to a power that clears the fraction and compared
as rationals, so no verdict ever depends on floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


def _pow(base: int, e: int) -> Fraction:
    return Fraction(base) ** e


def le_pow5_quarter(x: Number, e: int) -> bool:
    """``x <= 5^(e/4)``."""
    x = Fraction(x)
    return x <= 0 or x ** 4 <= _pow(5, e)


def lt_pow5_quarter(x: Number, e: int) -> bool:
    """``x < 5^(e/4)``."""
    x = Fraction(x)
    return x < 0 or x ** 4 < _pow(5, e)


def le_pow5_quarter_minus1(x: Number, n: int) -> bool:
    """``x <= 5^(n/4) - 1``, the auxiliary inequality."""
    return le_pow5_quarter(Fraction(x) + 1, n)


def ge_lower_bound(s: Number, n: int) -> bool:
    """``s >= 2 * 5^(n/4 - 2)``."""
    half = Fraction(s) / 2
    return half >= 0 and half ** 4 >= _pow(5, n - 8)


def le_centroid_bound(x: Number, n: int) -> bool:
    """``x <= 3 * 2^(n/2 - 1)``."""
    x = Fraction(x)
    return x <= 0 or 4 * x * x <= 9 * _pow(2, n)


def le_r_plus_centroid(s: Number, r: Number, n: int) -> bool:
    """``s <= r + 3 * 2^(n/2 - 1)``."""
    return le_centroid_bound(Fraction(s) - Fraction(r), n)


def lower_bound_float(n: int) -> float:
    return 2 * 5 ** (n / 4 - 2)


def centroid_bound_float(n: int) -> float:
    return 3 * 2 ** (n / 2 - 1)


def upper_bound_float(n: int) -> float:
    return 5 ** (n / 4)
