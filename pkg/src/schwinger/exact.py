"""Small exact-arithmetic helpers shared by the carrier-space modules."""

from fractions import Fraction
from math import isqrt


def exact_sqrt(value: Fraction | int) -> Fraction:
    """Square root of a perfect-square rational.

    Raises ValueError when the value is negative or not a perfect square;
    callers rely on this to keep every computation inside the rationals.
    """
    q = Fraction(value)
    if q < 0:
        raise ValueError(f"{q} is negative")
    num = isqrt(q.numerator)
    den = isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise ValueError(f"{q} is not a perfect square")
    return Fraction(num, den)
