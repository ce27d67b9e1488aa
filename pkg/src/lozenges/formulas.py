"""Exact evaluators for the closed-form tiling counts.

Every function returns an int or Fraction computed with exact arithmetic;
integer-valued formulas assert exact divisibility instead of rounding.
The stability clause (a = b+1 evaluates as a = b) is applied by each
family evaluator; a > b+1 is rejected.
"""

from __future__ import annotations

import math
from fractions import Fraction


class ParameterRangeError(ValueError):
    """Formula evaluated outside its valid parameter range."""


def hyperfactorial(n: int) -> int:
    """0! * 1! * ... * (n-1)!; empty product for n = 0."""
    if n < 0:
        raise ParameterRangeError(f"hyperfactorial needs n >= 0, got {n}")
    out = 1
    for i in range(1, n):
        out *= math.factorial(i)
    return out


def pochhammer(alpha: Fraction | int, k: int) -> Fraction:
    """Rising factorial (alpha)_k, extended to k <= 0.

    For k < 0 this is 1 / ((alpha-1)(alpha-2)...(alpha+k)); a zero factor
    there raises ZeroDivisionError.
    """
    a = Fraction(alpha)
    if k >= 0:
        out = Fraction(1)
        for t in range(k):
            out *= a + t
        return out
    den = Fraction(1)
    for t in range(1, -k + 1):
        den *= a - t
    if den == 0:
        raise ZeroDivisionError(f"pochhammer({alpha}, {k}) hits a zero factor")
    return 1 / den


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"expected exact division, got {num}/{den}")
    return q


def macmahon(a: int, b: int, c: int) -> int:
    """Tilings of the plain hexagon with side lengths a, b, c, a, b, c."""
    if min(a, b, c) < 0:
        raise ParameterRangeError("hexagon sides must be non-negative")
    num = hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c)
    den = hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c)
    return _exact_div(num, den)


def _check_ab(a: int, b: int, c: int, name: str) -> tuple[int, int]:
    if c < 0 or b < 0 or not 0 <= a <= b + 1:
        raise ParameterRangeError(f"{name} needs 0 <= a <= b+1 and b, c >= 0, got {(a, b, c)}")
    if a == b + 1:
        a = b
    return a, b


def proctor_count(a: int, b: int, c: int) -> int:
    """Tilings of the staircase-cored hexagon, as a double product."""
    a, b = _check_ab(a, b, c, "proctor_count")
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b - a + 2):
            num *= c + i + j - 1
            den *= i + j - 1
        for j in range(b - a + 2, b - a + i + 1):
            num *= 2 * c + i + j - 1
            den *= i + j - 1
    return _exact_div(num, den)


def proctor_count_alt(a: int, b: int, c: int) -> int:
    """Same count in Pochhammer form: prod_i (c+i)_{b-a+1} (2c+b-a+1+i)_{i-1} / (i)_{b-a+i}."""
    a, b = _check_ab(a, b, c, "proctor_count_alt")
    out = Fraction(1)
    for i in range(1, a + 1):
        out *= pochhammer(c + i, b - a + 1) * pochhammer(2 * c + b - a + 1 + i, i - 1)
        out /= pochhammer(i, b - a + i)
    if out.denominator != 1:
        raise ArithmeticError(f"proctor_count_alt({a},{b},{c}) is not integral: {out}")
    return out.numerator


def ciucu_weighted_count(a: int, b: int, c: int) -> Fraction:
    """Weighted count with the west-side vertical lozenges at weight 1/2."""
    a, b = _check_ab(a, b, c, "ciucu_weighted_count")
    out = Fraction(proctor_count(a, b, c), 2**a)
    for i in range(1, a + 1):
        out *= Fraction(2 * c + b - a + i, c + b - a + i)
    return out


def s_count(a: int, b: int, c: int) -> int:
    """Tilings of the dented staircase-cored hexagon S(a, b, c)."""
    a, b = _check_ab(a, b, c, "s_count")
    out = pochhammer(c + a + 2, b - a) * pochhammer(2 * c + b + 3, a - 1)
    out *= (2 * b - a + 2) * c + (b + 1) * (b + 2)
    out /= pochhammer(a + 2, b - a + 1) * pochhammer(b + 3, a - 1)
    for i in range(1, a + 1):
        out *= pochhammer(c + i, b - a + 1) * pochhammer(2 * c + b - a + 1 + i, i - 1)
        out /= pochhammer(i, b - a + 1) * pochhammer(b - a + 1 + i, i - 1)
    if out.denominator != 1:
        raise ArithmeticError(f"s_count({a},{b},{c}) is not integral: {out}")
    return out.numerator


def s_prime_count(a: int, b: int, c: int) -> Fraction:
    """Weighted count for S(a, b, c) with west-side lozenges at weight 1/2.

    The region has a+1 weighted vertical-lozenge positions, so the
    prefactor is 1 / 2^(a+1).  The published statement divides by 2^a
    only, which both counting engines and the a = 0 reduction to the
    weighted staircase-cored hexagon (forcing the north row leaves that
    region at parameters (1, b, c+1)) show to be off by a factor of two.
    """
    a, b = _check_ab(a, b, c, "s_prime_count")
    out = Fraction(s_count(a, b, c), 2 ** (a + 1))
    out *= Fraction(2 * c + b + 2, c + b + 1)
    for i in range(1, a + 1):
        out *= Fraction(2 * c + b + 1 - i, c + b + 1 - i)
    return out


def stdh_count(a: int, b: int, c: int) -> int:
    """Tilings of the symmetric triply-dented hexagon: 2^(a+1) * S'(a,b,c) * S(a,b-1,c)."""
    if b < 1:
        raise ParameterRangeError(f"stdh_count needs b >= 1, got b={b}")
    out = 2 ** (a + 1) * s_prime_count(a, b, c) * s_count(a, b - 1, c)
    if out.denominator != 1:
        raise ArithmeticError(f"stdh_count({a},{b},{c}) is not integral: {out}")
    return out.numerator
