"""Scalar backends shared by every module.

Two kinds of scalar flow through the library: exact rationals
(fractions.Fraction, arbitrary precision) and Python floats.  Integers
are promoted to Fraction on entry so that division never silently
produces a float on the exact path.  A value is "exact" when it is a
Fraction; computations stay exact as long as every input is.
"""

from fractions import Fraction

Scalar = Fraction | float


def coerce(value) -> Scalar:
    """Promote ints to Fraction; pass Fraction and float through."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return value
    raise TypeError(f"not a scalar: {value!r}")


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def to_float(value) -> float:
    return float(value)


def parse_scalar(text: str) -> Scalar:
    """Parse "n/d" or a plain integer as Fraction, anything else as float.

    >>> parse_scalar("1/5")
    Fraction(1, 5)
    >>> parse_scalar("-3")
    Fraction(-3, 1)
    >>> parse_scalar("0.25")
    0.25
    """
    t = text.strip()
    if "/" in t:
        try:
            return Fraction(t)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {text!r}")
    try:
        return Fraction(int(t))
    except ValueError:
        return float(t)


def format_scalar(value: Scalar) -> str:
    """Emit a string that parse_scalar maps back to an equal value."""
    if isinstance(value, int) and not isinstance(value, bool):
        value = Fraction(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))
