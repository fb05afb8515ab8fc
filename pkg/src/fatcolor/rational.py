"""Exact rational helpers.

Values are :class:`fractions.Fraction`, which already keeps a positive
denominator and lowest terms after every operation. This module adds the
pieces the toolkit needs on top: strict construction, a fixed ``num/den``
text form and a parser that refuses decimals.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational is built with denominator zero."""


def make_rational(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` in lowest terms with the sign on the numerator."""
    if isinstance(num, bool) or isinstance(den, bool):
        raise TypeError("numerator and denominator must be integers")
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("numerator and denominator must be integers")
    if den == 0:
        raise ZeroDenominatorError(f"zero denominator in {num}/0")
    return Fraction(num, den)


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero rational")
    return fn(Fraction(a), Fraction(b))


def rat_in_unit_interval(a: Fraction) -> bool:
    return 0 <= a <= 1


def format_rational(a: RationalLike) -> str:
    """Render as ``num/den``, always with a slash (``"0/1"``, ``"2/1"``)."""
    q = to_rational(a)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or a bare integer ``"a"``. Decimals are rejected."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a rational of the form a/b or a: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(num, den)


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")
