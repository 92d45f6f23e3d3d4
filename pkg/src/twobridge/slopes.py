"""Exact arithmetic on Dehn surgery slopes.

A slope is a primitive fraction p/q in the meridian-longitude basis on the
peripheral torus of a knot.  The meridian is 1/0, the zero slope is 0/1.
Everything here is plain integer arithmetic; there are no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Slope:
    """A normalized slope num/den with den >= 0 and gcd(|num|, den) = 1.

    Build these with :func:`make_slope` or :func:`parse_slope`; the raw
    constructor does not normalize.
    """

    num: int
    den: int

    def __str__(self):
        return f"{self.num}/{self.den}"

    def __neg__(self):
        return make_slope(-self.num, self.den)


MERIDIAN = Slope(1, 0)
ZERO_SLOPE = Slope(0, 1)


def make_slope(num: int, den: int = 1) -> Slope:
    """Normalize (num, den) to a Slope.

    The sign lives on the numerator, common factors are reduced out, and
    any n/0 collapses to the meridian 1/0.  (0, 0) is ill-formed.
    """
    if num == 0 and den == 0:
        raise ValueError("slope 0/0 is ill-formed")
    if den == 0:
        return MERIDIAN
    if den < 0:
        num, den = -num, -den
    g = math.gcd(abs(num), den)
    return Slope(num // g, den // g)


def parse_slope(text: str) -> Slope:
    """Parse "p/q" (or a bare integer "n", meaning n/1)."""
    text = text.strip()
    try:
        if "/" in text:
            a, b = text.split("/")
            return make_slope(int(a), int(b))
        return make_slope(int(text), 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse slope {text!r}: expected p/q or an integer") from exc


def is_meridian(s: Slope) -> bool:
    return s.den == 0


def distance(a: Slope, b: Slope) -> int:
    """Minimal geometric intersection number |p*s - q*r| of p/q and r/s."""
    return abs(a.num * b.den - a.den * b.num)


def has_even_numerator(s: Slope) -> bool:
    """True iff the numerator is even (0 counts as even)."""
    return s.num % 2 == 0
