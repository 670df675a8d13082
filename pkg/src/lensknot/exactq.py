"""Exact rational scalars and the bits of elementary number theory the
calculators share.

Every rational quantity in the package (correction terms, Alexander gradings,
tau invariants, Thurston-Bennequin and rotation numbers, Hopf invariants) is a
stdlib `fractions.Fraction`: always in reduced form with positive denominator,
arbitrary precision, structural equality.  No floating point enters any
computation; decimal approximations appear only in human-readable CLI output,
marked as approximate.

Wire format for rationals is the string "num/den" with the denominator always
present: "0/1", "-1/4", "3/4".
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import InvalidInputError

Rat = Fraction

_RAT_RE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


def rat(num: int, den: int = 1) -> Fraction:
    """Exact rational num/den; den must be nonzero."""
    if den == 0:
        raise InvalidInputError("zero denominator")
    return Fraction(num, den)


def parse_rat(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer) into a Fraction."""
    m = _RAT_RE.match(text.strip())
    if not m:
        raise InvalidInputError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InvalidInputError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rat(x: Fraction) -> str:
    """Canonical "num/den" form, denominator always explicit."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def divide(a: Fraction, b: Fraction) -> Fraction:
    """Explicit exact division; division is not exposed anywhere else."""
    if b == 0:
        raise InvalidInputError("division by zero")
    return Fraction(a) / Fraction(b)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with g = gcd(a, b) >= 1 and a*x + b*y = g."""
    if a == 0 and b == 0:
        raise InvalidInputError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
        old_y, y = y, old_y - qt * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def frac_center(a: Fraction) -> Fraction:
    """The representative of a mod 1 in [-1/2, 1/2).

    frac_center(a) - a is an integer, and 1/2 itself maps to -1/2 (the
    interval is half-open on the right).
    """
    a = Fraction(a)
    return a - math.floor(a + Fraction(1, 2))


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)
