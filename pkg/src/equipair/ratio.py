"""Arbitrary-precision rational scalars.

Every coordinate and value in the library is a ``Rat``: gmpy2's mpq when
available (much faster), else fractions.Fraction. Both normalize to lowest
terms with positive denominator and print as ``p/q`` (or ``p`` when q=1),
which is exactly the wire format.
"""

import re

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

_RAT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

ZERO = Rat(0)
ONE = Rat(1)
TWO = Rat(2)
HALF = Rat(1, 2)


def rat(p, q=1):
    return Rat(p, q)


def parse_rat(text):
    """Parse canonical 'p/q' or 'p' (base 10, positive denominator)."""
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Rat(text)


def fmt_rat(x):
    return str(x)


def rat_floor(x):
    """Largest integer <= x."""
    return int(x.numerator // x.denominator)


def rat_ceil(x):
    return -rat_floor(-x)
