"""Exact rational scalars and their wire format.

The base scalar everywhere is `fractions.Fraction`, which already stores
values in lowest terms with a positive denominator and never rounds.  This
module pins the textual grammar used by every external interface: decimal-free
literals ``p`` or ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ValidationError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal-free rational literal ``p`` or ``p/q``."""
    if not isinstance(text, str):
        raise ValidationError(f"rational literal must be a string, got {text!r}")
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValidationError(f"not a rational literal 'p' or 'p/q': {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Render exactly, as ``p`` or ``p/q``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
