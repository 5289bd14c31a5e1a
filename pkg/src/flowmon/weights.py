"""Exact fixed-point edge weights.

A weight is an integer count of millionths of a unit, so sums and
comparisons in the solvers are exact: greedy ties are real ties and
expected values in tests never drift the way binary floats would.
Values like 1.01 or 1.51 are representable exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, ValidationError, WeightOverflowError

SCALE = 10**6
MAX_MICROS = 2**63 - 1

_DECIMAL = re.compile(r"^(\d+)(?:\.(\d{1,6}))?$")


def check_micros(micros: int) -> int:
    """Reject negative or overflowing raw values; never wrap silently."""
    if micros < 0:
        raise ValidationError("weights are non-negative")
    if micros > MAX_MICROS:
        raise WeightOverflowError(f"weight exceeds {MAX_MICROS} millionths")
    return micros


@dataclass(frozen=True, slots=True, order=True)
class Weight:
    micros: int

    def __post_init__(self) -> None:
        check_micros(self.micros)

    @classmethod
    def zero(cls) -> "Weight":
        return cls(0)

    @classmethod
    def from_units(cls, units: int) -> "Weight":
        return cls(units * SCALE)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        m = _DECIMAL.match(text)
        if m is None:
            raise ParseError(
                f"bad weight {text!r}: expected a non-negative decimal"
                " with at most 6 fractional digits"
            )
        whole, frac = m.group(1), m.group(2) or ""
        micros = int(whole) * SCALE + int(frac.ljust(6, "0") or "0")
        return cls(micros)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.micros + other.micros)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.micros - other.micros)

    def __mul__(self, n: int) -> "Weight":
        return Weight(self.micros * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        whole, frac = divmod(self.micros, SCALE)
        if frac == 0:
            return str(whole)
        return f"{whole}.{frac:06d}".rstrip("0")

    def __repr__(self) -> str:
        return f"Weight({str(self)!r})"
