"""Exact half-integer arithmetic for hyperbolicity-like quantities.

Every delta-flavored value in this library is a nonnegative half
integer.  Storing twice the value as a plain ``int`` keeps all
comparisons and reductions exact; nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class HalfInt:
    """A nonnegative half integer stored as twice its value."""

    doubled: int

    def __post_init__(self):
        if self.doubled < 0:
            raise ValueError(f"half-integer quantity must be >= 0, got {self.doubled}/2")

    @classmethod
    def from_int(cls, k: int) -> HalfInt:
        return cls(2 * k)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def ceil(self) -> int:
        return (self.doubled + 1) // 2

    def floor(self) -> int:
        return self.doubled // 2

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.doubled})"


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)
