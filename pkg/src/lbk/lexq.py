"""Lexicographically ordered rational tuples.

Every quantity in this library that the geometry treats as a "length" or
"offset" is a :class:`LambdaScalar`: a fixed-rank tuple of exact rationals
compared lexicographically.  Rank 1 is plain Q; rank >= 2 adds layers that
behave like infinitesimals relative to the earlier components, which is what
makes the non-Archimedean examples work.  The scalars form a totally ordered
abelian group closed under division by nonzero integers, so midpoints and
exact elimination never leave the domain.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


class LambdaScalar:
    """Element of lex-ordered Q^k.  Immutable and hashable."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Rational]):
        self.parts: tuple[Fraction, ...] = tuple(Fraction(p) for p in parts)
        if not self.parts:
            raise ValueError("scalar needs at least one component")

    @classmethod
    def zero(cls, rank: int) -> "LambdaScalar":
        return cls((Fraction(0),) * rank)

    @classmethod
    def one(cls, rank: int) -> "LambdaScalar":
        return cls((Fraction(1),) + (Fraction(0),) * (rank - 1))

    @classmethod
    def rational(cls, value: Rational, rank: int = 1) -> "LambdaScalar":
        """Embed a rational as (value, 0, ..., 0); the order embedding Q -> Q^k."""
        return cls((Fraction(value),) + (Fraction(0),) * (rank - 1))

    @property
    def rank(self) -> int:
        return len(self.parts)

    def is_zero(self) -> bool:
        return all(p == 0 for p in self.parts)

    def sign(self) -> int:
        for p in self.parts:
            if p > 0:
                return 1
            if p < 0:
                return -1
        return 0

    def _check(self, other: "LambdaScalar") -> None:
        if not isinstance(other, LambdaScalar):
            raise TypeError(f"expected LambdaScalar, got {type(other).__name__}")
        if other.rank != self.rank:
            raise ValueError(f"lex rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "LambdaScalar") -> "LambdaScalar":
        self._check(other)
        return LambdaScalar(a + b for a, b in zip(self.parts, other.parts))

    def __sub__(self, other: "LambdaScalar") -> "LambdaScalar":
        self._check(other)
        return LambdaScalar(a - b for a, b in zip(self.parts, other.parts))

    def __neg__(self) -> "LambdaScalar":
        return LambdaScalar(-a for a in self.parts)

    def __mul__(self, factor: Rational) -> "LambdaScalar":
        if not isinstance(factor, (int, Fraction)):
            return NotImplemented
        return LambdaScalar(a * factor for a in self.parts)

    __rmul__ = __mul__

    def __truediv__(self, divisor: Rational) -> "LambdaScalar":
        if not isinstance(divisor, (int, Fraction)):
            return NotImplemented
        return LambdaScalar(a / Fraction(divisor) for a in self.parts)

    def __abs__(self) -> "LambdaScalar":
        return self if self.sign() >= 0 else -self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LambdaScalar) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "LambdaScalar") -> bool:
        self._check(other)
        return self.parts < other.parts

    def __le__(self, other: "LambdaScalar") -> bool:
        self._check(other)
        return self.parts <= other.parts

    def __gt__(self, other: "LambdaScalar") -> bool:
        self._check(other)
        return self.parts > other.parts

    def __ge__(self, other: "LambdaScalar") -> bool:
        self._check(other)
        return self.parts >= other.parts

    def __str__(self) -> str:
        return "|".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"LambdaScalar({self})"


def compare(a: LambdaScalar, b: LambdaScalar) -> int:
    """Three-way lexicographic comparison: -1, 0 or 1."""
    a._check(b)
    if a.parts < b.parts:
        return -1
    if a.parts > b.parts:
        return 1
    return 0


def abs_val(a: LambdaScalar) -> LambdaScalar:
    """Absolute value: a itself when a >= 0, else -a."""
    return abs(a)
