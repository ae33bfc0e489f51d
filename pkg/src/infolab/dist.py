"""Exact finite distributions and two-variable joint distributions.

Probabilities are :class:`fractions.Fraction` values throughout, so "sums
to one" is an equality test rather than a tolerance check.

>>> t = validate_joint([["0.2", "0.3"], ["0.1", "0.4"]])
>>> marginal(t, Axis.Y).weights
(Fraction(3, 10), Fraction(7, 10))
>>> conditional_slice(t, 0).weights
(Fraction(2, 5), Fraction(3, 5))
"""

from __future__ import annotations

import enum
import numbers
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

from .errors import (
    EmptyGrid,
    LengthMismatch,
    MassMismatch,
    NegativeEntry,
    ParseError,
    RaggedGrid,
    ZeroMarginal,
)

__all__ = [
    "Axis",
    "Dist",
    "JointDist",
    "Prob",
    "as_prob",
    "conditional_slice",
    "indicator",
    "marginal",
    "mix_update",
    "product_joint",
    "validate_dist",
    "validate_joint",
]

Prob = Fraction
RationalLike = Union[Fraction, int, str, Decimal, numbers.Rational]


class Axis(enum.Enum):
    X = "x"  # rows
    Y = "y"  # columns


def as_prob(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact Fraction without going through float.

    Accepts ints, Fractions, Decimals and strings such as ``"0.3"``,
    ``"1/5"`` or ``"2.5e-1"``.  Python floats are rejected: ``0.3`` as a
    float is not three tenths.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a probability: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, numbers.Rational)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ParseError(f"not a finite number: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot read {value!r} as a rational") from exc
    if isinstance(value, float):
        raise ParseError(
            f"float {value!r} is inexact; pass a string or Fraction instead"
        )
    raise ParseError(f"unsupported probability type {type(value).__name__}")


def _check_weights(weights: Sequence[Fraction], what: str) -> None:
    for w in weights:
        if w < 0:
            raise NegativeEntry(f"{what} has negative entry {w}")
    total = sum(weights, Fraction(0))
    if total != 1:
        raise MassMismatch(total, what)


@dataclass(frozen=True)
class Dist:
    """A finite distribution: a tuple of Fractions summing exactly to 1."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.weights:
            raise EmptyGrid("distribution needs at least one outcome")
        if not all(type(w) is Fraction for w in self.weights):
            object.__setattr__(
                self, "weights", tuple(as_prob(w) for w in self.weights)
            )
        _check_weights(self.weights, "distribution")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, k: int) -> Fraction:
        return self.weights[k]

    def __iter__(self):
        return iter(self.weights)


@dataclass(frozen=True)
class JointDist:
    """An m-by-n grid of probabilities p(i, j); rows index x, columns y."""

    cells: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise EmptyGrid("joint distribution needs at least one cell")
        n = len(self.cells[0])
        if any(len(row) != n for row in self.cells):
            raise RaggedGrid("rows have differing lengths")
        if not all(type(c) is Fraction for row in self.cells for c in row):
            object.__setattr__(
                self,
                "cells",
                tuple(tuple(as_prob(c) for c in row) for row in self.cells),
            )
        _check_weights([c for row in self.cells for c in row], "grid")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), len(self.cells[0])

    def flat(self) -> tuple[Fraction, ...]:
        """Cells in row-major order."""
        return tuple(c for row in self.cells for c in row)

    def row_mass(self, i: int) -> Fraction:
        return sum(self.cells[i], Fraction(0))


def validate_dist(weights: Iterable[RationalLike]) -> Dist:
    return Dist(tuple(as_prob(w) for w in weights))


def validate_joint(grid: Iterable[Iterable[RationalLike]]) -> JointDist:
    """Check and canonicalize a grid of rationals into a :class:`JointDist`.

    Raises EmptyGrid, RaggedGrid, NegativeEntry or MassMismatch.
    """
    if isinstance(grid, JointDist):
        return grid
    rows = tuple(tuple(as_prob(c) for c in row) for row in grid)
    return JointDist(rows)


def marginal(joint: JointDist, axis: Axis) -> Dist:
    if axis is Axis.X:
        return Dist(tuple(sum(row, Fraction(0)) for row in joint.cells))
    return Dist(tuple(sum(col, Fraction(0)) for col in zip(*joint.cells)))


def conditional_slice(joint: JointDist, i: int) -> Dist:
    """Distribution of y given x = i, i.e. row ``i`` divided by its mass."""
    mass = joint.row_mass(i)
    if mass == 0:
        raise ZeroMarginal(f"row {i} has zero mass; cannot condition on it")
    return Dist(tuple(c / mass for c in joint.cells[i]))


def mix_update(joint: JointDist, q: Dist) -> Dist:
    """Mix the row conditionals of ``joint`` with weights ``q`` over x.

    ``q`` is an arbitrary evidence distribution; passing the x-marginal
    gives back the y-marginal.
    """
    m, n = joint.shape
    if len(q) != m:
        raise LengthMismatch(f"weights have length {len(q)}, joint has {m} rows")
    out = [Fraction(0)] * n
    for i, w in enumerate(q):
        if w == 0:
            continue
        row = conditional_slice(joint, i)
        for j in range(n):
            out[j] += w * row[j]
    return Dist(tuple(out))


def indicator(k: int, i: int) -> Dist:
    """Point mass on outcome ``i`` of ``k``."""
    return Dist(tuple(Fraction(int(j == i)) for j in range(k)))


def product_joint(px: Dist, py: Dist) -> JointDist:
    """Independent joint with cells p(i) * p(j)."""
    return JointDist(tuple(tuple(a * b for b in py) for a in px))
