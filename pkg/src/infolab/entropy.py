"""Entropy functionals in bits.

Inputs are exact; only the logarithms are floating point.  Terms are
summed with :func:`math.fsum`, which rounds the exact sum once, so the
result does not depend on the order of the weights.  Zero weights are
skipped outright (0 log 0 = 0).
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

from .dist import Axis, Dist, JointDist, conditional_slice, marginal, mix_update

__all__ = [
    "BASE",
    "binary_entropy",
    "conditional_entropy_avg",
    "joint_entropy",
    "pointwise_conditional_entropy",
    "shannon_entropy",
    "updated_entropy",
]

BASE = "bits"


def _log2(p: Fraction) -> float:
    if p.denominator < 1 << 1000:
        return math.log2(p)
    return math.log2(p.numerator) - math.log2(p.denominator)


def _plogp(p: Fraction) -> float:
    return float(p) * _log2(p)


def _entropy(weights: Iterable[Fraction]) -> float:
    h = -math.fsum(_plogp(p) for p in weights if p != 0)
    # -fsum of an empty or point-mass sum yields -0.0
    return h if h > 0 else 0.0


def shannon_entropy(d: Dist) -> float:
    return _entropy(d.weights)


def binary_entropy(p: Fraction) -> float:
    """Entropy of the two-outcome distribution (p, 1 - p)."""
    return _entropy((p, 1 - p))


def joint_entropy(joint: JointDist) -> float:
    return _entropy(joint.flat())


def conditional_entropy_avg(joint: JointDist) -> float:
    """H_x(y) = -sum p(i,j) log p_i(j), the mass-weighted row entropy.

    Rows with zero mass contribute nothing.
    """
    terms = []
    for row in joint.cells:
        mass = sum(row, Fraction(0))
        if mass == 0:
            continue
        for c in row:
            if c != 0:
                terms.append(float(c) * _log2(c / mass))
    h = -math.fsum(terms)
    return h if h > 0 else 0.0


def pointwise_conditional_entropy(joint: JointDist, i: int) -> float:
    """Entropy of y given the single observation x = i."""
    return shannon_entropy(conditional_slice(joint, i))


def updated_entropy(joint: JointDist, q: Dist) -> float:
    return shannon_entropy(mix_update(joint, q))


def marginal_entropy(joint: JointDist, axis: Axis) -> float:
    return shannon_entropy(marginal(joint, axis))
