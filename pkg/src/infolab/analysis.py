"""Inequality verdicts, binary entropy change, and exhaustive grid search.

The search enumerates every m-by-n joint whose cells are multiples of a
rational step, checks the averaged inequality H_x(y) <= H(y) on each, and
collects the (joint, row) pairs whose single-row conditional entropy is
larger than H(y).
"""

from __future__ import annotations

import enum
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .dist import Axis, Dist, JointDist, conditional_slice, marginal
from .entropy import (
    binary_entropy,
    conditional_entropy_avg,
    joint_entropy,
    shannon_entropy,
)
from .errors import StepInvalid, TooLarge

__all__ = [
    "TOL",
    "Change",
    "ChangeVerdict",
    "SearchCertificate",
    "SearchHit",
    "SearchResult",
    "Verdict",
    "check_all",
    "check_chain_rule",
    "check_conditioning_reduces_avg",
    "check_subadditivity",
    "compositions",
    "entropy_change_verdict",
    "grid_joints",
    "is_independent",
    "random_joint",
    "search_pointwise_increase",
]

TOL = 1e-9
MAX_CELLS = 6
MAX_JOINTS = 250_000


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking ``lhs <= rhs`` (in bits) at tolerance TOL."""

    claim: str
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs + TOL

    @property
    def equality(self) -> bool:
        return abs(self.slack) < TOL


def check_chain_rule(joint: JointDist) -> Verdict:
    """H(x,y) against H(x) + H_x(y); these should always be equal."""
    hx = shannon_entropy(marginal(joint, Axis.X))
    return Verdict(
        "chain_rule", joint_entropy(joint), hx + conditional_entropy_avg(joint)
    )


def check_subadditivity(joint: JointDist) -> Verdict:
    hx = shannon_entropy(marginal(joint, Axis.X))
    hy = shannon_entropy(marginal(joint, Axis.Y))
    return Verdict("subadditivity", joint_entropy(joint), hx + hy)


def check_conditioning_reduces_avg(joint: JointDist) -> Verdict:
    return Verdict(
        "conditioning_reduces_avg",
        conditional_entropy_avg(joint),
        shannon_entropy(marginal(joint, Axis.Y)),
    )


def check_all(joint: JointDist) -> tuple[Verdict, Verdict, Verdict]:
    return (
        check_chain_rule(joint),
        check_subadditivity(joint),
        check_conditioning_reduces_avg(joint),
    )


def is_independent(joint: JointDist) -> bool:
    px = marginal(joint, Axis.X)
    py = marginal(joint, Axis.Y)
    return all(
        c == px[i] * py[j]
        for i, row in enumerate(joint.cells)
        for j, c in enumerate(row)
    )


class Change(enum.Enum):
    INCREASED = "Increased"
    DECREASED = "Decreased"
    UNCHANGED = "Unchanged"


@dataclass(frozen=True)
class ChangeVerdict:
    change: Change
    prior_entropy: float
    posterior_entropy: float


def entropy_change_verdict(prior: Fraction, posterior: Fraction) -> ChangeVerdict:
    """Compare the binary entropies of two event probabilities."""
    h0 = binary_entropy(prior)
    h1 = binary_entropy(posterior)
    if abs(h1 - h0) < TOL:
        change = Change.UNCHANGED
    elif h1 > h0:
        change = Change.INCREASED
    else:
        change = Change.DECREASED
    return ChangeVerdict(change, h0, h1)


# -- grid search ------------------------------------------------------------


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of ``parts`` nonnegative ints summing to ``total``.

    Tuples come out in lexicographic order.
    """
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def _grid_size(rows: int, cols: int, step: Fraction) -> tuple[int, int]:
    if rows < 1 or cols < 1:
        raise TooLarge(f"shape {rows}x{cols} is empty")
    if step <= 0 or step > 1 or (1 / step).denominator != 1:
        raise StepInvalid(f"1/step must be a positive integer, got step={step}")
    k = int(1 / step)
    parts = rows * cols
    if parts > MAX_CELLS:
        raise TooLarge(f"{rows}x{cols} has {parts} cells; limit is {MAX_CELLS}")
    count = comb(k + parts - 1, parts - 1)
    if count > MAX_JOINTS:
        raise TooLarge(f"{count} grid points exceed the limit of {MAX_JOINTS}")
    return k, count


def grid_joints(rows: int, cols: int, step: Fraction) -> Iterator[JointDist]:
    """Every rows x cols joint with cells in {0, step, ..., 1}, in lex order."""
    k, _ = _grid_size(rows, cols, Fraction(step))
    for comp in compositions(k, rows * cols):
        cells = [Fraction(c, k) for c in comp]
        yield JointDist(
            tuple(tuple(cells[r * cols:(r + 1) * cols]) for r in range(rows))
        )


@dataclass(frozen=True)
class SearchHit:
    joint: JointDist
    row: int
    pointwise: float
    marginal_entropy: float

    @property
    def excess(self) -> float:
        return self.pointwise - self.marginal_entropy


@dataclass
class SearchCertificate:
    """Tally of the Shannon inequalities over every joint examined."""

    joints_checked: int = 0
    avg_violations: int = 0
    chain_rule_violations: int = 0
    subadditivity_violations: int = 0
    random_joints_checked: int = 0
    seed: int | None = None
    violators: list[JointDist] = field(default_factory=list)

    def record(self, joint: JointDist) -> None:
        chain, sub, avg = check_all(joint)
        failed = False
        if not chain.equality:
            self.chain_rule_violations += 1
            failed = True
        if not sub.holds:
            self.subadditivity_violations += 1
            failed = True
        if not avg.holds:
            self.avg_violations += 1
            failed = True
        if failed:
            self.violators.append(joint)


@dataclass(frozen=True)
class SearchResult:
    rows: int
    cols: int
    step: Fraction
    hits: tuple[SearchHit, ...]
    certificate: SearchCertificate


def _hits_for(joint: JointDist) -> list[SearchHit]:
    hy = shannon_entropy(marginal(joint, Axis.Y))
    hits = []
    for i in range(joint.shape[0]):
        if joint.row_mass(i) == 0:
            continue
        h = shannon_entropy(conditional_slice(joint, i))
        if h - hy > TOL:
            hits.append(SearchHit(joint, i, h, hy))
    return hits


def search_pointwise_increase(
    rows: int,
    cols: int,
    step: Fraction,
    samples: int = 0,
    seed: int = 0,
) -> SearchResult:
    """Enumerate the step grid and return every pointwise-increase hit.

    With ``samples > 0`` the certificate additionally covers that many
    seeded random joints of the same shape (they contribute no hits).
    """
    step = Fraction(step)
    _grid_size(rows, cols, step)
    cert = SearchCertificate(seed=seed)
    hits: list[SearchHit] = []
    for joint in grid_joints(rows, cols, step):
        cert.joints_checked += 1
        cert.record(joint)
        hits.extend(_hits_for(joint))
    rng = random.Random(seed)
    for _ in range(samples):
        cert.random_joints_checked += 1
        cert.record(random_joint(rows, cols, rng))
    hits.sort(key=lambda h: (h.joint.flat(), h.row))
    return SearchResult(rows, cols, step, tuple(hits), cert)


# -- random joints ------------------------------------------------------------

RANDOM_RESOLUTION = 1 << 24


def random_simplex(k: int, rng: random.Random,
                   resolution: int = RANDOM_RESOLUTION) -> tuple[Fraction, ...]:
    """Symmetric Dirichlet(1) draw rounded onto the grid 1/resolution.

    Exponential draws are normalized in floating point, then converted to
    integer counts by largest remainder so the result sums exactly to 1.
    """
    draws = [rng.expovariate(1.0) for _ in range(k)]
    total = sum(draws)
    scaled = [d / total * resolution for d in draws]
    counts = [int(s) for s in scaled]
    short = resolution - sum(counts)
    order = sorted(range(k), key=lambda i: (counts[i] - scaled[i], i))
    for i in order[:short]:
        counts[i] += 1
    return tuple(Fraction(c, resolution) for c in counts)


def random_joint(rows: int, cols: int, rng: random.Random) -> JointDist:
    flat = random_simplex(rows * cols, rng)
    return JointDist(
        tuple(tuple(flat[r * cols:(r + 1) * cols]) for r in range(rows))
    )


def random_dist(k: int, rng: random.Random) -> Dist:
    return Dist(random_simplex(k, rng))
