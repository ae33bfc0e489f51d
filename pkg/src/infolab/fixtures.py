"""Worked examples embedded so ``reproduce`` needs no input files."""

from fractions import Fraction

from .dist import validate_dist, validate_joint

TABLE_1 = validate_joint([["0.2", "0.3"], ["0.1", "0.4"]])
# evidence that x = 0 occurred
TABLE_1_EVIDENCE = validate_dist(["1", "0"])

EXAMPLE_1_PRIOR = Fraction(1, 100)
EXAMPLE_1_POSTERIORS = tuple(
    Fraction(s) for s in ("0.05", "0.3", "0.5", "0.9", "0.99", "0.995")
)

EXAMPLE_2_PRIOR = validate_dist(["0.9", "0.1"])
EXAMPLE_2_KEY = validate_dist(["1/2", "1/2"])
BIASED_KEY = validate_dist(["0.8", "0.2"])

BLEND_GRID = tuple(Fraction(k, 100) for k in range(1, 101))

__all__ = [
    "BIASED_KEY",
    "BLEND_GRID",
    "EXAMPLE_1_POSTERIORS",
    "EXAMPLE_1_PRIOR",
    "EXAMPLE_2_KEY",
    "EXAMPLE_2_PRIOR",
    "TABLE_1",
    "TABLE_1_EVIDENCE",
]
