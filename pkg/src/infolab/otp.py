"""One-time pad over Z_s: exact Bayesian posteriors and belief blending.

Encryption is ``c = (m + k) mod s``; for s = 2 that is XOR.  For a fixed
ciphertext each plaintext pairs with exactly one key, so the likelihood of
``c`` given ``m`` is simply the key probability ``p(k = (c - m) mod s)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dist import Dist, JointDist, as_prob
from .entropy import shannon_entropy
from .errors import ImpossibleCiphertext, LengthMismatch, ValidationError

__all__ = [
    "CipherModel",
    "PosteriorReport",
    "SecrecyReport",
    "blend_beliefs",
    "build_model",
    "ciphertext_dist",
    "cipher_joint",
    "perfect_secrecy_check",
    "posterior_plaintext",
]


@dataclass(frozen=True)
class CipherModel:
    plaintext_prior: Dist
    key_dist: Dist

    @property
    def s(self) -> int:
        return len(self.plaintext_prior)

    def key_for(self, m: int, c: int) -> int:
        return (c - m) % self.s

    def encrypt(self, m: int, k: int) -> int:
        return (m + k) % self.s


def build_model(plaintext_prior: Dist, key_dist: Dist) -> CipherModel:
    if len(plaintext_prior) != len(key_dist):
        raise LengthMismatch(
            f"prior has {len(plaintext_prior)} symbols, key has {len(key_dist)}"
        )
    if len(plaintext_prior) < 2:
        raise LengthMismatch("alphabet needs at least two symbols")
    return CipherModel(plaintext_prior, key_dist)


def cipher_joint(model: CipherModel) -> JointDist:
    """Joint over (ciphertext, plaintext): row c, column m."""
    s = model.s
    return JointDist(tuple(
        tuple(
            model.plaintext_prior[m] * model.key_dist[model.key_for(m, c)]
            for m in range(s)
        )
        for c in range(s)
    ))


def ciphertext_dist(model: CipherModel) -> Dist:
    return Dist(tuple(sum(row, Fraction(0)) for row in cipher_joint(model).cells))


@dataclass(frozen=True)
class PosteriorReport:
    ciphertext: int
    posterior: Dist
    prior_entropy: float
    posterior_entropy: float

    @property
    def delta(self) -> float:
        return self.posterior_entropy - self.prior_entropy


def posterior_plaintext(model: CipherModel, c: int) -> PosteriorReport:
    """Exact Bayes: p(m | c) proportional to p(m) p(k = c - m)."""
    if not 0 <= c < model.s:
        raise ValidationError(f"ciphertext {c} outside Z_{model.s}")
    joint_row = [
        model.plaintext_prior[m] * model.key_dist[model.key_for(m, c)]
        for m in range(model.s)
    ]
    evidence = sum(joint_row, Fraction(0))
    if evidence == 0:
        raise ImpossibleCiphertext(f"ciphertext {c} has probability zero")
    posterior = Dist(tuple(p / evidence for p in joint_row))
    return PosteriorReport(
        c,
        posterior,
        shannon_entropy(model.plaintext_prior),
        shannon_entropy(posterior),
    )


@dataclass(frozen=True)
class SecrecyReport:
    secure: bool
    reports: tuple[PosteriorReport, ...]

    def __bool__(self) -> bool:
        return self.secure


def perfect_secrecy_check(model: CipherModel) -> SecrecyReport:
    """True iff every observable ciphertext leaves the prior unchanged."""
    reports = tuple(
        posterior_plaintext(model, c)
        for c, pc in enumerate(ciphertext_dist(model))
        if pc > 0
    )
    secure = all(r.posterior == model.plaintext_prior for r in reports)
    return SecrecyReport(secure, reports)


def blend_beliefs(p: Dist, q: Dist, lam) -> Dist:
    """Componentwise mixture ``(1 - lam) * p + lam * q``.

    Every component lands between the corresponding components of ``p``
    and ``q``.  ``lam`` must be an exact rational in [0, 1].
    """
    lam = as_prob(lam)
    if not 0 <= lam <= 1:
        raise ValidationError(f"blend weight {lam} outside [0, 1]")
    if len(p) != len(q):
        raise LengthMismatch(f"cannot blend lengths {len(p)} and {len(q)}")
    return Dist(tuple((1 - lam) * a + lam * b for a, b in zip(p, q)))


def uniform(s: int) -> Dist:
    return Dist(tuple(Fraction(1, s) for _ in range(s)))
