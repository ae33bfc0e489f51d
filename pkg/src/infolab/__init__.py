"""Exact discrete information-theory toolkit.

Distributions are exact rationals; entropies are floats in bits.
"""

from .analysis import (
    Change,
    Verdict,
    check_chain_rule,
    check_conditioning_reduces_avg,
    check_subadditivity,
    entropy_change_verdict,
    is_independent,
    search_pointwise_increase,
)
from .dist import (
    Axis,
    Dist,
    JointDist,
    conditional_slice,
    marginal,
    mix_update,
    validate_dist,
    validate_joint,
)
from .entropy import (
    conditional_entropy_avg,
    joint_entropy,
    pointwise_conditional_entropy,
    shannon_entropy,
    updated_entropy,
)
from .otp import (
    blend_beliefs,
    build_model,
    ciphertext_dist,
    perfect_secrecy_check,
    posterior_plaintext,
)

__version__ = "0.1.0"
