"""Classification of symplectically aspherical abelian groups.

A finitely generated abelian group is symplectically aspherical exactly
when it is Z^2 or has free rank at least 4.  Rank 3 fails because the
real cohomological dimension is 3 (an aspherical symplectic class would
square to zero, forcing a surface, killing H^3); rank 2 with torsion
fails because only the torus survives in dimension 2; finite groups and
Z are ruled out by external input.  On top of the verdict this module
reports the realizable manifold dimensions and whether dimension-4
realizations are forced to have nonzero pi_2 (the Hopf-sequence
comparison of H_3 of the manifold against H_3 of the group).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .abhomology import group_homology, real_cohomological_dimension
from .zlinalg import FgAbelian, exists_epimorphism, rank


class Reason(enum.Enum):
    IS_Z2 = "IsZ2"
    RANK_AT_LEAST_4 = "RankAtLeast4"
    RANK_ZERO_OR_ONE = "RankZeroOrOne"
    RANK_TWO_WITH_TORSION = "RankTwoWithTorsion"
    RANK_THREE = "RankThree"


_ASPHERICAL_REASONS = {Reason.IS_Z2, Reason.RANK_AT_LEAST_4}

CLASS_NOTE_Z2 = "A\\B"
CLASS_NOTE_Z4_Z2 = "B\\A"

COVERING_NOTE_Z4 = (
    "Corollary 5.4: a two-sheeted cover of a manifold realizing Z^4 + Z/2 "
    "is symplectically aspherical with fundamental group Z^4 and pi_2 != 0."
)


@dataclass(frozen=True)
class AsphericityVerdict:
    aspherical: bool
    reason: Reason
    realizable_dims: frozenset[int]
    pi2_forced_nonzero_in_dim4: bool
    class_note: str | None

    def __post_init__(self):
        if self.aspherical != (self.reason in _ASPHERICAL_REASONS):
            raise ValueError("verdict flag contradicts its reason")
        if bool(self.realizable_dims) != self.aspherical:
            raise ValueError("realizable dimensions must be nonempty exactly when aspherical")


def realizable_dimensions(gamma: FgAbelian) -> frozenset[int]:
    """{2} for Z^2; all even 2n with 4 <= 2n <= rank for rank >= 4; else empty."""
    if gamma == FgAbelian(2):
        return frozenset({2})
    m = rank(gamma)
    if m >= 4:
        return frozenset(range(4, m + 1, 2))
    return frozenset()


def hopf_obstruction_dim4(gamma: FgAbelian) -> bool:
    """Whether a closed 4-manifold with this fundamental group and pi_2 = 0
    is impossible.

    With pi_2 = 0 the Hopf sequence forces H_3 of the manifold, which is
    Z^rank by duality and universal coefficients, onto H_3 of the group;
    the obstruction fires when no such epimorphism exists.
    """
    h3 = group_homology(gamma, 3)
    return not exists_epimorphism(FgAbelian(rank(gamma)), h3)


def covering_note(gamma: FgAbelian) -> str | None:
    """The double-cover remark attached to Z^4 reports; pure reporting."""
    if gamma == FgAbelian(4):
        return COVERING_NOTE_Z4
    return None


def classify(gamma: FgAbelian) -> AsphericityVerdict:
    """Apply the classification, evaluating the rank-3 cohomological
    obstruction rather than matching on the rank alone."""
    rcd = real_cohomological_dimension(gamma)
    if gamma == FgAbelian(2):
        reason = Reason.IS_Z2
    elif rcd >= 4:
        reason = Reason.RANK_AT_LEAST_4
    elif rcd == 3:
        reason = Reason.RANK_THREE
    elif rcd == 2:
        reason = Reason.RANK_TWO_WITH_TORSION
    else:
        reason = Reason.RANK_ZERO_OR_ONE
    aspherical = reason in _ASPHERICAL_REASONS
    if gamma == FgAbelian(2):
        class_note = CLASS_NOTE_Z2
    elif gamma == FgAbelian(4, (2,)):
        class_note = CLASS_NOTE_Z4_Z2
    else:
        class_note = None
    return AsphericityVerdict(
        aspherical=aspherical,
        reason=reason,
        realizable_dims=realizable_dimensions(gamma),
        pi2_forced_nonzero_in_dim4=hopf_obstruction_dim4(gamma) if aspherical else False,
        class_note=class_note,
    )
