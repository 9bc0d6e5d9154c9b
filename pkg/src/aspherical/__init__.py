"""Symplectically aspherical abelian groups and Lefschetz fibration
presentations: exact integer linear algebra, group homology via Kunneth,
presentation-level fiber sums, and the classification verdict layer."""

from .abhomology import (
    GradedAbelian,
    group_homology,
    group_homology_graded,
    homology_cyclic,
    kunneth,
    real_cohomological_dimension,
    real_cohomology_rank,
    tensor,
    tor,
)
from .asphericity import (
    AsphericityVerdict,
    Reason,
    classify,
    covering_note,
    hopf_obstruction_dim4,
    realizable_dimensions,
)
from .fibersum import (
    NotAspherical,
    SsdData,
    SurfaceFiberedPresentation,
    fiber_sum_with_trivial_bundle,
    presentation_chain_for,
    ssd_quotient,
    witness_presentation,
)
from .fpgroup import (
    GroupHom,
    Presentation,
    abelian_presentation,
    compose,
    direct_product,
    free_group,
    free_product,
    parse_presentation,
    pinch_presentation_map,
    quotient_by_normal_closure,
    render_presentation,
    surface_group,
)
from .lefschetz import (
    HomologyClass,
    MonodromyFactorization,
    VanishingCycle,
    euler_characteristic,
    homology_trivial,
    monodromy_product,
    total_space_pi1,
    twist_matrix,
)
from .word import (
    Generator,
    Word,
    commutator,
    cyclic_reduce,
    exponent_sum,
    invert,
    multiply,
    parse_word,
    render_word,
)
from .zlinalg import (
    FgAbelian,
    IntMatrix,
    SmithDecomposition,
    abelianization,
    cokernel,
    exists_epimorphism,
    induced_matrix,
    is_surjective_onto,
    primary_decomposition,
    rank,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "AsphericityVerdict",
    "FgAbelian",
    "Generator",
    "GradedAbelian",
    "GroupHom",
    "HomologyClass",
    "IntMatrix",
    "MonodromyFactorization",
    "NotAspherical",
    "Presentation",
    "Reason",
    "SmithDecomposition",
    "SsdData",
    "SurfaceFiberedPresentation",
    "VanishingCycle",
    "Word",
    "abelian_presentation",
    "abelianization",
    "classify",
    "cokernel",
    "commutator",
    "compose",
    "covering_note",
    "cyclic_reduce",
    "direct_product",
    "euler_characteristic",
    "exists_epimorphism",
    "exponent_sum",
    "fiber_sum_with_trivial_bundle",
    "free_group",
    "free_product",
    "group_homology",
    "group_homology_graded",
    "homology_cyclic",
    "homology_trivial",
    "hopf_obstruction_dim4",
    "induced_matrix",
    "invert",
    "is_surjective_onto",
    "kunneth",
    "monodromy_product",
    "multiply",
    "parse_presentation",
    "parse_word",
    "pinch_presentation_map",
    "presentation_chain_for",
    "primary_decomposition",
    "quotient_by_normal_closure",
    "rank",
    "real_cohomological_dimension",
    "real_cohomology_rank",
    "realizable_dimensions",
    "render_presentation",
    "render_word",
    "smith_normal_form",
    "ssd_quotient",
    "surface_group",
    "tensor",
    "tor",
    "total_space_pi1",
    "twist_matrix",
    "witness_presentation",
]
