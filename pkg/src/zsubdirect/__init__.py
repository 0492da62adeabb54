"""Finite semigroups, semilinear integer sets, and subdirect products in Z x S."""

from .errors import (
    EmptyGenerators,
    GeneratorsNotInP,
    MalformedTable,
    NotAssociative,
    NotInP,
    NotPMShaped,
    NotRegular,
    NotSameRegularClass,
    RegularSemigroup,
    StructureViolation,
    UnsupportedParams,
    WindowTooSmall,
)
from .green import (
    JDecomposition,
    LKIDecomposition,
    j3_witnesses,
    j_decomposition,
    j_leq,
    lki_decomposition,
)
from .intsets import (
    DOWN,
    GROUP,
    NEG_NUMERICAL,
    POS_NUMERICAL,
    UP,
    ZERO,
    IntSubsemigroupClass,
    ZSet,
    additive_closure,
    classify_closed_zset,
    classify_int_subsemigroup,
    finite_difference,
    minimal_generators,
    windowed_int_closure,
    zset,
    zset_member,
    zset_sum,
    zset_union,
)
from .pm import (
    FINITE,
    INFINITE,
    Certificate,
    MSpec,
    PMProduct,
    build_pm,
    element_order_class,
    noniso_certificate,
    pm_j_related,
    pm_j_witnesses,
    recover_m,
)
from .semigroup import (
    FiniteSemigroup,
    idempotents,
    is_completely_regular,
    is_regular_semigroup,
    n_condition,
    parse_cayley,
    product,
    regular_witness,
    serialize_cayley,
)
from .subdirect import (
    FiberStructure,
    SubdirectDescription,
    Unstabilized,
    fiber_structure,
    finite_generating_set,
    is_subdirect,
    structured_closure,
    verify_generation,
    windowed_closure,
)

__version__ = "0.1.0"
