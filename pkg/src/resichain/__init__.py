"""Finite idempotent residuated chains: construction, decomposition,
morphism search, amalgamation, and the sixty-class catalogue."""

from .chain import (
    ELL,
    LEFT,
    R,
    RIGHT,
    STAR,
    TRIVIAL,
    ChainPredicates,
    FiniteChain,
    canonical_signature,
    chain_from_json,
    derived,
    enumerate_chains,
    enumeration_cap,
    is_subuniverse,
    iso_equal,
    predicates,
    residual,
    restrict_to,
    signature_hex,
    subalgebra_generated,
    validate,
)
from .constructors import NestedSumDescriptor, com, go, nested_sum
from .morphisms import (
    ChainMap,
    Congruence,
    congruence_from_kernel,
    congruences,
    embeds,
    enumerate_embeddings,
    enumerate_homomorphisms,
    identity_map,
    is_embedding,
    is_homomorphism,
    kernel_of,
    lift_nested_embedding,
    quotient,
    subcover_injectivity,
)
from .decomposition import (
    DecompositionSignature,
    count_chains,
    decompose,
    recompose,
    skeleton_blocks,
    sugihara_skeleton,
)
from .words import (
    FiniteSupport,
    FiniteWord,
    MinimalityVerdict,
    Periodic,
    is_minimal,
    is_subword,
    parse_word,
    preorder_leq,
)
from .zchain import (
    ASAlgebra,
    ASElement,
    UNIT,
    as_leq,
    as_mult,
    as_residual,
    as_unary,
    generated_reach,
    parse_element,
    window_residual_oracle,
)
from .amalgamation import (
    AmalgamResult,
    BoundExhausted,
    Refuted,
    Span,
    amalgamate_components,
    find_amalgam,
    merge_nested_span,
    span_from_json,
    verify_amalgam,
)
from .classification import (
    CanonicalClass,
    ChainClass,
    HasAP,
    NoAP,
    OMEGA,
    RuleViolation,
    all_sixty,
    ap_verdict,
    class_members,
    class_signatures,
    classify,
    closure_rule_violations,
    find_refuting_span,
    hs_closure,
    member_of,
    parse_class,
    sig_in_class,
)
from .pointed import (
    CONDITIONS,
    PointedChain,
    condition_of,
    cross_embedding_count,
    enumerate_pointed_embeddings,
    generated_pointed_subalgebra,
    partition,
    pointed_congruences,
    pointed_decompose,
    pointed_from_json,
    pointed_pool,
    seed_algebra,
)
from . import errors
from .errors import (
    ComponentNotEmbedding,
    ConditionIsOneA,
    InvalidChainError,
    InvalidSpan,
    NoSubcover,
    NotAdmissible,
    NotCommutative,
    NotHSClosed,
    NotIdempotent,
    ResichainError,
    ShapeMismatch,
    SharedOrderConflict,
    SizeTooLarge,
    StartIsUnit,
    TopNotPreserved,
    Violation,
)

__version__ = "0.1.0"
