"""Finite sets and partial bijections as a category: composition and
inverses, the symmetric inverse monoid, annihilator/kernel/cokernel
structure, short exact sequences with the quotient isomorphism theorems,
Wagner-Preston embeddings, and plain-text formats for all of it."""

from .baer import (
    CokernelPair,
    Factorization,
    KernelPair,
    NormalityReport,
    ProjectionStatus,
    annihilator_projection,
    baer_annihilator_check,
    cokernel,
    factorize,
    kernel,
    kernel_universal_check,
    normal_conormal_check,
    projection_status,
    star,
)
from .core import (
    Classification,
    FinSet,
    InternalContradictionError,
    InvalidSubsetError,
    ObjectMismatchError,
    PBij,
    cancellation_oracle,
    classify,
    compose,
    enumerate_pbij,
    identity,
    inverse,
    partial_identity,
    zero_morphism,
)
from .exact import (
    DiagramInvalidError,
    Grid3x3,
    ShortExactSeq,
    build_noether_grid,
    complete_3x3,
    is_kernel_of,
    make_ses,
    noether_first,
    noether_second,
)
from .laws import LawResult, law_names, run_all, run_law
from .monoid import (
    AxiomReport,
    CayleyTable,
    NotInverseSemigroupError,
    TableShapeError,
    idempotents_of,
    symmetric_inverse_monoid,
    unique_inverse_check,
    verify_inverse_semigroup,
    wagner_preston,
)
from .textio import (
    ParseError,
    format_set,
    parse_cayley,
    parse_grid,
    parse_pbij,
    serialize_cayley,
    serialize_grid,
    serialize_pbij,
)

__all__ = [
    "AxiomReport",
    "CayleyTable",
    "Classification",
    "CokernelPair",
    "DiagramInvalidError",
    "Factorization",
    "FinSet",
    "Grid3x3",
    "InternalContradictionError",
    "InvalidSubsetError",
    "KernelPair",
    "LawResult",
    "NormalityReport",
    "NotInverseSemigroupError",
    "ObjectMismatchError",
    "PBij",
    "ParseError",
    "ProjectionStatus",
    "ShortExactSeq",
    "TableShapeError",
    "annihilator_projection",
    "baer_annihilator_check",
    "build_noether_grid",
    "cancellation_oracle",
    "classify",
    "cokernel",
    "complete_3x3",
    "compose",
    "enumerate_pbij",
    "factorize",
    "format_set",
    "identity",
    "idempotents_of",
    "inverse",
    "is_kernel_of",
    "kernel",
    "kernel_universal_check",
    "law_names",
    "make_ses",
    "noether_first",
    "noether_second",
    "normal_conormal_check",
    "parse_cayley",
    "parse_grid",
    "parse_pbij",
    "partial_identity",
    "projection_status",
    "run_all",
    "run_law",
    "serialize_cayley",
    "serialize_grid",
    "serialize_pbij",
    "star",
    "symmetric_inverse_monoid",
    "unique_inverse_check",
    "verify_inverse_semigroup",
    "wagner_preston",
    "zero_morphism",
]

__version__ = "0.1.0"
