"""Noncrossing partitions, T_p maps over multimatrix algebras and free wreath product fusion rules."""

from ._core import (
    Algebra,
    DomainError,
    Error,
    FileError,
    Group,
    ParseError,
    Partition,
    PreconditionError,
    ShapeError,
    SizeLimitError,
    ValidationError,
    a_rep_trivial_multiplicity,
    adjoint,
    build_map,
    catalan,
    compose,
    decorated_hom_dimension,
    dimension,
    enumerate,
    free_product_fusion,
    fusion_product,
    gram_rank,
    tensor,
    verify_composition,
)

__all__ = [
    "Algebra",
    "DomainError",
    "Error",
    "FileError",
    "Group",
    "ParseError",
    "Partition",
    "PreconditionError",
    "ShapeError",
    "SizeLimitError",
    "ValidationError",
    "a_rep_trivial_multiplicity",
    "adjoint",
    "build_map",
    "catalan",
    "compose",
    "decorated_hom_dimension",
    "dimension",
    "enumerate",
    "free_product_fusion",
    "fusion_product",
    "gram_rank",
    "tensor",
    "verify_composition",
]
