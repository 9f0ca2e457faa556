"""Binary delta-matroids, ribbon graphs, Vassiliev moves, and Hopf algebras."""

from .core import (
    CanonicalCode,
    ElementRole,
    SetSystem,
    canonical_form,
    contract,
    delete,
    is_delta_matroid,
    is_even,
    lookup,
    make_set_system,
    named_catalog,
    product,
    restrict,
    twist,
    unit,
)

__all__ = [
    "CanonicalCode",
    "ElementRole",
    "SetSystem",
    "canonical_form",
    "contract",
    "delete",
    "is_delta_matroid",
    "is_even",
    "lookup",
    "make_set_system",
    "named_catalog",
    "product",
    "restrict",
    "twist",
    "unit",
]
