"""Cayley (di)graphs on finite abelian groups: automorphism census tools."""

from ._cayleycensus import (
    DEFAULT_SEED,
    CheckFailureError,
    Group,
    InvalidInputError,
    ResourceLimitError,
    __version__,
    aut_order,
    bounds,
    canonical_form,
    census,
    classify,
    count_inverse_closed,
    make_group,
    sample,
    unlabeled,
)

__all__ = [
    "DEFAULT_SEED",
    "CheckFailureError",
    "Group",
    "InvalidInputError",
    "ResourceLimitError",
    "__version__",
    "aut_order",
    "bounds",
    "canonical_form",
    "census",
    "classify",
    "count_inverse_closed",
    "make_group",
    "sample",
    "unlabeled",
]
