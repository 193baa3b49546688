"""Finite Krasner (m,n)-hyperrings: validation, hyperideals, classifiers."""

from ._core import (
    HyperringError,
    ImproperIdealError,
    NonTotalTableError,
    NotAHyperidealError,
    ParseError,
    PreconditionError,
    UnknownLabelError,
    ValidationFailedError,
    Hyperring,
    builtin,
    builtin_corpus,
    classify,
    hyperideals,
    is_hyperideal,
    load_document,
    parse_document,
    product,
    quotient,
    radical,
    run_theorems,
    save_document,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
