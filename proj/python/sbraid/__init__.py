"""Singular braid words: normal forms, rewriting, desingularization."""

from ._core import (
    InputError,
    TheoremViolation,
    Word,
    cli,
    closure,
    diamond,
    equal,
    equal_B,
    eta,
    eta2,
    inject,
    normal_form,
    opposite_pairs,
    reduce,
)

__all__ = [
    "InputError",
    "TheoremViolation",
    "Word",
    "cli",
    "closure",
    "diamond",
    "equal",
    "equal_B",
    "eta",
    "eta2",
    "inject",
    "normal_form",
    "opposite_pairs",
    "reduce",
]
