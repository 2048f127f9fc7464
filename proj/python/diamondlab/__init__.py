"""Python bindings for the diamondlab C++ core."""

import json

from ._core import (
    SCHEMA_VERSION,
    VerificationError,
    affine_group_order,
    center_lemma_check,
    color_interchange,
    diamond_figure,
    export_catalog,
    four_partition,
    group_order,
    is_affine_pattern,
    lines,
    normalize,
    orbit,
    orthogonal,
    pattern_add,
    render,
    skew,
    structure_line,
    symmetry_profile,
)
from ._core import _cut_census, _verify


def verify(target="all", cap=10_000_000):
    """Run the verifiers for `target` and return the report as a dict."""
    return json.loads(_verify(target, cap))


def cut_census(definition):
    """Exact census for one cut definition, as a dict."""
    return json.loads(_cut_census(definition))


__all__ = [
    "SCHEMA_VERSION",
    "VerificationError",
    "affine_group_order",
    "center_lemma_check",
    "color_interchange",
    "cut_census",
    "diamond_figure",
    "export_catalog",
    "four_partition",
    "group_order",
    "is_affine_pattern",
    "lines",
    "normalize",
    "orbit",
    "orthogonal",
    "pattern_add",
    "render",
    "skew",
    "structure_line",
    "symmetry_profile",
    "verify",
]
