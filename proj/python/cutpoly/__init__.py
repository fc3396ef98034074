"""Cut polytope skeletons of small graphs."""

from ._cutpoly import (
    CutpolyError,
    Graph,
    Skeleton,
    bounds,
    brm,
    brm_star,
    certify,
    classify,
    clique_construct,
    clique_number,
    color,
    components,
    cut_set,
    diameter,
    generate,
    is_adjacent,
    maxcut,
    metrics,
    report,
    skeleton,
    witness,
)

__all__ = [
    "CutpolyError",
    "Graph",
    "Skeleton",
    "bounds",
    "brm",
    "brm_star",
    "certify",
    "classify",
    "clique_construct",
    "clique_number",
    "color",
    "components",
    "cut_set",
    "diameter",
    "generate",
    "is_adjacent",
    "maxcut",
    "metrics",
    "report",
    "skeleton",
    "witness",
]
