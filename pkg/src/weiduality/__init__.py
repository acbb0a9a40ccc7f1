"""Demi-matroids and Wei-type duality for matroids, graphs, transversals and linear codes."""

from .core import (
    DemiMatroid,
    DualityReport,
    FeatureSets,
    GroundSet,
    PartitionReport,
    WeightProfile,
    audit,
    build_demimatroid,
    dual,
    feature_sets,
    profiles,
    singleton_check,
    supplement,
    verify_wei,
)
from .errors import (
    CapExceeded,
    DViolation,
    InputError,
    InternalError,
    RViolation,
    SizeError,
    WeiDualityError,
)
from .matroid import (
    Matroid,
    circuits,
    cocircuits,
    dual_matroid,
    f_coefficients,
    matroid_from_bases,
    min_irredundant_union,
    st_sets,
    to_demimatroid,
    uniform_matroid,
    vamos,
)

__version__ = "0.1.0"
