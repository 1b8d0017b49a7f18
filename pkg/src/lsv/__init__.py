"""Exact root-system combinatorics and a numerical lab for the energy
identities of flag transformations on compact simple Lie groups."""

__version__ = "0.1.0"

from .killing import (
    CanonicalElementSpec,
    GroupClassification,
    KillingGram,
    StabilityVerdict,
    canonical_element,
    canonical_norm_sq,
    classify,
    compute_n_G,
    dual_norm_sq,
    killing_gram,
    n_g_closed_form,
    stability_condition,
)
from .roots import (
    DynkinType,
    Root,
    RootSystem,
    cartan_matrix,
    cominuscule_indices,
    enumerate_roots,
    highest_root,
    n_I,
    parabolic_grading,
    simple_types,
)

__all__ = [
    "__version__",
    "CanonicalElementSpec",
    "DynkinType",
    "GroupClassification",
    "KillingGram",
    "Root",
    "RootSystem",
    "StabilityVerdict",
    "canonical_element",
    "canonical_norm_sq",
    "cartan_matrix",
    "classify",
    "cominuscule_indices",
    "compute_n_G",
    "dual_norm_sq",
    "enumerate_roots",
    "highest_root",
    "killing_gram",
    "n_I",
    "n_g_closed_form",
    "parabolic_grading",
    "simple_types",
    "stability_condition",
]
