"""Finite T0 spaces: cores, order complexes, fundamental groups and minimal models."""

from ._finito import (
    FinitoError,
    Poset,
    bipartite_model,
    count_posets,
    mccord_check,
    minimal_wedge_size,
    minimal_wedge_size_closed_form,
    nh_suspension,
    sphere_model,
    verify_sphere_theorem,
    wedge_models,
)

__all__ = [
    "FinitoError",
    "Poset",
    "bipartite_model",
    "count_posets",
    "mccord_check",
    "minimal_wedge_size",
    "minimal_wedge_size_closed_form",
    "nh_suspension",
    "sphere_model",
    "verify_sphere_theorem",
    "wedge_models",
]
