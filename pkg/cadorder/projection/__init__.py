# Projection sets per variable ordering
from cadorder.projection.ordering import VariableOrdering
from cadorder.projection.mccallum import (
    ProjectionSet,
    canonicalize_set,
    mccallum_step,
    full_projection,
)

__all__ = [
    "VariableOrdering",
    "ProjectionSet",
    "canonicalize_set",
    "mccallum_step",
    "full_projection",
]
