"""Fractional supersymmetric quantum mechanics on truncated Z_k-graded Fock spaces."""

import json

from ._fsusy import (
    ConfigError,
    ConstructionError,
    FactorizationBroken,
    FractionalSystem,
    GradedRep,
    ProjectorDegenerate,
    RepresentationInvalid,
    StructureFunctionSet,
    Subsystem,
    build_ladder_profile,
    build_rep,
    build_subsystem,
    build_subsystems,
    build_system,
    classify,
    grade_of,
    verify_fractional_relations,
    verify_superposition,
    verify_wk_relations,
)
from ._fsusy import _verify_json

__all__ = [
    "ConfigError",
    "ConstructionError",
    "FactorizationBroken",
    "FractionalSystem",
    "GradedRep",
    "ProjectorDegenerate",
    "RepresentationInvalid",
    "StructureFunctionSet",
    "Subsystem",
    "build_ladder_profile",
    "build_rep",
    "build_subsystem",
    "build_subsystems",
    "build_system",
    "classify",
    "grade_of",
    "verify",
    "verify_fractional_relations",
    "verify_superposition",
    "verify_wk_relations",
]


def verify(k, D, *, affine=None, cyclic=None, table=None, tol=1e-10):
    """Run the full verification pipeline and return the report as a dict.

    Exactly one of ``affine=(a, b)``, ``cyclic=[c_0, ...]`` or ``table=path`` is required.
    """
    chosen = [x is not None for x in (affine, cyclic, table)]
    if sum(chosen) != 1:
        raise ConfigError("exactly one of affine, cyclic or table is required")
    if affine is not None:
        return json.loads(_verify_json(k, D, "affine", list(affine), "", tol))
    if cyclic is not None:
        return json.loads(_verify_json(k, D, "cyclic", list(cyclic), "", tol))
    return json.loads(_verify_json(k, D, "table", [], str(table), tol))
