from basis_forge.models.integer_set import IntegerSet, RepTable
from basis_forge.models.target import INFINITY, Multiplicity, TargetFunction
from basis_forge.models.u_sequence import USequence
from basis_forge.models.construction import (
    ChoicePolicy,
    ConstructionState,
    PolicyKind,
    StepRecord,
)

__all__ = [
    "IntegerSet",
    "RepTable",
    "INFINITY",
    "Multiplicity",
    "TargetFunction",
    "USequence",
    "ChoicePolicy",
    "ConstructionState",
    "PolicyKind",
    "StepRecord",
]
