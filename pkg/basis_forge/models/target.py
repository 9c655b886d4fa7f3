from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Mapping, Union

from basis_forge.models.integer_set import IntegerSet

# Distinguished value of f; compares above every finite int and is never an int itself.
INFINITY = math.inf

Multiplicity = Union[int, float]


def is_infinite(value: Multiplicity) -> bool:
    return value == INFINITY


def format_multiplicity(value: Multiplicity) -> str:
    return "inf" if is_infinite(value) else str(value)


def _external(value: Multiplicity) -> Union[int, str]:
    return "inf" if is_infinite(value) else value


@dataclass(frozen=True)
class TargetFunction:
    """
    The prescribed function f: Z -> N0 ∪ {INFINITY}, stored as a constant
    default plus finitely many overrides.

    Build through target_service.validate for checked construction; the raw
    constructor only enforces value types so that audits can be fed
    deliberately broken targets.
    """

    default_value: Multiplicity
    overrides: Mapping[int, Multiplicity] = field(default_factory=dict)

    def __post_init__(self):
        for value in (self.default_value, *self.overrides.values()):
            if not (isinstance(value, int) or is_infinite(value)) or isinstance(value, bool):
                raise TypeError(f"Target values must be integers or INFINITY, got {value!r}")
        object.__setattr__(self, "overrides", dict(sorted(self.overrides.items())))

    def __call__(self, n: int) -> Multiplicity:
        return self.overrides.get(n, self.default_value)

    def evaluate(self, n: int) -> Multiplicity:
        return self(n)

    @property
    def zero_set(self) -> IntegerSet:
        return IntegerSet.of(n for n, value in self.overrides.items() if value == 0)

    @property
    def delta(self) -> int:
        return len(self.zero_set)

    def to_spec(self) -> Dict[str, object]:
        return {
            "default": _external(self.default_value),
            "overrides": {str(n): _external(v) for n, v in self.overrides.items()},
        }
