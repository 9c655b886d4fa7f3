from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator
from typing import Dict, Literal, Optional, Union

from basis_forge.models.target import INFINITY, Multiplicity

Value = Union[StrictInt, Literal["inf"]]


def _multiplicity(value: Value) -> Multiplicity:
    return INFINITY if value == "inf" else value


class TargetSpecFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    default: Optional[Value] = None
    overrides: Dict[str, Value] = Field(default_factory=dict)
    # shorthand for the extremal target of the given zero-set size
    extremal: Optional[StrictInt] = Field(default=None, ge=0)

    @field_validator("overrides")
    @classmethod
    def keys_are_integers(cls, v: Dict[str, Value]) -> Dict[str, Value]:
        for key in v:
            try:
                int(key)
            except ValueError:
                raise ValueError(f"Override key {key!r} is not a decimal integer")
        return v

    def default_multiplicity(self) -> Multiplicity:
        return _multiplicity(self.default)

    def override_multiplicities(self) -> Dict[int, Multiplicity]:
        return {int(key): _multiplicity(value) for key, value in self.overrides.items()}
