from pydantic import BaseModel, ConfigDict, Field
from typing import Dict, List, Optional

from basis_forge.models.construction import ChoicePolicy, PolicyKind, StepRecord


class StepRecordSchema(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    k: int
    i_k: int
    u: int
    a: int
    candidate_rank: int
    window_bound: int
    admissible_found: int
    exclusion_census: Optional[Dict[str, int]] = None

    def to_record(self) -> StepRecord:
        return StepRecord(**self.model_dump())


class PolicySchema(BaseModel):
    kind: PolicyKind = PolicyKind.MIN_ABS
    bits: str = "0"  # hexadecimal
    seed: int = 0

    @classmethod
    def from_policy(cls, policy: ChoicePolicy) -> "PolicySchema":
        return cls(kind=policy.kind, bits=f"{policy.bits:x}", seed=policy.seed)

    def to_policy(self) -> ChoicePolicy:
        return ChoicePolicy(kind=self.kind, bits=int(self.bits, 16), seed=self.seed)


class BasisFile(BaseModel):
    order: int = Field(ge=2)
    restricted: bool = False
    c: int
    delta: int = Field(ge=0)
    K: int = Field(ge=0)
    policy: PolicySchema = Field(default_factory=PolicySchema)
    elements: List[int]
    steps: List[StepRecordSchema] = Field(default_factory=list)
