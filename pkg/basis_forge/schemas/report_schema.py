from pydantic import BaseModel, Field
from typing import Dict, List, Literal, Optional, Set


class ConditionResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    order: int
    restricted: bool
    k: int
    conditions: List[ConditionResult] = Field(default_factory=list)
    window_status: Dict[str, int] = Field(default_factory=dict)  # ok / pending / fail tallies
    pending: List[int] = Field(default_factory=list)
    findings: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failures(self) -> List[str]:
        return [c.name for c in self.conditions if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.conditions.append(ConditionResult(name=name, passed=passed, detail=detail))


class ConstraintCensus(BaseModel):
    name: str
    bound: int
    values: Set[int] = Field(default_factory=set, exclude=True)

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def within_bound(self) -> bool:
        return self.size <= self.bound


class ExclusionReport(BaseModel):
    k: int
    u: int
    constraints: List[ConstraintCensus] = Field(default_factory=list)
    total_bound: int = 0

    def excluded(self, include_distinctness: bool = True) -> Set[int]:
        """Union of the forbidden values; the distinctness constraint is not part of total_bound"""
        union: Set[int] = set()
        for census in self.constraints:
            if census.name == "distinct" and not include_distinctness:
                continue
            union |= census.values
        return union

    @property
    def within_bounds(self) -> bool:
        if not all(c.within_bound for c in self.constraints):
            return False
        return len(self.excluded(include_distinctness=False)) <= self.total_bound

    def sizes(self) -> Dict[str, int]:
        return {c.name: c.size for c in self.constraints}


class GrowthRow(BaseModel):
    x: int
    count: int
    bound_cubed_lhs: int
    bound_rhs: int
    passed: bool

    def csv_fields(self) -> List[str]:
        return [str(self.x), str(self.count), str(self.bound_cubed_lhs), str(self.bound_rhs), "true" if self.passed else "false"]


class WindowEntry(BaseModel):
    n: int
    r: int
    f: str
    status: Literal["ok", "pending", "fail"]
    note: Optional[str] = None
