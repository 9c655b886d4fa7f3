from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from basis_forge.models.integer_set import IntegerSet
from basis_forge.models.target import TargetFunction
from basis_forge.models.u_sequence import USequence


class PolicyKind(str, Enum):
    MIN_ABS = "min-abs"
    STREAM = "stream"
    SEEDED = "seed"


@dataclass(frozen=True)
class ChoicePolicy:
    """
    Rule picking one admissible candidate per step.

    MIN_ABS always takes rank 0. STREAM reads bit k-1 of `bits` at step k and
    takes rank 0 or 1. SEEDED draws a rank among the first `pool` candidates
    from a generator seeded by (seed, k).
    """

    kind: PolicyKind = PolicyKind.MIN_ABS
    bits: int = 0
    seed: int = 0

    @classmethod
    def parse(cls, text: str) -> "ChoicePolicy":
        """Parse min-abs | stream:HEXBITS | seed:N"""
        text = text.strip().lower()
        if text == PolicyKind.MIN_ABS.value:
            return cls()
        kind, _, value = text.partition(":")
        if kind == PolicyKind.STREAM.value and value:
            return cls(kind=PolicyKind.STREAM, bits=int(value, 16))
        if kind == PolicyKind.SEEDED.value and value:
            return cls(kind=PolicyKind.SEEDED, seed=int(value))
        raise ValueError(f"Unknown choice policy: {text!r}")

    def describe(self) -> str:
        if self.kind is PolicyKind.STREAM:
            return f"stream:{self.bits:x}"
        if self.kind is PolicyKind.SEEDED:
            return f"seed:{self.seed}"
        return PolicyKind.MIN_ABS.value

    def pool_size(self, seeded_pool: int) -> int:
        """How many admissible candidates to collect before choosing"""
        if self.kind is PolicyKind.SEEDED:
            return max(2, seeded_pool)
        return 2

    def select(self, k: int, available: int) -> int:
        """Rank of the candidate taken at step k among `available` ones"""
        if self.kind is PolicyKind.STREAM:
            return min((self.bits >> (k - 1)) & 1, available - 1)
        if self.kind is PolicyKind.SEEDED:
            return random.Random(f"{self.seed}:{k}").randrange(available)
        return 0


@dataclass
class StepRecord:
    k: int
    i_k: int
    u: int
    a: int
    candidate_rank: int
    window_bound: int
    admissible_found: int
    exclusion_census: Optional[Dict[str, int]] = None


@dataclass
class ConstructionState:
    """
    Partial basis A_k together with everything step k+1 needs.

    Advanced in place by the constructor services.
    """

    order: int
    target: TargetFunction
    useq: USequence
    policy: ChoicePolicy
    restricted: bool
    delta: int
    c: int
    k: int = 0
    i_k: int = 0
    elements: IntegerSet = field(default_factory=IntegerSet)
    choice_log: List[StepRecord] = field(default_factory=list)
    # r_{A_k,h} (or the restricted count) over hA_k
    rep_cache: Counter = field(default_factory=Counter)
    # m-fold sum counts of A_k for m < order, maintained by the order-h constructor
    partial_sums: Dict[int, Counter] = field(default_factory=dict)

    @property
    def members(self) -> frozenset:
        return self.elements.members

    def window_extent(self, k: Optional[int] = None) -> int:
        """c * k^(2h-1): every element of A_k lies within this bound"""
        k = self.k if k is None else k
        return self.c * k ** (2 * self.order - 1)
