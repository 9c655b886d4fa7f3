"""
Order-h construction with growth A(-x, x) >= (x/c_h)^(1/(2h-1)).

Step k adds a block of h elements summing to u. A candidate block is accepted
when every h-fold sum using at least one block element is new and off the
zero set, except u which gains exactly one representation. Sums are split as
j block elements plus h-j old ones, with the old part read from the cached
(h-j)-fold sum counts of A_{k-1}.
"""
import logging
from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, count
from typing import Iterator, List, Optional, Tuple

from basis_forge.models.construction import ChoicePolicy, ConstructionState, StepRecord
from basis_forge.models.integer_set import IntegerSet
from basis_forge.models.target import TargetFunction
from basis_forge.models.u_sequence import USequence
from basis_forge.schemas.report_schema import ExclusionReport
from basis_forge.services.constructor_service import ConstructorService, initial_state
from basis_forge.services.sumset_service import sum_counts
from basis_forge.services.target_service import window_constant

logger = logging.getLogger(__name__)


def _separated(values: Tuple[int, ...], h: int) -> bool:
    """Multisets of 1..h values all have different sums"""
    seen = set()
    for size in range(1, h + 1):
        for part in combinations_with_replacement(values, size):
            s = sum(part)
            if s in seen:
                return False
            seen.add(s)
    return True


@lru_cache(maxsize=None)
def block_coefficients(h: int) -> Tuple[int, ...]:
    """
    Smallest increasing (1, c_2, ..., c_{h-1}) for which the multisets of at
    most h values from {T, -1, -c_2, ...}, T the coefficient total, have
    pairwise distinct sums. Then two different ways of building an h-fold sum
    from block and old elements can only agree for finitely many a, and the
    only multiset with coefficient 0 is the whole block.
    """
    if h < 2:
        raise ValueError("order must be at least 2")
    if h == 2:
        return (1,)
    for top in count(h - 1):
        for middle in combinations(range(2, top), h - 3):
            coefficients = (1, *middle, top)
            total = sum(coefficients)
            if _separated((total, *(-c for c in coefficients)), h):
                logger.debug(f"Block coefficients for h={h}: {coefficients}")
                return coefficients


def block_total(h: int) -> int:
    return sum(block_coefficients(h))


def expected_constant(order: int, delta: int) -> int:
    """The window constant a construction of this order uses for a target with |Z_f| = delta"""
    return window_constant(delta, order=order, block_total=block_total(order))


def _block_values(a: int, u: int, h: int) -> List[int]:
    coefficients = block_coefficients(h)
    return [u + sum(coefficients) * a, *(-c * a for c in coefficients)]


def block(a: int, u: int, h: int) -> IntegerSet:
    """{u + T a} ∪ {-c_j a}; the elements sum to u"""
    if h < 2:
        raise ValueError("order must be at least 2")
    if a == 0 and h >= 3:
        raise ValueError("a must be nonzero for order 3 and above")
    return IntegerSet.of(_block_values(a, u, h))


class OrderHConstructorService(ConstructorService):
    """Extends a partial basis of order h in place, one block per step"""

    def __init__(self, state: ConstructionState):
        super().__init__(state)
        if not state.partial_sums:
            self.refresh_partials()

    @classmethod
    def start(
        cls,
        target: TargetFunction,
        policy: ChoicePolicy,
        restricted: bool = False,
        useq: Optional[USequence] = None,
        c: Optional[int] = None,
        order: int = 3,
    ) -> "OrderHConstructorService":
        if c is None:
            c = expected_constant(order, target.delta)
        return cls(initial_state(target, policy, restricted, useq, order=order, c=c))

    @property
    def block_total(self) -> int:
        return block_total(self.state.order)

    def block_of(self, a: int, u: int):
        return frozenset(_block_values(a, u, self.state.order))

    def _new_sums(self, values: List[int]) -> Iterator[Tuple[int, int]]:
        """(n, count) pieces of the h-fold sums using at least one of `values`, fewest block elements first"""
        state = self.state
        h = state.order
        pick = combinations if state.restricted else combinations_with_replacement
        for j in range(1, h + 1):
            rest = state.partial_sums[h - j]
            for part in pick(values, j):
                s = sum(part)
                for old, times in rest.items():
                    yield s + old, times

    def admissible(self, u: int, a: int) -> bool:
        """A_{k-1} ∪ block(a, u, h) keeps every old count and adds exactly one representation of u"""
        state = self.state
        h = state.order
        if a == 0 and h >= 3:
            return False
        values = _block_values(a, u, h)
        members = state.members
        if len(set(values)) < h or any(v in members for v in values):
            return False

        old = state.rep_cache
        zeros = state.target.zero_set.members
        seen: Counter = Counter()
        for n, times in self._new_sums(values):
            seen[n] += times
            if n == u:
                if seen[n] > 1:
                    return False
                continue
            if seen[n] > 1 or n in old or n in zeros:
                return False
        return seen[u] == 1

    def refresh_partials(self) -> None:
        """Recompute the m-fold sum counts of A_k for m < h"""
        state = self.state
        state.partial_sums = {m: sum_counts(state.elements, m, state.restricted) for m in range(state.order)}

    def extend(self, record: StepRecord) -> None:
        state = self.state
        values = _block_values(record.a, record.u, state.order)
        for n, times in self._new_sums(values):
            state.rep_cache[n] += times
        state.elements = state.elements.union(values)
        state.k = record.k
        state.i_k = record.i_k
        state.choice_log.append(record)
        self.refresh_partials()

    def exclusion_census(self, u: int) -> ExclusionReport:
        raise ValueError("the exclusion census covers order 2 only")

    def _exhausted_census(self, u: int):
        return None

    def _checked_census(self, k: int, u: int, a: int):
        return None


def constructor_for(
    target: TargetFunction,
    order: int,
    policy: ChoicePolicy,
    restricted: bool = False,
    useq: Optional[USequence] = None,
    c: Optional[int] = None,
) -> ConstructorService:
    """Pair construction for order 2, block construction above"""
    if order < 2:
        raise ValueError("order must be at least 2")
    if order == 2:
        return ConstructorService.start(target, policy, restricted, useq, c=c)
    return OrderHConstructorService.start(target, policy, restricted, useq, c=c, order=order)
