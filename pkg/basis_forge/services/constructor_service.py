"""
Greedy construction of a set A with r_{A,2} = f (or the restricted count).

Step k adds the pair {a + u, -a}, where u is the first sequence term whose
target is not yet met and a is taken from a window of size ~ c k^3 so that
every pair sum created by the step is new, except u which gains exactly one
representation.
"""
import logging
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from basis_forge.config import settings
from basis_forge.exceptions import AuditFailureError, WindowExhaustedError
from basis_forge.models.construction import ChoicePolicy, ConstructionState, StepRecord
from basis_forge.models.target import TargetFunction
from basis_forge.models.u_sequence import USequence
from basis_forge.schemas.report_schema import ConstraintCensus, ExclusionReport
from basis_forge.services import search_service
from basis_forge.services.audit_service import AuditService, census_bounds, census_total_bound, deficit_limit
from basis_forge.services.search_service import Candidate
from basis_forge.services.target_service import window_constant
from basis_forge.services.u_sequence_service import spiral_sequence

logger = logging.getLogger(__name__)

StepCallback = Callable[[ConstructionState, StepRecord], None]


def initial_state(
    target: TargetFunction,
    policy: ChoicePolicy,
    restricted: bool = False,
    useq: Optional[USequence] = None,
    order: int = 2,
    c: Optional[int] = None,
) -> ConstructionState:
    """The empty partial basis A_0"""
    delta = target.delta
    return ConstructionState(
        order=order,
        target=target,
        useq=useq if useq is not None else spiral_sequence(target),
        policy=policy,
        restricted=restricted,
        delta=delta,
        c=c if c is not None else window_constant(delta),
    )


def _halves(values, offset: int, divisor: int) -> set:
    """{(v + offset) / divisor} over values where the division is exact"""
    out = set()
    for v in values:
        num = v + offset
        if num % divisor == 0:
            out.add(num // divisor)
    return out


def exhausted(k: int, found: int, radius: int, census=None) -> WindowExhaustedError:
    logger.error(f"Window exhausted at step {k}: {found} admissible within |a| <= {radius}")
    return WindowExhaustedError(
        f"Window exhausted at step {k}: {found} admissible candidate(s) within |a| <= {radius}",
        census=census,
    )


class ConstructorService:
    """Extends a partial basis in place, one pair per step"""

    def __init__(self, state: ConstructionState):
        self.state = state
        self.audit_service = AuditService(state)

    @classmethod
    def start(
        cls,
        target: TargetFunction,
        policy: ChoicePolicy,
        restricted: bool = False,
        useq: Optional[USequence] = None,
        c: Optional[int] = None,
    ) -> "ConstructorService":
        return cls(initial_state(target, policy, restricted, useq, c=c))

    @property
    def block_total(self) -> int:
        return 1

    def block_of(self, a: int, u: int) -> FrozenSet[int]:
        return frozenset((a + u, -a))

    def next_deficit(self) -> Tuple[int, int]:
        """Least i > i_{k-1} with r_{A_{k-1}}(u_i) < f(u_i)"""
        state = self.state
        i = state.i_k + 1
        while True:
            u = state.useq.term(i)
            if state.rep_cache[u] < state.target(u):
                break
            i += 1
        k = state.k + 1
        limit = deficit_limit(state.order, k, state.restricted)
        if i > limit:
            logger.error(f"Deficit index {i} exceeds {limit} at step {k}")
            raise AuditFailureError(f"Deficit index i_{k} = {i} exceeds its bound {limit}")
        return i, u

    def admissible(self, u: int, a: int) -> bool:
        """
        Fast path: does A_{k-1} ∪ {a+u, -a} keep every old count, add one
        representation of u and make every other new sum unique and nonzero-target?
        """
        state = self.state
        members = state.members
        sums = state.rep_cache
        zeros = state.target.zero_set.members
        p, q = a + u, -a

        # the two new elements are distinct and new
        if p == q or p in members or q in members:
            return False
        # doubled new elements
        for d in (2 * p, 2 * q):
            if d in sums or d in zeros:
                return False
        if 2 * p - q in members or 2 * q - p in members:
            return False
        # cross sums with the old elements
        shift = p - q
        for x in members:
            xp, xq = x + p, x + q
            if xp in sums or xq in sums or xp in zeros or xq in zeros or x + shift in members:
                return False
        return True

    def search_radius(self, k: int, u: int) -> int:
        state = self.state
        return search_service.search_radius(state.order, k, u, state.delta, state.c, self.block_total)

    def candidates(self, k: int, u: int) -> Tuple[int, List[Candidate]]:
        """Search radius of step k and the candidate pool the policy chooses from"""
        radius = self.search_radius(k, u)
        found = search_service.collect_candidates(
            radius=radius,
            extent=self.state.window_extent(k),
            wanted=self.state.policy.pool_size(settings.SEEDED_POOL),
            is_admissible=lambda a: self.admissible(u, a),
            block_of=lambda a: self.block_of(a, u),
        )
        return radius, found

    def exclusion_census(self, u: int) -> ExclusionReport:
        """
        Materialize, constraint by constraint, every a the step from A_{k-1}
        with target term u must avoid, with the per-constraint size bounds.
        """
        state = self.state
        k = state.k + 1
        old = list(state.elements)
        sums = [s for s, cnt in state.rep_cache.items() if cnt > 0]
        zeros = list(state.target.zero_set)
        bounds = census_bounds(k, len(zeros))

        distinct = {-x for x in old} | {x - u for x in old} | _halves([-u], 0, 2)
        cross_vs_sums = {s - x - u for s in sums for x in old} | {x - s for x in old for s in sums}
        cross_vs_zeros = {z - x - u for z in zeros for x in old} | {x - z for x in old for z in zeros}
        cross_overlap = _halves([x2 - x1 for x1 in old for x2 in old], -u, 2)
        doubles_vs_sums = _halves(sums, -2 * u, 2) | _halves([-s for s in sums], 0, 2)
        doubles_vs_zeros = _halves(zeros, -2 * u, 2) | _halves([-z for z in zeros], 0, 2)
        doubles_vs_cross = (
            {x - u for x in old}
            | {-x for x in old}
            | _halves(old, -2 * u, 3)
            | _halves([-x for x in old], -u, 3)
        )

        values = {
            "distinct": distinct,
            "cross_vs_sums": cross_vs_sums,
            "cross_vs_zeros": cross_vs_zeros,
            "cross_overlap": cross_overlap,
            "doubles_vs_sums": doubles_vs_sums,
            "doubles_vs_zeros": doubles_vs_zeros,
            "doubles_vs_cross": doubles_vs_cross,
        }
        constraints = [ConstraintCensus(name=name, bound=bound, values=values[name]) for name, bound in bounds.items()]
        report = ExclusionReport(
            k=k, u=u, constraints=constraints, total_bound=census_total_bound(k, len(zeros))
        )
        for census in constraints:
            if not census.within_bound:
                logger.error(f"Census {census.name} at step {k}: {census.size} exceeds bound {census.bound}")
        return report

    def cross_check_window(self, u: int, radius: Optional[int] = None) -> List[int]:
        """Values of a in the window on which the fast path and the census disagree"""
        if radius is None:
            radius = self.search_radius(self.state.k + 1, u)
        excluded = self.exclusion_census(u).excluded()
        return [
            a
            for a in search_service.candidate_order(radius)
            if self.admissible(u, a) == (a in excluded)
        ]

    def extend(self, record: StepRecord) -> None:
        """Add the pair of `record` to A_{k-1} and update the counts incrementally"""
        state = self.state
        p, q = record.a + record.u, -record.a
        cache = state.rep_cache
        for x in state.elements:
            cache[x + p] += 1
            cache[x + q] += 1
        cache[p + q] += 1
        if not state.restricted:
            cache[2 * p] += 1
            cache[2 * q] += 1
        state.elements = state.elements.union((p, q))
        state.k = record.k
        state.i_k = record.i_k
        state.choice_log.append(record)

    def _exhausted_census(self, u: int) -> Optional[Dict[str, int]]:
        return self.exclusion_census(u).sizes()

    def _checked_census(self, k: int, u: int, a: int) -> Optional[Dict[str, int]]:
        """Census sizes for the step record when CENSUS_AUDIT is on"""
        if not settings.CENSUS_AUDIT:
            return None
        report = self.exclusion_census(u)
        if a in report.excluded() or not report.within_bounds:
            raise AuditFailureError(f"Exclusion census disagrees with the chosen a={a} at step {k}")
        return report.sizes()

    def step(self) -> ConstructionState:
        """Extend A_{k-1} to A_k in place"""
        state = self.state
        k = state.k + 1
        i, u = self.next_deficit()
        radius, candidates = self.candidates(k, u)
        if len(candidates) < 2:
            raise exhausted(k, len(candidates), radius, census=self._exhausted_census(u))

        rank, a = search_service.choose(state.policy, k, candidates)
        record = StepRecord(
            k=k,
            i_k=i,
            u=u,
            a=a,
            candidate_rank=rank,
            window_bound=radius,
            admissible_found=len(candidates),
            exclusion_census=self._checked_census(k, u, a),
        )
        self.extend(record)
        logger.info(f"Step {k} (h={state.order}): i_k={i} u={u} a={a} window={radius} admissible={len(candidates)}")
        return state

    def seed(self) -> ConstructionState:
        """A_1 = {a_1 + u_1, -a_1}"""
        if self.state.k != 0:
            raise ValueError("seed starts from the empty partial basis")
        return self.step()

    def run(self, K: int, on_step: Optional[StepCallback] = None) -> Tuple[ConstructionState, List[StepRecord]]:
        """Advance to step K, auditing every AUDIT_EVERY steps and after the last"""
        if K < 1:
            raise ValueError("K must be positive")
        state = self.state
        every = settings.AUDIT_EVERY
        while state.k < K:
            self.step()
            if on_step is not None:
                on_step(state, state.choice_log[-1])
            if state.k == K or (every and state.k % every == 0):
                report = self.audit_service.audit()
                if not report.passed:
                    raise AuditFailureError(f"Audit failed at step {state.k}: {', '.join(report.failures())}", report)
        return state, state.choice_log
