"""
Verification of a stored basis against its target.

Nothing stored is trusted. The window constant and Δ are recomputed from the
target, the step log is replayed from A_0 (deficit index, sequence term,
window, admissibility and the policy's choice among the re-derived
candidates of every step), the stored elements are audited with the oracle,
and every n in a window is classified as ok, pending or fail.
"""
import logging
from typing import List, Optional, Tuple

from basis_forge.exceptions import BasisForgeError
from basis_forge.models.construction import ConstructionState
from basis_forge.models.integer_set import IntegerSet
from basis_forge.models.target import TargetFunction, format_multiplicity, is_infinite
from basis_forge.models.u_sequence import USequence
from basis_forge.schemas.basis_schema import BasisFile
from basis_forge.schemas.report_schema import VerificationReport, WindowEntry
from basis_forge.services import search_service
from basis_forge.services.audit_service import AuditService
from basis_forge.services.constructor_h_service import constructor_for, expected_constant
from basis_forge.services.constructor_service import ConstructorService
from basis_forge.services.sumset_service import rep_table

logger = logging.getLogger(__name__)


def constant_findings(basis: BasisFile, target: TargetFunction) -> List[str]:
    """Disagreements between the stored Δ and c and the values the target implies"""
    findings = []
    if basis.delta != target.delta:
        findings.append(f"stored delta={basis.delta}, target has delta={target.delta}")
    c = expected_constant(basis.order, target.delta)
    if basis.c != c:
        findings.append(f"stored c={basis.c}, expected c={c} for order {basis.order}")
    return findings


def classify_window(
    values: IntegerSet,
    order: int,
    restricted: bool,
    target: TargetFunction,
    useq: USequence,
    i_k: int,
    window: Tuple[int, int],
) -> List[WindowEntry]:
    """
    ok: r(n) = f(n) for settled n (all f(n) occurrences consumed by i_k), or
    r(n) <= f(n) otherwise reported as pending; fail: r(n) > f(n), or a settled
    n short of f(n).
    """
    lo, hi = window
    table = rep_table(values, order, restricted, window) if values else None
    entries = []
    for n in range(lo, hi + 1):
        r = table[n] if table is not None else 0
        f = target(n)
        settled = not is_infinite(f) and useq.occurrences(n, i_k) == f
        if r > f:
            status, note = "fail", "exceeds target"
        elif settled:
            status, note = ("ok", None) if r == f else ("fail", "settled below target")
        else:
            status, note = "pending", None
        entries.append(WindowEntry(n=n, r=r, f=format_multiplicity(f), status=status, note=note))
    return entries


class VerifyService:
    def __init__(self, basis: BasisFile, target: TargetFunction, useq: USequence):
        self.basis = basis
        self.target = target
        self.useq = useq
        self.policy = basis.policy.to_policy()
        self.c = expected_constant(basis.order, target.delta)

    def _constructor(self, useq: Optional[USequence] = None) -> ConstructorService:
        basis = self.basis
        return constructor_for(
            self.target, basis.order, self.policy, basis.restricted, useq if useq is not None else self.useq, c=self.c
        )

    def _step_findings(self, service: ConstructorService, schema) -> List[str]:
        record = schema.to_record()
        state = service.state
        k = state.k + 1
        try:
            i, u = service.next_deficit()
        except BasisForgeError as e:
            return [f"step {record.k}: {e}"]
        if record.k != k or (i, u) != (record.i_k, record.u):
            return [f"step {record.k}: expected i_k={i}, u={u}, found i_k={record.i_k}, u={record.u}"]

        radius, candidates = service.candidates(k, u)
        if abs(record.a) > radius:
            return [f"step {k}: |a|={abs(record.a)} exceeds the search radius {radius}"]
        extent = state.window_extent(k)
        if any(abs(x) > extent for x in service.block_of(record.a, u)):
            return [f"step {k}: block of a={record.a} leaves [-{extent}, {extent}]"]
        if not service.admissible(u, record.a):
            return [f"step {k}: a={record.a} is not admissible"]
        if len(candidates) < 2:
            return [f"step {k}: only {len(candidates)} admissible candidate(s) within |a| <= {radius}"]

        rank, a = search_service.choose(self.policy, k, candidates)
        if (rank, a) != (record.candidate_rank, record.a):
            return [
                f"step {k}: policy {self.policy.describe()} picks rank {rank} (a={a}), "
                f"found rank {record.candidate_rank} (a={record.a})"
            ]
        if (record.window_bound, record.admissible_found) != (radius, len(candidates)):
            return [
                f"step {k}: recorded window={record.window_bound}, admissible={record.admissible_found}; "
                f"replay gives window={radius}, admissible={len(candidates)}"
            ]
        service.extend(record)
        return []

    def replay(self) -> Tuple[Optional[ConstructionState], List[str]]:
        """Rebuild A_K from the step log; returns the state (None on divergence) and findings"""
        basis = self.basis
        findings = constant_findings(basis, self.target)
        if len(basis.steps) != basis.K:
            findings.append(f"step log holds {len(basis.steps)} steps, K={basis.K}")
            return None, findings
        service = self._constructor()
        for schema in basis.steps:
            step_findings = self._step_findings(service, schema)
            if step_findings:
                return None, findings + step_findings
        return service.state, findings

    def _stored_state(self, records, i_k: int) -> ConstructionState:
        """The stored elements under the recomputed constants, with no cached counts"""
        state = self._constructor().state
        state.k = self.basis.K
        state.i_k = i_k
        state.elements = IntegerSet.of(self.basis.elements)
        state.choice_log = records
        state.rep_cache.clear()
        return state

    def verify(self, window: Tuple[int, int], rerun: bool = False) -> VerificationReport:
        """Constants, replay, oracle audit and window classification of a stored basis"""
        basis = self.basis
        records = [s.to_record() for s in basis.steps]
        i_k = records[-1].i_k if records else 0

        constants = constant_findings(basis, self.target)
        replayed, findings = self.replay()
        stored = IntegerSet.of(basis.elements)
        matches = (
            replayed is not None and not findings and replayed.elements == stored and len(stored) == len(basis.elements)
        )
        if replayed is not None and replayed.elements != stored:
            findings.append("replayed elements differ from the stored ones")

        report = AuditService(self._stored_state(records, i_k)).audit()
        report.add("constants", not constants, "; ".join(constants))
        report.add("replay", matches, "; ".join(findings))

        entries = classify_window(stored, basis.order, basis.restricted, self.target, self.useq, i_k, window)
        tally = {"ok": 0, "pending": 0, "fail": 0}
        for entry in entries:
            tally[entry.status] += 1
        report.window_status = tally
        report.pending = [e.n for e in entries if e.status == "pending"]
        failed = [e for e in entries if e.status == "fail"]
        report.add("settled", not failed, ", ".join(f"n={e.n}: {e.note}" for e in failed[:5]))

        if rerun:
            report.add("rerun", self.rerun_matches(stored))

        report.findings = findings
        if not report.passed:
            logger.error(f"Verification failed: {report.failures()}")
        return report

    def rerun_matches(self, stored: IntegerSet) -> bool:
        """Construct again from the recorded policy on a fresh copy of the sequence"""
        if self.basis.K == 0:
            return not stored
        useq = self.useq
        fresh = USequence(self.target, iter(useq.emitted()), kind=useq.kind) if not useq.is_spiral else None
        try:
            if fresh is None:
                service = constructor_for(self.target, self.basis.order, self.policy, self.basis.restricted, c=self.c)
            else:
                service = self._constructor(fresh)
            state, _ = service.run(self.basis.K)
        except BasisForgeError as e:
            logger.error(f"Rerun failed: {e}")
            return False
        return state.elements == stored
