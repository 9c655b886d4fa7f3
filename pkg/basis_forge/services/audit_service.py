"""
Oracle audits of a partial basis.

Nothing here trusts the incremental caches kept by the constructors: every
count is recomputed with sumset_service.rep_table and compared.
"""
import logging
import math
from collections import Counter
from typing import Dict, List, Optional

from basis_forge.config import settings
from basis_forge.models.construction import ConstructionState
from basis_forge.models.integer_set import IntegerSet
from basis_forge.schemas.report_schema import GrowthRow, VerificationReport
from basis_forge.services.sumset_service import counting, rep_table

logger = logging.getLogger(__name__)


def deficit_limit(order: int, k: int, restricted: bool) -> int:
    """Bound on i_k: 2k^2 for order 2, otherwise one more than the number of h-tuples of A_{k-1}"""
    if order == 2:
        return 2 * k * k
    size = order * (k - 1)
    tuples = math.comb(size, order) if restricted else math.comb(size + order - 1, order)
    return tuples + 1


def expected_total(order: int, size: int, restricted: bool) -> int:
    """Sum of r over all n for a set of `size` elements"""
    if restricted:
        return math.comb(size, order)
    return math.comb(size + order - 1, order)


def census_bounds(k: int, delta: int) -> Dict[str, int]:
    """Per-constraint size bounds of the order-2 exclusion census at step k"""
    j = k - 1
    return {
        "distinct": 4 * k - 3,
        "cross_vs_sums": 16 * j ** 3,
        "cross_vs_zeros": 4 * delta * j,
        "cross_overlap": 4 * j * j,
        "doubles_vs_sums": 8 * j * j,
        "doubles_vs_zeros": 2 * delta,
        "doubles_vs_cross": 8 * j,
    }


def census_total_bound(k: int, delta: int) -> int:
    j = k - 1
    return 16 * j ** 3 + 12 * j * j + (4 * delta + 8) * j + 2 * delta


def _growth_points(values: IntegerSet, c: int, K: int, order: int) -> List[int]:
    """Right ends of the intervals of [8c, cK^(2h-1)] on which A(-x, x) is constant"""
    lo, hi = 8 * c, c * K ** (2 * order - 1)
    points = {hi}
    for a in values:
        x = abs(a) - 1
        if lo <= x < hi:
            points.add(x)
    return sorted(p for p in points if p >= lo)


def _growth_holds(values: IntegerSet, c: int, x: int, order: int) -> bool:
    # A(-x, x)^(2h-1) * c >= x, exactly
    return counting(values, -x, x) ** (2 * order - 1) * c >= x


def growth_check(values: IntegerSet, c: int, K: int, order: int = 2) -> bool:
    """A(-x, x) >= (x/c)^(1/(2h-1)) for every integer x with 8c <= x <= cK^(2h-1)"""
    for x in _growth_points(values, c, K, order):
        if not _growth_holds(values, c, x, order):
            logger.debug(f"Growth fails at x={x}: A(-x,x)={counting(values, -x, x)}")
            return False
    return True


def growth_rows(values: IntegerSet, c: int, K: int, order: int = 2, samples: Optional[int] = None) -> List[GrowthRow]:
    """
    Rows for the growth report: geometric samples of [8c, cK^(2h-1)] plus
    every breakpoint c k^(2h-1) in that range.
    """
    samples = settings.GROWTH_SAMPLES if samples is None else samples
    exponent = 2 * order - 1
    lo, hi = 8 * c, c * K ** exponent
    if lo > hi:
        return []
    points = {lo, hi}
    if samples > 1 and hi > lo:
        ratio = hi / lo
        for i in range(samples):
            points.add(min(hi, max(lo, round(lo * ratio ** (i / (samples - 1))))))
    points.update(c * k ** exponent for k in range(1, K + 1) if c * k ** exponent >= lo)

    rows = []
    for x in sorted(points):
        count = counting(values, -x, x)
        lhs = count ** exponent * c
        rows.append(GrowthRow(x=x, count=count, bound_cubed_lhs=lhs, bound_rhs=x, passed=lhs >= x))
    return rows


class AuditService:
    def __init__(self, state: ConstructionState):
        self.state = state

    def audit(self) -> VerificationReport:
        """Re-verify the construction conditions of A_k against the oracle"""
        state = self.state
        h, k = state.order, state.k
        values = state.elements
        report = VerificationReport(order=h, restricted=state.restricted, k=k)

        report.add("size", len(values) == h * k, f"|A|={len(values)}, expected {h * k}")

        extent = state.window_extent(k)
        outside = [x for x in values if abs(x) > extent]
        report.add("window", not outside, f"outside [-{extent}, {extent}]: {outside[:5]}" if outside else "")

        if not values:
            return report
        table = rep_table(values, h, state.restricted)
        counts = table.as_counter()

        excess = [n for n, r in table.support() if r > state.target(n)]
        report.add("bounded", not excess, f"r(n) > f(n) at {excess[:5]}" if excess else "")

        # every consumed sequence term is covered as often as it was consumed
        consumed = Counter(state.useq.prefix(state.i_k)) if state.i_k else Counter()
        short = [n for n, times in consumed.items() if counts[n] < times]
        report.add("coverage", not short, f"under-covered: {short[:5]}" if short else "")

        late = [r.k for r in state.choice_log if r.i_k > deficit_limit(h, r.k, state.restricted)]
        report.add("deficit_bound", not late, f"steps {late[:5]}" if late else "")

        total, expected = table.total(), expected_total(h, h * k, state.restricted)
        report.add("totals", total == expected, f"sum r = {total}, expected {expected}")

        if state.rep_cache:
            cached = Counter({n: r for n, r in state.rep_cache.items() if r > 0})
            report.add("cache", cached == counts, "" if cached == counts else "incremental counts differ from the oracle")

        report.add("growth", growth_check(values, state.c, k, h))

        thin = [r.k for r in state.choice_log if r.admissible_found < 2]
        report.add("candidates", not thin, f"steps with fewer than two candidates: {thin[:5]}" if thin else "")

        self._add_census(report)

        if not report.passed:
            logger.error(f"Audit at k={k} failed: {report.failures()}")
        return report

    def _add_census(self, report: VerificationReport) -> None:
        censused = [r for r in self.state.choice_log if r.exclusion_census is not None]
        if not censused:
            return
        over = []
        for record in censused:
            bounds = census_bounds(record.k, self.state.delta)
            over.extend(
                f"{name}@{record.k}" for name, size in record.exclusion_census.items() if size > bounds.get(name, size)
            )
        report.add("census", not over, ", ".join(over[:5]))
