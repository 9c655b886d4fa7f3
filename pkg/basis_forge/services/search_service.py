"""
Candidate search over the step window.

Both constructors draw the step parameter a from the same ordered window
(0, 1, -1, 2, -2, ...) and differ only in how they test admissibility and
which block of new elements a produces.
"""
import logging
from typing import Callable, FrozenSet, Iterator, List, Tuple

from basis_forge.models.construction import ChoicePolicy

logger = logging.getLogger(__name__)

Candidate = Tuple[int, FrozenSet[int]]


def candidate_order(radius: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ..., radius, -radius"""
    if radius < 0:
        return
    yield 0
    for magnitude in range(1, radius + 1):
        yield magnitude
        yield -magnitude


def search_radius(order: int, k: int, u: int, delta: int, c: int, block_total: int = 1) -> int:
    """
    Largest |a| searched at step k.

    |a| <= (c k^(2h-1) - max(|u|, k^2 + [(delta+1)/2])) / T, which for order 2 is
    c k^3 - k^2 - [(delta+1)/2] whenever |u| <= k^2 + delta/2. The order-2 seed
    searches at least |a| <= 1 + delta.
    """
    slack = max(abs(u), k * k + (delta + 1) // 2)
    radius = (c * k ** (2 * order - 1) - slack) // block_total
    if order == 2 and k == 1:
        return max(radius, 1 + delta)
    return radius


def collect_candidates(
    radius: int,
    extent: int,
    wanted: int,
    is_admissible: Callable[[int], bool],
    block_of: Callable[[int], FrozenSet[int]],
) -> List[Candidate]:
    """
    First `wanted` admissible values of a in search order whose blocks lie in
    [-extent, extent]. Values producing an already collected block are skipped,
    so distinct ranks always give distinct sets.
    """
    found: List[Candidate] = []
    blocks = set()
    tried = 0
    for a in candidate_order(radius):
        tried += 1
        block = block_of(a)
        if block in blocks:
            continue
        if any(abs(x) > extent for x in block):
            continue
        if not is_admissible(a):
            continue
        found.append((a, block))
        blocks.add(block)
        if len(found) >= wanted:
            break
    logger.debug(f"Candidate search: tried {tried} values within |a| <= {radius}, found {len(found)}")
    return found


def choose(policy: ChoicePolicy, k: int, candidates: List[Candidate]) -> Tuple[int, int]:
    """(rank, a) picked by the policy"""
    rank = policy.select(k, len(candidates))
    return rank, candidates[rank][0]
