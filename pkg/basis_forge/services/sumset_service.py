"""
Exact finite-set arithmetic and the brute-force representation oracle.

Everything else in the package is audited against rep_count / rep_table, so
these functions stay deliberately naive: plain enumeration of tuples, pruned
only by sortedness. Python integers never wrap, so sums of any magnitude are
exact.
"""
from collections import Counter
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Tuple

from basis_forge.models.integer_set import IntegerSet, RepTable


def _tuples(elements: Tuple[int, ...], h: int, restricted: bool) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing h-tuples, strictly increasing when restricted"""
    if restricted:
        return combinations(elements, h)
    return combinations_with_replacement(elements, h)


def sumset(first: IntegerSet, second: IntegerSet) -> IntegerSet:
    """A+B"""
    return IntegerSet.of(a + b for a in first for b in second)


def restricted_sumset(first: IntegerSet, second: IntegerSet) -> IntegerSet:
    """A +^ B: sums of a in A and b in B with a != b"""
    return IntegerSet.of(a + b for a in first for b in second if a != b)


def difference_set(first: IntegerSet, second: IntegerSet) -> IntegerSet:
    """A-B"""
    return IntegerSet.of(a - b for a in first for b in second)


def negation(values: IntegerSet) -> IntegerSet:
    """-A = {0} - A"""
    return difference_set(IntegerSet((0,)), values)


def h_fold_sumset(values: IntegerSet, h: int, restricted: bool = False) -> IntegerSet:
    """hA, or the sums of h pairwise distinct elements when restricted"""
    if h < 1:
        raise ValueError("h must be at least 1")
    return IntegerSet.of(sum(t) for t in _tuples(values.elements, h, restricted))


def counting(values: IntegerSet, y: int, x: int) -> int:
    """A(y, x) = |{a in A : y <= a <= x}|"""
    return values.count_between(y, x)


def _count_from(elements: Tuple[int, ...], h: int, n: int, start: int, restricted: bool) -> int:
    if h == 0:
        return 1 if n == 0 else 0
    top = elements[-1]
    total = 0
    for i in range(start, len(elements)):
        x = elements[i]
        # the remaining h-1 summands are all >= x
        if x * h > n:
            break
        if x + (h - 1) * top < n:
            continue
        total += _count_from(elements, h - 1, n - x, i + 1 if restricted else i, restricted)
    return total


def rep_count(values: IntegerSet, h: int, restricted: bool, n: int) -> int:
    """r_{A,h}(n): non-decreasing h-tuples from A summing to n (strictly increasing if restricted)"""
    if h < 1:
        raise ValueError("h must be at least 1")
    if not values:
        return 0
    return _count_from(values.elements, h, n, 0, restricted)


def full_window(values: IntegerSet, h: int) -> Tuple[int, int]:
    """Smallest window holding every h-fold sum"""
    if not values:
        return 0, 0
    return h * values.min(), h * values.max()


def rep_table(values: IntegerSet, h: int, restricted: bool, window: Tuple[int, int] = None) -> RepTable:
    """Batch rep_count over a window, in one pass over the tuples"""
    if h < 1:
        raise ValueError("h must be at least 1")
    lo, hi = window if window is not None else full_window(values, h)
    if lo > hi:
        raise ValueError(f"Degenerate window [{lo}, {hi}]")
    counts: Counter = Counter()
    for t in _tuples(values.elements, h, restricted):
        s = sum(t)
        if lo <= s <= hi:
            counts[s] += 1
    return RepTable(order=h, restricted=restricted, lo=lo, hi=hi, counts=dict(counts))


def sum_counts(values: Iterable[int], h: int, restricted: bool) -> Counter:
    """Counter of all h-fold sums (h = 0 gives the empty sum once)"""
    if h == 0:
        return Counter({0: 1})
    return Counter(sum(t) for t in _tuples(tuple(sorted(values)), h, restricted))
