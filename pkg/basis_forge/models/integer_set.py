from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Tuple


@dataclass(frozen=True)
class IntegerSet:
    """Finite, sorted, duplicate-free set of integers"""

    elements: Tuple[int, ...] = ()
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for value in self.elements:
            # bool is an int subclass but never a set element here
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"IntegerSet elements must be integers, got {value!r}")
        for left, right in zip(self.elements, self.elements[1:]):
            if left >= right:
                raise ValueError("IntegerSet elements must be strictly increasing")
        object.__setattr__(self, "_members", frozenset(self.elements))

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntegerSet":
        """Build from any iterable, sorting and removing duplicates"""
        return cls(tuple(sorted(set(values))))

    def __contains__(self, value: object) -> bool:
        return value in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    @property
    def members(self) -> frozenset:
        return self._members

    def min(self) -> int:
        return self.elements[0]

    def max(self) -> int:
        return self.elements[-1]

    def count_between(self, lo: int, hi: int) -> int:
        if lo > hi:
            return 0
        return bisect_right(self.elements, hi) - bisect_left(self.elements, lo)

    def union(self, other: Iterable[int]) -> "IntegerSet":
        return IntegerSet.of([*self.elements, *other])

    def without(self, value: int) -> "IntegerSet":
        return IntegerSet(tuple(x for x in self.elements if x != value))


@dataclass(frozen=True)
class RepTable:
    """Representation counts r_{A,h}(n) (or the restricted variant) over a window"""

    order: int
    restricted: bool
    lo: int
    hi: int
    # only nonzero counts are stored; every other n in the window has count 0
    counts: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, n: int) -> int:
        if n < self.lo or n > self.hi:
            raise KeyError(n)
        return self.counts.get(n, 0)

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.lo <= n <= self.hi

    def support(self) -> Iterator[Tuple[int, int]]:
        """Nonzero (n, count) pairs in increasing n"""
        for n in sorted(self.counts):
            yield n, self.counts[n]

    def as_dict(self) -> Dict[int, int]:
        """Dense map over the whole window, zeros included"""
        return {n: self.counts.get(n, 0) for n in range(self.lo, self.hi + 1)}

    def total(self) -> int:
        return sum(self.counts.values())

    def as_counter(self) -> Counter:
        return Counter(self.counts)
