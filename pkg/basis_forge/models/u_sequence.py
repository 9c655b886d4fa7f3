from __future__ import annotations

from collections import Counter
from typing import Iterator, List, Optional, Tuple

from basis_forge.exceptions import TargetExhaustedError
from basis_forge.models.target import TargetFunction

Term = Tuple[int, Optional[int]]


class USequence:
    """
    Lazily extended, memoized enumeration u_1, u_2, ... of the integers in
    which n occurs f(n) times.

    Terms come from a source iterator of (u_k, m_k) pairs; m_k is the index of
    the term in the spiral sequence V, or None for sequences given explicitly.
    """

    def __init__(self, target: TargetFunction, source: Iterator[Term], kind: str = "spiral"):
        self.target = target
        self.kind = kind
        self._source = source
        self._terms: List[int] = []
        self._indices: List[Optional[int]] = []
        self._consumed: Counter = Counter()

    @property
    def delta(self) -> int:
        return self.target.delta

    @property
    def is_spiral(self) -> bool:
        return self.kind == "spiral"

    def __len__(self) -> int:
        return len(self._terms)

    def extend(self, count: int) -> None:
        """Make sure at least `count` terms have been emitted"""
        while len(self._terms) < count:
            try:
                u, m = next(self._source)
            except StopIteration:
                raise TargetExhaustedError(
                    f"Target exhausted: only {len(self._terms)} sequence terms exist, {count} requested"
                )
            self._terms.append(u)
            self._indices.append(m)
            self._consumed[u] += 1

    def term(self, k: int) -> int:
        """u_k, 1-based"""
        if k < 1:
            raise IndexError("sequence index starts at 1")
        self.extend(k)
        return self._terms[k - 1]

    def source_index(self, k: int) -> Optional[int]:
        """m_k, 1-based"""
        self.extend(k)
        return self._indices[k - 1]

    def prefix(self, count: int) -> List[int]:
        self.extend(count)
        return self._terms[:count]

    def emitted(self) -> List[Term]:
        """Read-only snapshot of the emitted prefix"""
        return list(zip(self._terms, self._indices))

    def occurrences(self, n: int, upto: int) -> int:
        """|{i <= upto : u_i = n}|"""
        self.extend(upto)
        if upto == len(self._terms):
            return self._consumed[n]
        return self._terms[:upto].count(n)
