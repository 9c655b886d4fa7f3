"""
The spiral enumeration V of the integers, the target-driven subsequence U,
and the extremal targets on which the bound |u_k| <= [(k+delta)/2] is tight.
"""
import logging
from itertools import count
from math import isqrt
from typing import Iterable, Iterator, List, Tuple

from basis_forge.models.target import INFINITY, TargetFunction, is_infinite
from basis_forge.models.u_sequence import Term, USequence

logger = logging.getLogger(__name__)


def v_term(m: int) -> int:
    """v_m = r where m = s^2 + s + 1 + r with s >= 0 and |r| <= s"""
    if m < 1:
        raise ValueError("V is indexed from 1")
    s = isqrt(m - 1)
    return m - s * s - s - 1


def v_index(s: int, r: int) -> int:
    """Position of v = r in row s of V"""
    return s * s + s + 1 + r


def _last_finite_row(target: TargetFunction) -> int | None:
    """Last row that can still contribute when the default is 0, None if unbounded"""
    last = -1
    for n, value in target.overrides.items():
        if is_infinite(value):
            return None
        if value > 0:
            last = max(last, abs(n) + value - 1)
    return last


def _spiral_terms(target: TargetFunction) -> Iterator[Term]:
    """
    Walk V row by row; v_m = r in row s is kept iff s - |r| < f(r), i.e. it is
    one of the first f(r) occurrences of r. Only rows' admissible entries are
    visited, so the cost is linear in the output.
    """
    default = target.default_value
    keys = sorted(target.overrides, key=abs)
    last_row = _last_finite_row(target) if default == 0 else None
    for s in count():
        if last_row is not None and s > last_row:
            return
        if is_infinite(default):
            candidates: Iterable[int] = range(-s, s + 1)
        else:
            row = set()
            for t in range(max(0, s - default + 1), s + 1):
                row.update((t, -t))
            for n in keys:
                if abs(n) > s:
                    break
                row.add(n)
            candidates = sorted(row)
        for r in candidates:
            if s - abs(r) < target(r):
                yield r, v_index(s, r)


def _explicit_terms(terms: Iterable[int]) -> Iterator[Term]:
    for u in terms:
        yield u, None


def spiral_sequence(target: TargetFunction) -> USequence:
    return USequence(target, _spiral_terms(target), kind="spiral")


def explicit_sequence(target: TargetFunction, terms: Iterable[int], kind: str = "explicit") -> USequence:
    return USequence(target, _explicit_terms(terms), kind=kind)


def u_prefix(target: TargetFunction, K: int) -> USequence:
    """Spiral subsequence with its first K terms emitted"""
    if K < 1:
        raise ValueError("K must be positive")
    seq = spiral_sequence(target)
    seq.extend(K)
    return seq


def bound(k: int, delta: int) -> int:
    """[(k + delta) / 2]"""
    return (k + delta) // 2


def bound_margins(seq: USequence) -> List[int]:
    """[(k+delta)/2] - |u_k| for every emitted k"""
    d = seq.delta
    return [bound(k, d) - abs(u) for k, (u, _) in enumerate(seq.emitted(), start=1)]


def u_bound_audit(seq: USequence) -> bool:
    """
    Check |u_k| <= [(k+delta)/2] for every emitted term, and that every
    m outside the zero set with |m| < |u_k| already occurred before k.
    Spiral sequences must also have strictly increasing source indices.
    """
    terms = seq.emitted()
    if not terms:
        raise ValueError("Cannot audit an empty sequence")
    target = seq.target
    d = seq.delta
    seen = set()
    # every m with |m| < radius is either seen or in the zero set
    radius = 0
    previous_m = 0
    for k, (u, m) in enumerate(terms, start=1):
        if abs(u) > bound(k, d):
            logger.debug(f"Bound fails at k={k}: |{u}| > {bound(k, d)}")
            return False
        while radius < abs(u) and all(n in seen or target(n) == 0 for n in (radius, -radius)):
            radius += 1
        if abs(u) > radius:
            logger.debug(f"Completeness fails at k={k}: u={u} appears before all |m| < {abs(u)}")
            return False
        if seq.is_spiral:
            if m is None or m <= previous_m:
                return False
            previous_m = m
        seen.add(u)
    return True


def extremal_target(delta_value: int) -> Tuple[TargetFunction, USequence]:
    """
    A target with |zero set| = delta together with a sequence attaining
    |u_k| = [(k+delta)/2] for all k (delta = 0: f ≡ 1 with its spiral sequence,
    equality at even k only).
    """
    if delta_value < 0:
        raise ValueError("delta must be nonnegative")
    if delta_value == 0:
        target = TargetFunction(default_value=1)
        return target, spiral_sequence(target)

    if delta_value % 2 == 1:
        half = (delta_value - 1) // 2
        zeros = range(-half, half + 1)

        def terms() -> Iterator[int]:
            for i in count(1):
                yield half + i
                yield -(half + i)
    else:
        half = delta_value // 2
        zeros = range(-half, half)

        def terms() -> Iterator[int]:
            yield half
            for i in count(1):
                yield half + i
                yield -(half + i)

    target = TargetFunction(default_value=1, overrides={n: 0 for n in zeros})
    return target, explicit_sequence(target, terms(), kind="extremal")


__all__ = [
    "INFINITY",
    "v_term",
    "v_index",
    "spiral_sequence",
    "explicit_sequence",
    "u_prefix",
    "bound",
    "bound_margins",
    "u_bound_audit",
    "extremal_target",
]
