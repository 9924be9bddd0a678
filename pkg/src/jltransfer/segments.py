"""Segment arithmetic over exponent multisets.

A segment is a run of exponent twists of one cuspidal label, stored as
(length, center, step) so that its exponent list is the arithmetic
progression of the given length and common difference centered at c.  Unit
step is the split-side convention; the inner side uses step = k of the
label.  Endpoints are recoverable as a = c/step - (length-1)/2.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import EnumerationBoundExceeded, InvariantViolation, NotDecomposable
from .support import CuspidalLabel

DEFAULT_ENUMERATION_BOUND = 12


@dataclass(frozen=True)
class Segment:
    label: CuspidalLabel | None
    length: int
    center: Fraction
    step: Fraction = Fraction(1)

    def __post_init__(self):
        if self.length < 1:
            raise InvariantViolation("non-positive size", self.length)
        if self.step <= 0:
            raise InvariantViolation("non-positive size", self.step)


def segment_exponents(seg: Segment) -> tuple[Fraction, ...]:
    """The exponent progression of the segment, sorted descending."""
    top = seg.center + seg.step * Fraction(seg.length - 1, 2)
    return tuple(top - j * seg.step for j in range(seg.length))


def segment_sort_key(seg: Segment):
    name = seg.label.name if seg.label is not None else ""
    return (-seg.center, name, -seg.length)


def greedy_decompose_fixed_length(exponents: Iterable[Fraction], k: int,
                                  label: CuspidalLabel | None = None
                                  ) -> tuple[Segment, ...]:
    """Decompose a multiset into unit-step segments all of length ``k``.

    Repeatedly takes the maximum remaining exponent t and removes the run
    {t, t-1, ..., t-k+1}; every member must be present.  When it succeeds
    the decomposition is the unique one; when it fails, no decomposition
    into length-k unit-step segments exists, and :class:`NotDecomposable`
    reports the first missing exponent.
    """
    if k < 1:
        raise InvariantViolation("non-positive size", k)
    remaining = Counter(exponents)
    segments = []
    while remaining:
        top = max(remaining)
        for j in range(k):
            want = top - j
            if remaining[want] < 1:
                raise NotDecomposable(want, detail=f"run below {top}")
            remaining[want] -= 1
            if remaining[want] == 0:
                del remaining[want]
        segments.append(Segment(label, k, top - Fraction(k - 1, 2)))
    return tuple(segments)


def enumerate_progression_partitions(exponents: Iterable[Fraction],
                                     step: Fraction,
                                     label: CuspidalLabel | None = None,
                                     max_size: int = DEFAULT_ENUMERATION_BOUND
                                     ) -> tuple[tuple[Segment, ...], ...]:
    """All partitions of a multiset into progressions of common difference ``step``.

    Each part is recorded as a :class:`Segment` of any length >= 1.  The
    recursion always extends a progression downward from the current maximum
    element, which finds every partition at least once; duplicates (equal as
    multisets of segments) are removed and the result is canonically sorted.
    Exponential in the multiset size, hence the bound.
    """
    step = Fraction(step)
    if step <= 0:
        raise InvariantViolation("non-positive size", step)
    elems = tuple(exponents)
    if len(elems) > max_size:
        raise EnumerationBoundExceeded(len(elems), max_size)
    results = set()

    def recurse(remaining: Counter, acc: list[Segment]):
        if not remaining:
            results.add(tuple(sorted(acc, key=segment_sort_key)))
            return
        top = max(remaining)
        length = 0
        while remaining[top - length * step] >= 1:
            length += 1
            run = [top - j * step for j in range(length)]
            for x in run:
                remaining[x] -= 1
                if remaining[x] == 0:
                    del remaining[x]
            acc.append(Segment(label, length, top - step * Fraction(length - 1, 2),
                               step))
            recurse(remaining, acc)
            acc.pop()
            for x in run:
                remaining[x] += 1

    recurse(Counter(elems), [])
    return tuple(sorted(results, key=lambda part: tuple(map(segment_sort_key, part))))


def partitions_with_uniform_length(exponents: Iterable[Fraction], k: int,
                                   max_size: int = DEFAULT_ENUMERATION_BOUND
                                   ) -> tuple[tuple[Segment, ...], ...]:
    """Unit-step partitions whose segments ALL have length ``k``.

    Brute-force oracle for the greedy decomposition: the returned count is
    provably 0 or 1.
    """
    parts = enumerate_progression_partitions(exponents, Fraction(1),
                                             max_size=max_size)
    return tuple(p for p in parts if all(seg.length == k for seg in p))


def multiset_sum(parts: Iterable[Segment]) -> tuple[Fraction, ...]:
    """Concatenated exponent multiset of a collection of segments."""
    return tuple(sorted(itertools.chain.from_iterable(
        segment_exponents(seg) for seg in parts), reverse=True))
