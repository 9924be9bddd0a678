"""The dominance order on exponent points and its antichain layering.

Points are sum-zero tuples of exact rationals.  A point ``s`` succeeds ``t``
when ``s != t`` and every proper prefix sum of ``s`` is <= the corresponding
prefix sum of ``t``; so the zero vector succeeds every point whose prefix
sums are all nonnegative.  Layering a finite set of points means repeatedly
stripping all maximal elements and then reversing the strip order, which is
the unique partition into ordered antichains in which comparabilities only
point from later layers to earlier ones and every element sees a successor
in each later layer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import InvariantViolation

Point = tuple[Fraction, ...]
Layering = tuple[frozenset, ...]


class Comparison(enum.Enum):
    SUCCEEDS = "succeeds"
    PRECEDES = "precedes"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@lru_cache(maxsize=1 << 16)
def _prefix_sums(point: Point) -> tuple[Fraction, ...]:
    # Proper prefixes only: the full sum is zero for every valid point.
    sums = []
    acc = Fraction(0)
    for coord in point[:-1]:
        acc += coord
        sums.append(acc)
    return tuple(sums)


def compare_points(s: Point, t: Point) -> Comparison:
    """Compare two sum-zero points in the dominance order."""
    if len(s) != len(t):
        raise InvariantViolation("length mismatch", (len(s), len(t)))
    if s == t:
        return Comparison.EQUAL
    ps, pt = _prefix_sums(s), _prefix_sums(t)
    if all(a <= b for a, b in zip(ps, pt)):
        return Comparison.SUCCEEDS
    if all(a >= b for a, b in zip(ps, pt)):
        return Comparison.PRECEDES
    return Comparison.INCOMPARABLE


def succeeds(s: Point, t: Point) -> bool:
    return compare_points(s, t) is Comparison.SUCCEEDS


def embed_blocks(block_sizes: Iterable[int], z: Iterable[Fraction]) -> Point:
    """Repeat each coordinate ``z[j]`` exactly ``block_sizes[j]`` times.

    Requires the center condition sum(size_j * z_j) == 0, so the image is a
    valid sum-zero point.
    """
    sizes = tuple(block_sizes)
    coords = tuple(Fraction(x) for x in z)
    if len(sizes) != len(coords):
        raise InvariantViolation("length mismatch", (len(sizes), len(coords)))
    total = sum((n * x for n, x in zip(sizes, coords)), start=Fraction(0))
    if total != 0:
        raise InvariantViolation("center condition violated", total)
    out = []
    for n, x in zip(sizes, coords):
        if n < 1:
            raise InvariantViolation("non-positive size", n)
        out.extend([x] * n)
    return tuple(out)


def expand_by_degree(p: Point, d: int) -> Point:
    """Repeat each coordinate ``d`` times in place."""
    if d < 1:
        raise InvariantViolation("non-positive size", d)
    out = []
    for x in p:
        out.extend([x] * d)
    return tuple(out)


def layer_antichains(points: Iterable[Point]) -> Layering:
    """Partition a finite point set into its canonical ordered antichains.

    Strips all maximal elements repeatedly, then reverses: layer 0 holds the
    last-stripped elements and the final layer the first-stripped maxima.
    The empty set yields the empty layering of length 0 (the ``ell = -1``
    convention used when refining the non-image point sets).
    """
    remaining = set(points)
    stripped = []
    while remaining:
        maximal = {p for p in remaining
                   if not any(succeeds(q, p) for q in remaining if q != p)}
        stripped.append(frozenset(maximal))
        remaining -= maximal
    return tuple(reversed(stripped))


def longest_chain_length(points: Iterable[Point]) -> int:
    """Number of elements in a longest chain of the dominance order."""
    pts = list(set(points))
    if not pts:
        return 0
    n = len(pts)
    below = [[j for j in range(n) if succeeds(pts[i], pts[j])] for i in range(n)]
    best = [0] * n

    def chain_to(i: int) -> int:
        if best[i] == 0:
            best[i] = 1 + max((chain_to(j) for j in below[i]), default=0)
        return best[i]

    return max(chain_to(i) for i in range(n))


@dataclass(frozen=True)
class LayeringCheck:
    ok: bool
    violated: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_layering_properties(points: Iterable[Point],
                              candidate: Iterable[Iterable[Point]]) -> LayeringCheck:
    """Verify the three defining properties of an ordered antichain layering.

    (i') elements within one layer are pairwise incomparable; (ii') across
    layers, comparabilities point from the later layer down to the earlier
    one; (iii') every element of a layer has a successor in each later
    layer.  On failure the violated property and a witness are returned.
    Raises if the candidate is not an ordered partition of ``points``.
    """
    layers = [frozenset(layer) for layer in candidate]
    point_set = set(points)
    seen = set()
    for layer in layers:
        if not layer:
            raise InvariantViolation("candidate layer empty", None)
        if layer & seen:
            raise InvariantViolation("candidate layers overlap", tuple(layer & seen))
        seen |= layer
    if seen != point_set:
        raise InvariantViolation("candidate does not cover the point set",
                                 tuple(point_set ^ seen))

    for idx, layer in enumerate(layers):
        for x in layer:
            for y in layer:
                if x != y and compare_points(x, y) is not Comparison.INCOMPARABLE:
                    return LayeringCheck(False, "(i')", (idx, x, y))
    for i0 in range(len(layers)):
        for i in range(i0 + 1, len(layers)):
            for x in layers[i]:
                for y in layers[i0]:
                    if compare_points(x, y) is Comparison.PRECEDES:
                        return LayeringCheck(False, "(ii')", (i0, i, x, y))
    for i0 in range(len(layers)):
        for y in layers[i0]:
            for i in range(i0 + 1, len(layers)):
                if not any(succeeds(x, y) for x in layers[i]):
                    return LayeringCheck(False, "(iii')", (i0, i, y))
    return LayeringCheck(True)
