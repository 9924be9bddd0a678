"""Objects and isomorphism classes of the block-decomposition groupoids.

A triple is an ordered list of segment blocks with weakly decreasing
centers and weighted center sum zero, whose per-label exponent multisets
reproduce a fixed cuspidal support.  Isomorphisms permute blocks with equal
centers, so sorting blocks by (center desc, label name asc, length desc)
yields a canonical representative and block-multiset equality decides
isomorphism.  An orbit stores the canonical triple, its automorphism count
(product of factorials of multiplicities of identical blocks) and, on the
split side, whether it lies in the image of the transfer.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .poset import Point, embed_blocks
from .segments import (DEFAULT_ENUMERATION_BOUND, Segment,
                       enumerate_progression_partitions, segment_exponents,
                       segment_sort_key)
from .support import INNER, Support, exponent_multiset


@dataclass(frozen=True)
class Triple:
    side: str
    blocks: tuple[Segment, ...]

    def __post_init__(self):
        centers = [b.center for b in self.blocks]
        if any(a < b for a, b in zip(centers, centers[1:])):
            raise InvariantViolation("centers not weakly decreasing", tuple(centers))

    @property
    def centers(self) -> tuple[Fraction, ...]:
        return tuple(b.center for b in self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(b.label.size(self.side) * b.length for b in self.blocks)

    @property
    def sym_algebra_dim(self) -> int:
        """Dimension tag of the symbolic symmetric-algebra factor."""
        return len(self.blocks) - 1

    def describe(self) -> str:
        return " ".join(f"[{b.label.name} len{b.length} @{b.center}]"
                        for b in self.blocks)


@dataclass(frozen=True)
class TripleOrbit:
    triple: Triple
    automorphisms: int
    in_image: bool


def triple_sort_key(t: Triple):
    return tuple(segment_sort_key(b) for b in t.blocks)


def canonicalize_triple(t: Triple) -> Triple:
    """Sort blocks by (center desc, label name asc, length desc); idempotent."""
    return Triple(t.side, tuple(sorted(t.blocks, key=segment_sort_key)))


def automorphism_count(t: Triple) -> int:
    """Number of block permutations fixing the triple itself."""
    return math.prod(math.factorial(m) for m in Counter(t.blocks).values())


def triple_point(t: Triple) -> Point:
    """The embedded exponent point of the triple's center vector."""
    return embed_blocks(t.block_sizes, t.centers)


def blocks_in_image(t: Triple) -> bool:
    """Every block length divisible by its label's transfer integer."""
    return all(b.length % b.label.k == 0 for b in t.blocks)


def make_orbit(t: Triple) -> TripleOrbit:
    canonical = canonicalize_triple(t)
    in_image = True if canonical.side == INNER else blocks_in_image(canonical)
    return TripleOrbit(canonical, automorphism_count(canonical), in_image)


def enumerate_triples(s: Support,
                      max_size: int = DEFAULT_ENUMERATION_BOUND
                      ) -> tuple[TripleOrbit, ...]:
    """All isomorphism classes of triples over the given support.

    Per label, the exponent multiset is partitioned into progressions with
    the side's step (the label's k on the inner side, 1 on the split side);
    orbits are all cross-label combinations, one per canonical form.
    """
    per_label = []
    for label in s.labels():
        step = Fraction(label.k) if s.side == INNER else Fraction(1)
        per_label.append(enumerate_progression_partitions(
            exponent_multiset(s, label), step, label=label, max_size=max_size))
    orbits = []
    for combo in itertools.product(*per_label):
        blocks = tuple(sorted(itertools.chain.from_iterable(combo),
                              key=segment_sort_key))
        orbits.append(make_orbit(Triple(s.side, blocks)))
    orbits.sort(key=lambda o: triple_sort_key(o.triple))
    return tuple(orbits)


def orbit_supports_multiset(o: TripleOrbit) -> tuple[tuple[str, Fraction], ...]:
    """Flattened (label name, exponent) multiset of the orbit's blocks."""
    out = []
    for b in o.triple.blocks:
        out.extend((b.label.name, e) for e in segment_exponents(b))
    return tuple(sorted(out))
