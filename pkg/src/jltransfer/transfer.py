"""The transfer maps between inner and split data.

On supports: each inner factor (label, s) expands into the label's k split
factors at exponents s + (k-1)/2, s + (k-3)/2, ..., s - (k-1)/2; the inverse
reads the split multiset back through the unique greedy decomposition into
length-k runs, per label.  On triples: blockwise (label, length, c) maps to
(label, k * length, c) with centers unchanged.  A split object is in the
image exactly when every per-label run length is divisible by that label's k.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDecomposable, NotInImage
from .segments import Segment, greedy_decompose_fixed_length
from .support import (INNER, SPLIT, Support, exponent_multiset,
                      normalize_support)
from .triples import Triple, canonicalize_triple


def transfer_support(p: Support) -> tuple[Support, tuple[int, ...]]:
    """Transfer an inner support; returns (sigma, parabolic partition Q).

    Q lists each factor's split block size repeated k times, in the order of
    the normalized inner factors.  Sigma's factors are the concatenated
    expansions stably sorted by exponent descending (ties keep expansion
    order), which reproduces the standard displayed representative.
    """
    p = normalize_support(p)
    expanded = []
    q_partition = []
    for label, s in p.factors:
        for j in range(label.k):
            expanded.append((label, s + Fraction(label.k - 1, 2) - j))
        q_partition.extend([label.split_size] * label.k)
    expanded.sort(key=lambda f: -f[1])
    return Support(SPLIT, p.degree, tuple(expanded)), tuple(q_partition)


def invert_support(sigma: Support) -> Support:
    """Recover the inner support whose transfer is ``sigma``.

    Per label, the split exponent multiset must decompose into unit-step
    runs of length k; the run centers are the inner exponents.  Raises
    :class:`NotInImage` naming the failing label and missing exponent.
    """
    sigma = normalize_support(sigma)
    factors = []
    for label in sigma.labels():
        try:
            segs = greedy_decompose_fixed_length(
                exponent_multiset(sigma, label), label.k, label=label)
        except NotDecomposable as exc:
            raise NotInImage(label.name, exc.witness)
        factors.extend((label, seg.center) for seg in segs)
    return normalize_support(Support(INNER, sigma.degree, tuple(factors)))


def transfer_triple(t: Triple) -> Triple:
    """Blockwise transfer of an inner triple; output canonical."""
    blocks = tuple(Segment(b.label, b.label.k * b.length, b.center, Fraction(1))
                   for b in t.blocks)
    return canonicalize_triple(Triple(SPLIT, blocks))


def triple_in_image(t: Triple) -> bool:
    """Whether a split triple is a transfer (all lengths divisible by k)."""
    return all(b.length % b.label.k == 0 for b in t.blocks)


def triple_preimage(t: Triple) -> Triple:
    """The unique inner triple transferring to a split triple in the image."""
    blocks = []
    for b in t.blocks:
        if b.length % b.label.k != 0:
            raise NotInImage(b.label.name, b.length)
        blocks.append(Segment(b.label, b.length // b.label.k, b.center,
                              Fraction(b.label.k)))
    return canonicalize_triple(Triple(INNER, tuple(blocks)))
