"""Cuspidal labels and cuspidal-support descriptions.

A problem instance fixes a degree ``d``, a table of opaque cuspidal labels
(each carrying its inner rank ``m'``, its transfer integer ``k`` and the
derived split rank ``m = m' * d / k``), and an ordered tensor product of
(label, exact rational exponent) factors.  Supports exist on two sides:
``inner`` factors live on blocks of rank ``m'``, ``split`` factors on blocks
of rank ``m``.  All exponents are ``fractions.Fraction``; no floats anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError

INNER = "inner"
SPLIT = "split"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational from a string of the form "p/q" or "n"."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValidationError("malformed rational", text)
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValidationError("malformed rational", text, detail="zero denominator")


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class CuspidalLabel:
    """An opaque cuspidal representation with its transfer bookkeeping.

    ``inner_size`` is the rank of the inner block carrying it, ``k`` the
    transfer integer, ``split_size`` the derived rank of the split block.
    """

    name: str
    inner_size: int
    k: int
    split_size: int

    def size(self, side: str) -> int:
        return self.inner_size if side == INNER else self.split_size


def make_label(name: str, inner_size: int, k: int, degree: int) -> CuspidalLabel:
    """Build and validate a label relative to the problem degree."""
    if not name or not isinstance(name, str):
        raise ValidationError("label name must be a non-empty string", name)
    for fieldname, value in (("inner_size", inner_size), ("k", k), ("degree", degree)):
        if not isinstance(value, int) or value < 1:
            raise ValidationError("non-positive size", value, detail=fieldname)
    if degree % k != 0:
        raise ValidationError("k does not divide d", (name, k, degree))
    if (inner_size * degree) % k != 0:
        raise ValidationError("split size not integral", (name, inner_size, k, degree))
    return CuspidalLabel(name, inner_size, k, inner_size * degree // k)


@dataclass(frozen=True)
class Support:
    """An ordered tensor product of (label, exponent) factors on one side."""

    side: str
    degree: int
    factors: tuple[tuple[CuspidalLabel, Fraction], ...]

    @property
    def ambient_rank(self) -> int:
        return sum(label.size(self.side) for label, _ in self.factors)

    def labels(self) -> tuple[CuspidalLabel, ...]:
        """Distinct labels appearing, sorted by name."""
        return tuple(sorted({label for label, _ in self.factors},
                            key=lambda lb: lb.name))

    def describe(self) -> str:
        return " ".join(f"{lb.name}@{exp}" for lb, exp in self.factors)


@dataclass
class Problem:
    """Parsed problem header: degree, label table and the inner support."""

    degree: int
    labels: dict[str, CuspidalLabel] = field(default_factory=dict)
    support: Support | None = None


def center_sum(s: Support) -> Fraction:
    return sum((label.size(s.side) * exp for label, exp in s.factors),
               start=Fraction(0))


def _canonical_key(factor):
    label, exp = factor
    return (-exp, label.name)


def parse_support(text: str) -> Problem:
    """Parse a problem document (JSON) into a label table and inner support.

    The support is returned unnormalized; see :func:`normalize_support`.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("malformed problem document", str(exc))
    if not isinstance(doc, dict):
        raise ValidationError("malformed problem document", type(doc).__name__)

    degree = doc.get("degree_d")
    if not isinstance(degree, int) or degree < 1:
        raise ValidationError("non-positive size", degree, detail="degree_d")

    problem = Problem(degree=degree)
    for entry in doc.get("cuspidals", []):
        if not isinstance(entry, dict):
            raise ValidationError("malformed cuspidal entry", entry)
        name = entry.get("name")
        label = make_label(name, entry.get("inner_size"), entry.get("k"), degree)
        if name in problem.labels:
            raise ValidationError("duplicate label name", name)
        problem.labels[name] = label

    factors = []
    for entry in doc.get("support", []):
        if not isinstance(entry, dict):
            raise ValidationError("malformed support entry", entry)
        name = entry.get("cuspidal")
        if name not in problem.labels:
            raise ValidationError("unknown label reference", name)
        exponent = entry.get("exponent")
        if isinstance(exponent, int):
            exponent = str(exponent)
        factors.append((problem.labels[name], parse_rational(exponent)))
    if not factors:
        raise ValidationError("empty support", None)

    problem.support = Support(INNER, degree, tuple(factors))
    return problem


def normalize_support(s: Support) -> Support:
    """Return the canonical representative of the associate class of ``s``.

    Factors are stably re-sorted by exponent descending, then label name
    ascending.  Idempotent.  Raises if the center condition fails or the
    label arithmetic is inconsistent with the degree.
    """
    for label, _ in s.factors:
        if s.degree % label.k != 0:
            raise ValidationError("k does not divide d", (label.name, label.k, s.degree))
        if label.inner_size * s.degree != label.split_size * label.k:
            raise ValidationError("split size not integral",
                                  (label.name, label.inner_size, label.k, s.degree))
    total = center_sum(s)
    if total != 0:
        raise ValidationError("center condition violated", total)
    return Support(s.side, s.degree, tuple(sorted(s.factors, key=_canonical_key)))


def exponent_multiset(s: Support, label: CuspidalLabel) -> tuple[Fraction, ...]:
    """Multiset (sorted descending) of exponents of factors carrying ``label``.

    Empty when the label does not appear.
    """
    return tuple(sorted((exp for lb, exp in s.factors if lb == label),
                        reverse=True))
