"""Pairwise conditional dependency between roles.

For roles A and B with incidence vectors a and b::

    common    = #positions where a and b are both 1
    P(B | A)  = 100 * common / popcount(a)

Each unordered pair is classified from the two percentages after rounding
them half-up to one decimal: *mutual* when both reach the threshold,
*one-way* when exactly one does, *independent* otherwise.  The threshold
comparison is inclusive.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import BadThreshold, LengthMismatch, LevelMismatch
from .matrix import Level, RoleIncidenceMatrix, RoleVector

DEFAULT_THRESHOLD = 55.0


class Kind(str, enum.Enum):
    MUTUAL = "mutual"
    ONE_WAY_A_TO_B = "one_way_a_to_b"
    ONE_WAY_B_TO_A = "one_way_b_to_a"
    INDEPENDENT = "independent"

    @property
    def is_one_way(self):
        return self in (Kind.ONE_WAY_A_TO_B, Kind.ONE_WAY_B_TO_A)


def percentage(common: int, total: int) -> float:
    """Unrounded ``100 * common / total``; 0 when ``total`` is 0."""
    if total == 0:
        return 0.0
    return 100.0 * common / total


def rounded_tenths(common: int, total: int) -> int:
    """``100 * common / total`` in tenths of a percent, rounded half-up.

    Integer arithmetic only, so values sitting exactly on a .x5 boundary
    round the same way on every platform.
    """
    if total == 0:
        return 0
    return (2000 * common + total) // (2 * total)


def round_pct(common: int, total: int) -> float:
    return rounded_tenths(common, total) / 10


@dataclass(frozen=True)
class DependencyEdge:
    """Directed edge ``from_role -> to_role`` carrying P(to | from)."""

    from_role: str
    to_role: str
    val_common: int
    sum_from: int

    @property
    def percentage(self) -> float:
        return percentage(self.val_common, self.sum_from)

    @property
    def rounded(self) -> float:
        return round_pct(self.val_common, self.sum_from)


@dataclass(frozen=True)
class PairClassification:
    """Unordered pair with ``role_a < role_b``.

    ``p_ab`` is P(b | a) and ``p_ba`` is P(a | b), both rounded.
    ``one_way_a_to_b`` means only ``p_ab`` reaches the threshold.
    """

    role_a: str
    role_b: str
    p_ab: float
    p_ba: float
    kind: Kind


@dataclass(frozen=True)
class AnalysisReport:
    threshold: float
    level: Level
    roles: tuple[str, ...]
    edges: tuple[DependencyEdge, ...]
    pairs: tuple[PairClassification, ...]
    mutual_pairs: tuple[PairClassification, ...] = field(init=False)
    one_way_roles: frozenset[str] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "level", Level(self.level))
        mutual = tuple(p for p in self.pairs if p.kind is Kind.MUTUAL)
        object.__setattr__(self, "mutual_pairs", mutual)
        in_mutual = {r for p in mutual for r in (p.role_a, p.role_b)}
        in_one_way = {r for p in self.pairs if p.kind.is_one_way for r in (p.role_a, p.role_b)}
        object.__setattr__(self, "one_way_roles", frozenset(in_one_way - in_mutual))

    @property
    def unpaired_roles(self) -> tuple[str, ...]:
        """Roles that belong to no mutual pair."""
        in_mutual = {r for p in self.mutual_pairs for r in (p.role_a, p.role_b)}
        return tuple(r for r in self.roles if r not in in_mutual)

    def pair(self, a: str, b: str) -> PairClassification:
        a, b = sorted((a, b))
        for p in self.pairs:
            if p.role_a == a and p.role_b == b:
                return p
        raise KeyError((a, b))

    def edge(self, from_role: str, to_role: str) -> DependencyEdge:
        for e in self.edges:
            if e.from_role == from_role and e.to_role == to_role:
                return e
        raise KeyError((from_role, to_role))


def check_threshold(threshold) -> Fraction:
    """Validate a percent threshold in (0, 100] and return it exactly.

    The decimal text of the float is used (55.1 -> 551/10) so an inclusive
    comparison against one-decimal values behaves as written.
    """
    try:
        value = float(threshold)
    except (TypeError, ValueError):
        raise BadThreshold(f"threshold must be a number, got {threshold!r}") from None
    if math.isnan(value) or not 0 < value <= 100:
        raise BadThreshold(f"threshold must be in (0, 100], got {threshold!r}")
    return Fraction(repr(value))


def pair_dependency(vec_a: RoleVector, vec_b: RoleVector):
    """Return ``(P(b|a), P(a|b), val_common)``; percentages unrounded."""
    if len(vec_a) != len(vec_b):
        raise LengthMismatch(f"vector lengths differ: {len(vec_a)} vs {len(vec_b)}")
    if vec_a.level != vec_b.level:
        raise LevelMismatch(f"vector levels differ: {vec_a.level.value} vs {vec_b.level.value}")
    common = int(np.count_nonzero(vec_a.bits & vec_b.bits))
    return (
        percentage(common, vec_a.popcount),
        percentage(common, vec_b.popcount),
        common,
    )


def _kind(t_ab: int, t_ba: int, threshold: Fraction) -> Kind:
    ab = Fraction(t_ab, 10) >= threshold
    ba = Fraction(t_ba, 10) >= threshold
    if ab and ba:
        return Kind.MUTUAL
    if ab:
        return Kind.ONE_WAY_A_TO_B
    if ba:
        return Kind.ONE_WAY_B_TO_A
    return Kind.INDEPENDENT


def classify_pairs(matrix: RoleIncidenceMatrix, threshold=DEFAULT_THRESHOLD) -> AnalysisReport:
    """Compute every ordered edge and classify every unordered role pair."""
    exact = check_threshold(threshold)
    if len(matrix.columns) < 2:
        raise ValueError("need at least two roles to classify pairs")

    # columns sorted so that role_a < role_b holds by index order
    order = sorted(range(len(matrix.columns)), key=lambda j: matrix.columns[j])
    roles = tuple(matrix.columns[j] for j in order)
    counts = _kernels.cooccurrence(matrix.cells[:, order])
    pop = np.diag(counts)

    edges = []
    pairs = []
    n = len(roles)
    for i in range(n):
        for j in range(n):
            if i != j:
                edges.append(DependencyEdge(roles[i], roles[j], int(counts[i, j]), int(pop[i])))
    for i in range(n):
        for j in range(i + 1, n):
            common = int(counts[i, j])
            t_ab = rounded_tenths(common, int(pop[i]))
            t_ba = rounded_tenths(common, int(pop[j]))
            pairs.append(
                PairClassification(roles[i], roles[j], t_ab / 10, t_ba / 10, _kind(t_ab, t_ba, exact))
            )

    return AnalysisReport(
        threshold=float(threshold),
        level=matrix.level,
        roles=roles,
        edges=tuple(edges),
        pairs=tuple(pairs),
    )


def mutual_pairs(report: AnalysisReport):
    """``[(a, b, p_ab, p_ba), ...]`` for mutual pairs, sorted by role names."""
    return sorted((p.role_a, p.role_b, p.p_ab, p.p_ba) for p in report.mutual_pairs)
