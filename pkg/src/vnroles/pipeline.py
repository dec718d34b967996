"""End-to-end wiring: lexicon -> effective classes -> matrix -> report."""

from __future__ import annotations

from dataclasses import dataclass

from .dependency import DEFAULT_THRESHOLD, AnalysisReport, classify_pairs
from .lexicon import Lexicon, count_members, role_inventory
from .matrix import Level, RoleIncidenceMatrix, class_matrix, verb_expand
from .reduction import EffectiveClass, effective_classes, retained_subclasses


@dataclass(frozen=True)
class LexiconStats:
    classes: int
    roots: int
    effective: int
    retained_subclasses: int
    roles: int
    members: int

    def as_dict(self):
        return dict(self.__dict__)


def lexicon_stats(lexicon: Lexicon, classes=None) -> LexiconStats:
    if classes is None:
        classes = effective_classes(lexicon)
    return LexiconStats(
        classes=lexicon.class_count,
        roots=len(lexicon.roots),
        effective=len(classes),
        retained_subclasses=len(retained_subclasses(classes)),
        roles=len(role_inventory(lexicon)),
        members=count_members(lexicon),
    )


def build_matrix(lexicon: Lexicon, level=Level.VERB, classes: list[EffectiveClass] | None = None) -> RoleIncidenceMatrix:
    if classes is None:
        classes = effective_classes(lexicon)
    matrix = class_matrix(classes, role_inventory(lexicon))
    return verb_expand(matrix) if Level(level) is Level.VERB else matrix


def analyse(lexicon: Lexicon, threshold=DEFAULT_THRESHOLD, level=Level.VERB) -> AnalysisReport:
    return classify_pairs(build_matrix(lexicon, level), threshold)
