"""Semantic-role co-occurrence analysis over the VerbNet lexicon."""

from .dependency import (
    AnalysisReport,
    DependencyEdge,
    Kind,
    PairClassification,
    classify_pairs,
    mutual_pairs,
    pair_dependency,
)
from .events import (
    EventTemplate,
    NumericValue,
    OrdinalValue,
    ScalarChange,
    Side,
    classify_side,
    make_manner_event,
    make_result_event,
)
from .lexicon import Lexicon, VerbClass, count_members, parse_lexicon, role_inventory
from .matrix import Level, RoleIncidenceMatrix, RoleVector, class_matrix, role_vector, verb_expand
from .pipeline import analyse, build_matrix, lexicon_stats
from .reduction import EffectiveClass, effective_classes, inherited_frame

__version__ = "0.1.0"
