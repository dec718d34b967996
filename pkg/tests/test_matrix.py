import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracle import random_lexicon
from vnroles.errors import AlreadyVerbLevel, UnknownRole
from vnroles.lexicon import role_inventory
from vnroles.matrix import (
    Level,
    RoleIncidenceMatrix,
    class_matrix,
    format_matrix_csv,
    from_role_vectors,
    role_vector,
    verb_expand,
)
from vnroles.reduction import EffectiveClass, effective_classes


def ec(cid, n, *roles):
    return EffectiveClass(cid, n, frozenset(roles))


@pytest.fixture
def three_rows():
    # rows (c1, n=2, [1,0]), (c2, n=0, [0,1]), (c3, n=3, [1,1]) over [A, B]
    return class_matrix([ec("c1", 2, "A"), ec("c2", 0, "B"), ec("c3", 3, "A", "B")], ["A", "B"])


def test_single_row():
    m = class_matrix([ec("c", 1, "Agent")], ["Agent", "Theme"])
    assert m.cells.tolist() == [[1, 0]]
    assert m.level is Level.CLASS


def test_unknown_role_in_frame():
    with pytest.raises(UnknownRole):
        class_matrix([ec("c", 1, "Agent", "Goal")], ["Agent"])


def test_break_row(mini_lexicon):
    classes = effective_classes(mini_lexicon)
    m = class_matrix(classes, role_inventory(mini_lexicon))
    row = m.cells[m.class_ids.index("break-45.1")]
    assert {m.columns[j] for j in np.flatnonzero(row)} == {"Agent", "Patient", "Instrument", "Result"}
    assert m.shape == (8, 12)


def test_expand_hand_enumerated(three_rows):
    v = verb_expand(three_rows)
    # hand enumeration: c1 twice, c2 dropped, c3 three times
    assert v.cells.tolist() == [[1, 0], [1, 0], [1, 1], [1, 1], [1, 1]]
    assert v.class_ids == ("c1", "c1", "c3", "c3", "c3")
    assert v.level is Level.VERB


def test_role_vectors_after_expansion(three_rows):
    v = verb_expand(three_rows)
    assert role_vector(v, "A").bits.tolist() == [1, 1, 1, 1, 1]
    assert role_vector(v, "B").bits.tolist() == [0, 0, 1, 1, 1]
    assert role_vector(v, "A").level is Level.VERB


def test_expand_twice_rejected(three_rows):
    with pytest.raises(AlreadyVerbLevel):
        verb_expand(verb_expand(three_rows))


def test_expand_with_unit_counts_is_identity():
    m = class_matrix([ec("a", 1, "X"), ec("b", 1, "Y"), ec("c", 1, "X", "Y")], ["X", "Y"])
    assert np.array_equal(verb_expand(m).cells, m.cells)


def test_absent_role_vector_is_zero():
    m = class_matrix([ec("a", 2, "X")], ["X", "Y"])
    assert role_vector(verb_expand(m), "Y").bits.tolist() == [0, 0]


def test_role_vector_unknown():
    m = class_matrix([ec("a", 2, "X")], ["X"])
    with pytest.raises(UnknownRole):
        role_vector(m, "Y")


def test_cells_are_read_only(three_rows):
    with pytest.raises(ValueError):
        three_rows.cells[0, 0] = 0


def test_rejects_non_binary():
    with pytest.raises(ValueError):
        RoleIncidenceMatrix(("a",), (1,), ("X",), np.array([[2]]))


def test_csv(three_rows):
    assert format_matrix_csv(three_rows) == "class_id,A,B\nc1,1,0\nc2,0,1\nc3,1,1\n"


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_column_popcounts_and_round_trip(seed):
    lex = random_lexicon(random.Random(seed))
    classes = effective_classes(lex)
    inv = role_inventory(lex)
    if not inv:
        return
    m = class_matrix(classes, inv)
    v = verb_expand(m)
    assert v.shape[0] == sum(c.member_count for c in classes)
    for role in inv:
        expected = sum(c.member_count for c in classes if role in c.frame)
        assert role_vector(v, role).popcount == expected
    for mat in (m, v):
        rebuilt = from_role_vectors([role_vector(mat, r) for r in mat.columns], mat.class_ids, mat.member_counts)
        assert rebuilt == mat
