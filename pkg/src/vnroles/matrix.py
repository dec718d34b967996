"""Binary class x role incidence matrices and their per-verb expansion."""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass

import numpy as np

from .errors import AlreadyVerbLevel, LengthMismatch, UnknownRole


class Level(str, enum.Enum):
    CLASS = "class"
    VERB = "verb"


def _frozen(arr):
    arr = np.array(arr, dtype=np.uint8, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RoleIncidenceMatrix:
    """Rows are classes (or verb entries), columns are roles.

    ``member_counts`` is the replication weight of each row: the class
    member count at class level and 1 for every row at verb level.
    """

    class_ids: tuple[str, ...]
    member_counts: tuple[int, ...]
    columns: tuple[str, ...]
    cells: np.ndarray
    level: Level = Level.CLASS

    def __post_init__(self):
        expected = (len(self.class_ids), len(self.columns))
        cells = _frozen(self.cells)
        if cells.size == 0:
            cells = cells.reshape(expected)
        elif cells.shape != expected:
            raise LengthMismatch(f"cells have shape {cells.shape}, expected {expected}")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "level", Level(self.level))
        if len(self.member_counts) != len(self.class_ids):
            raise LengthMismatch("member_counts and class_ids differ in length")
        if self.cells.size and self.cells.max() > 1:
            raise ValueError("incidence cells must be 0 or 1")

    @property
    def shape(self):
        return self.cells.shape

    def column_index(self, role: str) -> int:
        try:
            return self.columns.index(role)
        except ValueError:
            raise UnknownRole(f"role {role!r} not in matrix columns") from None

    def __eq__(self, other):
        if not isinstance(other, RoleIncidenceMatrix):
            return NotImplemented
        return (
            self.class_ids == other.class_ids
            and self.member_counts == other.member_counts
            and self.columns == other.columns
            and self.level == other.level
            and np.array_equal(self.cells, other.cells)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class RoleVector:
    role: str
    bits: np.ndarray
    level: Level

    def __post_init__(self):
        object.__setattr__(self, "bits", _frozen(self.bits).ravel())
        object.__setattr__(self, "level", Level(self.level))

    def __len__(self):
        return len(self.bits)

    @property
    def popcount(self) -> int:
        return int(np.count_nonzero(self.bits))


def class_matrix(classes, inventory) -> RoleIncidenceMatrix:
    """cell(i, j) = 1 iff ``inventory[j]`` is in ``classes[i].frame``."""
    inventory = tuple(inventory)
    index = {role: j for j, role in enumerate(inventory)}
    cells = np.zeros((len(classes), len(inventory)), dtype=np.uint8)
    for i, cls in enumerate(classes):
        for role in cls.frame:
            if role not in index:
                raise UnknownRole(f"{cls.class_id}: role {role!r} missing from inventory")
            cells[i, index[role]] = 1
    return RoleIncidenceMatrix(
        class_ids=tuple(c.class_id for c in classes),
        member_counts=tuple(int(c.member_count) for c in classes),
        columns=inventory,
        cells=cells,
        level=Level.CLASS,
    )


def verb_expand(matrix: RoleIncidenceMatrix) -> RoleIncidenceMatrix:
    """Repeat each class row ``member_count`` times; empty classes drop out."""
    if matrix.level is Level.VERB:
        raise AlreadyVerbLevel("matrix is already expanded to verb level")
    counts = np.asarray(matrix.member_counts, dtype=np.int64)
    ids = tuple(cid for cid, n in zip(matrix.class_ids, matrix.member_counts) for _ in range(n))
    return RoleIncidenceMatrix(
        class_ids=ids,
        member_counts=(1,) * len(ids),
        columns=matrix.columns,
        cells=np.repeat(matrix.cells, counts, axis=0),
        level=Level.VERB,
    )


def role_vector(matrix: RoleIncidenceMatrix, role: str) -> RoleVector:
    j = matrix.column_index(role)
    return RoleVector(role=role, bits=matrix.cells[:, j], level=matrix.level)


def from_role_vectors(vectors, class_ids, member_counts) -> RoleIncidenceMatrix:
    """Reassemble a matrix from its column vectors."""
    vectors = list(vectors)
    levels = {v.level for v in vectors}
    if len(levels) > 1:
        raise ValueError("role vectors come from different levels")
    cells = np.column_stack([v.bits for v in vectors]) if vectors else np.zeros((len(class_ids), 0))
    return RoleIncidenceMatrix(
        class_ids=tuple(class_ids),
        member_counts=tuple(member_counts),
        columns=tuple(v.role for v in vectors),
        cells=cells,
        level=levels.pop() if levels else Level.CLASS,
    )


def format_matrix_csv(matrix: RoleIncidenceMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("class_id",) + matrix.columns)
    for cid, row in zip(matrix.class_ids, matrix.cells):
        writer.writerow([cid, *(int(v) for v in row)])
    return buf.getvalue()
