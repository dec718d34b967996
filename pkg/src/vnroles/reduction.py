"""Merging subclasses that add no roles into their nearest retained ancestor."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyPath
from .lexicon import Lexicon, VerbClass


@dataclass(frozen=True)
class EffectiveClass:
    """One analysis unit after reduction.

    ``member_count`` covers the class's own members plus those of every
    descendant merged into it; ``frame`` is the full inherited role set.
    """

    class_id: str
    member_count: int
    frame: frozenset[str]
    is_root: bool = True


def inherited_frame(class_path) -> frozenset[str]:
    """Union of ``own_roles`` along a root-to-node path."""
    if not class_path:
        raise EmptyPath("class path must contain at least the root class")
    frame = set()
    for node in class_path:
        frame.update(node.own_roles)
    return frozenset(frame)


def effective_classes(lexicon: Lexicon) -> list[EffectiveClass]:
    """Depth-first reduction of every root in document order.

    A subclass is kept as its own unit only when its inherited frame is a
    strict superset of the frame of its nearest retained ancestor; otherwise
    its members are credited to that ancestor.  The search always descends
    below merged subclasses too.
    """
    units = []  # [class_id, member_count, frame, is_root], mutated in place

    def visit(node: VerbClass, frame: frozenset, owner):
        frame = frame | node.own_roles
        if owner is None or frame > owner[2]:
            owner = [node.class_id, 0, frame, owner is None]
            units.append(owner)
        owner[1] += len(node.members)
        for sub in node.subclasses:
            visit(sub, frame, owner)

    for root in lexicon.roots:
        visit(root, frozenset(), None)

    return [EffectiveClass(cid, n, frame, is_root) for cid, n, frame, is_root in units]


def retained_subclasses(classes) -> list[EffectiveClass]:
    return [c for c in classes if not c.is_root]


def format_classes_tsv(classes) -> str:
    """``class_id<TAB>member_count<TAB>role,role,...`` per line, roles sorted."""
    lines = [
        f"{c.class_id}\t{c.member_count}\t{','.join(sorted(c.frame))}" for c in classes
    ]
    return "".join(line + "\n" for line in lines)

