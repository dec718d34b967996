"""Reading the VerbNet XML distribution into an immutable class forest.

Only the parts needed for role analysis are kept: class ids, member lemmas,
thematic role names and the subclass structure.  Frames, semantic predicates
and selectional restrictions are skipped.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .errors import DuplicateClassId, MalformedXml, MissingPath


@dataclass(frozen=True)
class VerbClass:
    """A VNCLASS or VNSUBCLASS node.

    ``own_roles`` holds only the roles declared in this node's THEMROLES
    block; inherited roles are resolved by :mod:`vnroles.reduction`.
    """

    class_id: str
    members: tuple[str, ...] = ()
    own_roles: frozenset[str] = frozenset()
    subclasses: tuple["VerbClass", ...] = ()

    def __post_init__(self):
        if not self.class_id or not self.class_id.strip():
            raise ValueError("class_id must be non-empty")

    def walk(self) -> Iterator["VerbClass"]:
        """Pre-order traversal of this node and its descendants."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.subclasses))


@dataclass(frozen=True)
class Lexicon:
    roots: tuple[VerbClass, ...] = ()
    role_inventory: tuple[str, ...] = field(default=())

    @classmethod
    def from_roots(cls, roots) -> "Lexicon":
        """Build a lexicon, deriving the role inventory and checking ids."""
        roots = tuple(roots)
        seen = set()
        roles = set()
        for root in roots:
            for node in root.walk():
                if node.class_id in seen:
                    raise DuplicateClassId(node.class_id)
                seen.add(node.class_id)
                roles.update(node.own_roles)
        return cls(roots=roots, role_inventory=tuple(sorted(roles)))

    def iter_classes(self) -> Iterator[VerbClass]:
        for root in self.roots:
            yield from root.walk()

    def iter_paths(self) -> Iterator[tuple[VerbClass, ...]]:
        """Yield the root-to-node path for every class, in document order."""

        def visit(node, prefix):
            path = prefix + (node,)
            yield path
            for sub in node.subclasses:
                yield from visit(sub, path)

        for root in self.roots:
            yield from visit(root, ())

    def find(self, class_id: str) -> VerbClass:
        for node in self.iter_classes():
            if node.class_id == class_id:
                return node
        raise KeyError(class_id)

    @property
    def class_count(self) -> int:
        return sum(1 for _ in self.iter_classes())


def _role_name(raw):
    return raw.strip() if raw else ""


def _read_class(elem: ET.Element, filename: str) -> VerbClass:
    class_id = (elem.get("ID") or "").strip()
    if not class_id:
        raise MalformedXml(filename, f"<{elem.tag}> without ID attribute")

    members = []
    members_el = elem.find("MEMBERS")
    if members_el is not None:
        for m in members_el.findall("MEMBER"):
            name = (m.get("name") or "").strip()
            if name:
                members.append(name)

    roles = set()
    roles_el = elem.find("THEMROLES")
    if roles_el is not None:
        for r in roles_el.findall("THEMROLE"):
            name = _role_name(r.get("type"))
            if name:
                roles.add(name)

    subclasses = []
    subs_el = elem.find("SUBCLASSES")
    if subs_el is not None:
        for sub in subs_el.findall("VNSUBCLASS"):
            subclasses.append(_read_class(sub, filename))

    return VerbClass(
        class_id=class_id,
        members=tuple(members),
        own_roles=frozenset(roles),
        subclasses=tuple(subclasses),
    )


def parse_class_file(path) -> VerbClass:
    """Parse one VerbNet class file and return its root node."""
    path = Path(path)
    try:
        tree = ET.parse(path)
    except ET.ParseError as exc:
        raise MalformedXml(path.name, str(exc)) from None
    root = tree.getroot()
    if root.tag != "VNCLASS":
        raise MalformedXml(path.name, f"expected <VNCLASS> root, found <{root.tag}>")
    return _read_class(root, path.name)


def parse_lexicon(path) -> Lexicon:
    """Read every ``*.xml`` file directly inside ``path`` as a root class.

    Files are read in sorted filename order so repeated parses give equal
    lexicons.  Subdirectories are not searched.
    """
    path = Path(path)
    if not path.is_dir():
        raise MissingPath(f"VerbNet directory not found: {path}")
    files = sorted(
        p for p in path.iterdir() if p.suffix.lower() == ".xml" and p.is_file()
    )
    if not files:
        raise MissingPath(f"no VerbNet XML files in {path}")
    return Lexicon.from_roots(parse_class_file(f) for f in files)


def role_inventory(lexicon: Lexicon) -> list[str]:
    roles = set()
    for node in lexicon.iter_classes():
        roles.update(node.own_roles)
    return sorted(roles)


def count_members(lexicon: Lexicon) -> int:
    """Total member entries; a lemma listed in k classes counts k times."""
    return sum(len(node.members) for node in lexicon.iter_classes())
