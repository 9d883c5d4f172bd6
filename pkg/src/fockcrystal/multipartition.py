"""Partitions, multipartitions, nodes and multicharges.

Components are numbered from 1, so a node is ``(row, col, comp)`` with all
three coordinates 1-based.  The text format is the one used throughout the
package and the CLI::

    "4.3.1"       a partition
    "-"           the empty partition
    "2.1|-|1"     a 3-multipartition
    "0,0,1"       a multicharge
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidLevelError, InvalidNodeError, ParseError

EMPTY = "-"
PART_SEP = "."
COMP_SEP = "|"
CHARGE_SEP = ","


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros are dropped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for k, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition {parts} has a non-positive part")
            if k and parts[k - 1] < p:
                raise ValueError(f"partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def rank(self) -> int:
        return sum(self.parts)

    def part(self, row: int) -> int:
        """Length of ``row`` (1-based), 0 beyond the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return PART_SEP.join(map(str, self.parts)) if self.parts else EMPTY

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"

    @classmethod
    def parse(cls, text: str, offset: int = 0) -> "Partition":
        """Parse ``"4.3.1"`` or ``"-"``.  ``offset`` shifts reported columns."""
        if text == EMPTY:
            return cls()
        if not text:
            raise ParseError("empty partition field (use '-')", offset + 1)
        col = offset
        parts = []
        for field in text.split(PART_SEP):
            if not re.fullmatch(r"[0-9]+", field):
                raise ParseError(f"bad part {field!r}", col + 1)
            parts.append(int(field))
            col += len(field) + 1
        try:
            return cls(tuple(parts))
        except ValueError as exc:
            raise ParseError(str(exc), offset + 1) from None


@dataclass(frozen=True)
class Multipartition:
    """An ordered tuple of ``l >= 1`` partitions."""

    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def empty(cls, l: int) -> "Multipartition":
        return cls((Partition(),) * l)

    @classmethod
    def of(cls, *components: Iterable[int]) -> "Multipartition":
        """``Multipartition.of([4], [2, 1])``."""
        return cls(tuple(Partition(tuple(c)) for c in components))

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    def __getitem__(self, c: int) -> Partition:
        """Component ``c`` (1-based)."""
        if not 1 <= c <= len(self.components):
            raise IndexError(c)
        return self.components[c - 1]

    def __str__(self) -> str:
        return COMP_SEP.join(str(c) for c in self.components)

    def __repr__(self) -> str:
        return f"Multipartition({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Multipartition":
        comps = []
        col = 0
        for field in text.split(COMP_SEP):
            comps.append(Partition.parse(field, col))
            col += len(field) + 1
        return cls(tuple(comps))

    def add_node(self, node: "Node") -> "Multipartition":
        comps = list(self.components)
        lam = comps[node.comp - 1]
        if lam.part(node.row) != node.col - 1 or (node.row > 1 and lam.part(node.row - 1) < node.col):
            raise InvalidNodeError(f"{node} is not addable to {self}")
        parts = list(lam.parts) + [0]
        parts[node.row - 1] += 1
        comps[node.comp - 1] = Partition(tuple(parts))
        return Multipartition(tuple(comps))

    def remove_node(self, node: "Node") -> "Multipartition":
        comps = list(self.components)
        lam = comps[node.comp - 1]
        if lam.part(node.row) != node.col or lam.part(node.row + 1) >= node.col:
            raise InvalidNodeError(f"{node} is not removable from {self}")
        parts = list(lam.parts)
        parts[node.row - 1] -= 1
        comps[node.comp - 1] = Partition(tuple(parts))
        return Multipartition(tuple(comps))

    def rotate(self, k: int = 1) -> "Multipartition":
        """Rotate components left by ``k``: (l1, l2, ..., ll) -> (l2, ..., ll, l1) for k=1."""
        comps = self.components
        k %= len(comps)
        return Multipartition(comps[k:] + comps[:k])


class Node(NamedTuple):
    row: int
    col: int
    comp: int

    def __str__(self) -> str:
        return f"({self.row},{self.col},{self.comp})"


@dataclass(frozen=True)
class Multicharge:
    """A charge ``(s_1, ..., s_l)`` together with the level ``e``."""

    entries: tuple[int, ...]
    e: int

    def __post_init__(self):
        entries = tuple(int(s) for s in self.entries)
        if not entries:
            raise ValueError("a multicharge needs at least one entry")
        if self.e < 2:
            raise InvalidLevelError(f"level e={self.e} must be at least 2")
        object.__setattr__(self, "entries", entries)

    @property
    def l(self) -> int:
        return len(self.entries)

    def __getitem__(self, c: int) -> int:
        """Entry ``s_c`` (1-based)."""
        if not 1 <= c <= len(self.entries):
            raise IndexError(c)
        return self.entries[c - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return CHARGE_SEP.join(map(str, self.entries))

    def shifted(self, d: int) -> "Multicharge":
        """Every entry increased by ``d``."""
        return Multicharge(tuple(s + d for s in self.entries), self.e)

    @classmethod
    def parse(cls, text: str, e: int) -> "Multicharge":
        entries = []
        col = 0
        for field in text.split(CHARGE_SEP):
            if not re.fullmatch(r"-?[0-9]+", field.strip()):
                raise ParseError(f"bad charge entry {field!r}", col + 1)
            entries.append(int(field))
            col += len(field) + 1
        return cls(tuple(entries), e)


def content(node: Node, charge: Multicharge) -> int:
    if not 1 <= node.comp <= charge.l:
        raise InvalidNodeError(f"component {node.comp} out of range for a level-{charge.l} charge")
    return node.col - node.row + charge.entries[node.comp - 1]


def residue(node: Node, charge: Multicharge) -> int:
    return content(node, charge) % charge.e


def _check_level(mp: Multipartition, charge: Multicharge) -> None:
    if mp.level != charge.l:
        raise InvalidNodeError(f"{mp} has {mp.level} components but the charge has {charge.l} entries")


def component_addable(lam: Partition) -> list[tuple[int, int]]:
    """(row, col) of every addable slot of a single partition."""
    out = []
    prev = None
    for row in range(1, len(lam) + 2):
        p = lam.part(row)
        if row == 1 or prev > p:
            out.append((row, p + 1))
        prev = p
    return out


def component_removable(lam: Partition) -> list[tuple[int, int]]:
    """(row, col) of every removable box of a single partition."""
    return [(row, p) for row, p in enumerate(lam.parts, 1) if lam.part(row + 1) < p]


def addable_nodes(mp: Multipartition, charge: Multicharge, i: int) -> list[Node]:
    _check_level(mp, charge)
    i %= charge.e
    out = []
    for c, lam in enumerate(mp.components, 1):
        s = charge.entries[c - 1]
        out.extend(Node(a, b, c) for a, b in component_addable(lam) if (b - a + s) % charge.e == i)
    return out


def removable_nodes(mp: Multipartition, charge: Multicharge, i: int) -> list[Node]:
    _check_level(mp, charge)
    i %= charge.e
    out = []
    for c, lam in enumerate(mp.components, 1):
        s = charge.entries[c - 1]
        out.extend(Node(a, b, c) for a, b in component_removable(lam) if (b - a + s) % charge.e == i)
    return out


def is_e_regular(p: Partition | Sequence[int], e: int) -> bool:
    if e < 2:
        raise InvalidLevelError(f"level e={e} must be at least 2")
    parts = tuple(p)
    run = 1
    for k in range(1, len(parts)):
        run = run + 1 if parts[k] == parts[k - 1] else 1
        if run >= e:
            return False
    return True


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def multipartitions(l: int, n: int) -> Iterator[Multipartition]:
    """All ``l``-multipartitions of rank ``n``."""

    def rec(k, rest):
        if k == 1:
            for p in partitions(rest):
                yield (p,)
            return
        for first in range(rest, -1, -1):
            for p in partitions(first):
                for tail in rec(k - 1, rest - first):
                    yield (p,) + tail

    for comps in rec(l, n):
        yield Multipartition(comps)
