"""Kashiwara operators on charged multipartitions and the crystal they generate."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .multipartition import (
    Multicharge,
    Multipartition,
    Node,
    _check_level,
    component_addable,
    component_removable,
    content,
)

ADDABLE = "A"
REMOVABLE = "R"


class Letter(NamedTuple):
    node: Node
    tag: str


@dataclass(frozen=True)
class SignatureWord:
    """The addable/removable i-nodes of a multipartition in increasing order."""

    letters: tuple[Letter, ...]

    def __str__(self) -> str:
        return "".join(x.tag for x in self.letters)


@dataclass(frozen=True)
class ReducedWord:
    """What survives of a signature word once every ``RA`` factor is deleted: ``A^p R^q``."""

    surviving_addable: tuple[Node, ...]
    surviving_removable: tuple[Node, ...]

    @property
    def p(self) -> int:
        return len(self.surviving_addable)

    @property
    def q(self) -> int:
        return len(self.surviving_removable)

    def __str__(self) -> str:
        return ADDABLE * self.p + REMOVABLE * self.q


def order_key(node: Node, charge: Multicharge) -> tuple[int, int]:
    # equal content: the larger component comes first
    return (content(node, charge), -node.comp)


def precedes(g1: Node, g2: Node, charge: Multicharge) -> bool:
    return order_key(g1, charge) < order_key(g2, charge)


def signature_word(mp: Multipartition, charge: Multicharge, i: int) -> SignatureWord:
    _check_level(mp, charge)
    e = charge.e
    i %= e
    keyed = []
    for c, lam in enumerate(mp.components, 1):
        s = charge.entries[c - 1]
        seen = set()
        for tag, slots in ((ADDABLE, component_addable(lam)), (REMOVABLE, component_removable(lam))):
            for a, b in slots:
                cont = b - a + s
                assert cont not in seen, "two i-nodes of one component on the same diagonal"
                seen.add(cont)
                if cont % e == i:
                    keyed.append(((cont, -c), Letter(Node(a, b, c), tag)))
    keyed.sort(key=lambda kv: kv[0])
    return SignatureWord(tuple(letter for _, letter in keyed))


def reduce_word(word: SignatureWord) -> ReducedWord:
    """Delete ``RA`` factors.  An ``A`` cancels the most recent unmatched ``R``."""
    addable = []
    pending_r = []
    for node, tag in word.letters:
        if tag == REMOVABLE:
            pending_r.append(node)
        elif pending_r:
            pending_r.pop()
        else:
            addable.append(node)
    return ReducedWord(tuple(addable), tuple(pending_r))


def good_addable(mp: Multipartition, charge: Multicharge, i: int) -> Optional[Node]:
    red = reduce_word(signature_word(mp, charge, i))
    return red.surviving_addable[-1] if red.p else None


def good_removable(mp: Multipartition, charge: Multicharge, i: int) -> Optional[Node]:
    red = reduce_word(signature_word(mp, charge, i))
    return red.surviving_removable[0] if red.q else None


def f_op(mp: Optional[Multipartition], charge: Multicharge, i: int) -> Optional[Multipartition]:
    if mp is None:
        return None
    node = good_addable(mp, charge, i)
    return None if node is None else mp.add_node(node)


def e_op(mp: Optional[Multipartition], charge: Multicharge, i: int) -> Optional[Multipartition]:
    if mp is None:
        return None
    node = good_removable(mp, charge, i)
    return None if node is None else mp.remove_node(node)


def hw_reduce(mp: Multipartition, charge: Multicharge) -> tuple[Multipartition, tuple[int, ...]]:
    """Climb to a highest-weight vertex, always removing at the smallest admissible residue.

    Returns the vertex reached and the residues in removal order, so that when
    the vertex is empty ``f_{i_1} ... f_{i_n}`` applied to it gives back ``mp``.
    """
    _check_level(mp, charge)
    path = []
    current = mp
    while True:
        for i in range(charge.e):
            node = good_removable(current, charge, i)
            if node is not None:
                current = current.remove_node(node)
                path.append(i)
                break
        else:
            return current, tuple(path)


def is_uglov(mp: Multipartition, charge: Multicharge) -> bool:
    top, _ = hw_reduce(mp, charge)
    return top.rank == 0


class Arrow(NamedTuple):
    source: Multipartition
    i: int
    target: Multipartition


@dataclass
class CrystalGraph:
    """The connected component of the empty multipartition, truncated at ``n_max``."""

    charge: Multicharge
    n_max: int
    ranks: list[list[Multipartition]] = field(default_factory=list)
    arrows: list[Arrow] = field(default_factory=list)

    @property
    def vertices(self) -> set[Multipartition]:
        return {v for layer in self.ranks for v in layer}

    def layer(self, n: int) -> list[Multipartition]:
        return self.ranks[n]

    def to_json(self) -> str:
        doc = {
            "e": self.charge.e,
            "charge": list(self.charge.entries),
            "ranks": [[str(v) for v in layer] for layer in self.ranks],
            "arrows": [{"from": str(a.source), "i": a.i, "to": str(a.target)} for a in self.arrows],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_dot(self) -> str:
        lines = [f'digraph "crystal e={self.charge.e} s=({self.charge})" {{']
        for layer in self.ranks:
            for v in layer:
                lines.append(f'  "{v}";')
        for a in self.arrows:
            lines.append(f'  "{a.source}" -> "{a.target}" [label={a.i}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(charge: Multicharge, n_max: int) -> CrystalGraph:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    root = Multipartition.empty(charge.l)
    graph = CrystalGraph(charge, n_max, ranks=[[root]])
    layer = [root]
    for _ in range(n_max):
        found = {}
        for v in layer:
            for i in range(charge.e):
                w = f_op(v, charge, i)
                if w is not None:
                    graph.arrows.append(Arrow(v, i, w))
                    found.setdefault(str(w), w)
        layer = [found[k] for k in sorted(found)]
        graph.ranks.append(layer)
    return graph


def uglov_set(charge: Multicharge, n: int) -> list[Multipartition]:
    return crystal_graph(charge, n).layer(n)
