"""Shared oracles and strategies for the test-suite."""

import random

from hypothesis import strategies as st

from fockcrystal.crystal import good_removable
from fockcrystal.multipartition import Multicharge, Multipartition, Partition

P = Multipartition.parse


def C(text, e):
    return Multicharge.parse(text, e)


def _boxes(lam):
    return {(a, b) for a, p in enumerate(lam.parts, 1) for b in range(1, p + 1)}


def _is_diagram(boxes):
    return all((a == 1 or (a - 1, b) in boxes) and (b == 1 or (a, b - 1) in boxes) for a, b in boxes)


def brute_addable(mp, charge, i):
    """Every cell in a bounding box whose addition leaves a Young diagram."""
    out = []
    for c, lam in enumerate(mp.components, 1):
        boxes = _boxes(lam)
        for a in range(1, len(lam) + 2):
            for b in range(1, lam.part(1) + 2):
                if (a, b) not in boxes and _is_diagram(boxes | {(a, b)}):
                    if (b - a + charge[c]) % charge.e == i % charge.e:
                        out.append((a, b, c))
    return out


def brute_removable(mp, charge, i):
    out = []
    for c, lam in enumerate(mp.components, 1):
        boxes = _boxes(lam)
        for a, b in sorted(boxes):
            if _is_diagram(boxes - {(a, b)}) and (b - a + charge[c]) % charge.e == i % charge.e:
                out.append((a, b, c))
    return out


def random_removal_path(mp, charge, rng):
    """Climb with a random admissible residue at each step; returns (top, path)."""
    path = []
    while True:
        options = [(i, n) for i in range(charge.e) if (n := good_removable(mp, charge, i)) is not None]
        if not options:
            return mp, tuple(path)
        i, node = rng.choice(options)
        mp = mp.remove_node(node)
        path.append(i)


def partition_st(max_rank=8, max_parts=5):
    return st.lists(st.integers(1, max_rank), max_size=max_parts).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )


def multipartition_st(l, max_rank=6):
    return st.tuples(*[partition_st(max_rank, 4) for _ in range(l)]).map(Multipartition)


def seeded(seed=0):
    return random.Random(seed)
