"""Crystal isomorphisms between Uglov sets of orbit-equivalent multicharges.

A vertex is carried to the other crystal by reading off a path of residues
that builds it from the empty multipartition, then replaying the same
residues under the new charge.
"""

from __future__ import annotations

from typing import Sequence

from .charges import same_orbit
from .crystal import f_op, hw_reduce
from .errors import NotUglovError, OrbitMismatchError, UndefinedStepError
from .multipartition import Multicharge, Multipartition


def extract_path(mp: Multipartition, charge: Multicharge) -> tuple[int, ...]:
    """Residues ``(i_1, ..., i_n)`` with ``f_{i_1} ... f_{i_n}(empty) == mp``."""
    top, path = hw_reduce(mp, charge)
    if top.rank:
        raise NotUglovError(f"{mp} is not Uglov for e={charge.e}, s=({charge}): stuck at {top}")
    return path


def replay(path: Sequence[int], charge: Multicharge) -> Multipartition:
    """Apply ``f_{i_n}`` first and ``f_{i_1}`` last to the empty multipartition."""
    mp = Multipartition.empty(charge.l)
    for step, i in enumerate(reversed(path)):
        nxt = f_op(mp, charge, i)
        if nxt is None:
            raise UndefinedStepError(f"f_{i % charge.e} vanishes on {mp} (step {step}) under s=({charge})")
        mp = nxt
    return mp


def psi(mp: Multipartition, source: Multicharge, target: Multicharge) -> Multipartition:
    if source.e != target.e or not same_orbit(source, target, source.e):
        raise OrbitMismatchError(f"({source}) and ({target}) are not in the same orbit at e={source.e}")
    return replay(extract_path(mp, source), target)


def tau_shortcut(mp: Multipartition) -> Multipartition:
    return mp.rotate(1)
