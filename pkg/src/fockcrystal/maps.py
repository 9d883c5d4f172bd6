"""Hu's map, the embeddings iota_k, cyclic orbit data and restriction split counts.

All of these live on charges in the orbit of the canonical charge
``(0, e/l, ..., (l-1)e/l)``.  Where a map has both a closed form at the
canonical charge and a path-replay definition, both are implemented and
``check=True`` asserts that they agree.
"""

from __future__ import annotations

from .charges import same_orbit
from .crystal import is_uglov
from .errors import CrystalError, NotUglovError, OrbitMismatchError
from .iso import extract_path, psi, replay
from .multipartition import Multicharge, Multipartition


def canonical_charge(l: int, e: int) -> Multicharge:
    if l < 1 or e % l:
        raise CrystalError(f"l={l} must divide e={e}")
    return Multicharge(tuple(c * (e // l) for c in range(l)), e)


def _check_admissible(mp: Multipartition, charge: Multicharge) -> Multicharge:
    canon = canonical_charge(charge.l, charge.e)
    if not same_orbit(charge, canon, charge.e):
        raise OrbitMismatchError(f"({charge}) is not in the orbit of ({canon}) at e={charge.e}")
    if mp.level != charge.l:
        raise CrystalError(f"{mp} has {mp.level} components, expected {charge.l}")
    return canon


def cyclic_shift(mp: Multipartition) -> Multipartition:
    """(l1, ..., ll) -> (ll, l1, ..., l_{l-1})."""
    return mp.rotate(-1)


def hu_map_conjugation(mp: Multipartition, charge: Multicharge) -> Multipartition:
    canon = _check_admissible(mp, charge)
    return psi(cyclic_shift(psi(mp, charge, canon)), canon, charge)


def hu_map_replay(mp: Multipartition, charge: Multicharge) -> Multipartition:
    _check_admissible(mp, charge)
    d = charge.e // charge.l
    return replay([i + d for i in extract_path(mp, charge)], charge)


def hu_map(mp: Multipartition, charge: Multicharge, *, check: bool = False) -> Multipartition:
    out = hu_map_conjugation(mp, charge)
    if check:
        other = hu_map_replay(mp, charge)
        assert out == other, f"hu_map disagrees on {mp}: conjugation {out}, replay {other}"
    return out


def iota_source_charge(k: int, l: int, e: int) -> Multicharge:
    """``(0, e/l, ..., (k-1)e/l)`` at level ``ke/l``."""
    if l % k or e % l:
        raise CrystalError(f"need k | l | e, got k={k}, l={l}, e={e}")
    if k * e // l < 2:
        raise CrystalError(f"level k*e/l = {k * e // l} is below 2")
    return Multicharge(tuple(c * (e // l) for c in range(k)), k * e // l)


def _check_iota(mp: Multipartition, k: int, charge: Multicharge) -> Multicharge:
    v = iota_source_charge(k, charge.l, charge.e)
    if mp.level != k:
        raise CrystalError(f"{mp} has {mp.level} components, expected k={k}")
    if not is_uglov(mp, v):
        raise NotUglovError(f"{mp} is not Uglov for e={v.e}, s=({v})")
    _check_admissible(Multipartition.empty(charge.l), charge)
    return v


def iota_direct(mp: Multipartition, k: int, charge: Multicharge) -> Multipartition:
    _check_iota(mp, k, charge)
    canon = canonical_charge(charge.l, charge.e)
    repeated = Multipartition(mp.components * (charge.l // k))
    return psi(repeated, canon, charge)


def iota_replay(mp: Multipartition, k: int, charge: Multicharge) -> Multipartition:
    v = _check_iota(mp, k, charge)
    step, e = v.e, charge.e
    # block for residue i, in application order: i+e-step, i+e-2*step, ..., i
    expanded = []
    for i in extract_path(mp, v):
        expanded.extend((i + m * step) % e for m in range(charge.l // k))
    return replay(expanded, charge)


def iota(mp: Multipartition, k: int, charge: Multicharge, *, check: bool = False) -> Multipartition:
    out = iota_direct(mp, k, charge)
    if check:
        other = iota_replay(mp, k, charge)
        assert out == other, f"iota disagrees on {mp}: direct {out}, replay {other}"
    return out


def r_value(mp: Multipartition) -> int:
    """``l`` over the size of the orbit of ``mp`` under the cyclic shift."""
    l = mp.level
    period = next(d for d in range(1, l + 1) if mp.rotate(d) == mp)
    return l // period


def split_count(mp: Multipartition, charge: Multicharge) -> int:
    canon = _check_admissible(mp, charge)
    return r_value(psi(mp, charge, canon))


def is_in_iota_image(mp: Multipartition, k: int, charge: Multicharge) -> bool:
    if charge.l % k:
        raise CrystalError(f"k={k} does not divide l={charge.l}")
    canon = _check_admissible(mp, charge)
    return psi(mp, charge, canon).rotate(k) == psi(mp, charge, canon)


def divided_charges(N: int, e: int) -> tuple[Multicharge, Multicharge]:
    if e % 2:
        raise CrystalError(f"e={e} must be even for bipartitions")
    if N < 0:
        raise CrystalError("N must be nonnegative")
    return Multicharge((0, e // 2 + N * e), e), Multicharge((N * e, e // 2), e)


def is_divided_bipartition(mp: Multipartition, N: int, e: int) -> bool:
    if mp.level != 2:
        raise CrystalError(f"{mp} is not a bipartition")
    source, target = divided_charges(N, e)
    return psi(mp, source, target) == mp.rotate(1)
