"""The extended affine symmetric group acting on multicharges.

Generators act on the left of ``s = (s_1, ..., s_l)``::

    sigma_c . s = s with entries c and c+1 swapped
    y_i . s     = s with e added to entry i
    tau . s     = (s_2, ..., s_l, s_1 + e)

Words are tuples of tokens ``"s1" ... "s{l-1}"``, ``"t"`` (tau) and ``"T"``
(tau inverse), applied to a charge from left to right.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import CrystalError, NotApplicableError
from .multipartition import Multicharge, Multipartition, _check_level


def act_sigma(charge: Multicharge, c: int) -> Multicharge:
    if not 1 <= c <= charge.l - 1:
        raise CrystalError(f"sigma_{c} is not a generator at level {charge.l}")
    s = list(charge.entries)
    s[c - 1], s[c] = s[c], s[c - 1]
    return Multicharge(tuple(s), charge.e)


def act_y(charge: Multicharge, i: int) -> Multicharge:
    if not 1 <= i <= charge.l:
        raise CrystalError(f"y_{i} is not a generator at level {charge.l}")
    s = list(charge.entries)
    s[i - 1] += charge.e
    return Multicharge(tuple(s), charge.e)


def act_tau(charge: Multicharge) -> Multicharge:
    s = charge.entries
    return Multicharge(s[1:] + (s[0] + charge.e,), charge.e)


def act_tau_inverse(charge: Multicharge) -> Multicharge:
    s = charge.entries
    return Multicharge((s[-1] - charge.e,) + s[:-1], charge.e)


@dataclass(frozen=True)
class GeneratorWord:
    tokens: tuple[str, ...] = ()

    def apply(self, charge: Multicharge) -> Multicharge:
        for tok in self.tokens:
            if tok == "t":
                charge = act_tau(charge)
            elif tok == "T":
                charge = act_tau_inverse(charge)
            elif tok.startswith("s") and tok[1:].isdigit():
                charge = act_sigma(charge, int(tok[1:]))
            else:
                raise ValueError(f"unknown generator token {tok!r}")
        return charge

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return " ".join(self.tokens)


def _entries(s) -> tuple[int, ...]:
    return tuple(s.entries) if isinstance(s, Multicharge) else tuple(s)


def same_orbit(s1: Multicharge | Sequence[int], s2: Multicharge | Sequence[int], e: int) -> bool:
    a, b = _entries(s1), _entries(s2)
    if len(a) != len(b):
        raise CrystalError(f"charges of different lengths: {a} and {b}")
    return Counter(x % e for x in a) == Counter(x % e for x in b)


def _shift_first(l: int, up: bool) -> list[str]:
    # y_1 = tau then rotate back; y_1^-1 = rotate forward then tau^-1
    forward = [f"s{c}" for c in range(1, l)]
    if up:
        return ["t"] + forward[::-1]
    return forward + ["T"]


_INVERSE = {"t": "T", "T": "t"}


def _cancel(tokens: list[str]) -> tuple[str, ...]:
    """Drop adjacent ``s_c s_c`` and ``t T`` pairs."""
    out: list[str] = []
    for tok in tokens:
        if out and _INVERSE.get(out[-1], out[-1]) == tok:
            out.pop()
        else:
            out.append(tok)
    return tuple(out)


def to_fundamental(charge: Multicharge) -> tuple[Multicharge, GeneratorWord]:
    """The representative of the orbit in ``0 <= s_1 <= ... <= s_l < e``, and a word reaching it."""
    l, e = charge.l, charge.e
    tokens: list[str] = []
    current = charge
    for j in range(1, l + 1):
        # bring entry j to the front, shift it into [0, e), put it back
        to_front = [f"s{c}" for c in range(j - 1, 0, -1)]
        back = to_front[::-1]
        q = current[j] // e
        if q == 0:
            continue
        step = _shift_first(l, up=q < 0)
        seq = to_front + step * abs(q) + back
        tokens += seq
        current = GeneratorWord(tuple(seq)).apply(current)
    # bubble sort with adjacent swaps
    s = list(current.entries)
    for end in range(l - 1, 0, -1):
        for c in range(1, end + 1):
            if s[c - 1] > s[c]:
                s[c - 1], s[c] = s[c], s[c - 1]
                tokens.append(f"s{c}")
    word = GeneratorWord(_cancel(tokens))
    target = Multicharge(tuple(sorted(x % e for x in charge.entries)), e)
    if word.apply(charge) != target:
        raise AssertionError(f"word {word} does not carry {charge} to {target}")
    return target, word


def in_fundamental_domain(charge: Multicharge) -> bool:
    s = charge.entries
    return 0 <= s[0] and s[-1] < charge.e and all(x <= y for x, y in zip(s, s[1:]))


def flotw_applicable(charge: Multicharge) -> bool:
    s = charge.entries
    return all(0 < s[j] - s[i] < charge.e for i in range(len(s)) for j in range(i + 1, len(s)))


def is_flotw(mp: Multipartition, charge: Multicharge) -> bool:
    """Non-recursive Uglov test, valid when ``0 < s_j - s_i < e`` for all ``i < j``."""
    _check_level(mp, charge)
    if not flotw_applicable(charge):
        raise NotApplicableError(f"charge ({charge}) is outside the FLOTW hypothesis 0 < s_j - s_i < e")
    l, e, s = charge.l, charge.e, charge.entries
    lam = mp.components
    for j in range(l - 1):
        gap = s[j + 1] - s[j]
        if any(lam[j].part(i) < lam[j + 1].part(i + gap) for i in range(1, len(lam[j + 1]) + 1)):
            return False
    gap = e + s[0] - s[-1]
    if any(lam[-1].part(i) < lam[0].part(i + gap) for i in range(1, len(lam[0]) + 1)):
        return False
    ends: dict[int, set[int]] = {}
    for j, p in enumerate(lam):
        for i, k in enumerate(p.parts, 1):
            ends.setdefault(k, set()).add((k - i + s[j]) % e)
    return all(len(res) < e for res in ends.values())


def is_very_dominant(charge: Multicharge | Sequence[int], n: int, e: int | None = None) -> bool:
    """``s_j - s_i >= n - 1 - e`` for all ``i < j``."""
    if e is None:
        e = charge.e
    s = _entries(charge)
    return all(s[j] - s[i] >= n - 1 - e for i in range(len(s)) for j in range(i + 1, len(s)))
