"""Arithmetic in Z_p and exact reachable-sum tables for binary choices.

A list of :class:`ChoicePair` describes ``s`` independent two-way choices;
:func:`reachable_sums` computes, prefix by prefix, every residue obtainable
as ``x_1 + ... + x_i`` with ``x_j`` drawn from pair ``j``, and
:func:`select_sequence` walks the parent links back from a target.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ModulusMismatch, TheoremViolation, Unreachable

FIRST, SECOND = 0, 1


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, order=True)
class ZpElement:
    value: int
    modulus: int

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ZpElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"Z_{self.modulus} vs Z_{other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other):
        return ZpElement(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return ZpElement(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return ZpElement(self._coerce(other) - self.value, self.modulus)

    def __neg__(self):
        return ZpElement(-self.value, self.modulus)

    def __mul__(self, other):
        return ZpElement(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, ZpElement):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class ChoicePair:
    first: ZpElement
    second: ZpElement

    def __post_init__(self):
        if self.first.modulus != self.second.modulus:
            raise ModulusMismatch("pair elements live in different groups")

    @classmethod
    def of(cls, a: int, b: int, p: int) -> "ChoicePair":
        return cls(ZpElement(a, p), ZpElement(b, p))

    @property
    def modulus(self) -> int:
        return self.first.modulus

    @property
    def delta(self) -> ZpElement:
        return self.second - self.first

    @property
    def size(self) -> int:
        return 1 if self.first == self.second else 2

    def __getitem__(self, which: int) -> ZpElement:
        return self.second if which else self.first


@dataclass(frozen=True)
class SumsetTable:
    """Prefix reachable sets with parent links.

    ``reachable[i]`` is a boolean vector over Z_p for the first ``i`` pairs
    (``reachable[0]`` is the indicator of ``{0}``). ``parent[i][v]`` says which
    element of pair ``i`` (0 = first, 1 = second) reaches ``v`` at prefix
    ``i+1``, or -1 if ``v`` is unreachable there.
    """

    modulus: int
    pairs: tuple[ChoicePair, ...]
    reachable: tuple[np.ndarray, ...]
    parent: tuple[np.ndarray, ...]

    def final(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.reachable[-1]).tolist())

    def prefix(self, i: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.reachable[i]).tolist())


def cauchy_davenport_bound(sizes: Sequence[int], p: int) -> int:
    return min(p, sum(sizes) - len(sizes) + 1)


def _modulus_of(pairs: Sequence[ChoicePair]) -> int:
    if not pairs:
        raise ValueError("need at least one pair")
    p = pairs[0].modulus
    for pr in pairs:
        if pr.modulus != p:
            raise ModulusMismatch(f"pairs mix Z_{p} and Z_{pr.modulus}")
    return p


def reachable_sums(pairs: Sequence[ChoicePair]) -> SumsetTable:
    p = _modulus_of(pairs)
    cur = np.zeros(p, dtype=bool)
    cur[0] = True
    reach = [cur]
    parents = []
    sizes = []
    for i, pr in enumerate(pairs):
        a, b = pr.first.value, pr.second.value
        via_a = np.roll(cur, a)
        via_b = np.roll(cur, b)
        par = np.where(via_a, FIRST, np.where(via_b, SECOND, -1)).astype(np.int8)
        cur = via_a | via_b
        reach.append(cur)
        parents.append(par)
        sizes.append(pr.size)
        bound = cauchy_davenport_bound(sizes, p)
        if int(cur.sum()) < bound:
            raise TheoremViolation(
                "sumset smaller than the Cauchy-Davenport bound",
                {"prefix": i + 1, "size": int(cur.sum()), "bound": bound,
                 "pairs": [(q.first.value, q.second.value) for q in pairs[: i + 1]]},
            )
    return SumsetTable(p, tuple(pairs), tuple(reach), tuple(parents))


def select_sequence(pairs: Sequence[ChoicePair], target, table: SumsetTable | None = None) -> list[int]:
    """Choice indicators (0 = first, 1 = second) whose picks sum to ``target``.

    Walking backwards, each step takes the first element whenever the
    remaining residue stays reachable, so the answer is deterministic.
    """
    if table is None:
        table = reachable_sums(pairs)
    p = table.modulus
    if isinstance(target, ZpElement):
        if target.modulus != p:
            raise ModulusMismatch(f"target in Z_{target.modulus}, pairs in Z_{p}")
        v = target.value
    else:
        v = int(target) % p
    if not table.reachable[-1][v]:
        raise Unreachable(f"{v} is not a reachable sum mod {p}")
    choice = [0] * len(pairs)
    for i in range(len(pairs) - 1, -1, -1):
        c = int(table.parent[i][v])
        assert c >= 0
        choice[i] = c
        v = (v - pairs[i][c].value) % p
    assert v == 0
    return choice


def sum_choices(pairs: Sequence[ChoicePair], choice: Sequence[int]) -> int:
    p = _modulus_of(pairs)
    return sum(pr[c].value for pr, c in zip(pairs, choice)) % p
