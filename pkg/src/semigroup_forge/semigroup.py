"""Numerical semigroups: membership, Apery sets, Frobenius and pseudo-Frobenius numbers.

Everything is exact integer arithmetic. The Apery table with respect to the
multiplicity is computed once per semigroup (shortest paths on the residue
graph) and reused for membership queries, so ``x in S`` is O(1) afterwards.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmptyGenerators, NotCoprime, NotInSemigroup


def residue_distances(gens: Sequence[int], modulus: int) -> list[int | None]:
    """Least element of the monoid spanned by ``gens`` in each residue class.

    Dijkstra over the residues ``0..modulus-1`` with an edge ``r -> (r+g) % modulus``
    of weight ``g`` for every generator. Unreachable classes (only possible when
    the generators are not coprime) are ``None``.
    """
    dist: list[int | None] = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    steps = sorted({g % modulus: g for g in sorted(gens, reverse=True)}.items())
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] != d:
            continue
        for shift, g in steps:
            nr = r + shift
            if nr >= modulus:
                nr -= modulus
            nd = d + g
            cur = dist[nr]
            if cur is None or nd < cur:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def is_representable(x: int, gens: Sequence[int]) -> bool:
    """True iff ``x`` is a nonnegative integer combination of ``gens``."""
    if x < 0:
        return False
    if x == 0:
        return True
    if not gens:
        return False
    a = min(gens)
    w = residue_distances(gens, a)[x % a]
    return w is not None and w <= x


@dataclass(frozen=True)
class AperyTable:
    """``entries[r]`` is the least element of the semigroup congruent to r mod ``modulus``."""

    modulus: int
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.entries)


@dataclass(frozen=True)
class SemigroupInvariants:
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators (sorted ascending).

    Build instances with :func:`new_semigroup`, which validates and minimalizes;
    the raw constructor trusts its input.
    """

    generators: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def _apery_m(self) -> AperyTable:
        m = self.multiplicity
        return AperyTable(m, tuple(residue_distances(self.generators, m)))

    def __contains__(self, x: int) -> bool:
        return contains(self, x)

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.generators)) + ">"


def new_semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    """Validate ``gens`` and reduce it to the minimal system of generators.

    >>> new_semigroup([2, 3, 5]).generators
    (2, 3)
    """
    values = list(gens)
    if not values:
        raise EmptyGenerators("generator list is empty")
    if any(not isinstance(g, int) or isinstance(g, bool) for g in values):
        raise TypeError("generators must be integers")
    if any(g <= 0 for g in values):
        raise ValueError(f"generators must be positive, got {values}")
    distinct = sorted(set(values))
    if math.gcd(*distinct) != 1:
        raise NotCoprime(f"generators {distinct} are not coprime (gcd {math.gcd(*distinct)})")
    if distinct[0] == 1:
        return NumericalSemigroup((1,))
    minimal = [
        g for k, g in enumerate(distinct)
        if not is_representable(g, distinct[:k])
    ]
    return NumericalSemigroup(tuple(minimal))


def contains(sg: NumericalSemigroup, x: int) -> bool:
    if x < 0:
        return False
    table = sg._apery_m
    return x >= table.entries[x % table.modulus]


def apery(sg: NumericalSemigroup, a: int) -> AperyTable:
    """Apery table of ``sg`` with respect to the nonzero element ``a``."""
    if a <= 0 or not contains(sg, a):
        raise NotInSemigroup(f"{a} is not a nonzero element of {sg}")
    if a == sg.multiplicity:
        return sg._apery_m
    return AperyTable(a, tuple(residue_distances(sg.generators, a)))


def sg_leq(sg: NumericalSemigroup, a: int, b: int) -> bool:
    """The semigroup order: a <= b iff b - a lies in the semigroup."""
    return contains(sg, b - a)


def maximal_apery_elements(sg: NumericalSemigroup, table: AperyTable) -> list[int]:
    """Elements of ``table`` maximal for the semigroup order.

    ``w`` is maximal iff ``w + g`` leaves the Apery set for every generator
    ``g``, i.e. ``w + g - a`` is in the semigroup.
    """
    a = table.modulus
    out = []
    for w in table.entries:
        if all(contains(sg, w + g - a) for g in sg.generators):
            out.append(w)
    return sorted(out)


def frobenius(sg: NumericalSemigroup) -> int:
    table = sg._apery_m
    return max(table.entries) - table.modulus


def genus(sg: NumericalSemigroup) -> int:
    """Number of gaps, via Selmer's formula on the multiplicity Apery set."""
    table = sg._apery_m
    m = table.modulus
    return (sum(table.entries) - m * (m - 1) // 2) // m


def gaps(sg: NumericalSemigroup) -> list[int]:
    return [x for x in range(frobenius(sg) + 1) if not contains(sg, x)]


def pseudo_frobenius(sg: NumericalSemigroup) -> SemigroupInvariants:
    table = sg._apery_m
    m = table.modulus
    pf = tuple(w - m for w in maximal_apery_elements(sg, table))
    return SemigroupInvariants(frobenius=frobenius(sg), genus=genus(sg), pseudo_frobenius=pf)


def concat_semigroup(
    a: int, d: int, len1: int, b: int, len2: int
) -> tuple[NumericalSemigroup, bool]:
    """Semigroup generated by two arithmetic progressions with common difference ``d``.

    Returns the semigroup and whether the concatenated sequence
    ``a, a+d, ..., a+(len1-1)d, b, ..., b+(len2-1)d`` is already its minimal
    system of generators.
    """
    if min(a, d, len1, b, len2) <= 0:
        raise ValueError("all parameters must be positive")
    if math.gcd(a, d) != 1:
        raise NotCoprime(f"gcd({a}, {d}) = {math.gcd(a, d)}")
    seq = [a + k * d for k in range(len1)] + [b + k * d for k in range(len2)]
    sg = new_semigroup(seq)
    minimal = len(set(seq)) == len(seq) and sg.generators == tuple(sorted(seq))
    return sg, minimal
