"""Monomials, pure-difference binomials and Groebner bases over them.

A monomial is a tuple of nonnegative exponents. A polynomial here is either a
single monomial or a difference of two monomials ``x^u - x^v``; this class is
closed under S-polynomials and reduction, so no coefficient arithmetic is
needed. Global signs are dropped: ideals do not see them.
"""

from __future__ import annotations

import bisect
import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotHomogeneous, ResourceLimit

Monomial = tuple[int, ...]

DEFAULT_MAX_SPAIRS = 10**6


# -- monomial arithmetic ------------------------------------------------------

def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def weighted_degree(m: Monomial, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, m))


def variable(i: int, nvars: int, power: int = 1) -> Monomial:
    return tuple(power if k == i else 0 for k in range(nvars))


def monomial_str(m: Monomial, names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 0:
            continue
        name = names[i] if names else f"x{i}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) or "1"


# -- term orders ---------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """A monomial order given by weight rows followed by a lex or revlex tiebreak.

    ``rows`` are compared first, in sequence; ties are broken by lex (the
    variable listed first in ``priority`` is largest) or revlex (the variable
    listed last in ``priority`` is smallest). Revlex is only a well-order when
    every variable carries a positive weight in some row; the constructor checks.
    """

    nvars: int
    rows: tuple[tuple[int, ...], ...] = ()
    tiebreak: str = "lex"
    priority: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.priority:
            object.__setattr__(self, "priority", tuple(range(self.nvars)))
        if sorted(self.priority) != list(range(self.nvars)):
            raise ValueError(f"priority {self.priority} is not a permutation of the variables")
        if any(len(r) != self.nvars for r in self.rows):
            raise DimensionMismatch("weight row length differs from the number of variables")
        if self.tiebreak not in ("lex", "revlex"):
            raise ValueError(f"unknown tiebreak {self.tiebreak!r}")
        if any(w < 0 for r in self.rows for w in r):
            raise ValueError("weight rows must be nonnegative")
        if self.tiebreak == "revlex" and not all(any(r[k] for r in self.rows) for k in range(self.nvars)):
            raise ValueError("revlex tiebreak needs a positive weight on every variable")

    @classmethod
    def lex(cls, nvars: int, priority: Sequence[int] = ()) -> "TermOrder":
        return cls(nvars, (), "lex", tuple(priority))

    @classmethod
    def weighted(cls, weights: Sequence[int], tiebreak: str = "lex",
                 priority: Sequence[int] = ()) -> "TermOrder":
        """Weighted degree first, then lex or revlex."""
        return cls(len(weights), (tuple(weights),), tiebreak, tuple(priority))

    @classmethod
    def elimination(cls, eliminate: Sequence[int], weights: Sequence[int],
                    tiebreak: str = "revlex") -> "TermOrder":
        """Monomials involving more of the ``eliminate`` variables come first, then ``weights``."""
        drop = set(eliminate)
        block = tuple(1 if k in drop else 0 for k in range(len(weights)))
        return cls(len(weights), (block, tuple(weights)), tiebreak)

    def key(self, m: Monomial):
        head = tuple(sum(w * e for w, e in zip(r, m)) for r in self.rows)
        if self.tiebreak == "lex":
            return head + tuple(m[p] for p in self.priority)
        return head + tuple(-m[p] for p in reversed(self.priority))

    def sugar(self, m: Monomial) -> int:
        """Degree used to schedule S-pairs: the first positive weight row, else total degree."""
        for r in self.rows:
            if all(w > 0 for w in r):
                return sum(w * e for w, e in zip(r, m))
        return sum(m)


def compare(order: TermOrder, m1: Monomial, m2: Monomial) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to, or greater than ``m2``."""
    if len(m1) != order.nvars or len(m2) != order.nvars:
        raise DimensionMismatch(f"monomials of length {len(m1)}, {len(m2)} in {order.nvars} variables")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


# -- binomials -----------------------------------------------------------------

@dataclass(frozen=True)
class Binomial:
    """``lead - tail``, or the monomial ``lead`` when ``tail`` is None.

    Outside a Groebner computation ``lead`` is simply the first term as written;
    :meth:`oriented` puts the larger term first for a given order.
    """

    lead: Monomial
    tail: Monomial | None = None

    @classmethod
    def make(cls, a: Monomial, b: Monomial | None, order: TermOrder | None = None):
        """Build ``a - b``; returns None for the zero polynomial ``a - a``."""
        if b is not None and a == b:
            return None
        f = cls(tuple(a), None if b is None else tuple(b))
        return f.oriented(order) if order is not None else f

    @property
    def nvars(self) -> int:
        return len(self.lead)

    @property
    def is_monomial(self) -> bool:
        return self.tail is None

    def terms(self) -> tuple[Monomial, ...]:
        return (self.lead,) if self.tail is None else (self.lead, self.tail)

    def oriented(self, order: TermOrder) -> "Binomial":
        if self.tail is not None and order.key(self.tail) > order.key(self.lead):
            return Binomial(self.tail, self.lead)
        return self

    def weighted_degrees(self, weights: Sequence[int]) -> tuple[int, ...]:
        return tuple(weighted_degree(t, weights) for t in self.terms())

    def is_homogeneous(self, weights: Sequence[int]) -> bool:
        return len(set(self.weighted_degrees(weights))) == 1

    def degree(self, weights: Sequence[int]) -> int:
        return weighted_degree(self.lead, weights)

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return set(self.terms()) == set(other.terms())

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if self.tail is None:
            return monomial_str(self.lead, names)
        return f"{monomial_str(self.lead, names)} - {monomial_str(self.tail, names)}"

    __str__ = to_str


def check_homogeneous(polys: Iterable[Binomial], weights: Sequence[int]) -> None:
    for f in polys:
        if len(f.lead) != len(weights):
            raise DimensionMismatch(f"{f} has {len(f.lead)} variables, weights have {len(weights)}")
        if not f.is_homogeneous(weights):
            raise NotHomogeneous(f"{f} has weighted degrees {f.weighted_degrees(weights)}")


def s_polynomial(f: Binomial, g: Binomial, order: TermOrder) -> Binomial | None:
    """S-polynomial of two binomials/monomials, up to sign; None when zero."""
    f = f.oriented(order)
    g = g.oriented(order)
    l = mono_lcm(f.lead, g.lead)
    a = None if f.tail is None else mono_mul(mono_div(l, f.lead), f.tail)
    b = None if g.tail is None else mono_mul(mono_div(l, g.lead), g.tail)
    if a is None and b is None:
        return None
    if a is None or b is None:
        return Binomial(a if b is None else b)
    return Binomial.make(a, b, order)


def _reduce_term(m: Monomial, reducers: Sequence[Binomial], last: bool):
    """Find a reducer whose lead divides ``m``; returns (reducer, cofactor) or None."""
    seq = reversed(reducers) if last else reducers
    for g in seq:
        if divides(g.lead, m):
            return g, mono_div(m, g.lead)
    return None


def normal_form(
    f: Binomial | None,
    basis: Sequence[Binomial],
    order: TermOrder,
    selection: str = "first",
    top_only: bool = False,
) -> Binomial | None:
    """Fully reduce ``f`` modulo ``basis``; None means the remainder is zero.

    Reducers are tried in ascending order of their leading monomial and the
    first (``selection="first"``) or last (``"last"``) divisor is used.
    """
    if f is None:
        return None
    reducers = sorted((g.oriented(order) for g in basis), key=lambda g: order.key(g.lead))
    return _nf(f, reducers, order, selection == "last", top_only)


def _nf(f: Binomial, reducers: Sequence[Binomial], order: TermOrder,
        last: bool = False, top_only: bool = False) -> Binomial | None:
    f = f.oriented(order)
    lead, tail = f.lead, f.tail
    # invariant: lead > tail whenever tail is not None
    while True:
        hit = _reduce_term(lead, reducers, last)
        if hit is not None:
            g, q = hit
            if g.tail is None:
                if tail is None:
                    return None
                lead, tail = tail, None
                continue
            new = mono_mul(q, g.tail)
            if tail is None:
                lead = new
                continue
            if new == tail:
                return None
            if order.key(new) > order.key(tail):
                lead = new
            else:
                lead, tail = tail, new
            continue
        if tail is None or top_only:
            return Binomial(lead, tail)
        hit = _reduce_term(tail, reducers, last)
        if hit is None:
            return Binomial(lead, tail)
        g, q = hit
        if g.tail is None:
            return Binomial(lead)
        new = mono_mul(q, g.tail)
        if new == lead:
            return None
        tail = new


# -- Buchberger ------------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool = True

    def leading_monomials(self) -> list[Monomial]:
        return [g.lead for g in self.elements]

    def reduce(self, f: Binomial | None, selection: str = "first") -> Binomial | None:
        return normal_form(f, self.elements, self.order, selection)

    def contains(self, f: Binomial | None) -> bool:
        return self.reduce(f) is None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _auto_reduce(polys: list[Binomial], order: TermOrder) -> list[Binomial]:
    polys = sorted(polys, key=lambda g: order.key(g.lead))
    kept: list[Binomial] = []
    for g in polys:
        if any(divides(h.lead, g.lead) for h in kept):
            continue
        kept.append(g)
    out = []
    for k, g in enumerate(kept):
        others = kept[:k] + kept[k + 1:]
        if g.tail is None:
            out.append(g)
            continue
        r = normal_form(Binomial(g.tail), others, order)
        out.append(Binomial(g.lead, None if r is None else r.lead))
    return sorted(out, key=lambda g: order.key(g.lead))


def buchberger(
    gens: Iterable[Binomial | None],
    order: TermOrder,
    max_spairs: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    S-pairs are processed in increasing degree of the lcm of their leads;
    pairs with coprime leads are skipped, as are pairs caught by Buchberger's
    chain criterion. ``ResourceLimit`` is raised once more than ``max_spairs``
    pairs have been reduced.
    """
    if max_spairs is None:
        max_spairs = DEFAULT_MAX_SPAIRS
    basis: list[Binomial] = []
    reducers: list[Binomial] = []
    heap: list = []
    done: set[tuple[int, int]] = set()
    counter = 0

    def add(h: Binomial):
        nonlocal counter
        j = len(basis)
        for i, g in enumerate(basis):
            heapq.heappush(heap, (order.sugar(mono_lcm(g.lead, h.lead)), counter, i, j))
            counter += 1
        basis.append(h)
        bisect.insort(reducers, h, key=lambda g: order.key(g.lead))

    for f in gens:
        if f is None:
            continue
        h = _nf(f, reducers, order)
        if h is not None:
            add(h)

    spairs = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        done.add((i, j))
        gi, gj = basis[i], basis[j]
        if coprime(gi.lead, gj.lead):
            continue
        l = mono_lcm(gi.lead, gj.lead)
        if _chain_criterion(basis, done, i, j, l):
            continue
        spairs += 1
        if spairs > max_spairs:
            raise ResourceLimit(f"Buchberger exceeded {max_spairs} S-pair reductions")
        sp = s_polynomial(gi, gj, order)
        h = None if sp is None else _nf(sp, reducers, order)
        if h is not None:
            add(h)

    return GroebnerBasis(tuple(_auto_reduce(basis, order)), order, True)


def _chain_criterion(basis, done, i, j, l) -> bool:
    for k, g in enumerate(basis):
        if k == i or k == j:
            continue
        if not divides(g.lead, l):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


def is_groebner(polys: Sequence[Binomial], order: TermOrder) -> bool:
    """Every S-polynomial of a pair reduces to zero."""
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            if normal_form(s_polynomial(polys[a], polys[b], order), polys, order) is not None:
                return False
    return True


# -- standard monomials and the Gastinger test ----------------------------------

def minimal_monomials(monos: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators of the monomial ideal spanned by ``monos``."""
    uniq = sorted(set(monos), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in uniq:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return sorted(out)


def standard_monomials(leads: Sequence[Monomial], nvars: int | None = None) -> list[Monomial] | None:
    """Monomials divisible by no element of ``leads`` (None if there are infinitely many)."""
    if nvars is None:
        if not leads:
            raise ValueError("nvars is required when leads is empty")
        nvars = len(leads[0])
    leads = minimal_monomials(leads)
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in leads):
            return None
    start = (0,) * nvars
    if any(divides(g, start) for g in leads):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                c = m[:i] + (m[i] + 1,) + m[i + 1:]
                if c in seen or any(divides(g, c) for g in leads):
                    continue
                seen.add(c)
                nxt.append(c)
        frontier = nxt
    return sorted(seen)


def quotient_dimension(leads: Sequence[Monomial], nvars: int | None = None) -> float | int:
    """Number of standard monomials of a monomial ideal; ``math.inf`` if infinite."""
    std = standard_monomials(leads, nvars)
    return math.inf if std is None else len(std)


def project_to_zero(f: Binomial | None, vars: Iterable[int]) -> Binomial | None:
    """Image of ``f`` under the substitution ``x_v -> 0`` for ``v`` in ``vars``."""
    if f is None:
        return None
    killed = set(vars)
    survivors = [t for t in f.terms() if not any(t[v] for v in killed)]
    if not survivors:
        return None
    if len(survivors) == 1:
        return Binomial(survivors[0])
    return f


@dataclass(frozen=True)
class GastingerResult:
    certified: bool
    count: float | int
    basis: GroebnerBasis

    def __iter__(self):
        # unpacks as (certified, count)
        return iter((self.certified, self.count))


def gastinger_check(
    J_gens: Sequence[Binomial],
    weights: Sequence[int],
    zero_var: int = 0,
    order: TermOrder | None = None,
    max_spairs: int | None = None,
) -> GastingerResult:
    """Decide whether ``J_gens`` generate the whole defining ideal of the monomial curve.

    The subideal J equals the defining ideal exactly when the quotient by
    ``J + (x_zero_var)`` has dimension ``weights[zero_var]``; the dimension is
    read off a Groebner basis of ``J + (x_zero_var)`` (lex by default).
    """
    nvars = len(weights)
    if math.gcd(*weights) != 1:
        raise ValueError(f"weights {tuple(weights)} are not coprime")
    check_homogeneous(J_gens, weights)
    if order is None:
        order = TermOrder.lex(nvars)
    projected = [project_to_zero(f, [zero_var]) for f in J_gens]
    gens = [Binomial(variable(zero_var, nvars))] + [p for p in projected if p is not None]
    gb = buchberger(gens, order, max_spairs)
    count = quotient_dimension(gb.leading_monomials(), nvars)
    return GastingerResult(count == weights[zero_var], count, gb)
