"""Defining ideals of monomial curves and their minimal number of generators.

The toric ideal of ``t -> (t^g_0, ..., t^g_{e-1})`` is computed in two
independent ways (lattice saturation and elimination of the parameter). The
number of minimal generators is then read off factorization graphs, which
does not depend on any term order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import InvalidInput, NotCertified, NotCoprime, ResourceLimit
from .poly import (
    Binomial,
    TermOrder,
    buchberger,
    check_homogeneous,
    gastinger_check,
    normal_form,
    weighted_degree,
)

DEFAULT_MAX_NODES = 10**7


def _check_gens(gens: Sequence[int]) -> tuple[int, ...]:
    gens = tuple(gens)
    if len(gens) < 1 or any(g <= 0 for g in gens):
        raise InvalidInput(f"generators must be positive integers, got {gens}")
    if math.gcd(*gens) != 1:
        raise NotCoprime(f"generators {gens} are not coprime")
    return gens


# -- lattice of relations -----------------------------------------------------------

def _lll(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """Textbook LLL with exact rationals; dimensions here are tiny."""
    b = [list(v) for v in basis]
    k = len(b)
    if k <= 1:
        return b

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gram_schmidt():
        bstar: list[list[Fraction]] = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bstar[j]) / dot(bstar[j], bstar[j])
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gram_schmidt()
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                bstar, mu = gram_schmidt()
        lhs = dot(bstar[i], bstar[i])
        rhs = (delta - mu[i][i - 1] ** 2) * dot(bstar[i - 1], bstar[i - 1])
        if lhs >= rhs:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            bstar, mu = gram_schmidt()
            i = max(i - 1, 1)
    return b


def lattice_kernel_basis(gens: Sequence[int], reduce: bool = True) -> list[tuple[int, ...]]:
    """Basis of the integer vectors v with sum(v_j * gens_j) = 0.

    Unimodular column operations (a Euclid run on the entries) bring the row
    ``gens`` to a single nonzero entry; the other columns of the transform span
    the kernel. With ``reduce`` the basis is LLL-reduced, which keeps the
    binomials fed to Buchberger small.
    """
    gens = _check_gens(gens)
    e = len(gens)
    row = list(gens)
    cols = [[1 if r == c else 0 for r in range(e)] for c in range(e)]
    while sum(1 for x in row if x) > 1:
        p = min((k for k in range(e) if row[k]), key=lambda k: abs(row[k]))
        for k in range(e):
            if k != p and row[k]:
                q = row[k] // row[p]
                row[k] -= q * row[p]
                cols[k] = [x - q * y for x, y in zip(cols[k], cols[p])]
    kernel = [cols[k] for k in range(e) if row[k] == 0]
    if reduce:
        kernel = _lll(kernel)
    return [tuple(v) for v in kernel]


def lattice_binomial(v: Sequence[int]) -> Binomial:
    """``x^{v+} - x^{v-}``."""
    return Binomial(tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v))


def _divide_out(f: Binomial, var: int) -> Binomial:
    k = min(f.lead[var], f.tail[var]) if f.tail is not None else f.lead[var]
    if not k:
        return f
    strip = lambda m: m[:var] + (m[var] - k,) + m[var + 1:]
    return Binomial(strip(f.lead), None if f.tail is None else strip(f.tail))


def saturation_generators(gens: Sequence[int], max_spairs: int | None = None) -> list[Binomial]:
    """Toric ideal as the saturation of the lattice-basis ideal by every variable.

    For each variable in turn, a Groebner basis under weighted revlex with that
    variable last lets the saturation be read off by dividing out its powers.
    """
    gens = _check_gens(gens)
    e = len(gens)
    if e == 1:
        return []
    current = [lattice_binomial(v) for v in lattice_kernel_basis(gens)]
    for var in range(e):
        priority = [k for k in range(e) if k != var] + [var]
        order = TermOrder.weighted(gens, "revlex", priority)
        gb = buchberger(current, order, max_spairs)
        current = [_divide_out(f, var) for f in gb]
    order = TermOrder.weighted(gens, "revlex")
    return list(buchberger(current, order, max_spairs))


def elimination_generators(gens: Sequence[int], max_spairs: int | None = None) -> list[Binomial]:
    """Toric ideal by eliminating ``u`` from ``{x_j - u^gens_j}``.

    Lex with ``u`` as the largest variable is an elimination order for ``u``,
    so the u-free elements of the Groebner basis generate the toric ideal.
    """
    gens = _check_gens(gens)
    e = len(gens)
    if e == 1:
        return []
    nv = e + 1
    polys = []
    for j, g in enumerate(gens):
        x = tuple(1 if k == j else 0 for k in range(nv))
        u = tuple(g if k == e else 0 for k in range(nv))
        polys.append(Binomial(x, u))
    order = TermOrder.lex(nv, [e] + list(range(e)))
    gb = buchberger(polys, order, max_spairs)
    out = []
    for f in gb:
        if any(t[e] for t in f.terms()):
            continue
        out.append(Binomial(f.lead[:e], None if f.tail is None else f.tail[:e]))
    return out


def toric_ideal_generators(
    gens: Sequence[int], strategy: str = "saturation", max_spairs: int | None = None
) -> list[Binomial]:
    """Homogeneous binomial generators (not necessarily minimal) of the defining ideal."""
    if strategy == "saturation":
        return saturation_generators(gens, max_spairs)
    if strategy == "elimination":
        return elimination_generators(gens, max_spairs)
    raise ValueError(f"unknown strategy {strategy!r}")


def ideals_equal(
    first: Sequence[Binomial],
    second: Sequence[Binomial],
    weights: Sequence[int],
    max_spairs: int | None = None,
) -> bool:
    """Mutual containment: each set reduces to zero modulo a Groebner basis of the other."""
    order = TermOrder.weighted(weights, "revlex")
    gb1 = buchberger(first, order, max_spairs)
    gb2 = buchberger(second, order, max_spairs)
    return all(normal_form(f, gb2.elements, order) is None for f in first) and all(
        normal_form(f, gb1.elements, order) is None for f in second
    )


# -- factorizations ---------------------------------------------------------------

def factorizations(
    gens: Sequence[int], s: int, max_nodes: int | None = None
) -> list[tuple[int, ...]]:
    """All nonnegative integer vectors v with ``sum(v_j * gens_j) == s``, sorted."""
    if max_nodes is None:
        max_nodes = DEFAULT_MAX_NODES
    gens = tuple(gens)
    e = len(gens)
    if s < 0 or e == 0:
        return [] if s else [()]
    out: list[tuple[int, ...]] = []
    v = [0] * e
    nodes = 0

    def descend(k: int, rest: int):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimit(f"factorization search exceeded {max_nodes} nodes")
        if k == 0:
            if rest % gens[0] == 0:
                v[0] = rest // gens[0]
                out.append(tuple(v))
                v[0] = 0
            return
        for c in range(rest // gens[k], -1, -1):
            v[k] = c
            descend(k - 1, rest - c * gens[k])
        v[k] = 0

    descend(e - 1, s)
    return sorted(out)


@dataclass
class FactorizationGraph:
    """Factorizations of ``element``; two are adjacent when their supports meet."""

    gens: tuple[int, ...]
    element: int
    factorizations: list[tuple[int, ...]]
    component_count: int = field(init=False)
    components: list[list[tuple[int, ...]]] = field(init=False, repr=False)

    def __post_init__(self):
        facts = self.factorizations
        parent = list(range(len(facts)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for var in range(len(self.gens)):
            touching = [k for k, f in enumerate(facts) if f[var]]
            for k in touching[1:]:
                ra, rb = find(touching[0]), find(k)
                if ra != rb:
                    parent[rb] = ra
        groups: dict[int, list] = {}
        for k, f in enumerate(facts):
            groups.setdefault(find(k), []).append(f)
        self.components = sorted(groups.values())
        self.component_count = len(self.components)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        facts = self.factorizations
        return [
            (a, b)
            for a in range(len(facts))
            for b in range(a + 1, len(facts))
            if any(x and y for x, y in zip(facts[a], facts[b]))
        ]

    @property
    def betti_count(self) -> int:
        """Minimal generators of the defining ideal living in this degree."""
        return max(self.component_count - 1, 0)


def factorization_graph(gens: Sequence[int], s: int, max_nodes: int | None = None) -> FactorizationGraph:
    gens = tuple(gens)
    return FactorizationGraph(gens, s, factorizations(gens, s, max_nodes))


# -- minimal number of generators ------------------------------------------------------

@dataclass(frozen=True)
class PresentationReport:
    generating_set: tuple[Binomial, ...]
    betti_degrees: dict[int, int]
    mu: int
    gastinger_count: int | float | None = None


def _certify(gens, generating_set, max_spairs):
    result = gastinger_check(generating_set, gens, 0, max_spairs=max_spairs)
    if not result.certified:
        raise NotCertified(
            f"quotient dimension {result.count} != {gens[0]}: the set does not generate the defining ideal"
        )
    return result.count


def mu_and_betti_degrees(
    gens: Sequence[int],
    generating_set: Sequence[Binomial],
    assume_certified: bool = False,
    max_spairs: int | None = None,
    max_nodes: int | None = None,
) -> PresentationReport:
    """Count minimal generators degree by degree.

    Every degree of a minimal generator occurs among the degrees of any
    homogeneous generating set, so only those degrees are inspected; in
    degree s there are (components of the factorization graph) - 1 of them.
    Unless ``assume_certified``, the set is first run through the Gastinger
    test and ``NotCertified`` is raised if it fails.
    """
    gens = _check_gens(gens)
    generating_set = tuple(generating_set)
    check_homogeneous(generating_set, gens)
    count = None if assume_certified else _certify(gens, generating_set, max_spairs)
    degrees = sorted({f.degree(gens) for f in generating_set})
    betti = {}
    for s in degrees:
        c = factorization_graph(gens, s, max_nodes).betti_count
        if c:
            betti[s] = c
    return PresentationReport(generating_set, betti, sum(betti.values()), count)


def minimality_check(
    gens: Sequence[int],
    candidate: Sequence[Binomial],
    assume_certified: bool = False,
    max_spairs: int | None = None,
    max_nodes: int | None = None,
) -> bool:
    """True iff the (certified) ``candidate`` is a minimal generating set."""
    gens = _check_gens(gens)
    report = mu_and_betti_degrees(gens, candidate, assume_certified, max_spairs, max_nodes)
    per_degree: dict[int, int] = {}
    for f in candidate:
        d = weighted_degree(f.lead, gens)
        per_degree[d] = per_degree.get(d, 0) + 1
    if per_degree != report.betti_degrees:
        return False
    return report.mu == len(candidate)


def minimal_generating_set(
    gens: Sequence[int],
    generating_set: Sequence[Binomial],
    max_nodes: int | None = None,
) -> list[Binomial]:
    """A minimal generating set built from factorization graphs.

    In each degree where the graph is disconnected, one binomial joins the
    first factorization of the first component to the first factorization of
    every other component. ``generating_set`` must generate the ideal; it only
    supplies the candidate degrees.
    """
    gens = _check_gens(gens)
    out = []
    for s in sorted({f.degree(gens) for f in generating_set}):
        graph = factorization_graph(gens, s, max_nodes)
        if graph.component_count < 2:
            continue
        root = graph.components[0][0]
        out.extend(Binomial(root, comp[0]) for comp in graph.components[1:])
    return out
