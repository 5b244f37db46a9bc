"""The unbounded-concatenation families and checks of their closed forms.

For ``e >= 4``, ``i >= 2`` and ``n = i(e-3) + (e-1)`` the family member is the
semigroup generated by

    m_j     = n^2 + (e-2)n + (e-4+j)   for 0 <= j <= e-3
    m_{e-2} = n^2 + (e-1)n + (2e-7)
    m_{e-1} = n^2 + (e-1)n + (2e-6)

Closed forms for the Apery set, the pseudo-Frobenius set and (for e = 5) a
minimal presentation are evaluated literally and compared with the generic
engines. A disagreement is recorded, never corrected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import ClosedFormInconsistent, InvalidInput, WrongE, UnsupportedE
from .poly import Binomial, check_homogeneous, gastinger_check
from .presentation import (
    minimality_check,
    mu_and_betti_degrees,
    toric_ideal_generators,
)
from .semigroup import apery, new_semigroup, pseudo_frobenius

SUPPORTED_E = (4, 5)

# m_4 as printed in the e = 5 section; the general formula gives n^2+4n+4.
M4_AS_PRINTED = "n^2+3n+4"


@dataclass(frozen=True)
class FamilyParams:
    e: int
    i: int
    n: int
    generators: tuple[int, ...]
    q: int = 0

    @property
    def m0(self) -> int:
        return self.generators[0]

    @property
    def semigroup(self):
        return new_semigroup(self.generators)


def family_generators(e: int, n: int) -> tuple[int, ...]:
    base = [n * n + (e - 2) * n + (e - 4 + j) for j in range(e - 2)]
    return tuple(base + [n * n + (e - 1) * n + (2 * e - 7), n * n + (e - 1) * n + (2 * e - 6)])


def family(e: int, i: int) -> FamilyParams:
    """Parameters of the family member with embedding dimension ``e`` and index ``i``."""
    if not isinstance(e, int) or not isinstance(i, int):
        raise InvalidInput(f"e and i must be integers, got e={e!r}, i={i!r}")
    if e < 4:
        raise InvalidInput(f"e must be at least 4, got {e}")
    if i < 2:
        raise InvalidInput(f"i must be at least 2, got {i}")
    n = i * (e - 3) + (e - 1)
    gens = family_generators(e, n)
    if new_semigroup(gens).generators != gens:
        raise ClosedFormInconsistent(f"{gens} is not a minimal generating sequence")
    return FamilyParams(e=e, i=i, n=n, generators=gens)


def _require_e(params: FamilyParams, e: int) -> None:
    if params.e != e:
        raise WrongE(f"closed form needs e={e}, got e={params.e}")


def _distinct(values: list[int], expected: int, what: str) -> frozenset[int]:
    out = frozenset(values)
    if len(out) != len(values):
        raise ClosedFormInconsistent(f"{what}: {len(values) - len(out)} repeated elements")
    if len(out) != expected:
        raise ClosedFormInconsistent(f"{what}: {len(out)} elements, expected {expected}")
    return out


def apery_pieces_e4(params: FamilyParams) -> dict[str, list[int]]:
    _require_e(params, 4)
    n = params.n
    _, m1, m2, m3 = params.generators
    return {
        "0": [0],
        "A1": [r * m1 for r in range(1, n + 1)],
        "A2": [r * m2 for r in range(1, n + 1)],
        "A3": [r * m3 for r in range(1, n)],
        "A4": [r * m1 + s * m3 for r in range(1, n) for s in range(1, n - r + 1)],
        "A5": [r * m2 + s * m3 for r in range(1, n) for s in range(1, n - r + 1)],
    }


def closed_apery_e4(params: FamilyParams) -> frozenset[int]:
    values = [x for piece in apery_pieces_e4(params).values() for x in piece]
    return _distinct(values, params.m0, "Apery closed form (e=4)")


def closed_pf_e4(params: FamilyParams) -> frozenset[int]:
    _require_e(params, 4)
    n, m0 = params.n, params.m0
    base = (n - 1) * m0 + n
    values = [base]
    values += [base + k * (n + 1) for k in range(1, n)]
    values += [base + (n - 1) * (n + 1) + t for t in range(1, n + 1)]
    return _distinct(values, 2 * n, "pseudo-Frobenius closed form (e=4)")


def apery_pieces_e5(params: FamilyParams) -> dict[str, list[int]]:
    _require_e(params, 5)
    n = params.n
    h = n // 2
    _, m1, m2, m3, m4 = params.generators
    return {
        "A1": [0, m1],
        "A2": [r * m2 for r in range(1, h + 1)],
        "A3": [r * m3 for r in range(1, n + 1)],
        "A4": [r * m4 for r in range(1, n + 1)],
        "A5": [m1 + r * m2 for r in range(1, h + 1)],
        "A6": [m3 + r * m2 for r in range(1, h + 1)],
        "A7": [r * m2 + 2 * s * m4 for s in range(1, h) for r in range(1, h - s + 1)],
        "A8": [r * m2 + (2 * s - 1) * m4 for s in range(1, h + 1) for r in range(1, h + 2 - s)],
        "A9": [r * m3 + (n - k - r + 1) * m4 for k in range(1, n) for r in range(1, n - k + 1)],
        "A10": [r * m2 + m3 + 2 * s * m4 for s in range(1, h) for r in range(1, h - s + 1)],
        "A11": [r * m2 + m3 + (2 * s - 1) * m4 for s in range(1, h) for r in range(1, h + 2 - s)],
    }


def closed_apery_e5(params: FamilyParams) -> frozenset[int]:
    values = [x for piece in apery_pieces_e5(params).values() for x in piece]
    return _distinct(values, params.m0, "Apery closed form (e=5)")


def closed_pf_e5(params: FamilyParams) -> frozenset[int]:
    _require_e(params, 5)
    n, m0, m3 = params.n, params.m0, params.generators[3]
    h = n // 2
    base = h * m0 + (n + 1)
    step = m3 + (n + 2)
    values = [base]
    values += [base + k * step for k in range(1, h)]
    values += [base + (h - 1) * step + (n + 1 + t) for t in range(0, n + 3)]
    return _distinct(values, 3 * n // 2 + 3, "pseudo-Frobenius closed form (e=5)")


def q5_generator_set(params: FamilyParams) -> dict[str, Binomial]:
    """The binomials f1, f2, g1, g2, xi_t, eta_k, l1, l2 of the e = 5 presentation, by name.

    Each value is stored as first term minus second term, in the order written.
    """
    _require_e(params, 5)
    n, i = params.n, params.i

    def x(a=0, b=0, c=0, d=0, e=0):
        return (a, b, c, d, e)

    out = {
        "f1": Binomial(x(b=1, d=1), x(a=1, e=1)),
        "f2": Binomial(x(c=1, d=1), x(b=1, e=1)),
        "g1": Binomial(x(b=2), x(a=1, c=1)),
        "g2": Binomial(x(c=i + 3), x(a=i + 2, d=1)),
    }
    for t in range(n + 2):
        out[f"xi{t}"] = Binomial(x(a=t, b=n + 2 - t), x(d=t, e=n + 1 - t))
    for k in range(i + 1):
        out[f"eta{k}"] = Binomial(x(a=k + 1, d=n - 2 * k - 1), x(c=k + 2, e=n - 2 * k - 2))
    out["l1"] = Binomial(x(a=n + 1, b=1), x(c=1, e=n))
    out["l2"] = Binomial(x(a=n + 2), x(c=1, d=1, e=n - 1))
    check_homogeneous(out.values(), params.generators)
    if len(out) != n + i + 9:
        raise ClosedFormInconsistent(f"{len(out)} binomials, expected {n + i + 9}")
    return out


def expected_mu(params: FamilyParams) -> int:
    """Minimal number of generators the closed forms predict."""
    if params.e == 4:
        return 2 * (params.n + 1)
    if params.e == 5:
        return params.n + params.i + 9
    raise UnsupportedE(f"no closed form for e={params.e}")


def expected_type(params: FamilyParams) -> int:
    if params.e == 4:
        return 2 * params.n
    if params.e == 5:
        return 3 * params.n // 2 + 3
    raise UnsupportedE(f"no closed form for e={params.e}")


@dataclass
class VerificationReport:
    params: FamilyParams
    apery_match: bool = False
    pf_match: bool = False
    apery_size: int = 0
    frobenius: int | None = None
    type: int | None = None
    mu: int | None = None
    mu_expected: int | None = None
    gastinger_certified: bool | None = None
    gastinger_count: int | float | None = None
    minimal: bool | None = None
    discrepancies: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def mu_at_least_n_plus_2(self) -> bool | None:
        return None if self.mu is None else self.mu >= self.params.n + 2

    @property
    def all_match(self) -> bool:
        if not (self.apery_match and self.pf_match) or self.discrepancies:
            return False
        if self.mu is not None and self.mu != self.mu_expected:
            return False
        return self.gastinger_certified is not False and self.minimal is not False

    def as_row(self) -> dict[str, Any]:
        p = self.params
        row: dict[str, Any] = {"e": p.e, "i": p.i, "n": p.n}
        for j, g in enumerate(p.generators):
            row[f"m{j}"] = g
        row.update(
            apery_size=self.apery_size,
            frobenius=self.frobenius,
            type=self.type,
            mu=self.mu,
            mu_ge_n_plus_2=self.mu_at_least_n_plus_2,
            apery_match=self.apery_match,
            pf_match=self.pf_match,
            certified=self.gastinger_certified,
            minimal=self.minimal,
        )
        return row


def _compare_sets(kind: str, closed: frozenset[int], computed: frozenset[int]) -> dict | None:
    if closed == computed:
        return None
    return {
        "kind": kind,
        "only_in_closed_form": sorted(closed - computed),
        "only_in_computed": sorted(computed - closed),
    }


def verify_family(
    e: int,
    i: int,
    compute_mu: bool = True,
    max_spairs: int | None = None,
    max_nodes: int | None = None,
) -> VerificationReport:
    """Evaluate every closed form for the (e, i) member and check it against the generic engines.

    ``ResourceLimit`` from the ideal computations propagates to the caller.
    """
    if e not in SUPPORTED_E:
        raise UnsupportedE(f"closed forms exist only for e in {SUPPORTED_E}, got e={e}")
    params = family(e, i)
    report = VerificationReport(params=params)
    sg = params.semigroup
    generic_apery = apery(sg, params.m0).as_set()
    inv = pseudo_frobenius(sg)
    generic_pf = frozenset(inv.pseudo_frobenius)
    report.apery_size = len(generic_apery)
    report.frobenius = inv.frobenius
    report.type = inv.type

    closed_apery = closed_apery_e4 if e == 4 else closed_apery_e5
    closed_pf = closed_pf_e4 if e == 4 else closed_pf_e5
    for kind, fn, computed, flag in (
        ("apery", closed_apery, generic_apery, "apery_match"),
        ("pseudo_frobenius", closed_pf, generic_pf, "pf_match"),
    ):
        try:
            diff = _compare_sets(kind, fn(params), computed)
        except ClosedFormInconsistent as exc:
            diff = {"kind": kind, "error": str(exc)}
        if diff is None:
            setattr(report, flag, True)
        else:
            report.discrepancies.append(diff)
    if report.type != expected_type(params):
        report.discrepancies.append(
            {"kind": "type", "expected": expected_type(params), "computed": report.type}
        )

    if e == 5:
        report.notes.append(
            f"m4 taken as n^2+4n+4 = {params.generators[4]}; "
            f"the printed {M4_AS_PRINTED} = {params.n**2 + 3 * params.n + 4} breaks homogeneity"
        )

    if not compute_mu:
        return report
    report.mu_expected = expected_mu(params)
    gens = params.generators
    if e == 5:
        candidate = list(q5_generator_set(params).values())
    else:
        candidate = toric_ideal_generators(gens, "saturation", max_spairs)
    cert = gastinger_check(candidate, gens, 0, max_spairs=max_spairs)
    report.gastinger_certified = cert.certified
    report.gastinger_count = cert.count
    if not cert.certified:
        report.discrepancies.append(
            {"kind": "gastinger", "expected": params.m0, "computed": cert.count}
        )
        return report
    pres = mu_and_betti_degrees(gens, candidate, assume_certified=True,
                                max_spairs=max_spairs, max_nodes=max_nodes)
    report.mu = pres.mu
    if e == 5:
        report.minimal = minimality_check(gens, candidate, assume_certified=True,
                                          max_spairs=max_spairs, max_nodes=max_nodes)
        if not report.minimal:
            report.discrepancies.append(
                {"kind": "minimality", "candidate_size": len(candidate), "mu": pres.mu}
            )
    if report.mu != report.mu_expected:
        report.discrepancies.append(
            {"kind": "mu", "expected": report.mu_expected, "computed": report.mu}
        )
    return report
