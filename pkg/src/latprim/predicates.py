"""Element-level and lattice-level predicates.

All "b is ... to p" notions go through one kernel,
:func:`generalized_primary_to`: for every x, ``xb <= p`` and ``xb`` not below
``phi(p)`` must force ``x <= delta(p)``.  With ``phi = NONE`` the exclusion
clause disappears.

Quantifiers over compact elements range over the whole lattice: every element
of a finite lattice is compact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotProperError
from .lattice import ElementId, Lattice
from .maps import (
    DELTA0, DELTA1, NONE, PHI0, MapSpec, map_values, radical_table, require_expansion,
    require_reduction, residual_table,
)

WITNESS_CAP = 32


@dataclass
class PredicateReport:
    holds: bool
    witnesses: list = field(default_factory=list)
    total: int = 0
    evidence: list = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def to_dict(self, L: Lattice) -> dict:
        def show(w):
            if isinstance(w, tuple):
                return [show(v) for v in w]
            return L.names[w] if isinstance(w, int) else w

        out = {"holds": self.holds, "witnesses": [show(w) for w in self.witnesses],
               "violations": self.total}
        if self.evidence:
            out["evidence"] = [show(w) for w in self.evidence]
        return out


def _report(bad: list, cap: int) -> PredicateReport:
    return PredicateReport(not bad, bad[:cap], len(bad))


def _require_proper(L: Lattice, p: ElementId) -> None:
    if not L.is_proper(p):
        raise NotProperError(L.names[p])


# -- the kernel -------------------------------------------------------------------


def generalized_primary_to(
    L: Lattice,
    b: ElementId,
    p: ElementId,
    phi: MapSpec = NONE,
    delta: MapSpec = DELTA0,
    cap: int = WITNESS_CAP,
) -> PredicateReport:
    """Is b phi-delta-primary to the proper element p?  Witnesses are the
    offending x, in index order."""
    _require_proper(L, p)
    require_expansion(L, delta)
    require_reduction(L, phi)
    return _report(_violators(L, b, p, phi, delta), cap)


def _violators(L, b, p, phi, delta) -> list[ElementId]:
    le, mt = L.leq_table, L.mul_table
    bound = map_values(L, delta)[p]
    if phi.is_none:
        return [x for x in L.elements if le[mt[x][b]][p] and not le[x][bound]]
    floor = map_values(L, phi)[p]
    return [
        x for x in L.elements
        if le[mt[x][b]][p] and not le[mt[x][b]][floor] and not le[x][bound]
    ]


def primary_table(L: Lattice, phi: MapSpec, delta: MapSpec) -> tuple[tuple, ...]:
    """holds[b][p] for every b and every proper p (None at p = top)."""
    key = ("primary", phi, delta)
    hit = L._memo.get(key)
    if hit is None:
        require_expansion(L, delta)
        require_reduction(L, phi)
        hit = tuple(
            tuple(
                None if p == L.top else not _violators(L, b, p, phi, delta)
                for p in L.elements
            )
            for b in L.elements
        )
        L._memo[key] = hit
    return hit


def holds(L: Lattice, b: ElementId, p: ElementId, phi: MapSpec = NONE, delta: MapSpec = DELTA0) -> bool:
    return primary_table(L, phi, delta)[b][p]


def prime_to(L, b, p, **kw):
    return generalized_primary_to(L, b, p, NONE, DELTA0, **kw)


def primary_to(L, b, p, **kw):
    return generalized_primary_to(L, b, p, NONE, DELTA1, **kw)


def weakly_prime_to(L, b, p, **kw):
    return generalized_primary_to(L, b, p, PHI0, DELTA0, **kw)


def weakly_primary_to(L, b, p, **kw):
    return generalized_primary_to(L, b, p, PHI0, DELTA1, **kw)


def delta_primary_to(L, b, p, delta, **kw):
    return generalized_primary_to(L, b, p, NONE, delta, **kw)


def phi_prime_to(L, b, p, phi, **kw):
    return generalized_primary_to(L, b, p, phi, DELTA0, **kw)


def phi_primary_to(L, b, p, phi, **kw):
    return generalized_primary_to(L, b, p, phi, DELTA1, **kw)


def n_potent_primary_to(
    L: Lattice, b: ElementId, p: ElementId, n: int, delta: MapSpec = DELTA0, cap: int = WITNESS_CAP
) -> PredicateReport:
    """xb <= p^n must force x <= delta(p)."""
    if n < 2:
        raise ValueError("n-potent needs n >= 2")
    _require_proper(L, p)
    require_expansion(L, delta)
    return _report(_potent_violators(L, b, p, n, delta), cap)


def _potent_violators(L, b, p, n, delta):
    le, mt = L.leq_table, L.mul_table
    pn = L.power(p, n)
    bound = map_values(L, delta)[p]
    return [x for x in L.elements if le[mt[x][b]][pn] and not le[x][bound]]


def potent_holds(L: Lattice, b: ElementId, p: ElementId, n: int, delta: MapSpec) -> bool:
    key = ("potent", b, p, n, delta)
    hit = L._memo.get(key)
    if hit is None:
        hit = L._memo[key] = not _potent_violators(L, b, p, n, delta)
    return hit


# -- element predicates ---------------------------------------------------------------


def is_prime_element(L: Lattice, p: ElementId, cap: int = WITNESS_CAP) -> PredicateReport:
    _require_proper(L, p)
    le, mt, E = L.leq_table, L.mul_table, L.elements
    bad = [(a, b) for a in E for b in E if le[mt[a][b]][p] and not le[a][p] and not le[b][p]]
    return _report(bad, cap)


def is_primary_element(L: Lattice, p: ElementId, cap: int = WITNESS_CAP) -> PredicateReport:
    _require_proper(L, p)
    le, mt, E = L.leq_table, L.mul_table, L.elements
    rad = radical_table(L)[p]
    bad = [(a, b) for a in E for b in E if le[mt[a][b]][p] and not le[a][p] and not le[b][rad]]
    return _report(bad, cap)


def is_maximal(L: Lattice, m: ElementId, cap: int = WITNESS_CAP) -> PredicateReport:
    if not L.is_proper(m):
        return PredicateReport(False, [m], 1)
    bad = [x for x in L.elements if L.lt(m, x) and x != L.top]
    return _report(bad, cap)


def is_idempotent(L: Lattice, a: ElementId) -> PredicateReport:
    sq = L.mul(a, a)
    return PredicateReport(True) if sq == a else PredicateReport(False, [sq], 1)


def is_zero_divisor(L: Lattice, a: ElementId) -> PredicateReport:
    """True iff ab = 0 for some b != 0.  Bottom counts as a zero divisor."""
    ann = [b for b in L.elements if b != L.bottom and L.mul(a, b) == L.bottom]
    return PredicateReport(bool(ann), evidence=ann)


def is_nilpotent(L: Lattice, a: ElementId) -> PredicateReport:
    orbit = L.power_orbit(a)
    if L.bottom in orbit:
        return PredicateReport(True, evidence=[orbit.index(L.bottom) + 1])
    return PredicateReport(False)


def satisfies_rcl(L: Lattice, a: ElementId, cap: int = WITNESS_CAP) -> PredicateReport:
    """Restricted cancellation: ab = ac != 0 forces b = c."""
    mt, E = L.mul_table, L.elements
    bad = [
        (b, c) for b in E for c in E
        if b < c and mt[a][b] == mt[a][c] and mt[a][b] != L.bottom
    ]
    return _report(bad, cap)


def is_meet_principal(L: Lattice, e: ElementId) -> list[tuple]:
    res, mt, meet, E = residual_table(L), L.mul_table, L.meet_table, L.elements
    return [(a, b) for a in E for b in E if meet[a][mt[b][e]] != mt[meet[res[a][e]][b]][e]]


def is_join_principal(L: Lattice, e: ElementId) -> list[tuple]:
    res, mt, jt, E = residual_table(L), L.mul_table, L.join_table, L.elements
    return [(a, b) for a in E for b in E if res[jt[mt[a][e]][b]][e] != jt[res[b][e]][a]]


def is_principal_element(L: Lattice, e: ElementId, cap: int = WITNESS_CAP) -> PredicateReport:
    bad = [("meet",) + w for w in is_meet_principal(L, e)]
    bad += [("join",) + w for w in is_join_principal(L, e)]
    return _report(bad, cap)


# -- lattice predicates --------------------------------------------------------------


def _cached(L: Lattice, key: str, compute):
    if key not in L._memo:
        L._memo[key] = compute()
    return L._memo[key]


def maximal_elements(L: Lattice) -> tuple[ElementId, ...]:
    return _cached(L, "maximals", lambda: tuple(m for m in L.elements if is_maximal(L, m).holds))


def principal_elements(L: Lattice) -> tuple[ElementId, ...]:
    return _cached(
        L, "principals", lambda: tuple(e for e in L.elements if is_principal_element(L, e).holds)
    )


def is_domain(L: Lattice) -> bool:
    """No nonzero element is a zero divisor."""
    return _cached(L, "domain", lambda: all(
        not is_zero_divisor(L, a).holds for a in L.elements if a != L.bottom
    ))


def is_quasi_local(L: Lattice) -> bool:
    return len(maximal_elements(L)) == 1


def is_modular(L: Lattice) -> bool:
    def check():
        le, jt, mt, E = L.leq_table, L.join_table, L.meet_table, L.elements
        return all(
            jt[a][mt[b][c]] == mt[jt[a][b]][c]
            for a in E for c in E if le[a][c] for b in E
        )

    return _cached(L, "modular", check)


def is_pg(L: Lattice) -> bool:
    def check():
        ps, le = principal_elements(L), L.leq_table
        return all(L.join(e for e in ps if le[e][x]) == x for x in L.elements)

    return _cached(L, "pg", check)


def is_noether(L: Lattice) -> bool:
    # ascending chain condition is automatic in a finite lattice
    return is_modular(L) and is_pg(L)


def maximal_primes(L: Lattice) -> tuple[ElementId, ...]:
    return _cached(
        L, "maximal-primes",
        lambda: tuple(m for m in maximal_elements(L) if is_prime_element(L, m).holds),
    )


def is_local_noether(L: Lattice) -> bool:
    return is_noether(L) and len(maximal_primes(L)) == 1
