"""Catalogue of executable theorem checkers.

Each entry enumerates every instance of a statement inside a
:class:`SearchConfig` on one lattice, keeps the instances whose hypotheses
hold, and checks the conclusion through :mod:`latprim.predicates`.  A
``violated`` verdict on a proved statement means the implementation is wrong.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .constructors import load, zn_ideal_lattice, zn_modulus
from .errors import ClaimError, LatprimError
from .lattice import Lattice
from .maps import (
    DELTA0, DELTA1, NONE, PHI0, PHI1, PHI2, PHIOMEGA, MapSpec, map_leq, map_values,
    parse_map_spec, phi_n, radical_table, require_expansion, require_reduction, residual_table,
)
from .predicates import (
    WITNESS_CAP, holds, is_domain, is_idempotent, is_local_noether, is_nilpotent, is_noether,
    is_quasi_local, maximal_elements, potent_holds, satisfies_rcl,
)

HOLDS, VIOLATED, VACUOUS, PROBE = "holds", "violated", "vacuous", "probe-report"

DEFAULT_PHIS = (NONE, PHI0, PHI1, PHI2, phi_n(3), phi_n(4), PHIOMEGA)
DEFAULT_DELTAS = (DELTA0, DELTA1)

PHI1_NOTE = "phi1 is taken to be the identity map (convention; it is never defined explicitly)"


# -- configuration ------------------------------------------------------------------


@dataclass(frozen=True)
class ZnRange:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 2 or self.hi < self.lo:
            raise ValueError(f"bad Z_n range {self.lo}..{self.hi}")

    def lattices(self) -> Iterator[Lattice]:
        for n in range(self.lo, self.hi + 1):
            yield zn_ideal_lattice(n)

    def __str__(self):
        return f"zn:{self.lo}..{self.hi}"


@dataclass(frozen=True)
class FileList:
    paths: tuple[str, ...]

    def __post_init__(self):
        if not self.paths:
            raise ValueError("file family is empty")

    def lattices(self) -> Iterator[Lattice]:
        for path in self.paths:
            yield load(path)

    def __str__(self):
        return "files:" + ",".join(self.paths)


def parse_family(text: str):
    if text.startswith("zn:"):
        body = text[3:]
        lo, sep, hi = body.partition("..")
        try:
            return ZnRange(int(lo), int(hi) if sep else int(lo))
        except ValueError:
            raise ValueError(f"bad family {text!r}; expected zn:<lo>..<hi>") from None
    if text.startswith("files:"):
        import glob

        paths = tuple(sorted(glob.glob(text[6:])))
        if not paths:
            raise ValueError(f"no files match {text[6:]!r}")
        return FileList(paths)
    raise ValueError(f"bad family {text!r}; expected zn:<lo>..<hi> or files:<glob>")


@dataclass(frozen=True)
class SearchConfig:
    family: ZnRange | FileList = ZnRange(2, 120)
    phis: tuple[MapSpec, ...] = DEFAULT_PHIS
    deltas: tuple[MapSpec, ...] = DEFAULT_DELTAS
    n_range: tuple[int, int] = (2, 4)
    witness_cap: int = WITNESS_CAP

    def __post_init__(self):
        if not self.phis or not self.deltas:
            raise ValueError("phi and delta lists must be nonempty")
        if any(d.is_none for d in self.deltas):
            raise ValueError("'none' is not a delta map")
        lo, hi = self.n_range
        if lo < 2 or hi < lo:
            raise ValueError(f"bad n range {lo}..{hi}")

    @classmethod
    def from_strings(cls, family="zn:2..120", phis=None, deltas=None, n_max=4, witness_cap=WITNESS_CAP):
        return cls(
            family=parse_family(family) if isinstance(family, str) else family,
            phis=tuple(parse_map_spec(s) for s in phis) if phis else DEFAULT_PHIS,
            deltas=tuple(parse_map_spec(s) for s in deltas) if deltas else DEFAULT_DELTAS,
            n_range=(2, n_max),
            witness_cap=witness_cap,
        )


# -- verdicts ---------------------------------------------------------------------------


@dataclass
class Verdict:
    theorem: str
    lattice: str
    status: str
    instances_checked: int
    witnesses: list[dict] = field(default_factory=list)
    violations: int = 0
    confirming: int = 0
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "lattice": self.lattice,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
        }
        if self.status == PROBE:
            out["confirming"] = self.confirming
        out["notes"] = self.notes
        return out


_ELEMENT_KEYS = ("b", "p", "q", "x", "m", "r", "bk")


class _Tally:
    def __init__(self, L: Lattice):
        self.L = L
        self.checked = 0
        self.confirming = 0
        self.bad: list[dict] = []

    def case(self, ok: bool, **w) -> None:
        self.checked += 1
        if ok:
            self.confirming += 1
        else:
            self.bad.append(w)

    def render(self, cap: int) -> list[dict]:
        def key(w):
            return tuple(
                (k, (0, v, "") if isinstance(v, int) and not isinstance(v, bool) else (1, 0, str(v)))
                for k, v in w.items()
            )

        out = []
        for w in sorted(self.bad, key=key)[:cap]:
            out.append({
                k: (self.L.names[v] if k in _ELEMENT_KEYS else str(v) if isinstance(v, MapSpec) else v)
                for k, v in w.items()
            })
        return out


@dataclass(frozen=True)
class Theorem:
    tag: str
    statement: str
    run: Callable[[Lattice, SearchConfig, _Tally], None]
    uses_phis: bool = True
    probe: bool = False
    applies_to: int | None = None  # Z_n modulus for the pinned examples


# -- helpers ----------------------------------------------------------------------------


def _proper(L):
    return [p for p in L.elements if p != L.top]


def _real(phis):
    return [f for f in phis if not f.is_none]


def _orbit_bound(L: Lattice) -> int:
    # p^(n+1) <= p^n, so every power sequence is constant from index `order` on
    return L.order + 1


def _all_powers_hold(L, b, p, delta) -> bool:
    return all(holds(L, b, p, phi_n(n), delta) for n in range(2, _orbit_bound(L) + 1))


def _direct(L, b, p, phi, bound) -> bool:
    """Definitional check with an explicit bound element (no map lookup for delta)."""
    le, mt = L.leq_table, L.mul_table
    floor = None if phi.is_none else map_values(L, phi)[p]
    for x in L.elements:
        xb = mt[x][b]
        if le[xb][p] and (floor is None or not le[xb][floor]) and not le[x][bound]:
            return False
    return True


# -- checkers ---------------------------------------------------------------------------


def _eq_delta0(L, cfg, t):
    for phi in cfg.phis:
        for b in L.elements:
            for p in _proper(L):
                t.case(holds(L, b, p, phi, DELTA0) == _direct(L, b, p, phi, p), b=b, p=p, phi=phi)


def _eq_delta1(L, cfg, t):
    rad = radical_table(L)
    for phi in cfg.phis:
        for b in L.elements:
            for p in _proper(L):
                t.case(holds(L, b, p, phi, DELTA1) == _direct(L, b, p, phi, rad[p]), b=b, p=p, phi=phi)


def _delta_monotone(L, cfg, t):
    pairs = [(d, g) for d in cfg.deltas for g in cfg.deltas if d != g and map_leq(L, d, g)]
    for phi in cfg.phis:
        for b in L.elements:
            for p in _proper(L):
                for d, g in pairs:
                    if holds(L, b, p, phi, d):
                        t.case(holds(L, b, p, phi, g), b=b, p=p, phi=phi, delta=d, gamma=g)
                if holds(L, b, p, phi, DELTA0):
                    for d in cfg.deltas:
                        t.case(holds(L, b, p, phi, d), b=b, p=p, phi=phi, delta=d, part="phi-prime")


def _prime_implies_all(L, cfg, t):
    for b in L.elements:
        for p in _proper(L):
            if holds(L, b, p, NONE, DELTA0):
                for phi in cfg.phis:
                    for d in cfg.deltas:
                        t.case(holds(L, b, p, phi, d), b=b, p=p, phi=phi, delta=d)


def characterization_conditions(L: Lattice, b, p, phi: MapSpec, delta: MapSpec) -> tuple[bool, bool, bool]:
    """The three equivalent conditions, each computed by its own route.

    1. definitional check over all x;
    2. residual form: (p:b) <= delta(p) or (p:b) = (phi(p):b);
    3. the same quantifier as 1 restricted to compact elements.
    """
    res = residual_table(L)
    dv = map_values(L, delta)[p]
    c1 = holds(L, b, p, phi, delta)
    pb = res[p][b]
    c2 = L.leq(pb, dv) or (not phi.is_none and pb == res[map_values(L, phi)[p]][b])
    le, mt = L.leq_table, L.mul_table
    floor = None if phi.is_none else map_values(L, phi)[p]
    c3 = all(
        not (le[mt[r][b]][p] and (floor is None or not le[mt[r][b]][floor])) or le[r][dv]
        for r in compact_elements(L)
    )
    return c1, c2, c3


def compact_elements(L: Lattice) -> range:
    # in a finite lattice every element is compact
    return L.elements


def _characterization(L, cfg, t):
    for phi in cfg.phis:
        for d in cfg.deltas:
            for b in L.elements:
                for p in _proper(L):
                    c1, c2, c3 = characterization_conditions(L, b, p, phi, d)
                    t.case(c1 == c2 == c3, b=b, p=p, phi=phi, delta=d)


def _quasilocal(L, cfg, t):
    if not (is_quasi_local(L) and is_noether(L)):
        return
    (m,) = maximal_elements(L)
    m2 = L.mul(m, m)
    for p in _proper(L):
        if L.mul(p, p) == m2 and L.leq(m2, p) and L.leq(p, m):
            for b in L.elements:
                t.case(holds(L, b, p, PHI2, DELTA1) or L.leq(b, p), b=b, p=p, m=m)


def _phi_monotone(L, cfg, t):
    real = _real(cfg.phis)
    pairs = [(g1, g2) for g1 in real for g2 in real if g1 != g2 and map_leq(L, g1, g2)]
    for g1, g2 in pairs:
        for d in cfg.deltas:
            for b in L.elements:
                for p in _proper(L):
                    if holds(L, b, p, g1, d):
                        t.case(holds(L, b, p, g2, d), b=b, p=p, phi=g1, gamma=g2, delta=d)


def _chain(cfg) -> list[MapSpec]:
    hi = cfg.n_range[1]
    return [NONE, PHI0, PHIOMEGA] + [phi_n(k) for k in range(hi + 1, 1, -1)]


def _implication_chain(L, cfg, t):
    chain = _chain(cfg)
    for d in cfg.deltas:
        for b in L.elements:
            for p in _proper(L):
                for stronger, weaker in zip(chain, chain[1:]):
                    if holds(L, b, p, stronger, d):
                        t.case(holds(L, b, p, weaker, d), b=b, p=p, delta=d,
                               step=f"{stronger} => {weaker}")


def _omega_iff_all_n(L, cfg, t):
    for d in cfg.deltas:
        for b in L.elements:
            for p in _proper(L):
                t.case(holds(L, b, p, PHIOMEGA, d) == _all_powers_hold(L, b, p, d), b=b, p=p, delta=d)


def _local_noether_domain(L, cfg, t):
    if not (is_local_noether(L) and is_domain(L)):
        return
    for d in cfg.deltas:
        for b in L.elements:
            if b == L.bottom:
                continue
            for p in _proper(L):
                plain = holds(L, b, p, NONE, d)
                t.case(_all_powers_hold(L, b, p, d) == plain, b=b, p=p, delta=d, form="all n")
                t.case(holds(L, b, p, PHIOMEGA, d) == plain, b=b, p=p, delta=d, form="omega")


def _rcl_elements(L):
    if not is_noether(L):
        return []
    return [
        p for p in _proper(L)
        if p != L.bottom and not is_nilpotent(L, p).holds and satisfies_rcl(L, p).holds
    ]


def _rcl_phi2(L, cfg, t):
    below = [f for f in _real(cfg.phis) if map_leq(L, f, PHI2)]
    for p in _rcl_elements(L):
        for b in L.elements:
            if not L.lt(p, b):
                continue
            for d in cfg.deltas:
                plain = holds(L, b, p, NONE, d)
                for f in below:
                    t.case(holds(L, b, p, f, d) == plain, b=b, p=p, phi=f, delta=d)
                t.case(not holds(L, b, p, PHI2, d) or plain, b=b, p=p, phi=PHI2, delta=d, form="corollary")


def _rcl_phin(L, cfg, t):
    bound = _orbit_bound(L)
    below = [
        f for f in _real(cfg.phis)
        if all(map_leq(L, f, phi_n(n)) for n in range(2, bound + 1))
    ]
    for p in _rcl_elements(L):
        for b in L.elements:
            if not L.lt(p, b):
                continue
            for d in cfg.deltas:
                plain = holds(L, b, p, NONE, d)
                for f in below:
                    t.case(holds(L, b, p, f, d) == plain, b=b, p=p, phi=f, delta=d)
                t.case(not _all_powers_hold(L, b, p, d) or plain, b=b, p=p, delta=d, form="corollary")


def _two_potent(L, cfg, t):
    below = [f for f in _real(cfg.phis) if map_leq(L, f, PHI2)]
    for d in cfg.deltas:
        for b in L.elements:
            for p in _proper(L):
                if not potent_holds(L, b, p, 2, d):
                    continue
                plain = holds(L, b, p, NONE, d)
                for f in below:
                    t.case(holds(L, b, p, f, d) == plain, b=b, p=p, phi=f, delta=d)
                t.case(not holds(L, b, p, PHI2, d) or plain, b=b, p=p, phi=PHI2, delta=d, form="corollary")


def _k_potent(L, cfg, t):
    lo, hi = cfg.n_range
    for n in range(max(lo, 2), hi + 1):
        pn = phi_n(n)
        below = [f for f in _real(cfg.phis) if map_leq(L, f, pn)]
        for d in cfg.deltas:
            for b in L.elements:
                for p in _proper(L):
                    ks = [k for k in range(2, n + 1) if potent_holds(L, b, p, k, d)]
                    if not ks:
                        continue
                    plain = holds(L, b, p, NONE, d)
                    for f in below:
                        t.case(holds(L, b, p, f, d) == plain, b=b, p=p, n=n, k=ks[0], phi=f, delta=d)
                    t.case(not holds(L, b, p, pn, d) or plain, b=b, p=p, n=n, k=ks[0], phi=pn,
                           delta=d, form="corollary")


def _pb_not_under_phi(L, cfg, t):
    for f in _real(cfg.phis):
        fv = map_values(L, f)
        for d in cfg.deltas:
            for b in L.elements:
                for p in _proper(L):
                    if holds(L, b, p, f, d) and not L.leq(L.mul(p, b), fv[p]):
                        t.case(holds(L, b, p, NONE, d), b=b, p=p, phi=f, delta=d)


def _phi0_pb_zero(L, cfg, t):
    for d in cfg.deltas:
        for b in L.elements:
            for p in _proper(L):
                if holds(L, b, p, PHI0, d) and not holds(L, b, p, NONE, d):
                    t.case(L.mul(p, b) == L.bottom, b=b, p=p, delta=d)


def _delta_primary_to_phi(L, cfg, t):
    for f in _real(cfg.phis):
        fv = map_values(L, f)
        for d in cfg.deltas:
            for b in L.elements:
                for p in _proper(L):
                    q = fv[p]
                    if q != L.top and holds(L, b, p, f, d) and holds(L, b, q, NONE, d):
                        t.case(holds(L, b, p, NONE, d), b=b, p=p, q=q, phi=f, delta=d)


def _residual_transfer(L, cfg, t):
    res = residual_table(L)
    for f in cfg.phis:
        fv = None if f.is_none else map_values(L, f)
        for d in cfg.deltas:
            dv = map_values(L, d)
            for p in _proper(L):
                for q in L.elements:
                    r = res[p][q]
                    if r == L.top:
                        continue
                    if fv is not None and not L.leq(res[fv[p]][q], fv[r]):
                        continue
                    if not L.leq(res[dv[p]][q], dv[r]):
                        continue
                    for b in L.elements:
                        if holds(L, b, p, f, d):
                            t.case(holds(L, b, r, f, d), b=b, p=p, q=q, r=r, phi=f, delta=d)


def _power_radical(L, cfg, t):
    rad = radical_table(L)
    for f in cfg.phis:
        fv = None if f.is_none else map_values(L, f)
        for p in _proper(L):
            rp = rad[p]
            if rp == L.top:
                continue
            if fv is not None and rad[fv[p]] != fv[rp]:
                continue
            for b in L.elements:
                if all(holds(L, bk, p, f, DELTA1) for bk in L.power_orbit(b)):
                    t.case(holds(L, b, rp, f, DELTA0), b=b, p=p, r=rp, phi=f)


def _idempotent(L, cfg, t):
    lo, hi = cfg.n_range
    powers = [phi_n(n) for n in range(2, hi + 1)]
    for p in _proper(L):
        if not is_idempotent(L, p).holds:
            continue
        for d in cfg.deltas:
            for b in L.elements:
                ok = holds(L, b, p, PHIOMEGA, d) and all(holds(L, b, p, f, d) for f in powers)
                t.case(ok, b=b, p=p, delta=d)


def _npotent_probe(L, cfg, t):
    lo, hi = cfg.n_range
    for n in range(3, hi + 1):
        for d in cfg.deltas:
            for b in L.elements:
                for p in _proper(L):
                    if potent_holds(L, b, p, n, DELTA0):
                        t.case(potent_holds(L, b, p, 2, d), b=b, p=p, n=n, delta=d)


# Pinned claims of the three worked examples: (description, predicate, expected).
def _pinned(n: int):
    from .predicates import n_potent_primary_to

    def prim(b, p, phi, delta):
        return lambda L: holds(L, L.index(b), L.index(p), phi, delta)

    def potent(b, p, k, delta):
        return lambda L: n_potent_primary_to(L, L.index(b), L.index(p), k, delta).holds

    def idem(a):
        return lambda L: is_idempotent(L, L.index(a)).holds

    table = {
        24: [
            ("(2) phi2-delta1-primary to (4)", prim("(2)", "(4)", PHI2, DELTA1), True),
            ("(2) phi2-prime to (4)", prim("(2)", "(4)", PHI2, DELTA0), False),
            ("(2) prime to (4)", prim("(2)", "(4)", NONE, DELTA0), False),
        ],
        30: [
            ("(2) phi2-delta1-primary to (6)", prim("(2)", "(6)", PHI2, DELTA1), True),
            ("(2) delta1-primary to (6)", prim("(2)", "(6)", NONE, DELTA1), False),
            ("(3) phi2-delta1-primary to (6)", prim("(3)", "(6)", PHI2, DELTA1), True),
            ("(3) 2-potent delta0-primary to (6)", potent("(3)", "(6)", 2, DELTA0), False),
        ],
        8: [
            ("(2) phi2-delta1-primary to (4)", prim("(2)", "(4)", PHI2, DELTA1), True),
            ("(4) idempotent", idem("(4)"), False),
            ("(2) 2-potent delta0-primary to (4)", potent("(2)", "(4)", 2, DELTA0), True),
            ("(2) prime to (4)", prim("(2)", "(4)", NONE, DELTA0), False),
        ],
    }
    return table[n]


def _example(n: int):
    def run(L, cfg, t):
        if zn_modulus(L) != n:
            return
        for claim, fn, expected in _pinned(n):
            actual = fn(L)
            t.case(actual == expected, claim=claim, expected=expected, actual=actual)

    return run


CATALOGUE: dict[str, Theorem] = {
    th.tag: th
    for th in [
        Theorem("EQ-DELTA0-PHI-PRIME", "phi-delta0-primary to p iff phi-prime to p", _eq_delta0),
        Theorem("EQ-DELTA1-PHI-PRIMARY", "phi-delta1-primary to p iff phi-primary to p", _eq_delta1),
        Theorem("DELTA-MONOTONE", "delta <= gamma and phi-delta-primary imply phi-gamma-primary; phi-prime implies phi-delta-primary", _delta_monotone),
        Theorem("PRIME-IMPLIES-ALL", "prime to p implies phi-delta-primary to p for every phi, delta", _prime_implies_all),
        Theorem("CHARACTERIZATION", "phi-delta-primary iff (p:b) <= delta(p) or (p:b) = (phi(p):b), iff the compact-element form", _characterization),
        Theorem("QUASILOCAL-MSQUARE", "quasi-local Noether (L, m), p^2 = m^2 <= p <= m: b is phi2-delta1-primary to p or b <= p", _quasilocal, uses_phis=False),
        Theorem("PHI-MONOTONE", "gamma1 <= gamma2 and gamma1-delta-primary imply gamma2-delta-primary", _phi_monotone),
        Theorem("IMPLICATION-CHAIN", "delta-primary => phi0 => phi_omega => phi_(n+1) => phi_n => phi2 (each -delta-primary)", _implication_chain, uses_phis=False),
        Theorem("OMEGA-IFF-ALL-N", "phi_omega-delta-primary iff phi_n-delta-primary for every n >= 2", _omega_iff_all_n, uses_phis=False),
        Theorem("LOCAL-NOETHER-DOMAIN", "local Noether domain, b != 0: phi_n-delta-primary for all n >= 2 (or phi_omega) iff delta-primary", _local_noether_domain, uses_phis=False),
        Theorem("RCL-PHI2", "Noether, p != 0 proper non-nilpotent with restricted cancellation, p < b: phi-delta-primary for some phi <= phi2 iff delta-primary", _rcl_phi2),
        Theorem("RCL-PHIN", "as RCL-PHI2 with phi <= phi_n for all n >= 2", _rcl_phin),
        Theorem("TWO-POTENT", "b 2-potent delta-primary to p: phi-delta-primary for some phi <= phi2 iff delta-primary", _two_potent),
        Theorem("K-POTENT", "b k-potent delta-primary to p, k <= n: phi-delta-primary for some phi <= phi_n iff delta-primary", _k_potent),
        Theorem("PB-NOT-UNDER-PHI", "phi-delta-primary and pb not below phi(p) imply delta-primary", _pb_not_under_phi),
        Theorem("PHI0-PB-ZERO", "phi0-delta-primary but not delta-primary implies pb = 0", _phi0_pb_zero, uses_phis=False),
        Theorem("DELTA-PRIMARY-TO-PHI", "phi-delta-primary to p and delta-primary to phi(p) imply delta-primary to p", _delta_primary_to_phi),
        Theorem("RESIDUAL-TRANSFER", "phi-delta-primary to p, (phi(p):q) <= phi(p:q), (delta(p):q) <= delta(p:q) imply phi-delta-primary to (p:q)", _residual_transfer),
        Theorem("POWER-RADICAL", "every b^k phi-delta1-primary to p and delta1(phi(p)) = phi(delta1(p)) imply b phi-prime to delta1(p)", _power_radical),
        Theorem("IDEMPOTENT-VACUOUS", "p idempotent: every b is phi_omega- and phi_n-delta-primary to p", _idempotent, uses_phis=False),
        Theorem("REMARK-NPOTENT-PROBE", "n-potent delta0-primary implies 2-potent delta-primary (unproved remark; probed only)", _npotent_probe, uses_phis=False, probe=True),
        Theorem("EXAMPLE-Z24", "worked example over Z_24", _example(24), uses_phis=False, applies_to=24),
        Theorem("EXAMPLE-Z30", "worked example over Z_30", _example(30), uses_phis=False, applies_to=30),
        Theorem("EXAMPLE-Z8", "worked example over Z_8", _example(8), uses_phis=False, applies_to=8),
    ]
}

TAGS = tuple(CATALOGUE)


def _validate_cfg(L: Lattice, cfg: SearchConfig) -> None:
    for d in cfg.deltas:
        require_expansion(L, d)
    for f in cfg.phis:
        require_reduction(L, f)


def applies(L: Lattice, tag: str) -> bool:
    th = CATALOGUE[tag]
    return th.applies_to is None or zn_modulus(L) == th.applies_to


def check(L: Lattice, tag: str, cfg: SearchConfig | None = None) -> Verdict:
    """Run one catalogue entry exhaustively on one lattice."""
    if tag not in CATALOGUE:
        raise LatprimError(f"unknown theorem tag {tag!r}")
    cfg = cfg or SearchConfig()
    _validate_cfg(L, cfg)
    th = CATALOGUE[tag]
    tally = _Tally(L)
    th.run(L, cfg, tally)
    violations = len(tally.bad)
    if th.probe:
        status = PROBE
    elif violations:
        status = VIOLATED
    elif tally.checked == 0:
        status = VACUOUS
    else:
        status = HOLDS
    notes = []
    if th.uses_phis and any(f.kind == "phi1" for f in cfg.phis):
        notes.append(PHI1_NOTE)
    if th.applies_to is not None and zn_modulus(L) != th.applies_to:
        notes.append(f"not applicable: lattice is not zn:{th.applies_to}")
    return Verdict(
        theorem=tag,
        lattice=L.label or f"order-{L.order}",
        status=status,
        instances_checked=tally.checked,
        witnesses=tally.render(cfg.witness_cap),
        violations=violations,
        confirming=tally.confirming,
        notes=notes,
    )


# -- converse hunts -------------------------------------------------------------------
#
# Each hunter yields instances where the stronger notion fails although the
# weaker one holds, i.e. evidence that an implication cannot be reversed.


def _conv_chain(L, cfg, t):
    for d in cfg.deltas:
        for b in L.elements:
            for p in _proper(L):
                if holds(L, b, p, PHI2, d):
                    t.case(holds(L, b, p, NONE, d), b=b, p=p, phi=PHI2, delta=d)


def _conv_prime(L, cfg, t):
    for b in L.elements:
        for p in _proper(L):
            prime = holds(L, b, p, NONE, DELTA0)
            for f in cfg.phis:
                for d in cfg.deltas:
                    if holds(L, b, p, f, d):
                        t.case(prime, b=b, p=p, phi=f, delta=d)


def _conv_delta(L, cfg, t):
    pairs = [(d, g) for d in cfg.deltas for g in cfg.deltas if d != g and map_leq(L, d, g)]
    for b in L.elements:
        for p in _proper(L):
            for f in cfg.phis:
                for d, g in pairs:
                    if holds(L, b, p, f, g):
                        t.case(holds(L, b, p, f, d), b=b, p=p, phi=f, delta=d, gamma=g)


def _conv_phi(L, cfg, t):
    real = _real(cfg.phis)
    pairs = [(g1, g2) for g1 in real for g2 in real if g1 != g2 and map_leq(L, g1, g2)]
    for b in L.elements:
        for p in _proper(L):
            for g1, g2 in pairs:
                for d in cfg.deltas:
                    if holds(L, b, p, g2, d):
                        t.case(holds(L, b, p, g1, d), b=b, p=p, phi=g1, gamma=g2, delta=d)


def _conv_idempotent(L, cfg, t):
    for b in L.elements:
        for p in _proper(L):
            for d in cfg.deltas:
                if holds(L, b, p, PHI2, d):
                    t.case(is_idempotent(L, p).holds, b=b, p=p, phi=PHI2, delta=d)


CONVERSES: dict[str, Callable] = {
    "IMPLICATION-CHAIN": _conv_chain,
    "PRIME-IMPLIES-ALL": _conv_prime,
    "DELTA-MONOTONE": _conv_delta,
    "PHI-MONOTONE": _conv_phi,
    "IDEMPOTENT-VACUOUS": _conv_idempotent,
}


def parse_claim(text: str) -> tuple[str, bool]:
    """``<TAG>`` or ``converse of <TAG>`` -> (tag, is_converse)."""
    words = text.split()
    converse = False
    if len(words) == 3 and [w.lower() for w in words[:2]] == ["converse", "of"]:
        converse = True
        words = words[2:]
    if len(words) != 1:
        raise ClaimError(f"cannot parse claim {text!r}; use '<TAG>' or 'converse of <TAG>'")
    tag = words[0].upper()
    if tag not in CATALOGUE:
        raise ClaimError(f"unknown theorem tag {words[0]!r}")
    if converse and tag not in CONVERSES:
        raise ClaimError(f"no converse search is defined for {tag}")
    return tag, converse


def hunt(L: Lattice, tag: str, converse: bool, cfg: SearchConfig) -> Verdict:
    """Counterexamples on one lattice: theorem violations, probe failures, or
    separations for a converse claim (as the verdict's witnesses)."""
    if not converse:
        return check(L, tag, cfg)
    _validate_cfg(L, cfg)
    tally = _Tally(L)
    CONVERSES[tag](L, cfg, tally)
    return Verdict(
        theorem=f"converse of {tag}",
        lattice=L.label or f"order-{L.order}",
        status=PROBE,
        instances_checked=tally.checked,
        witnesses=tally.render(cfg.witness_cap),
        violations=len(tally.bad),
        confirming=tally.confirming,
    )
