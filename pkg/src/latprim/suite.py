"""Run the theorem catalogue over a lattice family and hunt for counterexamples."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructors import zn_modulus
from .lattice import Lattice
from .theorems import (
    CATALOGUE, HOLDS, TAGS, VACUOUS, VIOLATED, SearchConfig, Verdict, applies, check, hunt,
    parse_claim,
)

# Must fire somewhere in any family that contains a nontrivial lattice.
REQUIRED_NONVACUOUS = ("CHARACTERIZATION", "IMPLICATION-CHAIN", "IDEMPOTENT-VACUOUS", "PB-NOT-UNDER-PHI")
# Must fire on this particular Z_n whenever it is in the family.
REQUIRED_AT = {
    "QUASILOCAL-MSQUARE": 9,
    "EXAMPLE-Z24": 24,
    "EXAMPLE-Z30": 30,
    "EXAMPLE-Z8": 8,
}
# Tracked but allowed to stay silent: in a finite lattice no proper,
# non-nilpotent element can satisfy restricted cancellation, so the RCL
# hypotheses never hold.
TRACKED = ("RCL-PHI2", "RCL-PHIN", "LOCAL-NOETHER-DOMAIN")


@dataclass
class SuiteReport:
    family: str
    verdicts: list[Verdict] = field(default_factory=list)
    lattices: list[str] = field(default_factory=list)
    skipped: int = 0

    @property
    def violated(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == VIOLATED]

    def fired(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {tag: [] for tag in TAGS if not CATALOGUE[tag].probe}
        for v in self.verdicts:
            if v.theorem in out and v.status not in (VACUOUS,):
                out[v.theorem].append(v.lattice)
        return out

    def nonvacuity_failures(self) -> list[str]:
        fired = self.fired()
        problems = []
        if self.lattices:
            for tag in REQUIRED_NONVACUOUS:
                if not fired[tag]:
                    problems.append(f"{tag} never fired")
        for tag, n in REQUIRED_AT.items():
            label = f"zn:{n}"
            if label in self.lattices and label not in fired[tag]:
                problems.append(f"{tag} vacuous on {label}")
        return problems

    @property
    def ok(self) -> bool:
        return not self.violated and not self.nonvacuity_failures()

    def to_dict(self) -> dict:
        fired = self.fired()
        return {
            "family": self.family,
            "ok": self.ok,
            "lattices": len(self.lattices),
            "verdicts": [v.to_dict() for v in self.verdicts],
            "summary": {
                tag: {
                    "violated": sum(1 for v in self.verdicts if v.theorem == tag and v.status == VIOLATED),
                    "nonvacuous_on": len(fired[tag]),
                    "instances_checked": sum(v.instances_checked for v in self.verdicts if v.theorem == tag),
                }
                for tag in fired
            },
            "nonvacuity_failures": self.nonvacuity_failures(),
            "never_fired": [tag for tag in fired if not fired[tag]],
            "skipped_examples": self.skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _lattice_verdicts(L: Lattice, cfg: SearchConfig) -> tuple[list[Verdict], int]:
    out, skipped = [], 0
    for tag, th in CATALOGUE.items():
        if th.probe:
            continue
        if not applies(L, tag):
            skipped += 1
            continue
        out.append(check(L, tag, cfg))
    return out, skipped


def _label(L: Lattice) -> str:
    if not L.label:
        n = zn_modulus(L)
        return f"zn:{n}" if n else f"order-{L.order}"
    return L.label


def run_suite(cfg: SearchConfig, jobs: int = 1) -> SuiteReport:
    """Every non-probe theorem on every lattice of the family.

    Verdicts come back in family order, then catalogue order, whatever
    ``jobs`` is.
    """
    lattices = list(cfg.family.lattices())
    report = SuiteReport(family=str(cfg.family), lattices=[_label(L) for L in lattices])
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_lattice_verdicts, lattices, [cfg] * len(lattices)))
    else:
        results = [_lattice_verdicts(L, cfg) for L in lattices]
    for verdicts, skipped in results:
        report.verdicts.extend(verdicts)
        report.skipped += skipped
    return report


@dataclass
class SearchReport:
    claim: str
    family: str
    hits: list[dict] = field(default_factory=list)
    lattices_searched: int = 0
    instances: int = 0
    confirming: int = 0

    @property
    def found(self) -> bool:
        return bool(self.hits)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "family": self.family,
            "found": self.found,
            "lattices_searched": self.lattices_searched,
            "instances": self.instances,
            "confirming": self.confirming,
            "counterexamples": sum(h["count"] for h in self.hits),
            "hits": self.hits,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def search(claim: str, cfg: SearchConfig) -> SearchReport:
    """Hunt for instances where a claim's hypotheses hold and its conclusion fails.

    ``claim`` is ``<TAG>`` or ``converse of <TAG>``.  Hits are listed per
    lattice in family order (smallest n first for Z_n ranges); within a
    lattice witnesses are in lexicographic element order, so ``smallest`` is
    the first one.
    """
    tag, converse = parse_claim(claim)
    name = f"converse of {tag}" if converse else tag
    report = SearchReport(claim=name, family=str(cfg.family))
    for L in cfg.family.lattices():
        if not applies(L, tag):
            continue
        report.lattices_searched += 1
        v = hunt(L, tag, converse, cfg)
        report.instances += v.instances_checked
        report.confirming += v.confirming
        if v.violations:
            report.hits.append({
                "lattice": _label(L),
                "count": v.violations,
                "smallest": v.witnesses[0],
                "witnesses": v.witnesses,
            })
    return report


def is_theorem_failure(report: SearchReport) -> bool:
    """True when a search found a counterexample to a proved statement."""
    if report.claim.startswith("converse of "):
        return False
    return report.found and not CATALOGUE[report.claim].probe


__all__ = ["SuiteReport", "SearchReport", "run_suite", "search", "is_theorem_failure", "HOLDS"]
