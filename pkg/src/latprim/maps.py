"""Residuals, radicals and the delta/phi unary map families.

A delta (expansion) map satisfies a <= delta(a) and is monotone.  A phi map is
an exclusion bound with phi(a) <= a.  ``NONE`` is the placeholder for "no
exclusion clause"; it has no values and is handled by the predicate kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidMapError, MapSpecError, UnknownElementError
from .lattice import ElementId, Lattice

BUILTIN_KINDS = ("delta0", "delta1", "phi0", "phi1", "phiN", "phiomega", "none", "table")


@dataclass(frozen=True)
class MapSpec:
    kind: str
    n: int | None = None
    values: tuple[ElementId, ...] | None = None
    source: str = ""

    def __post_init__(self):
        if self.kind not in BUILTIN_KINDS:
            raise MapSpecError(f"unknown map kind {self.kind!r}")
        if self.kind == "phiN" and (not isinstance(self.n, int) or self.n < 2):
            raise MapSpecError("phiN needs an exponent n >= 2")
        if self.kind == "table" and self.values is None:
            raise MapSpecError("table map needs values")

    @property
    def label(self) -> str:
        if self.kind == "phiN":
            return "phi2" if self.n == 2 else f"phiN:{self.n}"
        if self.kind == "table":
            return f"@{self.source}" if self.source else "table"
        return self.kind

    @property
    def is_none(self) -> bool:
        return self.kind == "none"

    def __str__(self):
        return self.label


DELTA0 = MapSpec("delta0")
DELTA1 = MapSpec("delta1")
NONE = MapSpec("none")
PHI0 = MapSpec("phi0")
PHI1 = MapSpec("phi1")
PHI2 = MapSpec("phiN", 2)
PHIOMEGA = MapSpec("phiomega")


def phi_n(n: int) -> MapSpec:
    return MapSpec("phiN", n)


def table_map(values, source: str = "") -> MapSpec:
    return MapSpec("table", values=tuple(values), source=source)


def parse_map_spec(text: str, L: Lattice | None = None) -> MapSpec:
    """Parse ``delta0``, ``phi3``, ``phiN:<n>``, ``phiomega``, ``none`` or ``@file``.

    Table maps (``@file``, one ``name -> name`` per line) need the lattice to
    resolve names.
    """
    t = text.strip()
    simple = {"delta0": DELTA0, "delta1": DELTA1, "none": NONE, "phi_none": NONE,
              "phi0": PHI0, "phi1": PHI1, "phiomega": PHIOMEGA}
    if t.lower() in simple:
        return simple[t.lower()]
    low = t.lower()
    digits = None
    if low.startswith("phin:"):
        digits = t[5:]
    elif low.startswith("phi") and t[3:].isdigit():
        digits = t[3:]
    if digits is not None:
        if not digits.isdigit() or int(digits) < 2:
            raise MapSpecError(f"bad power map {text!r}: exponent must be an integer >= 2")
        return phi_n(int(digits))
    if t.startswith("@"):
        if L is None:
            raise MapSpecError("table maps need a single concrete lattice")
        path = t[1:]
        try:
            with open(path, encoding="utf-8") as fh:
                doc = fh.read()
        except OSError as exc:
            raise MapSpecError(f"cannot read map file {path}: {exc.strerror}") from None
        return parse_table_map(doc, L, source=path)
    raise MapSpecError(f"unknown map spec {text!r}")


def parse_table_map(doc: str, L: Lattice, source: str = "") -> MapSpec:
    values: list[ElementId | None] = [None] * L.order
    for no, raw in enumerate(doc.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise MapSpecError(f"line {no}: expected 'name -> name'")
        left, right = (s.strip() for s in line.split("->", 1))
        try:
            a, b = L.index(left), L.index(right)
        except UnknownElementError as exc:
            raise MapSpecError(f"line {no}: {exc}") from None
        if values[a] is not None:
            raise MapSpecError(f"line {no}: {left} mapped twice")
        values[a] = b
    missing = [L.names[i] for i, v in enumerate(values) if v is None]
    if missing:
        raise MapSpecError(f"table map leaves {', '.join(missing)} unmapped")
    return table_map(values, source)


# -- residual and radical -------------------------------------------------------


def residual_table(L: Lattice) -> tuple[tuple[ElementId, ...], ...]:
    """res[a][b] = (a:b), the join of all x with xb <= a."""
    hit = L._memo.get("residual")
    if hit is None:
        E, le, mt = L.elements, L.leq_table, L.mul_table
        hit = tuple(
            tuple(L.join(x for x in E if le[mt[x][b]][a]) for b in E) for a in E
        )
        L._memo["residual"] = hit
    return hit


def residual(L: Lattice, a: ElementId, b: ElementId) -> ElementId:
    return residual_table(L)[a][b]


def radical_table(L: Lattice) -> tuple[ElementId, ...]:
    hit = L._memo.get("radical")
    if hit is None:
        le = L.leq_table
        hit = tuple(
            L.join(x for x in L.elements if any(le[y][a] for y in L.power_orbit(x)))
            for a in L.elements
        )
        L._memo["radical"] = hit
    return hit


def radical(L: Lattice, a: ElementId) -> ElementId:
    return radical_table(L)[a]


def omega_power(L: Lattice, p: ElementId) -> ElementId:
    """Meet of every power of p; finite because the power orbit repeats."""
    return L.meet(L.power_orbit(p))


# -- evaluation -------------------------------------------------------------------


def map_values(L: Lattice, m: MapSpec) -> tuple[ElementId, ...]:
    if m.is_none:
        raise MapSpecError("the 'none' map has no values")
    key = ("map", m)
    hit = L._memo.get(key)
    if hit is not None:
        return hit
    E = L.elements
    if m.kind == "delta0" or m.kind == "phi1":
        vals = tuple(E)
    elif m.kind == "delta1":
        vals = radical_table(L)
    elif m.kind == "phi0":
        vals = (L.bottom,) * L.order
    elif m.kind == "phiN":
        vals = tuple(L.power(p, m.n) for p in E)
    elif m.kind == "phiomega":
        vals = tuple(omega_power(L, p) for p in E)
    else:
        if len(m.values) != L.order or any(
            not isinstance(v, int) or not 0 <= v < L.order for v in m.values
        ):
            raise MapSpecError(f"table map does not fit a lattice of order {L.order}")
        vals = m.values
    L._memo[key] = vals
    return vals


def eval_map(L: Lattice, m: MapSpec, p: ElementId) -> ElementId:
    return map_values(L, m)[p]


@dataclass(frozen=True)
class MapCheck:
    ok: bool
    condition: str = ""
    witness: tuple[ElementId, ...] = ()

    def __bool__(self):
        return self.ok


def is_expansion(L: Lattice, m: MapSpec) -> MapCheck:
    v, le, E = map_values(L, m), L.leq_table, L.elements
    for a in E:
        if not le[a][v[a]]:
            return MapCheck(False, "a ≤ δ(a)", (a,))
    for a in E:
        for b in E:
            if le[a][b] and not le[v[a]][v[b]]:
                return MapCheck(False, "a ≤ b ⟹ δ(a) ≤ δ(b)", (a, b))
    return MapCheck(True)


def is_reduction(L: Lattice, m: MapSpec) -> MapCheck:
    v, le = map_values(L, m), L.leq_table
    for p in L.elements:
        if not le[v[p]][p]:
            return MapCheck(False, "φ(p) ≤ p", (p,))
    return MapCheck(True)


def map_leq(L: Lattice, m1: MapSpec, m2: MapSpec) -> bool:
    v1, v2, le = map_values(L, m1), map_values(L, m2), L.leq_table
    return all(le[a][b] for a, b in zip(v1, v2))


def normalize_reduction(L: Lattice, m: MapSpec) -> MapSpec:
    """Pointwise meet with the identity, turning any map into a reduction."""
    v = map_values(L, m)
    return table_map((L.meet_table[p][v[p]] for p in L.elements), m.source)


def require_expansion(L: Lattice, m: MapSpec) -> None:
    key = ("expansion-ok", m)
    if key not in L._memo:
        if m.is_none:
            raise MapSpecError("'none' cannot be used as a delta map")
        L._memo[key] = is_expansion(L, m)
    chk = L._memo[key]
    if not chk:
        raise InvalidMapError(f"expansion ({chk.condition})", tuple(L.names[i] for i in chk.witness))


def require_reduction(L: Lattice, m: MapSpec) -> None:
    if m.is_none:
        return
    key = ("reduction-ok", m)
    if key not in L._memo:
        L._memo[key] = is_reduction(L, m)
    chk = L._memo[key]
    if not chk:
        raise InvalidMapError(f"reduction ({chk.condition})", tuple(L.names[i] for i in chk.witness))
