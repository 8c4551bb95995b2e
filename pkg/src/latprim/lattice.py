"""Finite multiplicative lattices as fully materialized tables.

Elements are addressed by integer index (``ElementId``) into ``Lattice.names``.
Join and meet tables are derived from the order relation at construction; the
multiplication table is supplied by the caller.  Nothing is checked until
:func:`validate` runs, so a malformed or non-axiomatic table set can still be
inspected and reported on.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import reduce

from .errors import AxiomError, StructureError, UnknownElementError

ElementId = int


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple[ElementId, ...]
    witness_names: tuple[str, ...] = ()
    detail: str = ""


@dataclass
class ValidationReport:
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def axioms(self) -> list[str]:
        return [f.axiom for f in self.failures]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [
                {"axiom": f.axiom, "witness": list(f.witness_names), "detail": f.detail}
                for f in self.failures
            ],
        }


def _as_table(rows, order: int, what: str) -> tuple[tuple, ...]:
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != order or any(len(r) != order for r in rows):
        raise StructureError(f"{what} table must be {order}x{order}")
    return rows


class Lattice:
    """An immutable finite lattice with a commutative multiplication.

    ``leq[i][j]`` is true iff element ``i`` is below element ``j``;
    ``mul[i][j]`` is the index of the product.  ``top``/``bottom`` default to
    the unique greatest/least element when omitted.
    """

    __slots__ = (
        "names", "order", "leq_table", "mul_table", "join_table", "meet_table",
        "top", "bottom", "label", "_index", "_memo", "_structure", "_hash",
    )

    def __init__(
        self,
        names: Sequence[str],
        leq: Sequence[Sequence[bool]],
        mul: Sequence[Sequence[ElementId]],
        top: ElementId | None = None,
        bottom: ElementId | None = None,
        label: str = "",
    ):
        self.names = tuple(str(n) for n in names)
        self.order = len(self.names)
        self.label = label
        self._memo: dict = {}
        self._hash = None
        self._structure: str | None = None
        self._index = {n: i for i, n in enumerate(self.names)}
        try:
            self.leq_table = tuple(tuple(bool(v) for v in r) for r in _as_table(leq, self.order, "LEQ"))
            self.mul_table = _as_table(mul, self.order, "MUL")
        except StructureError as exc:
            self.leq_table = tuple(tuple(bool(v) for v in r) for r in leq)
            self.mul_table = tuple(tuple(r) for r in mul)
            self._structure = str(exc)
        if self._structure is None:
            self._structure = self._check_structure()
        if self._structure is None:
            self.top = self._extreme(greatest=True) if top is None else top
            self.bottom = self._extreme(greatest=False) if bottom is None else bottom
            if self.top is None or self.bottom is None:
                self._structure = "no unique top/bottom element"
            elif not (0 <= self.top < self.order and 0 <= self.bottom < self.order):
                self._structure = "top/bottom id out of range"
        else:
            self.top = top if top is not None else -1
            self.bottom = bottom if bottom is not None else -1
        if self._structure is None:
            self.join_table = self._bound_table(upper=True)
            self.meet_table = self._bound_table(upper=False)
        else:
            self.join_table = self.meet_table = ()

    # -- construction helpers -------------------------------------------------

    def _check_structure(self) -> str | None:
        if self.order < 2:
            return "a multiplicative lattice needs at least 2 elements"
        if len(self._index) != self.order:
            return "element names are not unique"
        for n in self.names:
            if not n or any(c.isspace() for c in n) or "#" in n:
                return f"invalid element name {n!r}"
        for row in self.mul_table:
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.order:
                    return f"MUL entry {v!r} is not an element id"
        return None

    def _extreme(self, greatest: bool) -> ElementId | None:
        for i in range(self.order):
            if all((self.leq_table[j][i] if greatest else self.leq_table[i][j]) for j in range(self.order)):
                return i
        return None

    def _bound_table(self, upper: bool):
        # The common upper bounds of i and j form the up-set U_i & U_j; a least
        # one exists iff that mask is itself the up-set of a single element.
        n, le = self.order, self.leq_table
        cone = []
        for i in range(n):
            mask = 0
            for k in range(n):
                if (le[i][k] if upper else le[k][i]):
                    mask |= 1 << k
            cone.append(mask)
        owner: dict[int, int | None] = {}
        for i, m in enumerate(cone):
            owner[m] = None if m in owner else i
        return tuple(
            tuple(owner.get(cone[i] & cone[j]) for j in range(n)) for i in range(n)
        )

    # -- identity --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.names == other.names
            and self.leq_table == other.leq_table
            and self.mul_table == other.mul_table
            and self.top == other.top
            and self.bottom == other.bottom
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, self.mul_table, self.top, self.bottom))
        return self._hash

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"<Lattice{tag} order={self.order}>"

    def __getstate__(self):
        return (self.names, self.leq_table, self.mul_table, self.top, self.bottom, self.label)

    def __setstate__(self, state):
        names, leq, mul, top, bottom, label = state
        self.__init__(names, leq, mul, top, bottom, label)

    # -- naming ------------------------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.order)

    def index(self, name: str) -> ElementId:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElementError(name) from None

    def name(self, a: ElementId) -> str:
        return self.names[a]

    def __getitem__(self, name: str) -> ElementId:
        return self.index(name)

    # -- primitive algebra -----------------------------------------------------

    def leq(self, a: ElementId, b: ElementId) -> bool:
        return self.leq_table[a][b]

    def lt(self, a: ElementId, b: ElementId) -> bool:
        return a != b and self.leq_table[a][b]

    def join(self, xs: Iterable[ElementId]) -> ElementId:
        jt = self.join_table
        return reduce(lambda a, b: jt[a][b], xs, self.bottom)

    def meet(self, xs: Iterable[ElementId]) -> ElementId:
        mt = self.meet_table
        return reduce(lambda a, b: mt[a][b], xs, self.top)

    def mul(self, a: ElementId, b: ElementId) -> ElementId:
        return self.mul_table[a][b]

    def power(self, a: ElementId, n: int) -> ElementId:
        if n < 1:
            raise ValueError("power exponent must be a positive integer")
        orbit = self.power_orbit(a)
        # orbit[k] = a^(k+1); once the orbit closes it cycles back to orbit[start]
        if n <= len(orbit):
            return orbit[n - 1]
        start = orbit.index(self.mul_table[orbit[-1]][a])
        period = len(orbit) - start
        return orbit[start + (n - 1 - start) % period]

    def power_orbit(self, a: ElementId) -> tuple[ElementId, ...]:
        """Distinct powers a, a^2, a^3, ... up to the first repeat."""
        key = ("orbit", a)
        hit = self._memo.get(key)
        if hit is None:
            seen: list[ElementId] = []
            x = a
            while x not in seen:
                seen.append(x)
                x = self.mul_table[x][a]
            hit = self._memo[key] = tuple(seen)
        return hit

    def is_proper(self, a: ElementId) -> bool:
        return a != self.top


def _first(it):
    return next(iter(it), None)


def validate(L: Lattice) -> ValidationReport:
    """Check every multiplicative-lattice axiom exhaustively.

    One failure per violated axiom, witnessed by the lexicographically first
    offending tuple.  A structural problem short-circuits the axiom checks.
    """
    report = ValidationReport()

    def fail(axiom, witness, detail=""):
        names = tuple(L.names[i] if 0 <= i < L.order else str(i) for i in witness)
        report.failures.append(Failure(axiom, tuple(witness), names, detail))

    if L._structure is not None:
        fail("structure", (), L._structure)
        return report

    n, le, mt = L.order, L.leq_table, L.mul_table
    E = range(n)

    w = _first((a,) for a in E if not le[a][a])
    if w:
        fail("leq-reflexive", w)
    w = _first((a, b) for a in E for b in E if a != b and le[a][b] and le[b][a])
    if w:
        fail("leq-antisymmetric", w)
    w = _first((a, b, c) for a in E for b in E for c in E if le[a][b] and le[b][c] and not le[a][c])
    if w:
        fail("leq-transitive", w)
    order_ok = not report.failures

    w = _first((a,) for a in E if not le[a][L.top])
    if w:
        fail("top-greatest", w)
    w = _first((a,) for a in E if not le[L.bottom][a])
    if w:
        fail("bottom-least", w)
    w = _first((a, b) for a in E for b in E if L.join_table[a][b] is None)
    if w:
        fail("join-exists", w)
    w = _first((a, b) for a in E for b in E if L.meet_table[a][b] is None)
    if w:
        fail("meet-exists", w)
    lattice_ok = order_ok and not report.failures

    w = _first((a, b) for a in E for b in E if mt[a][b] != mt[b][a])
    if w:
        fail("mul-commutative", w)
    w = _first(
        (a, b, c) for a in E for b in E for c in E if mt[mt[a][b]][c] != mt[a][mt[b][c]]
    )
    if w:
        fail("mul-associative", w)
    w = _first((a,) for a in E if mt[L.top][a] != a or mt[a][L.top] != a)
    if w:
        fail("top-identity", w)
    if lattice_ok:
        jt, meet = L.join_table, L.meet_table
        w = _first(
            (a, b, c)
            for a in E for b in E for c in E
            if mt[a][jt[b][c]] != jt[mt[a][b]][mt[a][c]]
        )
        if w:
            fail("mul-join-distributive", w)
        w = _first((a, b) for a in E for b in E if not le[mt[a][b]][meet[a][b]])
        if w:
            fail("ab ≤ a∧b", w)
    return report


def ensure_valid(L: Lattice) -> Lattice:
    report = validate(L)
    if not report.ok:
        raise AxiomError(report)
    return L
