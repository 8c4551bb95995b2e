"""Lattice builders: ideal lattices of Z_n and the line-oriented text format.

Text format (UTF-8, ``#`` starts a comment, blank lines ignored)::

    LATTICE <order>
    ELEMENTS
    <name>            # exactly <order> lines, one name each
    TOP <name>
    BOTTOM <name>
    LEQ
    <0/1 row>         # <order> rows of <order> entries, row i is leq[i][*]
    MUL
    <name row>        # <order> rows of <order> element names

Join and meet are derived from LEQ and never serialized.  Anything after the
last MUL row is rejected.
"""

from __future__ import annotations

import re
from math import gcd, lcm

from .errors import AxiomError, DimensionError, ParseError, StructureError, UnknownElementError
from .lattice import Lattice, validate

ZN_MAX = 10**6
KEYWORDS = frozenset({"LATTICE", "ELEMENTS", "TOP", "BOTTOM", "LEQ", "MUL"})


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def zn_ideal_lattice(n: int, check: bool = False) -> Lattice:
    """Ideal lattice of the ring Z_n.

    Each divisor d of n gives the ideal (d), listed by ascending generator;
    the zero ideal (n) comes last and is displayed as "(0)".
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"Z_n needs n >= 2, got {n!r}")
    if n > ZN_MAX:
        raise ValueError(f"Z_n is capped at n <= {ZN_MAX}")
    ds = divisors(n)
    pos = {d: i for i, d in enumerate(ds)}
    names = [f"({d})" if d != n else "(0)" for d in ds]
    leq = [[a % b == 0 for b in ds] for a in ds]
    mul = [[pos[gcd(a * b, n)] for b in ds] for a in ds]
    L = Lattice(names, leq, mul, top=pos[1], bottom=pos[n], label=f"zn:{n}")
    if check:
        report = validate(L)
        if not report.ok:
            raise AxiomError(report)
    return L


def zn_modulus(L: Lattice) -> int | None:
    """The n for which L equals zn_ideal_lattice(n), or None.

    Every Z_p with p prime gives the same 2-element lattice; 2 is reported.
    """
    key = ("zn-modulus",)
    if key not in L._memo:
        L._memo[key] = _find_modulus(L)
    return L._memo[key]


def _find_modulus(L: Lattice) -> int | None:
    gens = []
    for name in L.names:
        if name == "(0)":
            continue
        m = re.fullmatch(r"\((\d+)\)", name)
        if m is None:
            return None
        gens.append(int(m.group(1)))
    base = lcm(*gens)
    # proper divisors of n have lcm n, except for prime powers where it is n/p
    candidates = {base} | {base * d for d in divisors(base) if d > 1}
    if base == 1:
        candidates.add(2)
    for n in sorted(candidates):
        if 2 <= n <= ZN_MAX and len(divisors(n)) == L.order and zn_ideal_lattice(n) == L:
            return n
    return None


# -- text format ---------------------------------------------------------------


def to_text(L: Lattice) -> str:
    lines = [f"LATTICE {L.order}", "ELEMENTS"]
    lines += list(L.names)
    lines.append(f"TOP {L.names[L.top]}")
    lines.append(f"BOTTOM {L.names[L.bottom]}")
    lines.append("LEQ")
    lines += [" ".join("1" if v else "0" for v in row) for row in L.leq_table]
    lines.append("MUL")
    lines += [" ".join(L.names[v] for v in row) for row in L.mul_table]
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, doc: str):
        self.items: list[tuple[int, int, str]] = []
        for no, raw in enumerate(doc.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            stripped = body.strip()
            if stripped:
                col = len(body) - len(body.lstrip()) + 1
                self.items.append((no, col, stripped))
        self.pos = 0
        self.last_line = len(doc.splitlines())

    def next(self, what: str) -> tuple[int, int, str]:
        if self.pos >= len(self.items):
            raise ParseError(f"unexpected end of document, expected {what}", self.last_line + 1)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def keyword(self, kw: str) -> tuple[int, int, list[str]]:
        no, col, text = self.next(kw)
        parts = text.split()
        if parts[0] != kw:
            raise ParseError(f"expected {kw!r}, found {parts[0]!r}", no, col)
        return no, col, parts[1:]

    def peek_keyword(self) -> str | None:
        if self.pos >= len(self.items):
            return None
        return self.items[self.pos][2].split()[0]


def from_text(doc: str, label: str = "") -> Lattice:
    """Parse and validate a lattice document.

    Raises ParseError for syntax, DimensionError for row/column count
    mismatches, UnknownElementError for names not declared in ELEMENTS and
    AxiomError (with the ValidationReport attached) for axiom failures.
    """
    lines = _Lines(doc)
    no, col, args = lines.keyword("LATTICE")
    if len(args) != 1 or not args[0].isdigit():
        raise ParseError("LATTICE takes one positive integer", no, col)
    order = int(args[0])
    if order < 2:
        raise ParseError("order must be at least 2", no, col)

    no, col, args = lines.keyword("ELEMENTS")
    if args:
        raise ParseError("ELEMENTS takes no arguments", no, col)
    names: list[str] = []
    while lines.peek_keyword() not in ("TOP", None):
        no, col, text = lines.next("element name")
        parts = text.split()
        if len(parts) != 1:
            raise ParseError("one element name per line", no, col)
        if parts[0] in KEYWORDS:
            raise ParseError(f"element name {parts[0]!r} is a reserved keyword", no, col)
        if parts[0] in names:
            raise ParseError(f"duplicate element name {parts[0]!r}", no, col)
        names.append(parts[0])
    if len(names) != order:
        raise DimensionError(f"ELEMENTS lists {len(names)} names, LATTICE declares {order}")
    index = {n: i for i, n in enumerate(names)}

    def lookup(name: str, no: int, col: int) -> int:
        if name not in index:
            raise UnknownElementError(name)
        return index[name]

    no, col, args = lines.keyword("TOP")
    if len(args) != 1:
        raise ParseError("TOP takes one element name", no, col)
    top = lookup(args[0], no, col)
    no, col, args = lines.keyword("BOTTOM")
    if len(args) != 1:
        raise ParseError("BOTTOM takes one element name", no, col)
    bottom = lookup(args[0], no, col)

    def rows(section: str, convert) -> list[list]:
        lines.keyword(section)
        out = []
        for _ in range(order):
            if lines.peek_keyword() in ("MUL", None):
                break
            no, col, text = lines.next(f"{section} row")
            entries = text.split()
            if len(entries) != order:
                raise DimensionError(
                    f"{section} row on line {no} has {len(entries)} entries, expected {order}"
                )
            out.append([convert(e, no, col) for e in entries])
        if len(out) != order:
            raise DimensionError(f"{section} has {len(out)} rows, expected {order}")
        return out

    def bit(e: str, no: int, col: int) -> bool:
        if e not in ("0", "1"):
            raise ParseError(f"LEQ entries must be 0 or 1, found {e!r}", no, col)
        return e == "1"

    leq = rows("LEQ", bit)
    mul = rows("MUL", lookup)
    if lines.pos < len(lines.items):
        no, col, text = lines.items[lines.pos]
        raise ParseError(f"trailing content {text!r}", no, col)

    L = Lattice(names, leq, mul, top=top, bottom=bottom, label=label)
    report = validate(L)
    if not report.ok:
        if report.failures[0].axiom == "structure":
            raise StructureError(report.failures[0].detail)
        raise AxiomError(report)
    return L


def load(ref: str) -> Lattice:
    """Resolve a lattice reference: ``zn:<n>`` or a path to a lattice file."""
    if ref.startswith("zn:"):
        try:
            n = int(ref[3:])
        except ValueError:
            raise ValueError(f"bad lattice reference {ref!r}") from None
        return zn_ideal_lattice(n)
    with open(ref, encoding="utf-8") as fh:
        return from_text(fh.read(), label=ref)
