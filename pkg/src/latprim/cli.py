"""latprim command line.

Exit status: 0 success / holds, 1 predicate false or theorem violated,
2 usage, parse or validation errors (one line on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import NoReturn

from .constructors import from_text, load, to_text
from .errors import AxiomError, LatprimError
from .maps import NONE, DELTA0, eval_map, parse_map_spec, radical, residual
from .predicates import WITNESS_CAP, generalized_primary_to, n_potent_primary_to
from .suite import is_theorem_failure, run_suite, search
from .theorems import SearchConfig

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _emit(doc: dict, pretty: bool, render=None) -> None:
    if pretty and render is not None:
        sys.stdout.write(render(doc))
    else:
        sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def _element(L, name: str) -> int:
    return L.index(name)


def _split_list(text: str | None) -> list[str] | None:
    if text is None:
        return None
    items = [s.strip() for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError("empty map list")
    return items


# -- subcommands ---------------------------------------------------------------------


def cmd_build(args) -> int:
    L = load(args.ref)
    doc = to_text(L)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
        _emit({"lattice": args.ref, "order": L.order, "output": args.output}, args.pretty,
              lambda d: f"wrote {d['lattice']} ({d['order']} elements) to {d['output']}\n")
    else:
        sys.stdout.write(doc)
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        L = from_text(text, label=args.file)
    except AxiomError as exc:
        # an invalid lattice is an input error (exit 2), but the full report
        # still goes to stdout so callers can read every failed axiom
        doc = {"file": args.file, **exc.report.to_dict()}
        _emit(doc, args.pretty, _render_validation)
        print(f"latprim: error: {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit({"file": args.file, "ok": True, "order": L.order, "failures": []}, args.pretty, _render_validation)
    return EXIT_OK


def _render_validation(d: dict) -> str:
    if d["ok"]:
        return f"{d['file']}: valid multiplicative lattice ({d['order']} elements)\n"
    lines = [f"{d['file']}: INVALID"]
    lines += [f"  {f['axiom']}: {' '.join(f['witness'])}" for f in d["failures"]]
    return "\n".join(lines) + "\n"


def cmd_eval(args) -> int:
    L = load(args.lattice)
    chosen = [x for x in (args.map, args.residual, args.radical) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --map/--at, --residual or --radical")
    if args.map is not None:
        if args.at is None:
            raise UsageError("--map needs --at <name>")
        m = parse_map_spec(args.map, L)
        result = eval_map(L, m, _element(L, args.at))
        doc = {"lattice": args.lattice, "op": "map", "map": m.label, "at": args.at}
    elif args.residual is not None:
        parts = args.residual.split(",")
        if len(parts) != 2:
            raise UsageError("--residual takes <a>,<b>")
        a, b = (_element(L, s.strip()) for s in parts)
        result = residual(L, a, b)
        doc = {"lattice": args.lattice, "op": "residual", "a": L.names[a], "b": L.names[b]}
    else:
        result = radical(L, _element(L, args.radical))
        doc = {"lattice": args.lattice, "op": "radical", "at": args.radical}
    doc["result"] = L.names[result]
    _emit(doc, args.pretty, lambda d: d["result"] + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    L = load(args.lattice)
    b, p = _element(L, args.b), _element(L, args.p)
    delta = parse_map_spec(args.delta, L)
    if args.npotent is not None:
        if args.phi not in (None, "none"):
            raise UsageError("--npotent cannot be combined with --phi")
        if args.npotent < 2:
            raise UsageError("--npotent needs n >= 2")
        rep = n_potent_primary_to(L, b, p, args.npotent, delta, cap=args.max_witnesses)
        doc = {"lattice": args.lattice, "b": args.b, "p": args.p, "npotent": args.npotent,
               "delta": delta.label}
    else:
        phi = parse_map_spec(args.phi, L) if args.phi else NONE
        rep = generalized_primary_to(L, b, p, phi, delta, cap=args.max_witnesses)
        doc = {"lattice": args.lattice, "b": args.b, "p": args.p, "phi": phi.label,
               "delta": delta.label}
    doc.update(rep.to_dict(L))

    def render(d):
        kind = f"{d['npotent']}-potent" if "npotent" in d else f"{d['phi']}"
        verdict = "holds" if d["holds"] else "fails"
        extra = f" (witnesses: {', '.join(d['witnesses'])})" if d["witnesses"] else ""
        return f"{d['b']} {kind}-{d['delta']}-primary to {d['p']}: {verdict}{extra}\n"

    _emit(doc, args.pretty, render)
    return EXIT_OK if rep.holds else EXIT_FALSE


def _config(args) -> SearchConfig:
    try:
        return SearchConfig.from_strings(
            family=args.family,
            phis=_split_list(args.phis),
            deltas=_split_list(args.deltas),
            n_max=args.n_max,
            witness_cap=args.max_witnesses,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_suite(args) -> int:
    cfg = _config(args)
    report = run_suite(cfg, jobs=args.jobs)
    full = report.to_dict()
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
        doc = {k: v for k, v in full.items() if k != "verdicts"}
        doc["json_out"] = args.json_out
    else:
        doc = full
    _emit(doc, args.pretty, _render_suite)
    return EXIT_OK if report.ok else EXIT_FALSE


def _render_suite(d: dict) -> str:
    lines = [f"family {d['family']}: {d['lattices']} lattices, {'OK' if d['ok'] else 'FAILED'}"]
    width = max(len(t) for t in d["summary"])
    for tag, s in d["summary"].items():
        lines.append(
            f"  {tag:<{width}}  violated={s['violated']:<3} nonvacuous_on={s['nonvacuous_on']:<4} "
            f"instances={s['instances_checked']}"
        )
    for problem in d["nonvacuity_failures"]:
        lines.append(f"  non-vacuity: {problem}")
    return "\n".join(lines) + "\n"


def cmd_search(args) -> int:
    cfg = _config(args)
    report = search(args.claim, cfg)

    def render(d):
        lines = [f"{d['claim']} over {d['family']}: "
                 f"{d['counterexamples']} counterexamples in {len(d['hits'])} lattices"]
        for h in d["hits"]:
            lines.append(f"  {h['lattice']}: {h['count']} (smallest {json.dumps(h['smallest'], ensure_ascii=False)})")
        return "\n".join(lines) + "\n"

    _emit(report.to_dict(), args.pretty, render)
    return EXIT_FALSE if is_theorem_failure(report) else EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="latprim", description="Finite multiplicative lattice engine.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        return p

    p = common(sub.add_parser("build", help="build a lattice and serialize it"))
    p.add_argument("ref", help="zn:<n> or a lattice file")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_build)

    p = common(sub.add_parser("validate", help="parse and validate a lattice file"))
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = common(sub.add_parser("eval", help="evaluate a map, residual or radical"))
    p.add_argument("--lattice", required=True)
    p.add_argument("--map")
    p.add_argument("--at")
    p.add_argument("--residual", metavar="A,B")
    p.add_argument("--radical", metavar="A")
    p.set_defaults(handler=cmd_eval)

    p = common(sub.add_parser("check", help="is b phi-delta-primary (or n-potent) to p?"))
    p.add_argument("--lattice", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--phi")
    p.add_argument("--delta", default="delta0")
    p.add_argument("--npotent", type=int)
    p.add_argument("--max-witnesses", type=int, default=WITNESS_CAP)
    p.set_defaults(handler=cmd_check)

    for name, helptext in (("suite", "run the theorem catalogue over a family"),
                           ("search", "hunt for counterexamples")):
        p = common(sub.add_parser(name, help=helptext))
        p.add_argument("--family", required=True, help="zn:<lo>..<hi> or files:<glob>")
        p.add_argument("--phis", help="comma-separated map specs")
        p.add_argument("--deltas", help="comma-separated map specs")
        p.add_argument("--n-max", type=int, default=4, help="largest n for phi_n / n-potent checks")
        p.add_argument("--max-witnesses", type=int, default=WITNESS_CAP)
        if name == "suite":
            p.add_argument("--json-out")
            p.add_argument("--jobs", type=int, default=1)
            p.set_defaults(handler=cmd_suite)
        else:
            p.add_argument("--claim", required=True, help='<TAG> or "converse of <TAG>"')
            p.set_defaults(handler=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"latprim: error: {exc}", file=sys.stderr)
    except (LatprimError, ValueError) as exc:
        print(f"latprim: error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"latprim: error: {exc.filename or ''}: {exc.strerror}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
