"""Command-line front end.

Exit codes: 0 = valid / smooth, 1 = I/O or parse error, 2 = invalid input,
3 = valid but not smooth (or not locally factorial).  Documents go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, documents
from .datum import (
    decompose,
    spherical_closure_result,
    validate_colored_cone,
    validate_datum,
)
from .diagrams import render_diagram
from .documents import DocumentError, dumps, emit_document, emit_system
from .rootsystems import parse_root_id
from .smoothness import check_factorial, is_smooth

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_NEGATIVE = 3


def _err(msg: str):
    print(msg, file=sys.stderr)


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit2(EXIT_IO, f"cannot read {path}: {exc}")
    try:
        return documents.parse_document(documents.loads(text))
    except DocumentError as exc:
        raise SystemExit2(EXIT_IO, f"parse error in {path}: {exc}")


class SystemExit2(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def _validated(path: str, need_cone: bool):
    datum, cone, marked = _load(path)
    findings = list(validate_datum(datum).findings)
    if cone is not None and not findings:
        findings += list(validate_colored_cone(datum, cone).findings)
    if findings:
        for f in findings:
            _err(f"[{f.code}] {f.message}")
        raise SystemExit2(EXIT_INVALID, "invalid input")
    if need_cone and cone is None:
        raise SystemExit2(EXIT_INVALID, "document has no colored_cone")
    return datum, cone, marked


def cmd_validate(args) -> int:
    try:
        datum, cone, _ = _load(args.path)
    except SystemExit2 as exc:
        if args.json:
            print(json.dumps({"valid": False, "error": exc.message}))
        _err(exc.message)
        return exc.code
    findings = list(validate_datum(datum).findings)
    if cone is not None and not findings:
        findings += list(validate_colored_cone(datum, cone).findings)
    if args.json:
        print(
            json.dumps(
                {
                    "valid": not findings,
                    "findings": [{"code": f.code, "message": f.message} for f in findings],
                },
                indent=2,
            )
        )
    else:
        for f in findings:
            _err(f"[{f.code}] {f.message}")
        print("valid" if not findings else "invalid")
    return EXIT_OK if not findings else EXIT_INVALID


def _print_report(rep, explain: bool):
    print(f"smooth: {'yes' if rep.verdict else 'no'}")
    for name, cond in (("condition 1 (locally factorial)", rep.cond1),
                       ("condition 2 (catalog components)", rep.cond2),
                       ("condition 3 (marked roots vs rays)", rep.cond3)):
        flag = "pass" if cond.passed else "FAIL"
        extra = " (vacuous)" if getattr(cond, "vacuous", False) else ""
        print(f"  {name}: {flag}{extra}")
        if explain:
            for t in cond.details:
                print(f"    - {t}")
    if explain:
        for c in rep.components:
            tag = "colorless" if not c.colored else (
                f"entry {c.match.entry_id} {c.match.params}" if c.match else "UNMATCHED"
            )
            print(f"  component: {c.summary} -> {tag}")
        if rep.assignment:
            for a in rep.assignment:
                print(f"  marked root #{a.root_index} <-> ray {list(a.u)}")


def cmd_smooth(args) -> int:
    datum, cone, _ = _validated(args.path, need_cone=True)
    rep = is_smooth(datum, cone, validate=False)
    if args.json:
        print(json.dumps(rep.as_dict(), indent=2))
    else:
        _print_report(rep, args.explain)
    return EXIT_OK if rep.verdict else EXIT_NEGATIVE


def cmd_factorial(args) -> int:
    datum, cone, _ = _validated(args.path, need_cone=True)
    rep = check_factorial(datum, cone, validate=False)
    if args.json:
        print(json.dumps({"locally_factorial": rep.passed, "details": list(rep.details)}, indent=2))
    else:
        print(f"locally factorial: {'yes' if rep.passed else 'no'}")
        for t in rep.details:
            _err(f"  - {t}")
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def cmd_localize(args) -> int:
    datum, _, _ = _validated(args.path, need_cone=False)
    try:
        ids = [parse_root_id(s) for s in args.at.split(",") if s]
        for rid in ids:
            datum.root_system.flat_index(rid)
    except ValueError as exc:
        raise SystemExit2(EXIT_INVALID, f"unknown simple root: {exc}")
    from .datum import localize

    loc, _ = localize(datum, ids)
    sys.stdout.write(dumps(emit_document(loc)))
    return EXIT_OK


def cmd_closure(args) -> int:
    datum, _, _ = _validated(args.path, need_cone=False)
    res = spherical_closure_result(datum)
    sys.stdout.write(dumps(emit_system(res.system)))
    return EXIT_OK


def cmd_decompose(args) -> int:
    datum, _, _ = _validated(args.path, need_cone=False)
    res = spherical_closure_result(datum)
    parts = decompose(res.system)
    docs = [emit_system(p.system) for p in parts]
    sys.stdout.write(json.dumps(docs, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.what == "list":
        listing = catalog.catalog_listing()
        if args.json:
            print(json.dumps(listing, indent=2))
        else:
            for e in listing:
                params = f" [{', '.join(e['parameters'])}: {e['domain']}]" if e["parameters"] else ""
                print(f"({e['id']}) {e['description']}{params}")
        return EXIT_OK
    eid = args.id
    if eid not in catalog.ENTRIES:
        raise SystemExit2(EXIT_INVALID, f"no catalog entry {eid}")
    entry = catalog.ENTRIES[eid]
    values = dict(kv.split("=", 1) for kv in args.param)
    try:
        params = tuple(int(values[name]) for name in entry.param_names)
    except KeyError as exc:
        raise SystemExit2(
            EXIT_INVALID, f"entry {eid} needs parameter {exc} ({entry.domain_text})"
        )
    except ValueError:
        raise SystemExit2(EXIT_INVALID, "parameters must be integers")
    if not entry.domain(params):
        raise SystemExit2(EXIT_INVALID, f"parameters {params} outside domain ({entry.domain_text})")
    inst = catalog.instantiate(eid, params)
    if args.format == "json":
        sys.stdout.write(dumps(emit_system(inst.system, inst.marked)))
    else:
        sys.stdout.write(render_diagram(inst.system, args.format, inst.marked))
    return EXIT_OK


def cmd_diagram(args) -> int:
    datum, _, marked = _validated(args.path, need_cone=False)
    res = spherical_closure_result(datum)
    if marked is None:
        marked = frozenset()
    sys.stdout.write(render_diagram(res.system, args.format, marked))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sphersmooth",
        description="Exact smoothness checker for simple spherical varieties",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def with_path(sp):
        sp.add_argument("path", help="input document (JSON)")

    sp = sub.add_parser("validate", help="validate a datum (and cone) document")
    with_path(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("smooth", help="run the full smoothness criterion")
    with_path(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--explain", action="store_true")
    sp.set_defaults(fn=cmd_smooth)

    sp = sub.add_parser("factorial", help="local factoriality (condition 1) only")
    with_path(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--explain", action="store_true")
    sp.set_defaults(fn=cmd_factorial)

    sp = sub.add_parser("localize", help="localize the datum at simple roots")
    with_path(sp)
    sp.add_argument("--at", required=True, help="comma-separated root ids, e.g. 0.1,0.2")
    sp.set_defaults(fn=cmd_localize)

    sp = sub.add_parser("closure", help="spherical closure as a system document")
    with_path(sp)
    sp.set_defaults(fn=cmd_closure)

    sp = sub.add_parser("decompose", help="indecomposable components of the closure")
    with_path(sp)
    sp.set_defaults(fn=cmd_decompose)

    sp = sub.add_parser("catalog", help="list or show the catalog of families")
    csub = sp.add_subparsers(dest="what", required=True)
    lp = csub.add_parser("list")
    lp.add_argument("--json", action="store_true")
    lp.set_defaults(fn=cmd_catalog, what="list")
    shp = csub.add_parser("show")
    shp.add_argument("id", type=int)
    shp.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    shp.add_argument("--format", choices=("text", "svg", "json"), default="json")
    shp.set_defaults(fn=cmd_catalog, what="show")

    sp = sub.add_parser("diagram", help="render the Luna diagram of a document")
    with_path(sp)
    sp.add_argument("--format", choices=("text", "svg"), default="text")
    sp.set_defaults(fn=cmd_diagram)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(fn=cmd_serve)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        _err(exc.message)
        return exc.code
    except DocumentError as exc:
        _err(str(exc))
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
