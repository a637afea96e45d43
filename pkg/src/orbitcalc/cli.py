"""``orbitcalc`` command-line front end.

    orbitcalc validate FILE
    orbitcalc classify3 FILE
    orbitcalc classify4 FILE [--trace]
    orbitcalc plumb FILE
    orbitcalc reduce FILE
    orbitcalc enumerate [--k-max N]

``FILE`` may be ``-`` for standard input.  Exit status: 0 success, 2 parse
or input error, 3 legality error, 4 unsupported configuration (including
forms with no matching connected sum), 5 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify3 import SeifertOrbitData, raymond_classify, raymond_notes
from .classify4 import (
    build_orbit_space,
    classify_space,
    enumerate_arc_cases,
    euler_check,
)
from .dsl import Document, DocumentError, parse, parse_plain_matrix, serialize
from .errors import IllegalWeights, OrbitCalcError
from .intforms import IntSymMatrix, classify, invariants, reduce_trace
from .orbit_data import WeightedOrbitSpace, validate_legality
from .plumbing import assemble_chain, intersection_form, intersection_matrix

EXIT_CODES = {
    "E_PARSE": 2,
    "E_IO": 2,
    "E_KIND": 2,
    "E_LEGALITY": 3,
    "E_INCOMPATIBLE": 3,
    "E_UNSUPPORTED": 4,
    "E_NOT_UNIMODULAR": 4,
    "E_NO_SUCH_SUM": 4,
    "E_NO_SUCH_CASE": 4,
    "E_STRICT": 4,
    "E_INTERNAL": 5,
}

COMMANDS = ("validate", "classify3", "classify4", "plumb", "reduce", "enumerate")

_ACCEPTS = {
    "validate": ("orbitspace4", "seifert3", "matrix", "config"),
    "classify3": ("seifert3",),
    "classify4": ("orbitspace4", "config"),
    "plumb": ("orbitspace4", "config"),
    "reduce": ("matrix",),
}


class CommandError(OrbitCalcError):
    def __init__(self, code, message, report=None, line=None, column=None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.report = report
        self.line = line
        self.column = column


def _empty_report(command, doc=None):
    return {
        "command": command,
        "input": serialize(doc) if doc is not None else None,
        "legality": None,
        "chain": None,
        "B0": None,
        "QM": None,
        "invariants": None,
        "reduction_steps": None,
        "manifold": None,
        "extendable": None,
        "euler_check": None,
        "notes": [],
    }


def _matrix(m: IntSymMatrix):
    return [list(r) for r in m.rows]


def _invariants(m: IntSymMatrix):
    inv = invariants(m)
    return {
        "rank": inv.rank,
        "signature": list(inv.signature),
        "determinant": inv.determinant,
        "parity": inv.parity,
        "unimodular": inv.unimodular,
    }


def _chain(chain):
    return {
        "blocks": [
            {
                "family": b.family,
                "omega": b.omega,
                "params": dict(b.params),
                "action": [list(r) for r in b.action_matrix],
            }
            for b in chain.blocks
        ],
        "omegas": list(chain.omegas),
        "t": chain.t,
        "m": chain.m,
        "l": chain.l,
    }


def _space_of(doc: Document) -> WeightedOrbitSpace:
    if doc.kind == "config":
        return build_orbit_space(doc.payload)
    return doc.payload


def _legality(report, doc, space):
    report["legality"] = []
    for v in validate_legality(space):
        entry = {"rule": v.rule, "message": v.message, "where": v.where or None}
        if v.where in doc.locations:
            entry["line"], entry["column"] = doc.locations[v.where]
        report["legality"].append(entry)
    if report["legality"]:
        first = report["legality"][0]
        raise CommandError("E_LEGALITY", "; ".join(
            f"{e['rule']}: {e['message']}" + (f" ({e['where']})" if e["where"] else "")
            for e in report["legality"]), report, first.get("line"), first.get("column"))


def _run_validate(doc, args):
    report = _empty_report("validate", doc)
    if doc.kind in ("orbitspace4", "config"):
        try:
            space = _space_of(doc)
        except IllegalWeights as exc:
            raise CommandError(exc.code, str(exc), report)
        _legality(report, doc, space)
    elif doc.kind == "matrix":
        report["legality"] = []
        report["invariants"] = _invariants(doc.payload)
    else:
        report["legality"] = []
    return report


def _run_plumb(doc, args, classify_too=False):
    report = _empty_report("classify4" if classify_too else "plumb", doc)
    try:
        space = _space_of(doc)
    except IllegalWeights as exc:
        raise CommandError(exc.code, str(exc), report)
    _legality(report, doc, space)
    if not classify_too:
        chain = assemble_chain(space)
        report["chain"] = _chain(chain)
        report["B0"] = _matrix(intersection_matrix(chain))
        qm = intersection_form(chain)
        report["QM"] = _matrix(qm)
        report["invariants"] = _invariants(qm)
        report["notes"] = list(chain.notes)
        return report
    result = classify_space(space)
    tr = result.trace
    report["chain"] = _chain(tr.chain)
    report["B0"] = _matrix(tr.b0)
    report["QM"] = _matrix(tr.qm)
    report["invariants"] = _invariants(tr.qm)
    if args.trace:
        report["reduction_steps"] = [list(s) for s in tr.steps]
    report["manifold"] = str(result.manifold)
    report["extendable"] = result.extendable
    report["euler_check"] = euler_check(space, result.manifold)
    report["notes"] = list(tr.notes)
    return report


def _run_classify3(doc, args):
    report = _empty_report("classify3", doc)
    data: SeifertOrbitData = doc.payload
    try:
        report["manifold"] = str(raymond_classify(data))
    except OrbitCalcError as exc:
        raise CommandError(exc.code, str(exc), report)
    report["notes"] = raymond_notes(data)
    return report


def _run_reduce(doc, args):
    report = _empty_report("reduce", doc)
    m = doc.payload
    report["QM"] = _matrix(m)
    report["invariants"] = _invariants(m)
    try:
        tr = reduce_trace(m)
        report["reduction_steps"] = [list(s) for s in tr.steps]
        report["endpoint"] = _matrix(tr.endpoint)
        report["found"] = tr.found
        if not tr.found:
            report["notes"].append("no step sequence found inside the search bound; endpoint "
                                   "is the canonical matrix predicted by the invariants")
        report["manifold"] = str(classify(m))
    except OrbitCalcError as exc:
        raise CommandError(exc.code, str(exc), report)
    return report


def _run_enumerate(args):
    report = {"command": "enumerate", "k_max": args.k_max, "cases": []}
    for case in enumerate_arc_cases(args.k_max):
        report["cases"].append({
            "arc": str(case.arc),
            "row": list(case.row),
            "manifold": str(case.manifold),
            "QM": _matrix(case.qm),
            "canonical": str(case.canonical),
            "partner": str(case.partner),
            "relation": case.relation,
            "euler_check": euler_check(WeightedOrbitSpace(spheres=(-case.arc.c,), arcs=(case.arc,)),
                                       case.manifold),
        })
    return report


def _read(path) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError("E_IO", f"cannot read {path}: {exc.strerror or exc}")


def _looks_plain(data: bytes) -> bool:
    for line in data.splitlines():
        s = line.split(b"#", 1)[0].strip()
        if s:
            return s[:1].isdigit()
    return False


def load_document(command: str, data: bytes) -> Document:
    if command == "reduce" and _looks_plain(data):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"input is not UTF-8 ({exc.reason} at byte {exc.start})", 1, 1)
        return Document("matrix", parse_plain_matrix(text))
    doc = parse(data)
    if doc.kind not in _ACCEPTS[command]:
        raise CommandError("E_KIND", f"{command} expects a {' or '.join(_ACCEPTS[command])} "
                                     f"document, got {doc.kind}")
    return doc


def run(command: str, args, data: bytes | None = None) -> dict:
    """Report for one command; raises :class:`OrbitCalcError` on failure."""
    if command == "enumerate":
        report = _run_enumerate(args)
    else:
        doc = load_document(command, data)
        if command == "validate":
            report = _run_validate(doc, args)
        elif command == "classify3":
            report = _run_classify3(doc, args)
        elif command == "classify4":
            report = _run_plumb(doc, args, classify_too=True)
        elif command == "plumb":
            report = _run_plumb(doc, args)
        else:
            report = _run_reduce(doc, args)
    if args.strict and report.get("notes"):
        raise CommandError("E_STRICT", "; ".join(report["notes"]), report)
    return report


def _text_value(v):
    if isinstance(v, list) and v and isinstance(v[0], list):
        return "[" + ", ".join("[" + " ".join(map(str, r)) + "]" for r in v) + "]"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def format_text(report: dict) -> str:
    if report.get("command") == "enumerate":
        lines = ["(b',b'')  (eps',eps'',w1,alpha,beta,w2)  manifold  partner"]
        for c in report["cases"]:
            row = "(" + ",".join(map(str, c["row"])) + ")"
            lines.append(f"{c['arc']:<14} {row:<24} {c['manifold']:<12} {c['relation']} {c['partner']}")
        return "\n".join(lines) + "\n"
    lines = []
    for key, v in report.items():
        if key == "legality" and v == []:
            lines.append("legality: ok")
        if key in ("command", "input") or v is None or v == []:
            continue
        elif key == "chain":
            blocks = " ".join(f"{b['family']}({b['omega']})" for b in v["blocks"])
            lines.append(f"chain: {blocks}  t={v['t']} m={v['m']} l={v['l']}")
        elif key == "invariants":
            p, q = v["signature"]
            lines.append(f"invariants: rank {v['rank']}, signature ({p},{q}), "
                         f"det {v['determinant']}, {v['parity']}")
        elif key == "reduction_steps":
            lines.append("reduction_steps: " + " ".join("(" + ",".join(map(str, s)) + ")" for s in v))
        elif key == "notes":
            lines.extend(f"note: {n}" for n in v)
        else:
            lines.append(f"{key}: {_text_value(v)}")
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitcalc", description="Weighted orbit space calculator.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", default="-", help="input document, - for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--k-max", type=int, default=12, help="largest alpha for enumerate")
    p.add_argument("--trace", action="store_true", help="include reduction steps")
    p.add_argument("--strict", action="store_true", help="treat notes as errors")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr
    try:
        if args.command == "enumerate" and args.k_max < 2:
            raise CommandError("E_UNSUPPORTED", "--k-max must be at least 2")
        data = None if args.command == "enumerate" else _read(args.file)
        report = run(args.command, args, data)
    except OrbitCalcError as exc:
        code = getattr(exc, "code", "E_INTERNAL")
        status = EXIT_CODES.get(code, 5)
        line, col = getattr(exc, "line", None), getattr(exc, "column", None)
        message = getattr(exc, "message", None) or str(exc)
        where = f" line {line}, column {col}:" if line is not None else ""
        err.write(f"orbitcalc: error[{code}]{where} {message}\n")
        if args.format == "json":
            body = {"error": {"code": code, "message": message, "line": line, "column": col},
                    "exit_code": status}
            partial = getattr(exc, "report", None)
            if partial is not None:
                body["report"] = partial
            out.write(_dump(body))
        return status
    except Exception as exc:  # noqa: BLE001 - last line of defence, reported as internal
        err.write(f"orbitcalc: error[E_INTERNAL] {type(exc).__name__}: {exc}\n")
        if args.format == "json":
            out.write(_dump({"error": {"code": "E_INTERNAL", "message": str(exc), "line": None,
                                       "column": None}, "exit_code": 5}))
        return 5
    out.write(_dump(report) if args.format == "json" else format_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
