"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (JSON on stderr), 2 on a
parse error. Every label printed here parses back to an equal label.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Sequence

from . import __version__, singlet
from .catalog import (
    AlgebraSpec,
    DIALECTS,
    native_forward,
    get_dialect,
    parse_algebra,
    parse_lit,
    translate,
    untranslate,
)
from .errors import ParseError, UnknownLiteratureLabel, WFusionError
from .exactnum import HalfInt, parse_weight
from .extension import (
    E,
    ExtensionData,
    Q,
    W,
    a_class,
    canonicalize,
    dual_object,
    fuse,
    induce,
)
from .formal import FormalSum
from .grading import UNBOUNDED, Predicate, classify, enumerate_simples, lowest_weight
from .verify import DEFAULT_ALGEBRAS, Suite, SuiteConfig, run_suite

SCHEMA = "wfusion/1"
FORMATS = ("text", "json", "csv", "md")

# labels

_BRACKET_RE = re.compile(r"^\s*([WEQMFP])\[(.*)\]\s*$")


def _split_args(body: str) -> list[str]:
    return [part.strip() for part in body.split(",")]


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise ParseError(f"expected an integer, got {text!r}") from exc


def parse_label(text: str, ext: ExtensionData):
    """``W[r,s,l]``, ``Q[r,s,l]``, ``E[w,l]``; for r_J = 1 also ``W_s^{(l)}`` style."""
    m = _BRACKET_RE.match(text)
    if m:
        kind, body = m.group(1), m.group(2)
        if kind in "WQ":
            parts = _split_args(body)
            if len(parts) != 3:
                raise ParseError(f"{kind}[r,s,l] needs three entries: {text!r}")
            r, s, ell = _int(parts[0]), _int(parts[1]), HalfInt.parse(parts[2])
            return canonicalize(ext, (W if kind == "W" else Q)(r, s, ell))
        if kind == "E":
            w_text, sep, ell_text = body.rpartition(",")
            if not sep:
                raise ParseError(f"E[w,l] needs two entries: {text!r}")
            return canonicalize(ext, E(parse_weight(w_text, ext.p), HalfInt.parse(ell_text.strip())))
        raise ParseError(f"{text!r} is a singlet label, not an A-module label")
    if ext.r_J == 1:
        try:
            return native_forward("", "s")(ext, parse_lit(text), text)
        except UnknownLiteratureLabel as exc:
            raise ParseError(f"cannot parse label {text!r}") from exc
    raise ParseError(f"cannot parse label {text!r}")


def parse_object(text: str, ext: ExtensionData) -> FormalSum:
    """A direct sum ``2*W[1,1,0] (+) Q[1,2,1/2]``."""
    out = FormalSum()
    for part in text.split("(+)"):
        part = part.strip()
        mult = 1
        m = re.match(r"^(\d+)\s*\*\s*(.+)$", part)
        if m:
            mult, part = int(m.group(1)), m.group(2)
        out = out + FormalSum([(parse_label(part, ext), mult)])
    return out


def parse_singlet(text: str, p: int):
    m = _BRACKET_RE.match(text)
    if not m or m.group(1) not in "MFP":
        raise ParseError(f"expected M[r,s], P[r,s] or F[w]: {text!r}")
    kind, body = m.group(1), m.group(2)
    if kind == "F":
        return singlet.fock(p, parse_weight(body, p))
    parts = _split_args(body)
    if len(parts) != 2:
        raise ParseError(f"{kind}[r,s] needs two entries: {text!r}")
    r, s = _int(parts[0]), _int(parts[1])
    if kind == "M":
        return singlet.atypical(p, r, s)
    return singlet.projective(p, r, s)


def label_json(label) -> dict:
    if isinstance(label, E):
        return {"kind": "E", "weight": str(label.w), "ell2": label.ell.doubled, "text": str(label)}
    kind = "Q" if isinstance(label, Q) else "W"
    return {"kind": kind, "r": label.r, "s": label.s, "ell2": label.ell.doubled, "text": str(label)}


def terms_json(obj: FormalSum) -> list[dict]:
    return [{"mult": m, "label": label_json(lab)} for lab, m in obj.items()]


# rendering


def _rows_out(fmt: str, header: list[str], rows: list[list[str]]) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines)
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def _json_out(command: str, spec: AlgebraSpec | None, payload: dict) -> str:
    doc = {"schema": SCHEMA, "command": command}
    if spec is not None:
        doc["algebra"] = str(spec)
    doc.update(payload)
    return json.dumps(doc, sort_keys=False)


def _obj_out(fmt: str, command: str, spec: AlgebraSpec, obj: FormalSum, extra: dict | None = None) -> str:
    if fmt == "json":
        return _json_out(command, spec, {**(extra or {}), "terms": terms_json(obj)})
    if fmt in ("csv", "md"):
        return _rows_out(fmt, ["mult", "label"], [[str(m), str(lab)] for lab, m in obj.items()])
    return str(obj)


# commands


def _spec(args) -> AlgebraSpec:
    if args.algebra is None:
        raise ParseError("--algebra is required")
    return parse_algebra(args.algebra)


def cmd_fuse(args) -> str:
    spec = _spec(args)
    ext = spec.ext
    objs = [parse_object(t, ext) for t in args.labels]
    out = objs[0]
    for o in objs[1:]:
        out = fuse(ext, out, o)
    if args.grothendieck:
        out = a_class(ext, out)
    return _obj_out(args.format, "fuse", spec, out, {"level": "class" if args.grothendieck else "object"})


def cmd_classify(args) -> str:
    spec = _spec(args)
    ext = spec.ext
    rows = []
    for t in args.labels:
        lab = parse_label(t, ext)
        rows.append((lab, classify(ext, lab).to_dict()))
    keys = ["lower_bounded", "grading_restricted", "highest_weight", "c1_cofinite", "lowest_weight"]
    if args.format == "json":
        if len(rows) == 1:
            lab, rep = rows[0]
            return _json_out("classify", spec, {"label": label_json(lab), **rep})
        return _json_out("classify", spec, {"results": [{"label": label_json(l), **r} for l, r in rows]})
    table = [[str(l)] + [str(r[k]).lower() if isinstance(r[k], bool) else r[k] for k in keys] for l, r in rows]
    return _rows_out(args.format, ["label"] + keys, table)


def cmd_dual(args) -> str:
    spec = _spec(args)
    ext = spec.ext
    obj = parse_object(args.label, ext)
    return _obj_out(args.format, "dual", spec, dual_object(ext, obj))


def cmd_weight(args) -> str:
    spec = _spec(args)
    ext = spec.ext
    rows = []
    for t in args.labels:
        lab = parse_label(t, ext)
        rows.append((lab, lowest_weight(ext, lab)))
    if args.format == "json":
        res = [{"label": label_json(l), "lowest_weight": str(w), "bounded": w is not UNBOUNDED} for l, w in rows]
        return _json_out("weight", spec, {"results": res})
    if args.format == "text" and len(rows) == 1:
        return str(rows[0][1])
    return _rows_out(args.format, ["label", "lowest_weight"], [[str(l), str(w)] for l, w in rows])


def cmd_enumerate(args) -> str:
    spec = _spec(args)
    labels = enumerate_simples(spec.ext, Predicate(args.predicate))
    if args.format == "json":
        return _json_out("enumerate", spec, {"predicate": args.predicate, "count": len(labels),
                                             "labels": [label_json(l) for l in labels]})
    if args.format == "text":
        return "\n".join(str(l) for l in labels)
    return _rows_out(args.format, ["label"], [[str(l)] for l in labels])


def cmd_induce(args) -> str:
    spec = _spec(args)
    ext = spec.ext
    g = parse_weight(args.g, ext.p)
    m = parse_singlet(args.singlet, ext.p)
    lab = induce(ext, g, m)
    if args.format == "json":
        return _json_out("induce", spec, {"label": label_json(lab)})
    return str(lab)


def cmd_translate(args) -> str:
    spec = parse_algebra(args.algebra) if args.algebra else None
    d = get_dialect(args.dialect, spec)
    spec = d.spec
    if args.inverse:
        lab = parse_label(args.name, spec.ext)
        name = untranslate(d, lab)
        if args.format == "json":
            return _json_out("translate", spec, {"dialect": d.name, "label": label_json(lab), "literature": name})
        return name
    lab = translate(d, args.name)
    if args.format == "json":
        return _json_out("translate", spec, {"dialect": d.name, "literature": args.name, "label": label_json(lab)})
    return str(lab)


def cmd_table(args) -> str:
    spec = _spec(args)
    ext = spec.ext
    if args.labels:
        labels = [parse_label(t, ext) for t in args.labels]
    else:
        labels = enumerate_simples(ext, Predicate.GRADING_RESTRICTED)
    names = [str(l) for l in labels]
    cells = [[str(fuse(ext, a, b)) for b in labels] for a in labels]
    if args.format == "json":
        entries = [{"left": names[i], "right": names[j], "terms": terms_json(fuse(ext, labels[i], labels[j]))}
                   for i in range(len(labels)) for j in range(len(labels))]
        return _json_out("table", spec, {"labels": [label_json(l) for l in labels], "entries": entries})
    fmt = "md" if args.format == "text" else args.format
    return _rows_out(fmt, ["x"] + names, [[names[i]] + cells[i] for i in range(len(labels))])


class VerifyFailed(Exception):
    pass


def cmd_verify(args) -> str:
    suites = [Suite(s) for s in args.suite] if args.suite else list(Suite)
    algebras = [args.algebra] if args.algebra else list(DEFAULT_ALGEBRAS)
    reports = []
    for alg in algebras:
        spec = parse_algebra(alg)
        for s in suites:
            reports.append(run_suite(SuiteConfig(s, args.samples, args.seed, spec), args.workers))
    if args.format == "json":
        text = _json_out("verify", None, {"seed": args.seed, "samples": args.samples,
                                          "reports": [r.to_dict() for r in reports]})
    else:
        rows = []
        for r in reports:
            ff = r.first_failure
            rows.append([r.algebra, r.suite.value, str(r.passed), str(r.failed),
                         r.note or (f"case {ff.case}: {ff.inputs}" if ff else "")])
        text = _rows_out(args.format, ["algebra", "suite", "passed", "failed", "note"], rows)
    if any(not r.ok for r in reports):
        raise VerifyFailed(text)
    return text


COMMANDS = {
    "fuse": cmd_fuse,
    "classify": cmd_classify,
    "dual": cmd_dual,
    "weight": cmd_weight,
    "enumerate": cmd_enumerate,
    "induce": cmd_induce,
    "translate": cmd_translate,
    "table": cmd_table,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", help='e.g. "Bp:4", "B2orb:3", "custom:p=3,rJ=2,kappa=0"')
    common.add_argument("--format", choices=FORMATS, default=os.environ.get("WFUSION_FORMAT", "text"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)

    parser = _Parser(prog="wfusion", description="Exact fusion rules for simple current extensions of H (x) M(p).")
    parser.add_argument("--version", action="version", version=f"wfusion {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fuse", parents=[common], help="fuse labels or direct sums, left to right")
    p.add_argument("labels", nargs="+")
    p.add_argument("--class", dest="grothendieck", action="store_true", help="print the Grothendieck class")

    p = sub.add_parser("classify", parents=[common], help="grading and finiteness flags of simple modules")
    p.add_argument("labels", nargs="+")

    p = sub.add_parser("dual", parents=[common], help="contragredient dual")
    p.add_argument("label")

    p = sub.add_parser("weight", parents=[common], help="lowest conformal weight")
    p.add_argument("labels", nargs="+")

    p = sub.add_parser("enumerate", parents=[common], help="list simples with a property (kappa = 0)")
    p.add_argument("--predicate", choices=[x.value for x in Predicate], default="gr")

    p = sub.add_parser("induce", parents=[common], help="induce from F^H (x) singlet module")
    p.add_argument("g", help="g = gamma*lambda_J as a weight")
    p.add_argument("singlet", help="M[r,s], P[r,s] or F[w]")

    p = sub.add_parser("translate", parents=[common], help="literature name to label, or back with --inverse")
    p.add_argument("--dialect", required=True, choices=sorted(DIALECTS) + ["super_p", "super_2m"])
    p.add_argument("--inverse", action="store_true")
    p.add_argument("name")

    p = sub.add_parser("table", parents=[common], help="fusion table of given labels or all GR simples")
    p.add_argument("labels", nargs="*")

    p = sub.add_parser("verify", parents=[common], help="run seeded invariant suites")
    p.add_argument("--suite", action="append", choices=[s.value for s in Suite])
    p.add_argument("--workers", type=int, default=1)
    return parser


def _err(payload: dict) -> None:
    sys.stderr.write(json.dumps({"schema": SCHEMA, **payload}) + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = COMMANDS[args.command](args)
    except ParseError as exc:
        _err(exc.to_dict())
        return 2
    except VerifyFailed as exc:
        sys.stdout.write(str(exc) + "\n")
        return 1
    except WFusionError as exc:
        _err(exc.to_dict())
        return 1
    sys.stdout.write(out + "\n")
    return 0


def main() -> None:
    sys.exit(run())
