"""q8nichols command line.

    q8nichols report <group> [--max-degree N] [--format text|json|markdown] [--no-oracle]
    q8nichols yd <group> <class> <irrep> [--format text|json]
    q8nichols classify <matrix.json> [--format text|json]
    q8nichols nichols <matrix.json> [--max-degree N] [--verdict verdict.json] [--format text|json]

<group> is a built-in name (q8, z<n>) or a JSON group file.
Exit codes: 0 ok, 2 missing data, 3 validation failure, 4 verdict/oracle contradiction.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib import resources
from pathlib import Path

from .braidlin import braiding_matrix_from_json, detect_diagonal, diagonal_braiding
from .classify import ClassificationError, Verdict, classify_diagonal
from .cyclo import CycParseError
from .groups import Group, GroupError, centralizer, conjugacy_classes, cyclic_group, group_from_json, load_group_file
from .nichols import DEFAULT_CUTOFF, BudgetExceeded, NicholsError, hilbert_prefix
from .reps import RepError, rep_from_json
from .report import (
    MissingIrreps,
    VerdictOracleContradiction,
    build_report,
    centralizer_irreps,
    check_verdict,
    format_json,
    format_markdown,
    format_text,
)
from .ydmod import YDError, braiding_operator, induce_yd, yd_to_json

EXIT_OK = 0
EXIT_MISSING = 2
EXIT_INVALID = 3
EXIT_CONTRADICTION = 4


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def builtin_q8_path():
    return resources.files("q8nichols") / "data" / "q8.json"


def resolve_group(source: str) -> Group:
    key = source.lower()
    if key == "q8":
        return group_from_json(json.loads(builtin_q8_path().read_text()))
    mt = re.fullmatch(r"z(\d+)", key)
    if mt:
        return cyclic_group(int(mt.group(1)))
    path = Path(source)
    if not path.exists():
        raise CLIError(f"no built-in group or file named {source!r}", EXIT_MISSING)
    return load_group_file(path)


def _read_json(path: str):
    p = Path(path)
    if not p.exists():
        raise CLIError(f"file not found: {path}", EXIT_MISSING)
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", EXIT_INVALID)


def _supplied_irreps(G: Group, specs: list[str]) -> dict:
    supplied: dict = {}
    m = G.exponent()
    for spec in specs:
        if "=" not in spec:
            raise CLIError(f"--irreps expects CLASS=FILE, got {spec!r}", EXIT_INVALID)
        cls_label, path = spec.split("=", 1)
        g = G.index(cls_label)
        H = centralizer(G, g)
        data = _read_json(path)
        items = data if isinstance(data, list) else [data]
        stem = Path(path).stem
        reps = supplied.setdefault(G.label(g), [])
        for k, item in enumerate(items):
            label = item.get("label") or (stem if len(items) == 1 else f"{stem}{k}")
            reps.append(rep_from_json(item, H.as_group, m, label))
    return supplied


def cmd_report(args) -> str:
    G = resolve_group(args.group)
    supplied = _supplied_irreps(G, args.irreps or [])
    report = build_report(G, args.max_degree, oracle=not args.no_oracle, supplied=supplied)
    if args.format == "json":
        return format_json(report)
    if args.format == "markdown":
        return format_markdown(report)
    return format_text(report)


def cmd_yd(args) -> str:
    G = resolve_group(args.group)
    g = G.index(args.cls)
    rep_point = next(c.representative for c in conjugacy_classes(G) if g in c.members)
    H = centralizer(G, rep_point)
    irreps = centralizer_irreps(G, rep_point, H, G.exponent())
    rep = next((r for r in irreps if r.label == args.irrep), None)
    if rep is None:
        names = ", ".join(r.label for r in irreps)
        raise CLIError(f"no irrep {args.irrep!r} for the centralizer of {G.label(rep_point)} (have {names})", EXIT_MISSING)
    M = induce_yd(G, rep_point, rep)
    c = braiding_operator(M)
    Q = detect_diagonal(c)
    doc = yd_to_json(M, c)
    doc["braiding_matrix"] = Q.to_json() if Q else "non-diagonal"
    if args.format == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    lines = [f"M(O_{G.label(rep_point)}, {rep.label}) over {G.name}: dim {M.dim}"]
    for b, deg in zip(doc["basis"], doc["degrees"]):
        lines.append(f"  {b:<10} degree {deg}")
    lines.append("braiding matrix:")
    if Q is None:
        lines.append("  non-diagonal")
    else:
        for row in Q.to_json()["entries"]:
            lines.append("  " + "  ".join(f"{q:>6}" for q in row))
    return "\n".join(lines) + "\n"


def _load_matrix(path: str):
    data = _read_json(path)
    try:
        return braiding_matrix_from_json(data)
    except CycParseError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_INVALID)
    except ValueError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_INVALID)


def cmd_classify(args) -> str:
    Q = _load_matrix(args.matrix)
    v = classify_diagonal(Q)
    if args.format == "json":
        return json.dumps(v.to_json(), indent=2, ensure_ascii=False) + "\n"
    lines = [f"type   {v.type_tag}", f"dim    {v.dim}", f"GKdim  {v.gkdim}"]
    if v.cartan:
        lines.append(f"Cartan {[list(r) for r in v.cartan]}")
    lines += [f"  - {e}" for e in v.evidence]
    return "\n".join(lines) + "\n"


def cmd_nichols(args) -> str:
    Q = _load_matrix(args.matrix)
    c = diagonal_braiding(Q)
    prefix = hilbert_prefix(c, args.max_degree)
    if args.verdict:
        data = _read_json(args.verdict)
        try:
            verdict = Verdict.from_json(data)
        except KeyError as exc:
            raise CLIError(f"{args.verdict}: verdict is missing {exc}", EXIT_INVALID)
        check_verdict(verdict, prefix, args.verdict)
    if args.format == "json":
        return json.dumps(prefix.to_json(), indent=2, ensure_ascii=False) + "\n"
    return f"graded dims {prefix.summary()}\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="q8nichols", description="Nichols algebras of simple Yetter-Drinfeld modules over finite groups")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="classify every simple Yetter-Drinfeld module of a group")
    r.add_argument("group")
    r.add_argument("--max-degree", type=int, default=DEFAULT_CUTOFF)
    r.add_argument("--format", choices=("text", "json", "markdown"), default="text")
    r.add_argument("--no-oracle", action="store_true", help="skip the symmetrizer cross-check")
    r.add_argument("--irreps", action="append", metavar="CLASS=FILE", help="irreps for a centralizer without built-ins")
    r.set_defaults(func=cmd_report)

    y = sub.add_parser("yd", help="build one induced module and its braiding")
    y.add_argument("group")
    y.add_argument("cls", metavar="class")
    y.add_argument("irrep")
    y.add_argument("--format", choices=("text", "json"), default="text")
    y.set_defaults(func=cmd_yd)

    c = sub.add_parser("classify", help="classify a diagonal braiding matrix")
    c.add_argument("matrix")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_classify)

    n = sub.add_parser("nichols", help="graded dimensions up to a degree cutoff")
    n.add_argument("matrix")
    n.add_argument("--max-degree", type=int, default=DEFAULT_CUTOFF)
    n.add_argument("--verdict", help="verdict JSON to check against the oracle")
    n.add_argument("--format", choices=("text", "json"), default="text")
    n.set_defaults(func=cmd_nichols)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except MissingIrreps as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except VerdictOracleContradiction as exc:
        print(f"contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (GroupError, RepError, YDError, CycParseError, ClassificationError, NicholsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
