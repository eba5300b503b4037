"""End-to-end classification report over all simple Yetter-Drinfeld modules of a group."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .braidlin import BraidingMatrix, detect_diagonal
from .classify import FINITE, INCONCLUSIVE, INFINITE, UNKNOWN, Verdict, classify_diagonal
from .cyclo import cyc_format
from .groups import Group, Subgroup, centralizer, conjugacy_classes, quaternion_group
from .nichols import DEFAULT_CUTOFF, BudgetExceeded, HilbertPrefix, hilbert_prefix
from .reps import Representation, cyclic_irreps, find_q8_generators, q8_irreps
from .ydmod import braiding_operator, induce_yd


class MissingIrreps(LookupError):
    pass


class VerdictOracleContradiction(RuntimeError):
    pass


# Per-case values from the reference Q8 computation: displayed braiding
# matrix, dim and GKdim.  (xy, phi3) has no reference computation.
_ONE = [["1"]]
_ONES = [["1", "1"], ["1", "1"]]
_MINUS = [["-1", "-1"], ["-1", "-1"]]
_AFF = [["z4^1", "z4^3"], ["z4^3", "z4^1"]]
Q8_REFERENCE = {
    **{("1", f"rho{k}"): (_ONE, INFINITE, 1) for k in range(1, 5)},
    ("1", "rho5"): (_ONES, INFINITE, 2),
    ("x", "phi0"): (_ONES, INFINITE, 2),
    ("x", "phi1"): (_AFF, INFINITE, INFINITE),
    ("x", "phi2"): (_MINUS, 4, 0),
    ("x", "phi3"): ([["z4^3", "z4^3"], ["z4^1", "z4^1"]], 4, 0),
    **{("x2", f"rho{k}"): (_ONE, INFINITE, 1) for k in range(1, 5)},
    ("x2", "rho5"): (_MINUS, 4, 0),
    ("y", "phi0"): (_ONES, INFINITE, 2),
    ("y", "phi1"): (_AFF, INFINITE, INFINITE),
    ("y", "phi2"): (_MINUS, 4, 0),
    ("y", "phi3"): ([["z4^3", "z4^1"], ["z4^1", "z4^3"]], INFINITE, INFINITE),
    ("xy", "phi0"): (_ONES, INFINITE, 2),
    ("xy", "phi1"): (_AFF, INFINITE, INFINITE),
    ("xy", "phi2"): (_MINUS, 4, 0),
}

# The reference theorem lists: finite GKdim, and finite dimension.
Q8_FINITE_GKDIM = (
    [("1", f"rho{k}") for k in range(1, 6)]
    + [("x", "phi0"), ("x", "phi2")]
    + [("x2", f"rho{k}") for k in range(1, 6)]
    + [("y", "phi0"), ("y", "phi2"), ("xy", "phi0"), ("xy", "phi2")]
)
Q8_FINITE_DIM = [("x", "phi2"), ("x2", "rho5"), ("y", "phi2"), ("xy", "phi2")]


@dataclass
class ReportRow:
    class_label: str
    irrep_label: str
    module_dim: int
    braiding_matrix: BraidingMatrix | None
    verdict: Verdict
    oracle: HilbertPrefix | None
    flags: list[str] = field(default_factory=list)

    @property
    def key(self) -> tuple[str, str]:
        return (self.class_label, self.irrep_label)

    def to_json(self) -> dict:
        return {
            "class": self.class_label,
            "irrep": self.irrep_label,
            "module_dim": self.module_dim,
            "braiding_matrix": self.braiding_matrix.to_json()["entries"] if self.braiding_matrix else "non-diagonal",
            "verdict": self.verdict.to_json(),
            "oracle": self.oracle.to_json() if self.oracle else None,
            "flags": list(self.flags),
        }


def centralizer_irreps(G: Group, g: int, H: Subgroup, m: int, supplied: Mapping | None = None) -> list[Representation]:
    """Irreps of the centralizer: supplied, Q8, or cyclic; else MissingIrreps."""
    label = G.label(g)
    if supplied and label in supplied:
        return list(supplied[label])
    if find_q8_generators(H.as_group) is not None and m % 4 == 0:
        return q8_irreps(H.as_group, m)
    if H.is_cyclic():
        K = H.as_group
        local = H.from_parent(g)
        gen = local if K.element_order(local) == K.order else next(k for k in K if K.element_order(k) == K.order)
        return cyclic_irreps(K.order, m, K, gen)
    members = ", ".join(G.label(h) for h in H.members)
    raise MissingIrreps(f"no built-in irreducible representations for the centralizer of {label} ({{{members}}}); supply a rep file")


def confront(verdict: Verdict, oracle: HilbertPrefix) -> list[str]:
    """Contradictions between a verdict and the symmetrizer oracle (empty if consistent)."""
    problems = []
    if isinstance(verdict.dim, int):
        if oracle.terminated and oracle.partial_sum != verdict.dim:
            problems.append(f"verdict dim {verdict.dim} but oracle total {oracle.partial_sum}")
        elif not oracle.terminated and oracle.partial_sum > verdict.dim:
            problems.append(f"verdict dim {verdict.dim} but oracle already counts {oracle.partial_sum}")
    elif oracle.terminated and verdict.dim == INFINITE:
        problems.append(f"verdict dim infinite but oracle terminates with total {oracle.partial_sum}")
    if oracle.terminated and (verdict.gkdim == INFINITE or (isinstance(verdict.gkdim, int) and verdict.gkdim > 0)):
        problems.append(f"verdict GKdim {verdict.gkdim} but oracle terminates with total {oracle.partial_sum}")
    return problems


def check_verdict(verdict: Verdict, oracle: HilbertPrefix, where: str = "") -> None:
    problems = confront(verdict, oracle)
    if problems:
        prefix = f"{where}: " if where else ""
        raise VerdictOracleContradiction(prefix + "; ".join(problems))


def _is_reference_q8(G: Group) -> bool:
    return G == quaternion_group()


def _reference_flags(row: ReportRow) -> list[str]:
    ref = Q8_REFERENCE.get(row.key)
    if ref is None:
        v = row.verdict
        return [f"no reference computation for this case; recomputed verdict {v.type_tag}, dim {v.dim}, GKdim {v.gkdim}"]
    matrix, dim, gkdim = ref
    flags = []
    got = row.braiding_matrix.to_json()["entries"] if row.braiding_matrix else None
    v = row.verdict
    if got != matrix:
        flags.append(f"braiding recomputes to {_fmt_entries(got)}, reference case computation shows {_fmt_entries(matrix)}")
    if v.dim != dim or v.gkdim != gkdim:
        in_list = row.key in Q8_FINITE_GKDIM
        flags.append(
            f"reference case computation claims dim {dim}, GKdim {gkdim}; recomputed {v.type_tag} gives dim {v.dim}, "
            f"GKdim {v.gkdim}, {'contradicting' if in_list != v.finite_gkdim else 'agreeing with'} "
            f"the reference finite-GKdim list"
        )
    return flags


def _fmt_entries(entries) -> str:
    if entries is None:
        return "non-diagonal"
    return "[" + ", ".join("[" + ", ".join(r) + "]" for r in entries) + "]"


def build_row(G: Group, g: int, rep: Representation, max_degree: int = DEFAULT_CUTOFF, oracle: bool = True, budget: int | None = None) -> ReportRow:
    M = induce_yd(G, g, rep)
    c = braiding_operator(M)
    Q = detect_diagonal(c)
    if Q is None:
        verdict = Verdict(INCONCLUSIVE, UNKNOWN, UNKNOWN, None, ("braiding is not diagonal in the induced basis",))
    else:
        verdict = classify_diagonal(Q)
    flags: list[str] = []
    prefix = None
    if oracle:
        try:
            prefix = hilbert_prefix(c, max_degree, budget)
        except BudgetExceeded as exc:
            flags.append(f"oracle skipped: {exc}")
    row = ReportRow(G.label(g), rep.label, M.dim, Q, verdict, prefix, flags)
    if prefix is not None:
        check_verdict(verdict, prefix, f"({row.class_label}, {row.irrep_label})")
        if isinstance(verdict.dim, int) and not prefix.terminated:
            flags.append(f"finite dim {verdict.dim} not confirmed below degree {max_degree}")
    return row


def build_report(G: Group, max_degree: int = DEFAULT_CUTOFF, oracle: bool = True, supplied: Mapping | None = None, budget: int | None = None) -> dict:
    m = G.exponent()
    rows = []
    for cls in conjugacy_classes(G):
        g = cls.representative
        H = centralizer(G, g)
        for k, rep in enumerate(centralizer_irreps(G, g, H, m, supplied)):
            if not rep.label:
                rep = Representation(rep.group, rep.dim, rep.m, rep.matrices, f"irr{k}")
            rows.append(build_row(G, g, rep, max_degree, oracle, budget))
    if _is_reference_q8(G):
        for row in rows:
            row.flags.extend(_reference_flags(row))
    return {
        "group": G.name,
        "order": G.order,
        "modulus": m,
        "max_degree": max_degree if oracle else None,
        "rows": rows,
        "finite_gkdim": [r for r in rows if r.verdict.finite_gkdim],
        "finite_dim": [r for r in rows if r.verdict.finite_dimensional],
    }


def report_to_json(report: dict) -> dict:
    return {
        "group": report["group"],
        "order": report["order"],
        "modulus": report["modulus"],
        "max_degree": report["max_degree"],
        "rows": [r.to_json() for r in report["rows"]],
        "finite_gkdim": [{"class": r.class_label, "irrep": r.irrep_label, "gkdim": r.verdict.gkdim} for r in report["finite_gkdim"]],
        "finite_dim": [{"class": r.class_label, "irrep": r.irrep_label, "dim": r.verdict.dim} for r in report["finite_dim"]],
    }


def _oracle_cell(r: ReportRow) -> str:
    return r.oracle.summary() if r.oracle else "-"


def _matrix_cell(r: ReportRow) -> str:
    return _fmt_entries(r.braiding_matrix.to_json()["entries"] if r.braiding_matrix else None)


def format_text(report: dict) -> str:
    lines = [f"Simple Yetter-Drinfeld modules over {report['group']} (order {report['order']}, field Q(zeta_{report['modulus']}))", ""]
    for r in report["rows"]:
        v = r.verdict
        lines.append(f"O_{r.class_label:<4} {r.irrep_label:<6} dim V = {r.module_dim}")
        lines.append(f"    braiding  {_matrix_cell(r)}")
        lines.append(f"    verdict   {v.type_tag}: dim {v.dim}, GKdim {v.gkdim}" + (f", Cartan {[list(x) for x in v.cartan]}" if v.cartan else ""))
        lines.append(f"    oracle    {_oracle_cell(r)}")
        for f in r.flags:
            lines.append(f"    flag      {f}")
    lines.append("")
    lines.append("Finite GKdim:")
    for r in report["finite_gkdim"]:
        lines.append(f"  B(O_{r.class_label}, {r.irrep_label})  GKdim {r.verdict.gkdim}")
    lines.append("Finite dimension:")
    for r in report["finite_dim"]:
        lines.append(f"  B(O_{r.class_label}, {r.irrep_label})  dim {r.verdict.dim}")
    return "\n".join(lines) + "\n"


def format_markdown(report: dict) -> str:
    out = [f"# Nichols algebras over {report['group']}", ""]
    out += ["## Finite GKdim", "", "| class | irrep | GKdim |", "|---|---|---|"]
    out += [f"| O_{r.class_label} | {r.irrep_label} | {r.verdict.gkdim} |" for r in report["finite_gkdim"]]
    out += ["", "## Finite dimension", "", "| class | irrep | dim | oracle |", "|---|---|---|---|"]
    out += [f"| O_{r.class_label} | {r.irrep_label} | {r.verdict.dim} | {_oracle_cell(r)} |" for r in report["finite_dim"]]
    out += ["", "## All modules", "", "| class | irrep | dim V | braiding | type | dim | GKdim | oracle | flags |", "|---|---|---|---|---|---|---|---|---|"]
    for r in report["rows"]:
        v = r.verdict
        flags = "; ".join(r.flags) or ""
        out.append(
            f"| O_{r.class_label} | {r.irrep_label} | {r.module_dim} | {_matrix_cell(r)} | {v.type_tag} | {v.dim} | {v.gkdim} | {_oracle_cell(r)} | {flags} |"
        )
    return "\n".join(out) + "\n"


def format_json(report: dict) -> str:
    return json.dumps(report_to_json(report), indent=2, ensure_ascii=False) + "\n"
