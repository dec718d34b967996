"""Serializers for analysis reports: JSON, dependency-matrix CSV and DOT."""

from __future__ import annotations

import csv
import io
import json

from .dependency import AnalysisReport, DependencyEdge, Kind, PairClassification, round_pct


def _pct(value: float) -> float:
    # values are already multiples of 0.1; this strips float noise before dumping
    return round(float(value), 1)


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "threshold": float(report.threshold),
        "level": report.level.value,
        "roles": list(report.roles),
        "edges": [
            {
                "from": e.from_role,
                "to": e.to_role,
                "pct": round_pct(e.val_common, e.sum_from),
                "common": e.val_common,
                "sum_from": e.sum_from,
            }
            for e in report.edges
        ],
        "pairs": [
            {"a": p.role_a, "b": p.role_b, "p_ab": _pct(p.p_ab), "p_ba": _pct(p.p_ba), "kind": p.kind.value}
            for p in report.pairs
        ],
        "mutual_pairs": [
            {"a": p.role_a, "b": p.role_b, "p_ab": _pct(p.p_ab), "p_ba": _pct(p.p_ba)}
            for p in report.mutual_pairs
        ],
        "one_way_roles": sorted(report.one_way_roles),
    }


def report_to_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def report_from_json(text: str) -> AnalysisReport:
    data = json.loads(text)
    return AnalysisReport(
        threshold=float(data["threshold"]),
        level=data["level"],
        roles=tuple(data["roles"]),
        edges=tuple(
            DependencyEdge(e["from"], e["to"], int(e["common"]), int(e["sum_from"])) for e in data["edges"]
        ),
        pairs=tuple(
            PairClassification(p["a"], p["b"], float(p["p_ab"]), float(p["p_ba"]), Kind(p["kind"]))
            for p in data["pairs"]
        ),
    )


def dependency_csv(report: AnalysisReport) -> str:
    """Square matrix: row = conditioning role, column = conditioned role."""
    pct = {(e.from_role, e.to_role): e.rounded for e in report.edges}
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["from\\to", *report.roles])
    for a in report.roles:
        writer.writerow([a, *("" if a == b else f"{pct[a, b]:.1f}" for b in report.roles)])
    return buf.getvalue()


def mutual_csv(report: AnalysisReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "b", "p_ab", "p_ba"])
    for p in report.mutual_pairs:
        writer.writerow([p.role_a, p.role_b, f"{p.p_ab:.1f}", f"{p.p_ba:.1f}"])
    return buf.getvalue()


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(report: AnalysisReport) -> str:
    """Graphviz digraph of the report.

    Mutual pairs become undirected (``dir=none``) bold edges labelled
    ``p_ab/p_ba``; each one-way relation becomes an arrow from the
    conditioning role to the role it predicts, labelled with P(to | from).
    """
    lines = [
        "digraph roles {",
        f'  label="role dependency, {report.level.value} level, threshold {report.threshold:g}%";',
        "  node [shape=box];",
    ]
    for role in report.roles:
        lines.append(f"  {_quote(role)};")
    for p in report.pairs:
        a, b = _quote(p.role_a), _quote(p.role_b)
        if p.kind is Kind.MUTUAL:
            lines.append(
                f'  {a} -> {b} [dir=none, style=bold, color=gray40, label="{p.p_ab:.1f}/{p.p_ba:.1f}"];'
            )
        elif p.kind is Kind.ONE_WAY_A_TO_B:
            lines.append(f'  {a} -> {b} [label="{p.p_ab:.1f}"];')
        elif p.kind is Kind.ONE_WAY_B_TO_A:
            lines.append(f'  {b} -> {a} [label="{p.p_ba:.1f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
