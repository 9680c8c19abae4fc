"""
Saída dos comandos em JSON, LaTeX ou CSV.
"""

from __future__ import annotations

import csv
import io
import json

from kernel.rational import FactoredRational
from kernel.serializers import emit_json, emit_latex, to_dict

from .verification import VerificationReport

SYMBOLS = {"g": "G", "g-deformed": "G", "h": "H", "s": "S", "z": "Z"}


def _label(kind: str, indices) -> str:
    return f"{SYMBOLS[kind]}_{{{','.join(map(str, indices))}}}"


def render_value(kind: str, indices, value: FactoredRational, format: str) -> str:
    if format == "latex":
        return emit_latex(value)
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["kind", "indices", "value"])
        writer.writerow([kind, " ".join(map(str, indices)), emit_json(value)])
        return buffer.getvalue().rstrip("\n")
    return emit_json(value)


def render_table(kind: str, rows, format: str, header: dict) -> str:
    """rows: [((k, m), valor)] em ordem canônica."""
    if format == "json":
        data = dict(header)
        data["entries"] = [
            {"indices": list(indices), "value": to_dict(value)} for indices, value in rows
        ]
        return json.dumps(data, indent=2, ensure_ascii=True)
    provenance = " ".join(f"{key}={value}" for key, value in header.items() if key != "lambda")
    if format == "csv":
        buffer = io.StringIO()
        buffer.write(f"# {provenance}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["k", "m", "value"])
        for (k, m), value in rows:
            writer.writerow([k, m, emit_json(value)])
        return buffer.getvalue().rstrip("\n")
    lines = [f"% {provenance}", r"\begin{align*}"]
    for indices, value in rows:
        lines.append(f"{_label(kind, indices)} &= {emit_latex(value)} \\\\")
    lines.append(r"\end{align*}")
    return "\n".join(lines)


def render_report(report: VerificationReport, format: str, header: dict,
                  timings: bool | None = None) -> str:
    if format == "json":
        return report.to_json(timings, header)
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["identity", "cell", "pass", "mode"])
        for identity, cells in report.identities().items():
            for cell in cells:
                writer.writerow([identity, " ".join(map(str, cell.cell)),
                                 "pass" if cell.passed else "fail", cell.mode])
        return buffer.getvalue().rstrip("\n")
    lines = [r"\begin{tabular}{lrr}", r"identidade & passou & falhou \\", r"\hline"]
    for identity, cells in report.identities().items():
        passed = sum(1 for cell in cells if cell.passed)
        lines.append(f"\\texttt{{{identity}}} & {passed} & {len(cells) - passed} \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)
