"""Output formats for CLI results: json, csv and text.

JSON comes from pydantic's ``model_dump_json``, so key order follows field
declaration order and stays stable across runs.
"""
import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence

from pydantic import BaseModel

from torusrank.models.rank import Table1Report
from torusrank.models.surd import CFExpansion, ConvergentTable

FORMATS = ("json", "csv", "text")
TABLE1_HEADER = ["p", "rk_Q", "sqrt_p_cf", "c"]


def to_json(obj: Any) -> str:
    """Compact JSON for a model or plain data."""
    if isinstance(obj, BaseModel):
        return obj.model_dump_json()
    return json.dumps(obj, separators=(",", ":"))


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow(list(row))
    return buf.getvalue()


def expansion_json(exp: CFExpansion) -> str:
    return exp.model_dump_json(include={"preperiod", "period"})


def expansion_csv(exp: CFExpansion) -> str:
    return to_csv(["preperiod", "period"], [[
        " ".join(str(g) for g in exp.preperiod),
        " ".join(str(k) for k in exp.period),
    ]])


def convergents_csv(table: ConvergentTable) -> str:
    return to_csv(["i", "entry", "A", "B"], (
        [i, k, A, B] for i, (k, A, B) in enumerate(zip(table.entries, table.A, table.B))
    ))


def table1_csv(report: Table1Report) -> str:
    """Header p, rk_Q, sqrt_p_cf, c and one computed row per prime."""
    return to_csv(TABLE1_HEADER, (
        [row.p, row.computed_rank, str(row.computed_expansion), row.computed_c]
        for row in report.rows
    ))


def table1_text(report: Table1Report) -> str:
    lines = [f"{'p':>3}  {'rk_Q':>4}  {'c':>2}  {'match':<5}  sqrt(p)"]
    for row in report.rows:
        c = str(row.computed_c) if row.c_match else f"{row.computed_c}!{row.expected_c}"
        lines.append(
            f"{row.p:>3}  {row.computed_rank:>4}  {c:>2}  {str(row.match).lower():<5}  {row.computed_expansion}"
        )
    lines.append(f"all rows match: {str(report.all_match).lower()}")
    return "\n".join(lines) + "\n"


def mapping_csv(data: Dict[str, Any]) -> str:
    """Scalar fields of a result as key,value rows."""
    return to_csv(["key", "value"], (
        [k, v] for k, v in data.items() if isinstance(v, (int, str, bool)) or v is None
    ))


def mapping_text(data: Dict[str, Any]) -> str:
    lines: List[str] = []
    for k, v in data.items():
        if isinstance(v, (int, str, bool)) or v is None:
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"
