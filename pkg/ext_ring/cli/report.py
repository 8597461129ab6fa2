# -*- coding: UTF-8 -*-
"""
Report
======
@ Ext Ring: cli

Author
------
Ext Ring contributors

License
-------
MIT License

Description
-----------
Building and serializing the report of a run. The JSON form uses sorted keys and
canonical representatives, so identical runs give byte-identical documents.
"""

import io
import csv
import json

from typing import Optional

try:
    from typing import Dict, List
except ImportError:
    from builtins import dict as Dict, list as List

from ..typehints import CheckResult, DegreeBasis, OutputFormat, ProductEntry, Report
from ..cohomology import CohomologyContext


__all__ = (
    "SCHEMA_VERSION",
    "class_label",
    "context_basis",
    "make_report",
    "dumps_json",
    "dumps_csv",
    "dumps_text",
    "render",
)

SCHEMA_VERSION = 1


def class_label(degree: int, idx: int) -> str:
    """The label of a basis class, e.g. `"h2_0"`."""
    return "h{0}_{1}".format(degree, idx)


def context_basis(context: CohomologyContext) -> List[DegreeBasis]:
    """The class bases of all degrees of a context."""
    field = context.field
    return [
        DegreeBasis(
            degree=deg,
            labels=[class_label(deg, idx) for idx in range(context.dim(deg))],
            representatives=[
                [field.format(val) for val in vec] for vec in context.basis(deg)
            ],
        )
        for deg in range(context.max_degree + 1)
    ]


def make_report(
    command: str,
    field: str,
    subject: str,
    max_degree: int,
    dims: List[int],
    basis: List[DegreeBasis],
    products: List[ProductEntry],
    checks: List[CheckResult],
    timing: Optional[Dict[str, float]] = None,
) -> Report:
    """Assemble a report. `passed` is derived from the checks."""
    report = Report(
        schema=SCHEMA_VERSION,
        command=command,  # type: ignore[typeddict-item]
        field=field,
        subject=subject,
        max_degree=max_degree,
        dims=list(dims),
        basis=basis,
        products=products,
        checks=checks,
        passed=all(item["passed"] for item in checks),
    )
    if timing is not None:
        report["timing"] = {key: round(val, 6) for key, val in timing.items()}
    return report


def dumps_json(report: Report) -> str:
    """The JSON document of a report."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dumps_csv(report: Report) -> str:
    """The rows of the multiplication tables.

    The coefficient vector is written as one space-separated column.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("method", "p", "i", "q", "j", "coefficients"))
    for entry in report["products"]:
        writer.writerow(
            (
                entry["method"],
                entry["p"],
                entry["i"],
                entry["q"],
                entry["j"],
                " ".join(entry["coefficients"]),
            )
        )
    return buffer.getvalue()


def dumps_text(report: Report) -> str:
    """A human-readable summary of a report."""
    lines = [
        "{0} {1} over {2}, N = {3}".format(
            report["command"], report["subject"], report["field"], report["max_degree"]
        )
    ]
    if report["dims"]:
        lines.append("dims: " + " ".join(str(val) for val in report["dims"]))
    methods: List[str] = list()
    for entry in report["products"]:
        if entry["method"] not in methods:
            methods.append(entry["method"])
    for method in methods:
        lines.append("{0} products:".format(method))
        for entry in report["products"]:
            if entry["method"] != method:
                continue
            lines.append(
                "  {0} * {1} = [{2}]".format(
                    class_label(entry["p"], entry["i"]),
                    class_label(entry["q"], entry["j"]),
                    ", ".join(entry["coefficients"]),
                )
            )
    if report["checks"]:
        n_pass = sum(1 for item in report["checks"] if item["passed"])
        lines.append("checks: {0}/{1} passed".format(n_pass, len(report["checks"])))
        for item in report["checks"]:
            if not item["passed"]:
                lines.append(
                    "  FAILED {0} (sample {1}): {2}".format(
                        item["name"], item["sample"], item["witness"]
                    )
                )
    if "timing" in report:
        for key, val in sorted(report["timing"].items()):
            lines.append("time {0}: {1:.3f}s".format(key, val))
    return "\n".join(lines) + "\n"


def render(report: Report, output_format: OutputFormat = "json") -> str:
    """Serialize a report in the requested format."""
    if output_format == "csv":
        return dumps_csv(report)
    if output_format == "text":
        return dumps_text(report)
    return dumps_json(report)
