"""Evaluation report records and their TSV / aligned-text / JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

TSV_COLUMNS = ("task", "variant", "dim", "metric", "value", "coverage", "metadata")


@dataclass(frozen=True)
class EvalReport:
    """One evaluation result cell, as printed in the result tables."""

    task: str
    variant: str
    dim: int
    metric_name: str
    value: float
    coverage: float = 1.0
    metadata: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 < self.coverage <= 1.0:
            raise ValueError(f"coverage {self.coverage} outside (0, 1]")

    def _metadata_str(self) -> str:
        return ",".join(f"{k}={v}" for k, v in sorted(self.metadata.items()))

    def to_tsv_row(self) -> str:
        return "\t".join(
            (
                self.task,
                self.variant,
                str(self.dim),
                self.metric_name,
                f"{self.value:.4f}",
                f"{self.coverage:.4f}",
                self._metadata_str(),
            )
        )

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "task": self.task,
                "variant": self.variant,
                "dim": self.dim,
                "metric": self.metric_name,
                "value": self.value,
                "coverage": self.coverage,
                "metadata": self.metadata,
            },
            sort_keys=True,
        )


def sort_reports(reports: list[EvalReport]) -> list[EvalReport]:
    """Stable sort by (task, variant, dim) for diff-friendly output."""
    return sorted(reports, key=lambda r: (r.task, r.variant, r.dim))


def render_tsv(reports: list[EvalReport]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    lines += [r.to_tsv_row() for r in sort_reports(reports)]
    return "\n".join(lines) + "\n"


def render_table(reports: list[EvalReport]) -> str:
    """Aligned plain-text table of the sorted reports."""
    rows = [TSV_COLUMNS]
    rows += [r.to_tsv_row().split("\t") for r in sort_reports(reports)]
    widths = [max(len(row[i]) for row in rows) for i in range(len(TSV_COLUMNS))]
    out = []
    for row in rows:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def render_json_lines(reports: list[EvalReport]) -> str:
    return "\n".join(r.to_json_line() for r in sort_reports(reports)) + "\n"
