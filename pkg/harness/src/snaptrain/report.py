"""Results table rendering and the machine-readable results file."""

from __future__ import annotations

import json
from pathlib import Path

from .metrics import Metrics

COLUMNS = ("Precision", "Recall", "F1-Score", "Accuracy")


def append_results(metrics: Metrics, results_path: Path | str) -> None:
    path = Path(results_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(metrics.as_dict()) + "\n")


def read_results(results_path: Path | str) -> list[Metrics]:
    rows = []
    with open(results_path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            rows.append(
                Metrics(
                    precision=obj["precision"],
                    recall=obj["recall"],
                    f1=obj["f1"],
                    accuracy=obj["accuracy"],
                    model=obj["model"],
                    variant=obj["variant"],
                    dataset=obj["dataset"],
                    per_label=obj.get("per_label", {}),
                )
            )
    return rows


def render_table(results: list[Metrics]) -> str:
    """Fixed-width table grouped by dataset, rows ordered (model, variant).

    Columns follow the canonical order: precision, recall, F1, accuracy,
    each rendered to two decimals.
    """
    if not results:
        raise ValueError("no metrics to report")
    datasets: dict[str, list[Metrics]] = {}
    for m in results:  # group in first-seen dataset order
        datasets.setdefault(m.dataset, []).append(m)

    name_width = max(
        len("Model"),
        len("Input"),
        max(len(m.model) for m in results),
        max(len(m.variant) for m in results),
    )
    header = (
        "Dataset".ljust(18)
        + "Model".ljust(name_width + 2)
        + "Input".ljust(name_width + 2)
        + "".join(c.rjust(12) for c in COLUMNS)
    )
    lines = [header, "-" * len(header)]
    for dataset, rows in datasets.items():
        rows = sorted(rows, key=lambda m: (m.model, m.variant))
        for i, m in enumerate(rows):
            lines.append(
                (dataset if i == 0 else "").ljust(18)
                + m.model.ljust(name_width + 2)
                + m.variant.ljust(name_width + 2)
                + f"{m.precision:.2f}".rjust(12)
                + f"{m.recall:.2f}".rjust(12)
                + f"{m.f1:.2f}".rjust(12)
                + f"{m.accuracy:.2f}".rjust(12)
            )
    return "\n".join(lines) + "\n"
