"""File-based report rendering for the counting commands."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .counting import CountReport


def write_report(report: CountReport, directory: str) -> tuple[str, str]:
    """Write counts.csv and counts.png for a count report.

    Returns the two paths.  The plot shows the closed-form count per
    genus, with the doubled enumeration overlaid when present.
    """
    os.makedirs(directory, exist_ok=True)
    csv_path = os.path.join(directory, "counts.csv")
    png_path = os.path.join(directory, "counts.png")

    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["genus", "count", "reference", "doubled_enumeration", "series_coefficient"]
        )
        for row in report.rows:
            writer.writerow(
                [
                    row.genus,
                    row.count,
                    "" if row.reference is None else row.reference,
                    "" if row.doubled_enumeration is None else row.doubled_enumeration,
                    row.series_coefficient,
                ]
            )

    genera = [row.genus for row in report.rows]
    counts = [row.count for row in report.rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(genera, counts, "o-", label="closed form")
    doubled = [
        (row.genus, row.doubled_enumeration)
        for row in report.rows
        if row.doubled_enumeration is not None
    ]
    if doubled:
        ax.plot(
            [g for g, _ in doubled],
            [c for _, c in doubled],
            "s--",
            label="doubled enumeration",
        )
    ax.set_xlabel("genus")
    ax.set_ylabel("closed essential surfaces")
    ax.set_title("Surface counts by genus")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path
