"""Report artifacts: Castelnuovo bar chart and Hilbert function CSV.

Written next to the main output when the CLI is invoked with --plot-dir.
"""

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def write_report_artifacts(hd, plot_dir, stem="hilbert"):
    """Render the Castelnuovo function as a bar chart PNG and dump the
    Hilbert data as CSV; returns the two file paths."""
    os.makedirs(plot_dir, exist_ok=True)
    png_path = os.path.join(plot_dir, f"{stem}_castelnuovo.png")
    csv_path = os.path.join(plot_dir, f"{stem}.csv")

    degrees = list(range(len(hd.castelnuovo)))
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(degrees, hd.castelnuovo, color="#4878a8", edgecolor="black", linewidth=0.5)
    ax.set_xlabel("degree")
    ax.set_ylabel("Castelnuovo function")
    ax.set_title(f"mu = {hd.mu}, regularity index = {hd.ri}")
    ax.set_xticks(degrees)
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)

    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["degree", "hilbert_function", "castelnuovo"])
        for i in degrees:
            writer.writerow([i, hd.hf[i], hd.castelnuovo[i]])
    return png_path, csv_path
