"""Report rendering: delimited data files plus matplotlib figures.

Everything is written under a target directory: family growth counts, the
membership-matrix heatmap per d, and one annotated heatmap per exceptional
table, each figure next to the CSV it was drawn from.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import excdata, zbasis
from .family import enumerate_family
from .phimap import tilde_v


def write_family_growth(d_max: int, outdir: Path) -> list[Path]:
    counts = [(d, len(enumerate_family(d)), len(tilde_v(d))) for d in range(d_max + 1)]
    csv_path = outdir / "family_growth.csv"
    with csv_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["d", "family_size", "union_size"])
        w.writerows(counts)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ds = [c[0] for c in counts]
    ax.plot(ds, [c[1] for c in counts], "o-", label="family members")
    ax.plot(ds, [c[2] for c in counts], "s--", label="union elements")
    ax.set_xlabel("d")
    ax.set_ylabel("count")
    ax.set_yscale("log" if counts[-1][1] > 50 else "linear")
    ax.legend()
    ax.set_title("Family growth")
    fig.tight_layout()
    fig_path = outdir / "family_growth.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]


def write_basis_matrix(d: int, outdir: Path) -> list[Path]:
    cert = zbasis.basis_matrix(d)
    csv_path = outdir / f"basis_matrix_d{d}.csv"
    csv_path.write_text(zbasis.certificate_to_csv(cert))
    json_path = outdir / f"basis_certificate_d{d}.json"
    json_path.write_text(zbasis.certificate_to_json(cert))
    n = len(cert.matrix)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.imshow(cert.matrix, cmap="Greys", interpolation="nearest")
    ax.set_title(f"Membership matrix, d={d} ({n}x{n}, det={cert.determinant})")
    ax.set_xlabel("union elements")
    ax.set_ylabel("family members")
    fig.tight_layout()
    fig_path = outdir / f"basis_matrix_d{d}.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, json_path, fig_path]


def write_exceptional_table(n_c: int, outdir: Path) -> list[Path]:
    t = excdata.TABLES[n_c]
    csv_path = outdir / f"table_nc{n_c}.csv"
    csv_path.write_text(t.to_csv())
    json_path = outdir / f"table_nc{n_c}.json"
    json_path.write_text(json.dumps(t.to_json_dict(), indent=2))
    n = t.n_c
    fig, ax = plt.subplots(figsize=(0.55 * n + 2, 0.55 * n + 2))
    ax.imshow(t.matrix, cmap="Blues", interpolation="nearest")
    for r, row in enumerate(t.matrix):
        for c, v in enumerate(row):
            if v == 0:
                continue
            boxed = c == t.marks[r]
            ax.text(
                c,
                r,
                str(v),
                ha="center",
                va="center",
                fontsize=8,
                fontweight="bold" if boxed else "normal",
                bbox=dict(boxstyle="square", fc="none", ec="red") if boxed else None,
            )
    ax.set_xticks(range(n))
    ax.set_xticklabels(t.column_labels, rotation=90, fontsize=7)
    ax.set_yticks(range(n))
    ax.set_yticklabels(
        [f"r{r + 1} ({cls})" for r, cls in enumerate(t.row_class)], fontsize=7
    )
    ax.set_title(f"Multiplicity table, n_c={n_c} ({'/'.join(t.weyl_types)})")
    fig.tight_layout()
    fig_path = outdir / f"table_nc{n_c}.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return [csv_path, json_path, fig_path]


def generate_report(d_max: int, outdir: str | Path) -> list[Path]:
    """Render the full report tree; returns every file written."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = write_family_growth(d_max, out)
    for d in range(min(d_max, 4) + 1):
        written += write_basis_matrix(d, out)
    for n_c in sorted(excdata.TABLES):
        written += write_exceptional_table(n_c, out)
    return written
