"""Render scan convergence figures to image files."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .stats import (
    REF_CYCLIC_SUM,
    REF_IDEMPOTENT_LOG,
    REF_UNIT_SUM,
    ScanReport,
)

__all__ = ["render_scan_figure"]


def render_scan_figure(reports: list[ScanReport], path: str) -> None:
    """Plot the checkpoint ratios against their reference constants.

    Left panel: sum_a/N^2 and sum_phi/N^2 with their constant references.
    Right panel: mean idempotent count with its logarithmic reference.
    The figure format follows the file extension.
    """
    if not reports:
        raise ValueError("no scan reports to plot")
    ns = [rep.n for rep in reports]

    fig, (ax_ratio, ax_idem) = plt.subplots(1, 2, figsize=(10, 4))

    ax_ratio.plot(ns, [rep.ratio_a for rep in reports], "o-", label="sum a(m) / N^2")
    ax_ratio.plot(ns, [rep.ratio_phi for rep in reports], "s-", label="sum phi(m) / N^2")
    ax_ratio.axhline(REF_CYCLIC_SUM, color="C0", ls="--", lw=1, label=f"{REF_CYCLIC_SUM}")
    ax_ratio.axhline(REF_UNIT_SUM, color="C1", ls="--", lw=1, label="3/pi^2")
    ax_ratio.set_xscale("log", base=2)
    ax_ratio.set_xlabel("N")
    ax_ratio.set_ylabel("ratio")
    ax_ratio.set_title("cyclic and unit sums")
    ax_ratio.legend(fontsize=8)

    ax_idem.plot(ns, [rep.mean_idempotents for rep in reports], "o-", label="mean idempotents")
    ax_idem.plot(
        ns,
        [REF_IDEMPOTENT_LOG * math.log(n) for n in ns],
        "--",
        lw=1,
        label="(6/pi^2) ln N",
    )
    ax_idem.set_xscale("log", base=2)
    ax_idem.set_xlabel("N")
    ax_idem.set_ylabel("count")
    ax_idem.set_title("idempotents per modulus")
    ax_idem.legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
