"""Figure and CSV rendering for solver diagnostics and interval layouts.

matplotlib is imported lazily so the solving paths never pay for it.
"""
from __future__ import annotations

import csv
from pathlib import Path
from typing import Optional

from .formula import Formula, MixedOrdering
from .hardness import IntervalRep, LabeledBigraph, Number
from .ioformats import element_token
from .solver import SolveReport, ps_profile


def _pyplot():
    import matplotlib
    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt
    return plt


def write_cut_profile_csv(path: str | Path, formula: Formula, pi: MixedOrdering,
                          report: SolveReport,
                          profile: Optional[list[tuple[int, int]]] = None) -> None:
    """Per-cut sweep statistics, one row per cut i = 1..n+m."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        header = ["cut", "element", "live_states", "distinct_sat_sets"]
        if profile is not None:
            header += ["ps_prefix", "ps_suffix"]
        writer.writerow(header)
        for idx, e in enumerate(pi.elements):
            row = [idx + 1, element_token(e),
                   report.live_states[idx], report.distinct_s[idx]]
            if profile is not None:
                row += [profile[idx][0], profile[idx][1]]
            writer.writerow(row)


def render_cut_profile(path: str | Path, formula: Formula, pi: MixedOrdering,
                       report: SolveReport,
                       profile: Optional[list[tuple[int, int]]] = None) -> None:
    """Line plot of live states and distinct sat-sets along the ordering."""
    plt = _pyplot()
    cuts = range(1, len(pi.elements) + 1)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(cuts, report.live_states, marker="o", markersize=3,
            label="live DP states")
    ax.plot(cuts, report.distinct_s, marker="s", markersize=3,
            label="distinct sat-sets")
    if profile is not None:
        ax.plot(cuts, [max(a, b) for a, b in profile], linestyle="--",
                label="cut ps-value")
    ax.set_xlabel("cut position in ordering")
    ax.set_ylabel("count")
    ax.set_title(f"sweep profile: n={formula.n}, m={formula.m}, mode={report.mode}")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cut_profile_report(formula: Formula, pi: MixedOrdering, report: SolveReport,
                       csv_path: str | Path, png_path: str | Path,
                       with_ps: bool = False, cap: int = 24) -> None:
    """Write the CSV and the figure side by side."""
    profile = ps_profile(formula, pi, cap) if with_ps else None
    write_cut_profile_csv(csv_path, formula, pi, report, profile)
    render_cut_profile(png_path, formula, pi, report, profile)


def render_interval_rep(path: str | Path, rep: IntervalRep,
                        graph: Optional[LabeledBigraph] = None) -> None:
    """Draw an interval representation as stacked horizontal segments.

    Designated-side vertices (when the graph is given) are drawn above the
    axis in a warm color, base-side below in a cool one; otherwise all
    vertices share one lane stack.
    """
    plt = _pyplot()
    names = sorted(rep, key=lambda v: (rep[v][0], rep[v][1], v))

    def lane_pack(group: list[str]) -> dict[str, int]:
        lanes: list[Number] = []  # rightmost end per lane
        assignment = {}
        for v in group:
            lo, hi = rep[v]
            for li, end in enumerate(lanes):
                if end <= lo:
                    lanes[li] = hi
                    assignment[v] = li
                    break
            else:
                assignment[v] = len(lanes)
                lanes.append(hi)
        return assignment

    if graph is not None:
        top = [v for v in names if v in graph.designated]
        bottom = [v for v in names if v not in graph.designated]
    else:
        top, bottom = names, []
    top_lanes = lane_pack(top)
    bottom_lanes = lane_pack(bottom)

    fig, ax = plt.subplots(figsize=(10, 5))
    annotate = len(rep) <= 80
    for v in top:
        lo, hi = rep[v]
        y = 1 + top_lanes[v]
        ax.hlines(y, lo, hi, colors="tab:red", lw=3)
        if annotate:
            ax.text((lo + hi) / 2, y + 0.12, v, ha="center", fontsize=6)
    for v in bottom:
        lo, hi = rep[v]
        y = -1 - bottom_lanes[v]
        ax.hlines(y, lo, hi, colors="tab:blue", lw=3)
        if annotate:
            ax.text((lo + hi) / 2, y + 0.12, v, ha="center", fontsize=6)
    ax.axhline(0, color="gray", lw=0.5)
    ax.set_xlabel("line coordinate")
    ax.set_yticks([])
    ax.set_title("interval representation")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
