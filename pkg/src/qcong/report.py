"""Rendering of verification reports: tab-delimited table, JSON, timing figure."""

from __future__ import annotations

import json
from collections import defaultdict

HEADER = ("statement", "params", "verdict", "reason", "residual_degree", "elapsed_ms")


def _params(p: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in p.items())


def format_table(reports, verbose: bool = False) -> str:
    cols = HEADER + (("residual",) if verbose else ())
    lines = ["# " + "\t".join(cols)]
    for r in reports:
        row = [
            r.statement,
            _params(r.params),
            "PASS" if r.holds else "FAIL",
            r.reason,
            "-" if r.residual_degree is None else str(r.residual_degree),
            f"{r.elapsed * 1000:.2f}",
        ]
        if verbose:
            row.append(r.residual if r.residual is not None else "-")
        lines.append("\t".join(row))
    return "\n".join(lines)


def format_json(reports, verbose: bool = False) -> str:
    return json.dumps([r.to_json(verbose) for r in reports], indent=1)


def render_figure(reports, path) -> None:
    """Elapsed time per parameter value for each statement; failures drawn in red."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series = defaultdict(lambda: ([], [], []))
    for r in reports:
        x = next(iter(r.params.values()))
        xs, ys, ok = series[r.statement]
        xs.append(x)
        ys.append(max(r.elapsed * 1000.0, 1e-3))
        ok.append(r.holds)

    fig, (ax_t, ax_c) = plt.subplots(1, 2, figsize=(10, 4), gridspec_kw={"width_ratios": [3, 2]})
    for name, (xs, ys, ok) in sorted(series.items()):
        ax_t.plot(xs, ys, ".", ms=3, label=name)
        bad = [(x, y) for x, y, good in zip(xs, ys, ok) if not good]
        if bad:
            bx, by = zip(*bad)
            ax_t.plot(bx, by, "x", color="red", ms=6)
    ax_t.set_yscale("log")
    ax_t.set_xlabel("n (or p)")
    ax_t.set_ylabel("elapsed per check [ms]")
    ax_t.legend(fontsize=7, frameon=False)

    names = sorted(series)
    passed = [sum(series[s][2]) for s in names]
    failed = [len(series[s][2]) - p for s, p in zip(names, passed)]
    ax_c.barh(names, passed, color="tab:green", label="hold")
    ax_c.barh(names, failed, left=passed, color="tab:red", label="fail")
    ax_c.set_xlabel("verdicts")
    ax_c.tick_params(axis="y", labelsize=7)
    ax_c.legend(fontsize=7, frameon=False)

    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
