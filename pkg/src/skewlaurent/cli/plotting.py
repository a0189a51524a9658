"""Figures written next to the ``verify`` and ``bench`` reports."""

import os
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 120,
}


def _save(fig, path):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_valuations(report, path):
    """Valuation counts: random elements against commutators and F-combinations."""
    props = report["properties"]
    groups = {
        "random elements": [r["vx"] for r in props["valuation_multiplicative"].get("data", [])],
        "commutators": props["commutator_kernel"].get("data", {}).get("valuations", []),
        "commutator products": [d["valuation"] for d in props["commutator_product_kernel"].get("data", [])],
        "F-combinations": [v for v in props["f_combination_nonnegative"].get("data", []) if v is not None],
    }
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(5.5, 3.2))
        present = [(k, v) for k, v in groups.items() if v]
        width = 0.8 / max(len(present), 1)
        for n, (label, vals) in enumerate(present):
            counts = Counter(vals)
            xs = sorted(counts)
            total = len(vals)
            ax.bar([x + (n - (len(present) - 1) / 2) * width for x in xs],
                   [counts[x] / total for x in xs], width=width, label=label)
        ax.axvline(-0.5, color="0.4", lw=0.8, ls="--")
        ax.set_xlabel("valuation v")
        ax.set_ylabel("fraction of samples")
        ax.set_title(f"valuations over {report['context']['field']['kind']}, sigma={report['context']['sigma']}")
        ax.legend(frameon=False)
        return _save(fig, path)


def plot_bench(rows, path):
    """Mean product time against size for both strategies, log-log."""
    sizes = [r["size"] for r in rows]
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(4.5, 3.2))
        for key, label in (("mul", "closed-form sigma powers"), ("incremental", "incremental rows")):
            ax.errorbar(sizes, [r[f"{key}_mean_s"] for r in rows], yerr=[r[f"{key}_stdev_s"] for r in rows],
                        marker="o", ms=3, capsize=2, label=label)
        ax.set_xscale("log", base=2)
        ax.set_yscale("log")
        ax.set_xlabel("coefficients per operand")
        ax.set_ylabel("seconds per product")
        ax.legend(frameon=False)
        return _save(fig, path)
