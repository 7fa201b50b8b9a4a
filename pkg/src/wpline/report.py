"""Figure rendering for the CLI report paths.

Figures are written straight to files with the Agg backend; nothing
here touches stdout, so the text reports stay byte-stable.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .extquiver import ValuedQuiver

__all__ = ["save_quiver_figure", "save_chain_figure", "save_check_figure"]


def save_quiver_figure(q: ValuedQuiver, path: str) -> None:
    """Draw the valued quiver on a circle and save it."""
    labels = [v for v, _ in q.vertices]
    n = max(1, len(labels))
    pos = {}
    for k, v in enumerate(labels):
        angle = 2 * math.pi * k / n
        pos[v] = (math.cos(angle), math.sin(angle))

    fig, ax = plt.subplots(figsize=(6, 6))
    for (v, d) in q.vertices:
        x, y = pos[v]
        ax.plot([x], [y], "o", color="tab:blue", markersize=10, zorder=3)
        ax.annotate(f"{v} [deg={d}]", (x, y), textcoords="offset points",
                    xytext=(8, 8), fontsize=9)
    for (u, v, s, t) in q.arrows:
        x0, y0 = pos[u]
        x1, y1 = pos[v]
        if u == v:
            ax.annotate(f"loop ({s},{t})", (x0, y0),
                        textcoords="offset points", xytext=(8, -14),
                        fontsize=8, color="tab:red")
            continue
        arrow = FancyArrowPatch((x0, y0), (x1, y1), arrowstyle="-|>",
                                mutation_scale=14, color="0.3",
                                connectionstyle="arc3,rad=0.15",
                                shrinkA=10, shrinkB=10)
        ax.add_patch(arrow)
        ax.annotate(f"({s},{t})", ((x0 + x1) / 2, (y0 + y1) / 2),
                    fontsize=8, color="0.3")
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_chain_figure(chain, vertices, path: str) -> None:
    """Plot the simple count along a reduction chain."""
    steps = list(range(len(chain)))
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(steps, vertices, "o-", color="tab:blue")
    for k, w in enumerate(chain):
        ax.annotate("(" + ",".join(str(x) for x in w) + ")",
                    (k, vertices[k]), textcoords="offset points",
                    xytext=(0, 8), fontsize=8, ha="center")
    ax.set_xlabel("reduction step")
    ax.set_ylabel("simple objects in exceptional tubes")
    ax.set_xticks(steps)
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_check_figure(results, path: str) -> None:
    """Bar chart of pass/fail counts per check group."""
    groups = sorted({r.group for r in results})
    passed = [sum(1 for r in results if r.group == g and r.passed)
              for g in groups]
    failed = [sum(1 for r in results if r.group == g and not r.passed)
              for g in groups]
    xs = range(len(groups))
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(xs, passed, color="tab:green", label="pass")
    ax.bar(xs, failed, bottom=passed, color="tab:red", label="fail")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(groups, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("cases")
    ax.legend()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
