"""Static figures written next to the CLI reports (PNG, headless backend)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# fixed metadata keeps the PNG bytes identical across runs
_PNG_META = {"Software": None}


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_PNG_META)
    plt.close(fig)
    return path


def check_counts(rows: Sequence[tuple[str, int, int]], title: str, path: Path) -> Path:
    """Horizontal bars: checked samples split into passes and failures per check."""
    names = [r[0] for r in rows]
    passes = [r[1] - r[2] for r in rows]
    fails = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(7.5, 0.45 * len(rows) + 1.4))
    y = range(len(rows))
    ax.barh(y, passes, color="#4c72b0", label="pass")
    ax.barh(y, fails, left=passes, color="#dd5555", label="fail")
    ax.set_yticks(list(y))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("samples")
    ax.set_title(title, fontsize=10)
    ax.legend(loc="lower right", fontsize=8, frameon=False)
    return _save(fig, path)


def spacetime_pairs(pairs: Sequence[tuple[Sequence[float], Sequence[float], str]], path: Path) -> Path:
    """Event pairs in the (x, t) plane against the unit and doubled hyperbolas t² − x² = 1, 4."""
    import numpy as np

    fig, ax = plt.subplots(figsize=(5, 5))
    x = np.linspace(-2.5, 2.5, 201)
    for r, style in ((1, "-"), (2, "--")):
        ax.plot(x, np.sqrt(r * r + x * x), style, color="0.6", lw=1, label=f"t² − x² = {r * r}")
    ax.plot(x, np.abs(x), ":", color="0.8", lw=1)
    for p, q, label in pairs:
        ax.plot([p[1], q[1]], [p[0], q[0]], "o-", label=label)
    ax.set_xlabel("x")
    ax.set_ylabel("t")
    ax.set_xlim(-2.5, 2.5)
    ax.set_ylim(-0.2, 3.2)
    ax.set_aspect("equal")
    ax.legend(fontsize=8, frameon=False, loc="upper left")
    return _save(fig, path)


def coordinates(lab: Sequence[Sequence[float]], frame: Sequence[Sequence[float]], path: Path) -> Path:
    """Events in lab (x, t) next to the same events in the frame's (x, t)."""
    fig, axes = plt.subplots(1, 2, figsize=(8, 4), sharex=False, sharey=False)
    for ax, pts, title in ((axes[0], lab, "lab"), (axes[1], frame, "frame coordinates")):
        ax.scatter([p[1] for p in pts], [p[0] for p in pts], s=14)
        for i, p in enumerate(pts):
            ax.annotate(str(i), (p[1], p[0]), fontsize=7, xytext=(3, 3), textcoords="offset points")
        ax.set_xlabel("x")
        ax.set_ylabel("t")
        ax.set_title(title, fontsize=10)
    return _save(fig, path)
