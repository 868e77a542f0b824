"""Pictures of the traced loop with the winding number of every cell."""

import io
import logging

import matplotlib
from matplotlib.figure import Figure

from src.groups.words import Word, require_commutator_element, trace_path
from src.invariants.winding import winding_grid_oracle

logger = logging.getLogger(__name__)

RENDER_FORMATS = ("ascii", "svg")


def _edges(w: Word) -> set[frozenset]:
    points = trace_path(w).points
    return {frozenset((a, b)) for a, b in zip(points, points[1:])}


def _render_ascii(w: Word) -> str:
    path = trace_path(w)
    k_min, k_max, l_min, l_max = path.bounding_box()
    cells = winding_grid_oracle(w).cells
    edges = _edges(w)
    width = max([3] + [len(str(v)) for v in cells.values()])

    lines = []
    for l in range(l_max, l_min - 1, -1):
        row = []
        for k in range(k_min, k_max + 1):
            row.append("*" if (k, l) == (0, 0) else "+")
            if k < k_max:
                row.append("-" * width if frozenset(((k, l), (k + 1, l))) in edges else " " * width)
        lines.append("".join(row).rstrip())
        if l == l_min:
            break
        row = []
        for k in range(k_min, k_max + 1):
            row.append("|" if frozenset(((k, l - 1), (k, l))) in edges else " ")
            if k < k_max:
                value = cells.get((k, l - 1), 0)
                row.append(str(value).rjust(width) if value else " " * width)
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def _render_svg(w: Word) -> str:
    path = trace_path(w)
    k_min, k_max, l_min, l_max = path.bounding_box()
    cells = winding_grid_oracle(w).cells

    fig = Figure(figsize=(max(k_max - k_min, 1) + 1, max(l_max - l_min, 1) + 1))
    ax = fig.add_subplot(1, 1, 1)
    for k in range(k_min, k_max + 1):
        ax.plot([k, k], [l_min, l_max], color="0.85", linewidth=0.8)
    for l in range(l_min, l_max + 1):
        ax.plot([k_min, k_max], [l, l], color="0.85", linewidth=0.8)
    xs = [p[0] for p in path.points]
    ys = [p[1] for p in path.points]
    ax.plot(xs, ys, color="tab:blue", linewidth=2)
    ax.plot([0], [0], marker="o", color="black", markersize=8)
    for (i, j), value in sorted(cells.items()):
        ax.text(i + 0.5, j + 0.5, str(value), ha="center", va="center", fontsize=12)
    ax.set_xlim(k_min - 0.5, k_max + 0.5)
    ax.set_ylim(l_min - 0.5, l_max + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")

    buf = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": "windlab", "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def render_grid(w: Word, format: str = "ascii") -> str:
    """Draw the loop of w with per-cell winding numbers.

    Args:
        w: Word in [F,F].
        format: "ascii" for a fixed-width text grid, "svg" for a standalone
            SVG document. The start vertex (0, 0) is marked `*` / a black dot.

    Returns:
        The rendering as text.
    """
    require_commutator_element(w)
    if format == "ascii":
        return _render_ascii(w)
    if format == "svg":
        return _render_svg(w)
    raise ValueError(f"Unknown render format {format!r}; expected one of {RENDER_FORMATS}")
