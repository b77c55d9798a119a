"""Figure rendering for order diagrams and explored state spaces.

Figures are drawn straight onto :class:`matplotlib.figure.Figure` objects
(no pyplot global state, no interactive backend needed) and written to
whatever format the target filename implies. Layouts are deterministic:
elements keep their construction order within a layer, states sort by
their arrangement within a depth column.
"""

from __future__ import annotations

from typing import Sequence

from matplotlib.figure import Figure

from .engine import Arrangement
from .oracle import DEFAULT_NODE_LIMIT, _explore
from .poset import ElementId, Poset

_NODE_STYLE = dict(boxstyle="round,pad=0.35", facecolor="#eef3fb", edgecolor="#2f5597")
_STATE_LABEL_LIMIT = 60


def render_hasse(poset: Poset, path: str) -> None:
    """Draw the order diagram (covers only) and save it to ``path``."""
    heights = _layer_heights(poset)
    layers: dict[int, list[str]] = {}
    for el in poset.elements:
        layers.setdefault(heights[el], []).append(el)

    coords: dict[str, tuple[float, float]] = {}
    for h, members in layers.items():
        for k, el in enumerate(members):
            coords[el] = (k - (len(members) - 1) / 2.0, float(h))

    width = max((len(m) for m in layers.values()), default=1)
    depth = max(layers, default=0) + 1
    fig = Figure(figsize=(max(3.0, 1.4 * width), max(2.5, 1.2 * depth)))
    ax = fig.add_subplot()
    for a, b in poset.cover_relations():
        (xa, ya), (xb, yb) = coords[a], coords[b]
        ax.plot([xa, xb], [ya, yb], color="#888888", linewidth=1.2, zorder=1)
    for el, (x, y) in coords.items():
        ax.text(x, y, el, ha="center", va="center", fontsize=10, bbox=_NODE_STYLE, zorder=2)
    ax.set_xlim(-width / 2.0 - 0.7, width / 2.0 + 0.7)
    ax.set_ylim(-0.7, depth - 0.3)
    ax.set_axis_off()
    fig.savefig(path, bbox_inches="tight")


def render_state_space(
    poset: Poset,
    arr: Sequence[ElementId],
    path: str,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> None:
    """Draw every arrangement reachable from ``arr`` by permissible swaps.

    States are columns by swap depth, edges are single swaps; the start
    state is green, terminal states red. Small spaces get state labels.
    """
    depth, terminals = _explore(poset, tuple(arr), node_limit)
    columns: dict[int, list[Arrangement]] = {}
    for state in sorted(depth):
        columns.setdefault(depth[state], []).append(state)

    coords: dict[Arrangement, tuple[float, float]] = {}
    for d, members in columns.items():
        for k, state in enumerate(members):
            coords[state] = (float(d), k - (len(members) - 1) / 2.0)

    tall = max((len(m) for m in columns.values()), default=1)
    wide = max(columns, default=0) + 1
    fig = Figure(figsize=(max(3.5, 1.5 * wide), max(3.0, 0.6 * tall)))
    ax = fig.add_subplot()
    n = len(poset.elements)
    for state, (x, y) in coords.items():
        for i in range(n - 1):
            if poset.less(state[i], state[i + 1]):
                nxt = state[:i] + (state[i + 1], state[i]) + state[i + 2 :]
                xn, yn = coords[nxt]
                ax.plot([x, xn], [y, yn], color="#bbbbbb", linewidth=0.8, zorder=1)

    label = len(depth) <= _STATE_LABEL_LIMIT
    for state, (x, y) in coords.items():
        if state in terminals:
            color = "#c00000"
        elif depth[state] == 0:
            color = "#2e7d32"
        else:
            color = "#2f5597"
        ax.scatter([x], [y], s=36, color=color, zorder=2)
        if label:
            ax.annotate(
                ",".join(state),
                (x, y),
                textcoords="offset points",
                xytext=(0, 6),
                ha="center",
                fontsize=7,
            )
    ax.set_xlabel("swaps applied")
    ax.set_yticks([])
    ax.set_xticks(range(wide))
    ax.spines[["left", "top", "right"]].set_visible(False)
    fig.savefig(path, bbox_inches="tight")


def _layer_heights(poset: Poset) -> dict[ElementId, int]:
    """Longest-chain-below height per element (diagram layer)."""
    below: dict[str, list[str]] = {el: [] for el in poset.elements}
    for a, b in poset.cover_relations():
        below[b].append(a)
    heights: dict[str, int] = {}

    def height(el: str) -> int:
        if el not in heights:
            heights[el] = 1 + max((height(c) for c in below[el]), default=-1)
        return heights[el]

    for el in poset.elements:
        height(el)
    return heights
