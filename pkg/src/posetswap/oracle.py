"""Ground truth by exhaustive search.

Breadth-first exploration enumerates every arrangement reachable by
permissible swaps, recording each one's depth. Depth is structurally
forced: every swap flips exactly one pair of elements out of its starting
relative order and no pair ever flips twice, so all routes to a given
arrangement have the same length. The exploration asserts that fact on
every edge it sees instead of trusting it.

The resulting report pits the explored truth (how many terminals, which
path lengths) against the analytic prediction. ``confluent`` and
``agrees`` hold on every valid instance; a False anywhere means a bug.

Also here: exhaustive enumeration of all labeled posets on up to four
elements, the raw material for sweep tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from . import analysis
from .engine import Arrangement, check_arrangement
from .errors import InternalInconsistencyError, LimitExceededError, UnsupportedSizeError
from .poset import ElementId, Poset

DEFAULT_NODE_LIMIT = 50_000

ENUMERATION_MAX_N = 4


@dataclass(frozen=True)
class ConfluenceReport:
    """Exhaustive-search findings for one instance, against the prediction."""

    reachable_count: int
    terminals: frozenset[Arrangement]
    swap_count_set: frozenset[int]
    predicted_terminal: Arrangement
    predicted_count: int
    confluent: bool
    agrees: bool


def _explore(
    poset: Poset, start: Arrangement, node_limit: int
) -> tuple[dict[Arrangement, int], set[Arrangement]]:
    """BFS over permissible swaps; returns depth per arrangement and terminals.

    Each edge is checked against the pair-flip accounting: stepping from a
    state at depth d must land on a state whose depth is d+1 when the
    swapped pair still sat in its starting order, d-1 when it had already
    flipped. Any mismatch means depth is not well defined and the run
    aborts rather than report nonsense.
    """
    start_pos = {el: i for i, el in enumerate(start)}
    depth: dict[Arrangement, int] = {start: 0}
    terminals: set[Arrangement] = set()
    queue: deque[Arrangement] = deque([start])
    n = len(start)
    while queue:
        cur = queue.popleft()
        d = depth[cur]
        moved = False
        for i in range(n - 1):
            a, b = cur[i], cur[i + 1]
            if not poset.less(a, b):
                continue
            moved = True
            nxt = cur[:i] + (b, a) + cur[i + 2 :]
            delta = 1 if start_pos[a] < start_pos[b] else -1
            known = depth.get(nxt)
            if known is not None:
                if known != d + delta:
                    raise InternalInconsistencyError(
                        "path lengths disagree: depth is not well defined"
                    )
                continue
            if delta != 1:
                raise InternalInconsistencyError(
                    "breadth-first discovery contradicts the pair-flip count"
                )
            if len(depth) >= node_limit:
                raise LimitExceededError(node_limit)
            depth[nxt] = d + 1
            queue.append(nxt)
        if not moved:
            terminals.add(cur)
    return depth, terminals


def reachable_set(
    poset: Poset, arr: Sequence[ElementId], node_limit: int = DEFAULT_NODE_LIMIT
) -> set[Arrangement]:
    """Every arrangement reachable from ``arr``, including ``arr`` itself."""
    start = check_arrangement(poset, arr)
    depth, _ = _explore(poset, start, node_limit)
    return set(depth)


def check_confluence(
    poset: Poset, arr: Sequence[ElementId], node_limit: int = DEFAULT_NODE_LIMIT
) -> ConfluenceReport:
    """Explore exhaustively and compare against the analytic prediction."""
    start = check_arrangement(poset, arr)
    depth, terminals = _explore(poset, start, node_limit)
    predicted_terminal = analysis.predict_terminal(poset, start)
    predicted_count = analysis.predict_swap_count(poset, start)
    swap_counts = frozenset(depth[t] for t in terminals)
    return ConfluenceReport(
        reachable_count=len(depth),
        terminals=frozenset(terminals),
        swap_count_set=swap_counts,
        predicted_terminal=predicted_terminal,
        predicted_count=predicted_count,
        confluent=len(terminals) == 1,
        agrees=(
            terminals == {predicted_terminal} and swap_counts == {predicted_count}
        ),
    )


def enumerate_labeled_posets(n: int) -> Iterator[Poset]:
    """Every strict partial order on elements e1..en, each exactly once.

    Brute force: each unordered element pair is unrelated, forward, or
    backward; candidates that survive the transitivity filter are orders.
    Counts grow fast, so this is capped at n = 4 (219 posets).
    """
    if not 0 <= n <= ENUMERATION_MAX_N:
        raise UnsupportedSizeError(n, ENUMERATION_MAX_N)
    elements = tuple(f"e{i}" for i in range(1, n + 1))
    slots = list(combinations(range(n), 2))
    for choice in product((0, 1, 2), repeat=len(slots)):
        less = [[False] * n for _ in range(n)]
        for (i, j), state in zip(slots, choice):
            if state == 1:
                less[i][j] = True
            elif state == 2:
                less[j][i] = True
        if _is_transitive(less):
            yield Poset(
                elements,
                [
                    (elements[i], elements[j])
                    for i in range(n)
                    for j in range(n)
                    if less[i][j]
                ],
            )


def _is_transitive(less: list[list[bool]]) -> bool:
    n = len(less)
    for i in range(n):
        for j in range(n):
            if less[i][j]:
                for k in range(n):
                    if less[j][k] and not less[i][k]:
                        return False
    return True
