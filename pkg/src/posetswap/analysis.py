"""Predict the outcome of a run without simulating it.

For an ordered pair (x before y in the arrangement) there are exactly three
cases. If y precedes x in the poset, their order is already the settled
one. Otherwise a *fence* may connect them: a subsequence
``x = z1, ..., zk = y`` (k >= 2) appearing in that order in the
arrangement with every consecutive link incomparable; a fence pins the
pair's relative order for the whole run, since no swap can ever reorder an
incomparable adjacent link. A pair with x preceding y, ``x < y`` in the
poset, and no fence is *critical*: it is exactly the pairs that flip by
termination, so the terminal arrangement and the total swap count both
fall out of classifying all pairs.

Fence search runs on a position graph: vertices are arrangement positions,
with an edge ``i -> j`` whenever ``i < j`` and the occupants are
incomparable. A fence from x to y is a path of at least one edge, and a
breadth-first search that expands successors in ascending position order
yields a deterministic shortest certificate.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .engine import Arrangement, check_arrangement
from .errors import InternalInconsistencyError, OrderViolationError
from .poset import ElementId, Poset


@dataclass(frozen=True)
class FenceCertificate:
    """An explicit witness that a pair keeps its relative order.

    ``chain`` lists elements in arrangement order, consecutive ones
    pairwise incomparable, from x to y inclusive (length >= 2).
    """

    chain: tuple[ElementId, ...]


class OutcomeKind(enum.Enum):
    PRESERVED_BY_ORDER = "preserved-by-order"
    PRESERVED_BY_FENCE = "preserved-by-fence"
    REVERSED = "reversed"


@dataclass(frozen=True)
class PairOutcome:
    """Verdict for an ordered pair, with a certificate when a fence decides it."""

    kind: OutcomeKind
    certificate: FenceCertificate | None = None

    @property
    def preserved(self) -> bool:
        return self.kind is not OutcomeKind.REVERSED


def certificate_is_valid(
    poset: Poset, arr: Sequence[ElementId], certificate: FenceCertificate
) -> bool:
    """Check a certificate against its reference arrangement."""
    chain = certificate.chain
    if len(chain) < 2:
        return False
    pos = {el: i for i, el in enumerate(arr)}
    if any(el not in pos for el in chain):
        return False
    positions = [pos[el] for el in chain]
    if any(a >= b for a, b in zip(positions, positions[1:])):
        return False
    return all(poset.incomparable(a, b) for a, b in zip(chain, chain[1:]))


def _pair_positions(
    poset: Poset, arr: Sequence[ElementId], x: ElementId, y: ElementId
) -> tuple[Arrangement, int, int]:
    cur = check_arrangement(poset, arr)
    pos = {el: i for i, el in enumerate(cur)}
    poset._position(x)
    poset._position(y)
    px, py = pos[x], pos[y]
    if px >= py:
        raise OrderViolationError(f"{x!r} does not precede {y!r} in the arrangement")
    return cur, px, py


def _successors(poset: Poset, arr: Arrangement) -> list[list[int]]:
    """Ascending adjacency of the position graph (edges only point forward)."""
    n = len(arr)
    return [
        [j for j in range(i + 1, n) if poset.incomparable(arr[i], arr[j])]
        for i in range(n)
    ]


def _reachable_positions(succ: list[list[int]]) -> list[set[int]]:
    """reach[i] = positions reachable from i through >= 1 edge."""
    n = len(succ)
    reach: list[set[int]] = [set() for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for j in succ[i]:
            reach[i].add(j)
            reach[i] |= reach[j]
    return reach


def fence_exists(
    poset: Poset, arr: Sequence[ElementId], x: ElementId, y: ElementId
) -> bool:
    """True iff some fence runs from x to y in the arrangement.

    x must precede y. Direct incomparability is the length-2 fence.
    """
    cur, px, py = _pair_positions(poset, arr, x, y)
    reach = _reachable_positions(_successors(poset, cur))
    return py in reach[px]


def find_fence(
    poset: Poset, arr: Sequence[ElementId], x: ElementId, y: ElementId
) -> FenceCertificate | None:
    """A shortest fence from x to y, or None.

    Breadth-first over the position graph, expanding successors in
    ascending position order; the first path found wins, so certificates
    are deterministic.
    """
    cur, px, py = _pair_positions(poset, arr, x, y)
    succ = _successors(poset, cur)
    parent: dict[int, int] = {}
    queue = deque([px])
    found = False
    while queue and not found:
        i = queue.popleft()
        for j in succ[i]:
            if j in parent:
                continue
            parent[j] = i
            if j == py:
                found = True
                break
            queue.append(j)
    if not found:
        return None
    path = [py]
    while path[-1] != px:
        path.append(parent[path[-1]])
    path.reverse()
    return FenceCertificate(chain=tuple(cur[i] for i in path))


def classify_pair(
    poset: Poset, arr: Sequence[ElementId], x: ElementId, y: ElementId
) -> PairOutcome:
    """Decide whether the pair keeps or flips its relative order by termination.

    Checked in order: settled order (y < x), then fence, else the pair is
    critical and flips.
    """
    _pair_positions(poset, arr, x, y)
    if poset.less(y, x):
        return PairOutcome(OutcomeKind.PRESERVED_BY_ORDER)
    certificate = find_fence(poset, arr, x, y)
    if certificate is not None:
        return PairOutcome(OutcomeKind.PRESERVED_BY_FENCE, certificate)
    return PairOutcome(OutcomeKind.REVERSED)


def fenced_pairs(
    poset: Poset, arr: Sequence[ElementId]
) -> set[tuple[ElementId, ElementId]]:
    """All ordered pairs (x, y), x before y, connected by some fence.

    One reachability pass over the position graph; cheaper than asking
    :func:`fence_exists` pair by pair when the whole map is wanted.
    """
    cur = check_arrangement(poset, arr)
    reach = _reachable_positions(_successors(poset, cur))
    return {(cur[i], cur[j]) for i in range(len(cur)) for j in reach[i]}


def critical_pairs(
    poset: Poset, arr: Sequence[ElementId]
) -> set[tuple[ElementId, ElementId]]:
    """All pairs (x, y) with x < y, x before y, and no fence between them."""
    cur = check_arrangement(poset, arr)
    reach = _reachable_positions(_successors(poset, cur))
    n = len(cur)
    return {
        (cur[i], cur[j])
        for i in range(n)
        for j in range(i + 1, n)
        if poset.less(cur[i], cur[j]) and j not in reach[i]
    }


def predict_terminal(poset: Poset, arr: Sequence[ElementId]) -> Arrangement:
    """The unique terminal arrangement, computed without simulation.

    Classifies every pair, ranks each element by how many others must end
    up before it, and checks the ranks form a permutation. A generic
    comparator sort would silently assume the pairwise verdicts are
    transitive; ranking makes any violation crash loudly instead.
    """
    cur = check_arrangement(poset, arr)
    reach = _reachable_positions(_successors(poset, cur))
    n = len(cur)
    predecessors = {el: 0 for el in cur}
    for i in range(n):
        for j in range(i + 1, n):
            preserved = poset.less(cur[j], cur[i]) or j in reach[i]
            if preserved:
                predecessors[cur[j]] += 1
            else:
                predecessors[cur[i]] += 1

    result: list[ElementId | None] = [None] * n
    for el, rank in predecessors.items():
        if not 0 <= rank < n or result[rank] is not None:
            raise InternalInconsistencyError(
                "pairwise verdicts do not rank the elements into a permutation"
            )
        result[rank] = el
    return tuple(result)  # type: ignore[arg-type]


def predict_swap_count(poset: Poset, arr: Sequence[ElementId]) -> int:
    """Exact number of swaps any run from ``arr`` performs.

    Each swap flips exactly one pair, no pair flips twice, and the pairs
    that flip are exactly the critical ones.
    """
    return len(critical_pairs(poset, arr))
