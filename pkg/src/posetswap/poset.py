"""Finite strict partial orders with precomputed transitive closure.

A :class:`Poset` is built once from element labels and generating relation
pairs, validates everything up front (duplicates, unknown endpoints,
reflexive pairs, cycles), and then answers ``less`` / ``incomparable``
queries in constant time. Instances are immutable and safe to share.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import (
    CycleError,
    DuplicateElementError,
    ReflexivePairError,
    UnknownElementError,
)

ElementId = str


class Poset:
    """A finite strict partial order over text-labelled elements.

    ``elements`` keeps the construction order; relation pairs ``(a, b)``
    mean ``a`` strictly precedes ``b``, and any generating set (covers or
    otherwise) may be supplied: the transitive closure is computed here.
    Element identity is exact text match, no normalization.
    """

    __slots__ = ("elements", "_index", "_above")

    def __init__(
        self,
        elements: Iterable[ElementId],
        relations: Iterable[Sequence[ElementId]] = (),
    ):
        elems = tuple(elements)
        index: dict[str, int] = {}
        for el in elems:
            if not isinstance(el, str) or not el:
                raise ValueError(f"element labels must be nonempty text, got {el!r}")
            if el in index:
                raise DuplicateElementError(el)
            index[el] = len(index)

        n = len(elems)
        direct: list[set[int]] = [set() for _ in range(n)]
        for pair in relations:
            a, b = pair
            if a not in index:
                raise UnknownElementError(a)
            if b not in index:
                raise UnknownElementError(b)
            if a == b:
                raise ReflexivePairError(a)
            direct[index[a]].add(index[b])

        above = [set(s) for s in direct]
        for k in range(n):
            above_k = above[k]
            for i in range(n):
                if k in above[i]:
                    above[i] |= above_k
        for i in range(n):
            if i in above[i]:
                raise CycleError(_cycle_witness(elems, direct, i))

        self.elements = elems
        self._index = index
        self._above = tuple(frozenset(s) for s in above)

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self._index

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._above == other._above

    def __hash__(self) -> int:
        return hash((self.elements, self._above))

    def __repr__(self) -> str:
        m = sum(len(s) for s in self._above)
        return f"Poset({len(self.elements)} elements, {m} ordered pairs)"

    def _position(self, element: ElementId) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElementError(element) from None

    def less(self, x: ElementId, y: ElementId) -> bool:
        """True iff ``x`` strictly precedes ``y`` in the closed relation."""
        return self._position(y) in self._above[self._position(x)]

    def incomparable(self, x: ElementId, y: ElementId) -> bool:
        """True iff ``x`` and ``y`` are distinct and neither precedes the other.

        Self-pairs are comparable by convention: ``incomparable(x, x)`` is
        False.
        """
        i = self._position(x)
        j = self._position(y)
        return i != j and j not in self._above[i] and i not in self._above[j]

    def relation_pairs(self) -> list[tuple[ElementId, ElementId]]:
        """All closed pairs ``(x, y)`` with ``x`` preceding ``y``, in element order."""
        out = []
        for i, x in enumerate(self.elements):
            for j in sorted(self._above[i]):
                out.append((x, self.elements[j]))
        return out

    def cover_relations(self) -> list[tuple[ElementId, ElementId]]:
        """The transitive reduction: pairs ``x < y`` with nothing in between.

        These are the edges of the order diagram; their closure equals the
        full relation. Emitted in element-list order.
        """
        out = []
        for i, x in enumerate(self.elements):
            above_i = self._above[i]
            for j in range(len(self.elements)):
                if j not in above_i:
                    continue
                if any(j in self._above[k] for k in above_i):
                    continue
                out.append((x, self.elements[j]))
        return out


def _cycle_witness(
    elems: tuple[str, ...], direct: list[set[int]], start: int
) -> tuple[str, ...]:
    """Shortest path start -> ... -> start through the input relation."""
    parent: dict[int, int] = {}
    queue = deque(sorted(direct[start]))
    for j in queue:
        parent[j] = start
    while queue:
        cur = queue.popleft()
        if cur == start:
            break
        for j in sorted(direct[cur]):
            if j not in parent:
                parent[j] = cur
                queue.append(j)
    path = [start]
    node = parent[start]
    while node != start:
        path.append(node)
        node = parent[node]
    path.append(start)
    path.reverse()
    return tuple(elems[i] for i in path)
