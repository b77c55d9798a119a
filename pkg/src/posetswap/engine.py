"""The adjacent-swap rewriting system over a poset.

State is an arrangement: a permutation of the poset's elements, held as a
plain tuple of labels. A swap at position ``i`` exchanges neighbours and is
permissible exactly when the left element strictly precedes the right one.
Runs apply permissible swaps under a strategy until none remain; the
terminal arrangement reached is unique regardless of strategy, and
:mod:`posetswap.oracle` checks that rather than assuming it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ArrangementMismatchError,
    InternalInconsistencyError,
    NotPermissibleError,
)
from .poset import ElementId, Poset

Arrangement = tuple[ElementId, ...]


@dataclass(frozen=True)
class SwapEvent:
    """One applied swap: ``left`` and ``right`` are the elements as they
    stood immediately before the exchange at position ``index``."""

    step: int
    index: int
    left: ElementId
    right: ElementId


@dataclass(frozen=True)
class SwapTrace:
    """A full run log from ``initial`` to the terminal ``final``."""

    initial: Arrangement
    events: tuple[SwapEvent, ...]
    final: Arrangement

    def __len__(self) -> int:
        return len(self.events)

    def replay(self) -> list[Arrangement]:
        """Arrangements visited in order, from ``initial`` through ``final``."""
        states = [self.initial]
        cur = self.initial
        for ev in self.events:
            if cur[ev.index] != ev.left or cur[ev.index + 1] != ev.right:
                raise InternalInconsistencyError(
                    f"trace event {ev.step} does not match the replayed state"
                )
            cur = _swapped(cur, ev.index)
            states.append(cur)
        if cur != self.final:
            raise InternalInconsistencyError("trace replay does not reach its final arrangement")
        return states


@dataclass(frozen=True)
class Leftmost:
    """Always swap at the smallest permissible index."""


@dataclass(frozen=True)
class Rightmost:
    """Always swap at the largest permissible index."""


@dataclass(frozen=True)
class Random:
    """Swap at an index drawn uniformly from the permissible list.

    Draws come from a Mersenne Twister (``random.Random(seed)``) via
    ``randrange`` over the current permissible-swap list, so a given seed
    reproduces the whole run.
    """

    seed: int

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


Strategy = Leftmost | Rightmost | Random

LEFTMOST = Leftmost()
RIGHTMOST = Rightmost()


def check_arrangement(poset: Poset, arr: Sequence[ElementId]) -> Arrangement:
    """Validate that ``arr`` lists every poset element exactly once."""
    out = tuple(arr)
    if len(out) != len(poset.elements) or set(out) != set(poset.elements):
        extra = sorted(set(out) - set(poset.elements))
        missing = sorted(set(poset.elements) - set(out))
        dupes = sorted({el for el in out if out.count(el) > 1})
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"not in poset {extra}")
        if dupes:
            detail.append(f"repeated {dupes}")
        raise ArrangementMismatchError(
            "not a permutation of the poset's elements"
            + (": " + ", ".join(detail) if detail else "")
        )
    return out


def permissible_swaps(poset: Poset, arr: Sequence[ElementId]) -> list[int]:
    """Ascending positions ``i`` where ``arr[i]`` precedes ``arr[i+1]``."""
    cur = check_arrangement(poset, arr)
    return [i for i in range(len(cur) - 1) if poset.less(cur[i], cur[i + 1])]


def apply_swap(poset: Poset, arr: Sequence[ElementId], index: int) -> Arrangement:
    """Exchange positions ``index`` and ``index + 1``; the swap must be permissible."""
    cur = check_arrangement(poset, arr)
    if not 0 <= index < len(cur) - 1:
        raise IndexError(f"swap index {index} out of range for {len(cur)} elements")
    if not poset.less(cur[index], cur[index + 1]):
        raise NotPermissibleError(index, cur[index], cur[index + 1])
    return _swapped(cur, index)


def is_terminal(poset: Poset, arr: Sequence[ElementId]) -> bool:
    """True iff no swap is permissible."""
    cur = check_arrangement(poset, arr)
    return not any(poset.less(cur[i], cur[i + 1]) for i in range(len(cur) - 1))


def run_to_terminal(
    poset: Poset,
    arr: Sequence[ElementId],
    strategy: Strategy = LEFTMOST,
) -> tuple[Arrangement, SwapTrace]:
    """Apply permissible swaps under ``strategy`` until none remain.

    Returns the terminal arrangement plus the full trace. Which strategy
    runs only affects the order of events, never the terminal arrangement
    or the event count.
    """
    initial = check_arrangement(poset, arr)
    rng = random.Random(strategy.seed) if isinstance(strategy, Random) else None

    n = len(initial)
    max_events = n * (n - 1) // 2
    events: list[SwapEvent] = []
    cur = initial
    while True:
        choices = [i for i in range(n - 1) if poset.less(cur[i], cur[i + 1])]
        if not choices:
            break
        if rng is not None:
            i = choices[rng.randrange(len(choices))]
        elif isinstance(strategy, Rightmost):
            i = choices[-1]
        else:
            i = choices[0]
        if len(events) >= max_events:
            raise InternalInconsistencyError(
                f"run exceeded the hard bound of {max_events} swaps"
            )
        events.append(SwapEvent(len(events), i, cur[i], cur[i + 1]))
        cur = _swapped(cur, i)

    return cur, SwapTrace(initial=initial, events=tuple(events), final=cur)


def _swapped(arr: Arrangement, i: int) -> Arrangement:
    return arr[:i] + (arr[i + 1], arr[i]) + arr[i + 2 :]
