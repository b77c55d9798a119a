"""Instance generators: named poset families and seeded random ones.

Element naming is fixed so documents are reproducible byte for byte:
chains and antichains use ``e1..en``; the subset order on a k-set uses
bitstrings (``"00"``, ``"01"``, ...) where bit i set means member i is in;
grids use ``"i_j"`` labels (underscore, since the CLI's arrangement syntax
is comma-separated).
"""

from __future__ import annotations

import random

from .engine import Arrangement
from .errors import InvalidSpecError
from .poset import Poset

BOOLEAN_MAX_K = 5
GRID_MAX_CELLS = 64


def chain(n: int) -> Poset:
    """Total order e1 < e2 < ... < en."""
    _require(n >= 1, f"chain size must be positive, got {n}")
    labels = [f"e{i}" for i in range(1, n + 1)]
    return Poset(labels, list(zip(labels, labels[1:])))


def antichain(n: int) -> Poset:
    """n pairwise-incomparable elements e1..en."""
    _require(n >= 1, f"antichain size must be positive, got {n}")
    return Poset([f"e{i}" for i in range(1, n + 1)])


def boolean_lattice(k: int) -> Poset:
    """All subsets of a k-set as bitstrings, ordered by strict inclusion."""
    _require(1 <= k <= BOOLEAN_MAX_K, f"boolean size must be in 1..{BOOLEAN_MAX_K}, got {k}")
    labels = [format(i, f"0{k}b") for i in range(2**k)]
    relations = [
        (labels[i], labels[j])
        for i in range(2**k)
        for j in range(2**k)
        if i != j and i & j == i
    ]
    return Poset(labels, relations)


def grid(a: int, b: int) -> Poset:
    """The a-by-b grid: (i, j) pairs under componentwise strict dominance."""
    _require(a >= 1 and b >= 1, f"grid sides must be positive, got {a}x{b}")
    _require(a * b <= GRID_MAX_CELLS, f"grid must have at most {GRID_MAX_CELLS} cells, got {a * b}")
    cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    label = {c: f"{c[0]}_{c[1]}" for c in cells}
    relations = [
        (label[p], label[q])
        for p in cells
        for q in cells
        if p != q and p[0] <= q[0] and p[1] <= q[1]
    ]
    return Poset([label[c] for c in cells], relations)


NAMED_KINDS = {
    "chain": (chain, ("n",)),
    "antichain": (antichain, ("n",)),
    "boolean": (boolean_lattice, ("k",)),
    "grid": (grid, ("a", "b")),
}


def named_poset(kind: str, **params: int) -> Poset:
    """Dispatch on a family name; parameter names follow the family."""
    if kind not in NAMED_KINDS:
        raise InvalidSpecError(f"unknown poset kind {kind!r}")
    fn, names = NAMED_KINDS[kind]
    if set(params) != set(names):
        raise InvalidSpecError(f"kind {kind!r} takes parameters {names}, got {sorted(params)}")
    return fn(*(params[name] for name in names))


def random_poset(n: int, edge_prob: float, seed: int) -> Poset:
    """A seeded random order on e1..en.

    Draws a random linear ranking of the labels, keeps each forward pair
    of the ranking with probability ``edge_prob``, and closes
    transitively. edge_prob 0 gives an antichain, 1 a chain. The same
    (n, edge_prob, seed) always rebuilds the same poset.
    """
    _require(n >= 0, f"size must be nonnegative, got {n}")
    _require(0.0 <= edge_prob <= 1.0, f"edge probability must be in [0, 1], got {edge_prob}")
    _require(0 <= seed < 2**64, f"seed must be a 64-bit unsigned integer, got {seed}")
    labels = [f"e{i}" for i in range(1, n + 1)]
    rng = random.Random(seed)
    ranking = labels[:]
    rng.shuffle(ranking)
    relations = [
        (ranking[i], ranking[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return Poset(labels, relations)


def random_arrangement(poset: Poset, seed: int) -> Arrangement:
    """A seeded uniform shuffle of the poset's elements."""
    _require(0 <= seed < 2**64, f"seed must be a 64-bit unsigned integer, got {seed}")
    order = list(poset.elements)
    random.Random(seed).shuffle(order)
    return tuple(order)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidSpecError(message)
