"""Exception types shared across the package.

Every error raised on a documented failure path derives from
:class:`PosetSwapError`, so callers (notably the CLI) can map failures to
exit codes without catching bare exceptions.
"""

from __future__ import annotations


class PosetSwapError(Exception):
    """Base class for all errors raised by posetswap."""


class DuplicateElementError(PosetSwapError):
    """An element label occurs more than once in a poset definition."""

    def __init__(self, element: str):
        super().__init__(f"duplicate element {element!r}")
        self.element = element


class UnknownElementError(PosetSwapError):
    """A label does not name an element of the poset at hand."""

    def __init__(self, element: str):
        super().__init__(f"unknown element {element!r}")
        self.element = element


class ReflexivePairError(PosetSwapError):
    """A relation pair relates an element to itself (the order is strict)."""

    def __init__(self, element: str):
        super().__init__(f"reflexive relation on {element!r}; the order is strict")
        self.element = element


class CycleError(PosetSwapError):
    """The input relation contains a cycle, so no strict order exists.

    ``witness`` is an explicit path ``x1 -> x2 -> ... -> x1`` through input
    relation pairs, with the starting element repeated at the end.
    """

    def __init__(self, witness: tuple[str, ...]):
        super().__init__("relation cycle: " + " -> ".join(witness))
        self.witness = witness


class ArrangementMismatchError(PosetSwapError):
    """A sequence is not a permutation of the poset's element set."""


class NotPermissibleError(PosetSwapError):
    """A swap was requested at a position where the left element does not
    precede the right one in the poset."""

    def __init__(self, index: int, left: str, right: str):
        super().__init__(
            f"swap at index {index} is not permissible: {left!r} does not precede {right!r}"
        )
        self.index = index


class OrderViolationError(PosetSwapError):
    """A pair query requires x to precede y in the arrangement and it does not."""


class InternalInconsistencyError(PosetSwapError):
    """A structural fact the theory guarantees failed to hold at runtime.

    Raised instead of silently producing wrong output; seeing this means a
    bug in this package, not bad user input.
    """


class LimitExceededError(PosetSwapError):
    """Exhaustive exploration hit its node cap before finishing."""

    def __init__(self, limit: int):
        super().__init__(f"exploration exceeded the node limit of {limit}")
        self.limit = limit


class UnsupportedSizeError(PosetSwapError):
    """Requested an exhaustive enumeration beyond the supported size."""

    def __init__(self, n: int, max_n: int):
        super().__init__(f"enumeration supports at most {max_n} elements, got {n}")
        self.n = n


class InvalidSpecError(PosetSwapError):
    """A generator was asked for parameters outside its documented range."""


class SchemaError(PosetSwapError):
    """Structured input text does not match the expected document schema."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location
