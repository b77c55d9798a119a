"""Adjacent-swap rewriting over finite posets.

An arrangement of a poset's elements may swap two neighbours whenever the
left one strictly precedes the right one. Every maximal run of such swaps
from a given start ends in the same terminal arrangement after the same
number of swaps, no matter which swaps are chosen; this package runs the
system (:mod:`posetswap.engine`), predicts the terminal arrangement and
swap count analytically (:mod:`posetswap.analysis`), and verifies the
uniqueness claim by exhaustive search (:mod:`posetswap.oracle`).
"""

from .analysis import (
    FenceCertificate,
    OutcomeKind,
    PairOutcome,
    certificate_is_valid,
    classify_pair,
    critical_pairs,
    fence_exists,
    fenced_pairs,
    find_fence,
    predict_swap_count,
    predict_terminal,
)
from .engine import (
    LEFTMOST,
    RIGHTMOST,
    Arrangement,
    Leftmost,
    Random,
    Rightmost,
    Strategy,
    SwapEvent,
    SwapTrace,
    apply_swap,
    check_arrangement,
    is_terminal,
    permissible_swaps,
    run_to_terminal,
)
from .errors import (
    ArrangementMismatchError,
    CycleError,
    DuplicateElementError,
    InternalInconsistencyError,
    InvalidSpecError,
    LimitExceededError,
    NotPermissibleError,
    OrderViolationError,
    PosetSwapError,
    ReflexivePairError,
    SchemaError,
    UnknownElementError,
    UnsupportedSizeError,
)
from .generators import (
    antichain,
    boolean_lattice,
    chain,
    grid,
    named_poset,
    random_arrangement,
    random_poset,
)
from .oracle import (
    DEFAULT_NODE_LIMIT,
    ConfluenceReport,
    check_confluence,
    enumerate_labeled_posets,
    reachable_set,
)
from .poset import ElementId, Poset
from .serialization import (
    export_dot,
    format_arrangement,
    parse_arrangement,
    parse_poset,
    write_poset,
    write_trace,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementMismatchError",
    "Arrangement",
    "ConfluenceReport",
    "CycleError",
    "DEFAULT_NODE_LIMIT",
    "DuplicateElementError",
    "ElementId",
    "FenceCertificate",
    "InternalInconsistencyError",
    "InvalidSpecError",
    "LEFTMOST",
    "Leftmost",
    "LimitExceededError",
    "NotPermissibleError",
    "OrderViolationError",
    "OutcomeKind",
    "PairOutcome",
    "Poset",
    "PosetSwapError",
    "RIGHTMOST",
    "Random",
    "ReflexivePairError",
    "Rightmost",
    "SchemaError",
    "Strategy",
    "SwapEvent",
    "SwapTrace",
    "UnknownElementError",
    "UnsupportedSizeError",
    "antichain",
    "apply_swap",
    "boolean_lattice",
    "certificate_is_valid",
    "chain",
    "check_arrangement",
    "check_confluence",
    "classify_pair",
    "critical_pairs",
    "enumerate_labeled_posets",
    "export_dot",
    "fence_exists",
    "fenced_pairs",
    "find_fence",
    "format_arrangement",
    "grid",
    "is_terminal",
    "named_poset",
    "parse_arrangement",
    "parse_poset",
    "permissible_swaps",
    "predict_swap_count",
    "predict_terminal",
    "random_arrangement",
    "random_poset",
    "reachable_set",
    "run_to_terminal",
    "write_poset",
    "write_trace",
]
