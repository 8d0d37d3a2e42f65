"""
Graph core: states of the two-successor machine, paths and the canonical codec.
"""

from .errors import (
    AmbiguousCell,
    BoundsExceeded,
    EmptyDomain,
    EmptyGraphText,
    EmptyTarget,
    GraphError,
    LengthMismatch,
    OriginOutOfRange,
    OutOfRange,
    ParseError,
    RowOutOfRange,
)
from .state import (
    LABELS,
    GraphState,
    Label,
    NodeId,
    Path,
    make_state,
    parse_path,
    resolve,
    self_loop_state,
    written_path,
)
from .codec import decode_state, digest_hex, encode_state, encode_text, fnv1a_64, state_hash

__all__ = [
    "AmbiguousCell",
    "BoundsExceeded",
    "EmptyDomain",
    "EmptyGraphText",
    "EmptyTarget",
    "GraphError",
    "LengthMismatch",
    "OriginOutOfRange",
    "OutOfRange",
    "ParseError",
    "RowOutOfRange",
    "LABELS",
    "GraphState",
    "Label",
    "NodeId",
    "Path",
    "make_state",
    "parse_path",
    "resolve",
    "self_loop_state",
    "written_path",
    "decode_state",
    "digest_hex",
    "encode_state",
    "encode_text",
    "fnv1a_64",
    "state_hash",
]
