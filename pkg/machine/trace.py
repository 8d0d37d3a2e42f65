"""
Run traces: one entry per visited state of the trajectory.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from graph_core.codec import digest_hex, encode_text
from graph_core.state import GraphState


class TraceMode(str, Enum):
    NONE = "none"
    HASH = "hash"
    FULL = "full"


@dataclass(frozen=True)
class TraceEntry:
    step: int
    digest: str
    state_text: Optional[str] = None


@dataclass
class Trace:
    """Entry k is the state after k applications of T."""

    mode: TraceMode = TraceMode.NONE
    entries: List[TraceEntry] = field(default_factory=list)

    def record(self, step: int, s: GraphState) -> None:
        if self.mode is TraceMode.NONE:
            return
        text = encode_text(s) if self.mode is TraceMode.FULL else None
        self.entries.append(TraceEntry(step=step, digest=digest_hex(s), state_text=text))

    def __len__(self) -> int:
        return len(self.entries)
