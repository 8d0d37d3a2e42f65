"""
Canonical ".pg" text encoding of graph states and the FNV-1a digest over it.

    nodes N
    i s0 s1        (one row per node, ascending i)

Single spaces, LF line ends, ASCII decimal. Decoding also accepts '#' comment
lines anywhere and blank lines before the header or after the last row.
"""

import logging
import re
from typing import List, Optional, Tuple, Union

from graph_core.errors import EmptyGraphText, ParseError, RowOutOfRange
from graph_core.state import GraphState, make_state

logger = logging.getLogger(__name__)

FNV64_OFFSET = 0xCBF29CE484222325
FNV64_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1

_NUMBER = r"(0|[1-9][0-9]*)"
_HEADER = re.compile(rf"nodes {_NUMBER}")
_ROW = re.compile(rf"{_NUMBER} {_NUMBER} {_NUMBER}")


def encode_state(s: GraphState) -> bytes:
    lines = [f"nodes {s.n}"]
    lines.extend(f"{i} {s.succ0[i]} {s.succ1[i]}" for i in range(s.n))
    return ("\n".join(lines) + "\n").encode("ascii")


def encode_text(s: GraphState) -> str:
    """encode_state as str."""
    return encode_state(s).decode("ascii")


def _content_lines(text: str, source: Optional[str]) -> List[Tuple[int, str]]:
    numbered = list(enumerate(text.split("\n"), start=1))
    while numbered and (not numbered[-1][1].strip() or numbered[-1][1].startswith("#")):
        numbered.pop()
    content = []
    for lineno, line in numbered:
        if line.startswith("#"):
            continue
        if not line.strip():
            if not content:
                continue
            raise ParseError("blank line inside graph body", line=lineno, source=source)
        content.append((lineno, line))
    return content


def decode_state(data: Union[bytes, str], source: Optional[str] = None) -> GraphState:
    """Parse canonical graph text; every rejection is a ParseError, located where a line applies."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as e:
            raise ParseError(f"graph text is not ASCII: {e}", source=source) from e
    else:
        text = data

    content = _content_lines(text, source)
    if not content:
        raise ParseError("missing 'nodes N' header", line=1, source=source)

    header_line, header = content[0]
    match = _HEADER.fullmatch(header)
    if match is None:
        raise ParseError(f"expected 'nodes N', got {header!r}", line=header_line, source=source)
    n = int(match.group(1))
    if n == 0:
        raise EmptyGraphText("a state needs at least one node, got n=0", line=header_line, source=source)

    rows = content[1:]
    succ0: List[int] = []
    succ1: List[int] = []
    for expected, (lineno, line) in enumerate(rows):
        if expected >= n:
            raise ParseError(f"unexpected row beyond {n} nodes: {line!r}", line=lineno, source=source)
        row = _ROW.fullmatch(line)
        if row is None:
            raise ParseError(f"expected 'i s0 s1', got {line!r}", line=lineno, source=source)
        index, s0, s1 = (int(g) for g in row.groups())
        if index != expected:
            raise ParseError(f"expected row for node {expected}, got node {index}", line=lineno, source=source)
        for label, target in ((0, s0), (1, s1)):
            if target >= n:
                raise RowOutOfRange(
                    f"succ{label}[{index}] = {target} is outside 0..{n - 1}", line=lineno, source=source
                )
        succ0.append(s0)
        succ1.append(s1)

    if len(rows) < n:
        last_line = rows[-1][0] if rows else header_line
        raise ParseError(f"missing row for node {len(rows)}", line=last_line + 1, source=source)

    state = make_state(n, succ0, succ1)
    logger.debug("decoded state with %d nodes from %s", n, source or "<text>")
    return state


def fnv1a_64(data: bytes) -> int:
    """64-bit FNV-1a over raw bytes."""
    digest = FNV64_OFFSET
    for byte in data:
        digest ^= byte
        digest = (digest * FNV64_PRIME) & _MASK64
    return digest


def state_hash(s: GraphState) -> int:
    return fnv1a_64(encode_state(s))


def digest_hex(s: GraphState) -> str:
    """state_hash as 16 lowercase hex digits."""
    return f"{state_hash(s):016x}"
