"""
graph6 short form (n <= 62).

The order is one byte n + 63; the upper triangle follows column by column,
(0,1), (0,2), (1,2), (0,3), ..., packed into 6-bit groups, each written as
the group value + 63. Padding bits of the last group are zero.
"""

from typing import Iterable, Iterator, List

from ..exceptions import FormatError
from ..graphs.core import Graph

HEADER = ">>graph6<<"
MAX_SHORT_ORDER = 62


def strip_header(line: str) -> str:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):].strip()
    return text


def parse_graph6(line: str) -> Graph:
    """
    Decode one graph6 line.

    Raises:
        FormatError: Empty input, characters outside [63, 126], long-form orders,
            wrong length or non-zero padding bits
    """
    text = strip_header(line)
    if not text:
        raise FormatError("Empty graph6 line")
    for position, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise FormatError(f"Character {char!r} at position {position} outside graph6 range")
    if text[0] == "~":
        raise FormatError(f"Long-form graph6 (n > {MAX_SHORT_ORDER}) is not supported")

    n = ord(text[0]) - 63
    num_bits = n * (n - 1) // 2
    expected = 1 + (num_bits + 5) // 6
    if len(text) != expected:
        raise FormatError(f"graph6 for n = {n} needs {expected} characters, got {len(text)}")

    bits = 0
    for char in text[1:]:
        bits = bits << 6 | (ord(char) - 63)
    padding = (expected - 1) * 6 - num_bits
    if bits & ((1 << padding) - 1):
        raise FormatError("Non-zero padding bits in graph6 line")
    bits >>= padding

    rows = [0] * n
    position = num_bits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph(n, tuple(rows))


def emit_graph6(G: Graph) -> str:
    """
    Encode G (n <= 62) as a graph6 line without header or newline.

    Raises:
        FormatError: If G.n > 62
    """
    n = G.n
    if n > MAX_SHORT_ORDER:
        raise FormatError(f"Short-form graph6 supports n <= {MAX_SHORT_ORDER}, got n = {n}")
    chars: List[str] = [chr(n + 63)]
    group = 0
    filled = 0
    for j in range(1, n):
        row_j = G.rows[j]
        for i in range(j):
            group = group << 1 | (row_j >> i & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(group + 63))
                group = filled = 0
    if filled:
        chars.append(chr((group << (6 - filled)) + 63))
    return "".join(chars)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode every non-blank line; errors carry the 1-based line number."""
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except FormatError as e:
            raise FormatError(f"line {number}: {e}") from e
