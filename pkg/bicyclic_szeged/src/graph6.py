# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Bit-exact graph6 codec for graphs with at most 62 vertices."""

from .graph import Graph, GraphError

GRAPH6_MAX_VERTICES = 62
_BIAS = 63
_MAX_BYTE = 126


class Graph6DecodeError(GraphError):
    """The text is not a valid graph6 encoding.

    Attributes:
        offset: position of the offending byte.
    """

    def __init__(self, message: str, offset: int):
        """Initialize the error.

        Args:
            message: what is wrong.
            offset: position of the offending byte.
        """
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnsupportedSizeError(GraphError):
    """The graph needs an extended graph6 header."""


def _body_length(n: int) -> int:
    """Get the number of body bytes for n vertices.

    Args:
        n: vertex count.

    Returns:
        ceil(n(n-1)/2 / 6).
    """
    return (n * (n - 1) // 2 + 5) // 6


def to_graph6(g: Graph) -> str:
    """Encode a graph in graph6.

    The upper triangle is read column by column (x01, x02, x12, x03, ...) and packed
    6 bits per byte, most significant first, zero-filling the last group.

    Args:
        g: graph with at most 62 vertices.

    Returns:
        graph6 text without a trailing newline.

    Raises:
        UnsupportedSizeError: if g has more than 62 vertices.
    """
    if g.n > GRAPH6_MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short header supports n <= {GRAPH6_MAX_VERTICES}")
    out = [chr(g.n + _BIAS)]
    group = width = 0
    for j in range(1, g.n):
        column = g.adjacency[j]
        for i in range(j):
            group = group << 1 | (column >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(group + _BIAS))
                group = width = 0
    if width:
        out.append(chr((group << (6 - width)) + _BIAS))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string.

    Args:
        text: graph6 text, surrounding whitespace ignored.

    Returns:
        the encoded graph.

    Raises:
        Graph6DecodeError: on a malformed header, wrong length, out-of-range byte or
            nonzero padding bits.
    """
    data = text.strip()
    if not data:
        raise Graph6DecodeError("empty graph6 string", 0)
    n = ord(data[0]) - _BIAS
    if not 0 <= n <= GRAPH6_MAX_VERTICES:
        raise Graph6DecodeError(f"header byte {data[0]!r} outside the short-header range", 0)
    expected = 1 + _body_length(n)
    if len(data) > expected:
        raise Graph6DecodeError("trailing bytes after graph body", expected)
    if len(data) < expected:
        raise Graph6DecodeError(f"graph body truncated, expected {expected} bytes", len(data))
    bits = []
    for offset, char in enumerate(data[1:], start=1):
        value = ord(char) - _BIAS
        if not 0 <= value <= _MAX_BYTE - _BIAS:
            raise Graph6DecodeError(f"byte {char!r} outside 63..126", offset)
        bits.extend(value >> shift & 1 for shift in range(5, -1, -1))
    pairs = n * (n - 1) // 2
    if any(bits[pairs:]):
        raise Graph6DecodeError("nonzero padding bits", len(data) - 1)
    adjacency = [0] * n
    position = 0
    for j in range(1, n):
        for i in range(j):
            if bits[position]:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
            position += 1
    return Graph(n=n, adjacency=tuple(adjacency))
