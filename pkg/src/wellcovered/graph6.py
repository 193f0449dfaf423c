"""Short-form graph6 codec (n <= 62), bit-exact.

Layout: one byte ``n + 63``, then the upper triangle read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, most
significant bit first, zero padded, each byte offset by 63.
"""

from __future__ import annotations

import logging

from .errors import CapacityError, Graph6ParseError, InvalidArgument
from .graph import MAX_UNIVERSE, Graph, compact

log = logging.getLogger(__name__)


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def encode_rows(n: int, rows) -> bytes:
    """Encode adjacency rows over labels 0..n-1."""
    if n > MAX_UNIVERSE:
        raise CapacityError(f"graph6 short form holds at most {MAX_UNIVERSE} vertices, got {n}")
    out = bytearray([n + 63])
    acc = nbits = 0
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_encode(G: Graph) -> bytes:
    """Encode a graph whose active vertices are exactly 0..n-1."""
    n = G.n
    if G.active != (1 << n) - 1:
        raise InvalidArgument("graph6_encode needs labels 0..n-1; call compact() first")
    return encode_rows(n, G.adj)


def to_graph6(G: Graph) -> str:
    """Compact, then encode; returns text."""
    return graph6_encode(compact(G)).decode("ascii")


def graph6_decode(line: bytes | str, strict: bool = True) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    line = line.rstrip(b"\r\n")
    if not line:
        raise Graph6ParseError("empty graph6 string", offset=0)
    for i, byte in enumerate(line):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"byte {byte!r} outside 63..126", offset=i)
    n = line[0] - 63
    if n > MAX_UNIVERSE:
        raise Graph6ParseError("long-form graph6 (n > 62) is not supported", offset=0)
    expected = 1 + _body_length(n)
    if len(line) != expected:
        raise Graph6ParseError(f"expected {expected} bytes for n={n}, got {len(line)}", offset=len(line))
    rows = [0] * n
    bit_index = 0
    total = n * (n - 1) // 2
    i, j = 0, 1
    for pos in range(1, expected):
        chunk = line[pos] - 63
        for shift in range(5, -1, -1):
            bit = chunk >> shift & 1
            if bit_index >= total:
                if bit:
                    if strict:
                        raise Graph6ParseError("nonzero padding bits", offset=pos)
                    log.warning("ignoring nonzero padding bits at offset %d", pos)
                bit_index += 1
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit_index += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, (1 << n) - 1, tuple(rows))
