"""
graph6 encoder and decoder
Bit-exact with nauty's format: header, upper triangle column-major, 6-bit groups offset by 63
"""

import logging
from pathlib import Path
from typing import Iterable, List, Union

from app.core.errors import (
    IoError,
    MalformedHeaderError,
    NonCanonicalPaddingError,
    TruncatedPayloadError,
)
from app.graphs.graph import Graph

logger = logging.getLogger(__name__)

SMALL_LIMIT = 62
LARGE_LIMIT = 258047


def _encode_size(n: int) -> bytes:
    if n <= SMALL_LIMIT:
        return bytes([n + 63])
    if n <= LARGE_LIMIT:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 supports at most {LARGE_LIMIT} vertices")


def graph6_encode(G: Graph) -> bytes:
    """Encode one graph as a newline-terminated graph6 line"""
    bits = []
    adj = G.adj
    for j in range(1, G.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))

    out = bytearray(_encode_size(G.n))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(value + 63)
    out.append(ord("\n"))
    return bytes(out)


def _decode_size(data: bytes):
    """Return (n, header length)"""
    if not data:
        raise MalformedHeaderError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise MalformedHeaderError("8-byte graph6 headers are not supported")
    if len(data) < 4:
        raise MalformedHeaderError("truncated long graph6 header")
    n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
    if n <= SMALL_LIMIT:
        raise MalformedHeaderError(f"long header used for n={n}")
    return n, 4


def graph6_decode(data: Union[bytes, str]) -> Graph:
    """Decode one graph6 line (trailing newline optional)"""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if any(c < 63 or c > 126 for c in data):
        raise MalformedHeaderError("byte outside the printable graph6 range 63..126")

    n, offset = _decode_size(data)
    payload = data[offset:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(payload) != expected:
        raise TruncatedPayloadError(f"expected {expected} payload bytes for n={n}, got {len(payload)}")

    rows = [0] * n
    i, j = 0, 1
    position = 0
    for byte in payload:
        value = byte - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if position >= nbits:
                if bit:
                    raise NonCanonicalPaddingError("padding bits must be zero")
            elif bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position += 1
            if position <= nbits:
                i += 1
                if i == j:
                    i, j = 0, j + 1
    return Graph(n, rows)


def read_graph6_file(path: Union[str, Path]) -> List[bytes]:
    """Read the non-empty lines of a graph6 file"""
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise IoError(f"cannot read {path}: {e}") from e
    return [line for line in raw.splitlines() if line.strip()]


def write_graph6_file(path: Union[str, Path], graphs: Iterable[Graph]) -> int:
    count = 0
    try:
        with open(path, "wb") as fh:
            for G in graphs:
                fh.write(graph6_encode(G))
                count += 1
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from e
    logger.debug(f"wrote {count} graph6 lines to {path}")
    return count
