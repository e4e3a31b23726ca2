"""graph6 encoding for graphs on at most 62 vertices."""

from __future__ import annotations

from typing import IO, Iterator, Union

from .graph import Graph

HEADER = b">>graph6<<"
MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


def _as_bytes(data: Union[str, bytes]) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    return bytes(data)


def parse_graph6(data: Union[str, bytes]) -> Graph:
    raw = _as_bytes(data).rstrip(b"\r\n")
    base = 0
    if raw.startswith(HEADER):
        raw = raw[len(HEADER):]
        base = len(HEADER)
    if not raw:
        raise Graph6Error("empty graph6 code", base)
    for i, ch in enumerate(raw):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch!r} outside printable graph6 range", base + i)
    if raw[0] == 126:
        raise Graph6Error(f"multi-byte size form unsupported (n > {MAX_N})", base)
    n = raw[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = raw[1:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}",
            base + 1 + min(len(body), nbytes),
        )
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    if nbytes:
        pad = 6 * nbytes - nbits
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + nbytes)
    return Graph(n, tuple(sorted(edges)))


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise ValueError(f"graph6 writer limited to n <= {MAX_N}")
    adj = set(g.edges)
    bits = [1 if (u, v) in adj else 0 for v in range(1, g.n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def iter_graph6(stream: IO) -> Iterator[tuple[int, Union[Graph, Graph6Error]]]:
    """Yield ``(line_number, graph_or_error)`` for each line of a stream.

    The optional header line is skipped.  Parse failures are yielded rather
    than raised so a scan can report them and carry on.  Blank lines are
    reported as errors too.
    """
    for lineno, line in enumerate(stream, start=1):
        if isinstance(line, str):
            line = line.encode("utf-8", errors="surrogateescape")
        line = line.rstrip(b"\r\n")
        if line == HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
