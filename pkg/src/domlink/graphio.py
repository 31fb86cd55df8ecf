"""Graph serialisation: graph6 strings and plain edge-list text.

graph6 follows the public format description (printable bytes 63..126,
column-major upper-triangle bits in 6-bit groups); only orders up to 62
are needed here, so the single-byte size header suffices.  Edge lists
are ``"n m"`` on the first line followed by m lines ``"u v"`` with
0-based endpoints.
"""

from __future__ import annotations

from .graph import Graph

_G6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Malformed graph text; the message carries position information."""


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 emission implemented for n <= 62 only")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(g.n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string")
    for i, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise GraphParseError(f"graph6 byte {i}: {ch!r} outside printable range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphParseError("multi-byte graph6 size headers (n > 62) not supported")
    if n < 1:
        raise GraphParseError("graph6 order must be at least 1")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    rows = [0] * n
    i = 0
    bitpos = 0
    for v in range(n):
        for u in range(v):
            byte = ord(body[i]) - 63
            if byte >> (5 - bitpos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bitpos += 1
            if bitpos == 6:
                bitpos = 0
                i += 1
    if bitpos:
        byte = ord(body[i]) - 63
        if byte & ((1 << (6 - bitpos)) - 1):
            raise GraphParseError(f"graph6 byte {i + 1}: nonzero padding bits")
    return Graph(n, tuple(rows))


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [ln for ln in text.splitlines()]
    rows = [(i + 1, ln.split()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise GraphParseError("empty edge-list text")
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphParseError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphParseError(f"line {lineno}: header must hold two integers") from None
    if not 1 <= n <= 32:
        raise GraphParseError(f"line {lineno}: order {n} outside 1..32")
    if len(rows) - 1 != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(rows) - 1}")
    adj = [0] * n
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop {u}")
        if adj[u] >> v & 1:
            raise GraphParseError(f"line {lineno}: duplicate edge {u} {v}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_graph(text: str) -> Graph:
    """Parse either format; edge lists contain whitespace, graph6 never does."""
    stripped = text.strip()
    if not stripped:
        raise GraphParseError("empty graph text")
    if any(ch.isspace() for ch in stripped):
        return parse_edgelist(text)
    return parse_graph6(stripped)
