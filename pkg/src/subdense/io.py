"""Edge-list and graph6 readers/writers.

Edge-list: first non-comment line ``n m``, then ``m`` lines ``u v``.  Lines
starting with ``#`` are comments (generators record their parameters there).
"""
from __future__ import annotations

from .graph import Graph, norm_edge

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph text; ``where`` is a human-readable line/offset."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("non-ASCII input", f"offset {exc.start}") from None
    return data


# -- graph6 --------------------------------------------------------------------
def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_n(g.n) + body


def from_graph6(data: bytes | str) -> Graph:
    s = _text(data).strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", f"offset {i}")
    vals = [ord(c) - 63 for c in s]
    if not vals:
        raise GraphFormatError("empty graph6 string", "offset 0")
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = vals[1] << 12 | vals[2] << 6 | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        raise GraphFormatError("truncated graph6 size field", "offset 0")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos != need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, found {len(vals) - pos}", f"offset {pos}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- edge list -----------------------------------------------------------------
def to_edge_list(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or ()]
    lines.append(f"{g.n} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(data: bytes | str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(_text(data).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        where = f"line {lineno}"
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphFormatError(f"expected two integers, got {line!r}", where)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative size in header", where)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex index out of range in edge ({a}, {b}) for n={n}", where)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", where)
        e = norm_edge(a, b)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e}", where)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("missing 'n m' header", "line 1")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}", "end of input")
    return Graph(header[0], edges)


def detect_format(data: bytes | str) -> str:
    for line in _text(data).split("\n"):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        return "edge-list" if line.split()[0].lstrip("-").isdigit() else "graph6"
    return "edge-list"


def parse_graph(data: bytes | str, format: str | None = None) -> Graph:
    """Parse ``edge-list`` or ``graph6`` text (``format=None`` sniffs it)."""
    fmt = format or detect_format(data)
    if fmt in ("edge-list", "edges"):
        return from_edge_list(data)
    if fmt in ("graph6", "g6"):
        lines = [l for l in _text(data).split("\n") if l.strip() and not l.startswith("#")]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, found {len(lines)}", "line 1")
        return from_graph6(lines[0])
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edge-list", comments: list[str] | None = None) -> str:
    if format in ("edge-list", "edges"):
        return to_edge_list(g, comments)
    if format in ("graph6", "g6"):
        head = "".join(f"# {c}\n" for c in comments or ())
        return head + to_graph6(g) + "\n"
    raise ValueError(f"unknown graph format {format!r}")
