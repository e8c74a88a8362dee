"""graph6 and edge-list readers/writers.

graph6: the order n is written as ``chr(n + 63)`` for n <= 62, or as ``~``
followed by three 6-bit groups for 63 <= n <= 258047. The upper triangle of
the adjacency matrix follows, column by column (for v = 1..n-1, for
u = 0..v-1), packed six bits per byte big-end first, each byte offset by 63,
zero-padded to a multiple of six bits.

Edge list: the first non-blank line is n; every further non-blank line is
``u v`` with 0 <= u, v < n and u != v. Repeated edges are merged.
"""

from pathlib import Path

from .errors import ParseError
from .graph import Graph, MAX_VERTICES

GRAPH6_HEADER = ">>graph6<<"


def _pairs(n):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def emit_graph6(g):
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = [1 if g.rows[v] >> u & 1 else 0 for u, v in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = x << 1 | b
        body.append(chr(x + 63))
    return head + "".join(body)


def parse_graph6(text):
    line = text.strip()
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise ParseError("empty graph6 string", base)
    data = []
    for i, ch in enumerate(line):
        c = ord(ch)
        if c < 63 or c > 126:
            raise ParseError(f"byte {c} outside graph6 range 63..126", base + i)
        data.append(c - 63)

    if data[0] == 63:
        if len(data) < 4:
            raise ParseError("truncated long graph6 header", base)
        if data[1] == 63:
            raise ParseError("8-byte graph6 headers are not supported", base + 1)
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    else:
        n = data[0]
        pos = 1
    if n > MAX_VERTICES:
        raise ParseError(f"graph order {n} exceeds {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise ParseError(f"expected {need} payload bytes for n={n}, got {len(data) - pos}",
                         base + pos)
    rows = [1 << v for v in range(n)]
    k = 0
    for u, v in _pairs(n):
        byte = data[pos + k // 6]
        if byte >> (5 - k % 6) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        k += 1
    if need and nbits % 6:
        pad = 6 - nbits % 6
        if data[-1] & ((1 << pad) - 1):
            raise ParseError("nonzero padding bits", base + len(data) - 1)
    return Graph._trusted(n, rows)


def parse_edgelist(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer token in {raw!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError("first line must be the vertex count", lineno)
            n = nums[0]
            if n > MAX_VERTICES:
                raise ParseError(f"graph order {n} exceeds {MAX_VERTICES}", lineno)
            continue
        if len(nums) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", lineno)
        u, v = nums
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count line", 1)
    return Graph.from_edges(n, edges)


def emit_edgelist(g):
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def detect_format(path, override=None):
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".el", ".edges", ".txt"):
        return "edgelist"
    raise ParseError(f"cannot infer graph format from {path!r}; pass --format")


def read_graphs(path, fmt=None):
    """All graphs in a file: one per line for graph6, one per file for edge lists."""
    fmt = detect_format(path, fmt)
    text = Path(path).read_text()
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", lineno) from None
    return graphs


def read_graph(path, fmt=None):
    graphs = read_graphs(path, fmt)
    if not graphs:
        raise ParseError(f"{path} contains no graph")
    return graphs[0]


def write_graph(path, g, fmt=None):
    fmt = detect_format(path, fmt)
    text = emit_graph6(g) + "\n" if fmt == "graph6" else emit_edgelist(g)
    Path(path).write_text(text)
