"""graph6 / sparse6 codecs and a plain edge-list format for multigraphs."""
from __future__ import annotations

from fanforge.errors import FanforgeError
from fanforge.graph import Multigraph, simplify


class FormatError(FanforgeError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _n_bytes(n: int) -> list:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def _read_n(data: list) -> tuple:
    if not data:
        raise FormatError("missing vertex count")
    if data[0] < 63:
        return data[0], data[1:]
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated vertex count")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        return n, data[8:]
    if len(data) < 4:
        raise FormatError("truncated vertex count")
    return (data[1] << 12) | (data[2] << 6) | data[3], data[4:]


def _to_values(text: str) -> list:
    vals = []
    for ch in text:
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise FormatError(f"character {ch!r} outside the printable range")
        vals.append(c)
    return vals


def _pack(bits: list) -> str:
    bits = bits + [0] * (-len(bits) % 6)
    out = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def _index_pairs(g: Multigraph):
    if not g.is_simple():
        raise FormatError("graph6/sparse6 only encode simple graphs")
    _, idx = g.index()
    return g.order, [(idx[a], idx[b]) for a, b in g.pairs()]


def encode_graph6(g: Multigraph) -> str:
    n, pairs = _index_pairs(g)
    adj = set(pairs)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    return "".join(chr(c + 63) for c in _n_bytes(n)) + _pack(bits)


def decode_graph6(text: str) -> Multigraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    n, data = _read_n(_to_values(text))
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise FormatError(f"expected {(need + 5) // 6} data bytes for {n} vertices, got {len(data)}")
    pairs = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if data[pos // 6] >> (5 - pos % 6) & 1:
                pairs.append((i, j))
            pos += 1
    return Multigraph.from_pairs(pairs, range(n))


def _width(n: int) -> int:
    k = 1
    while 1 << k < n:
        k += 1
    return k


def encode_sparse6(g: Multigraph) -> str:
    n, pairs = _index_pairs(g)
    k = _width(n)

    def enc(x):
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    edges = sorted((max(a, b), min(a, b)) for a, b in pairs)
    bits = []
    cur = 0
    for v, u in edges:
        if v == cur:
            bits.append(0)
            bits.extend(enc(u))
        elif v == cur + 1:
            cur += 1
            bits.append(1)
            bits.extend(enc(u))
        else:
            cur = v
            bits.append(1)
            bits.extend(enc(v))
            bits.append(0)
            bits.extend(enc(u))
    if k < 6 and n == (1 << k) and (-len(bits)) % 6 >= k and cur < n - 1:
        bits.append(0)
    bits.extend([1] * (-len(bits) % 6))
    return ":" + "".join(chr(c + 63) for c in _n_bytes(n)) + _pack(bits)


def decode_sparse6(text: str) -> Multigraph:
    text = text.strip()
    if text.startswith(">>sparse6<<"):
        text = text[11:]
    if not text.startswith(":"):
        raise FormatError("sparse6 strings start with ':'")
    n, data = _read_n(_to_values(text[1:]))
    k = _width(n)
    bits = [(d >> (5 - i)) & 1 for d in data for i in range(6)]
    pairs = []
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        x = 0
        for i in range(k):
            x = (x << 1) | bits[pos + 1 + i]
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            pairs.append((x, v))
    g = Multigraph.from_pairs(pairs, range(n))
    return simplify(g) if not g.is_simple() else g


def decode(text: str) -> Multigraph:
    text = text.strip()
    if text.startswith(":") or text.startswith(">>sparse6<<"):
        return decode_sparse6(text)
    if text.startswith("&"):
        raise FormatError("digraph6 is not supported")
    return decode_graph6(text)


def parse_lines(lines) -> list:
    """Decode a stream of graph6/sparse6 lines into ``(line number, graph)`` pairs."""
    out = []
    for no, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append((no, decode(line)))
        except FormatError as exc:
            raise FormatError(str(exc), line=no) from None
    return out


def read_file(path) -> list:
    with open(path) as fh:
        return parse_lines(fh)


def write_file(path, graphs, sparse=False) -> None:
    enc = encode_sparse6 if sparse else encode_graph6
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(enc(g) + "\n")


def to_edge_text(g: Multigraph) -> str:
    """One ``u v`` line per edge in id order; loops and parallels allowed."""
    return "".join(f"{a} {b}\n" for a, b in g.pairs())


def from_edge_text(text: str) -> Multigraph:
    pairs = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("expected two vertex labels", line=no)
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError("vertex labels must be integers", line=no) from None
    return Multigraph.from_pairs(pairs)

