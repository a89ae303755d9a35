"""Immutable simple graphs stored as per-row adjacency bitmasks.

Vertices are the integers ``0..n-1``. Row ``v`` of a :class:`Graph` is an int
whose bit ``u`` is set iff ``uv`` is an edge, so neighbourhood arithmetic is
plain integer set algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

MAX_VERTICES = 64

Edge = tuple[int, int]


class GraphInputError(ValueError):
    """Raised for malformed graphs, edge sets, vertex sets or encodings."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    return list(_bits(mask))


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphInputError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphInputError("row count does not match vertex count")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- basic queries -------------------------------------------------------
    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[Edge]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, lexicographically ordered."""
        out = []
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def components(self, within: Optional[int] = None) -> list[int]:
        """Connected components of the subgraph induced on ``within`` (default all),
        each returned as a vertex bitmask, ordered by smallest vertex."""
        left = self.vertex_mask if within is None else within
        comps = []
        while left:
            low = left & -left
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                nxt &= left & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            left &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- mask encoding ------------------------------------------------------
    def to_mask(self) -> int:
        """Integer encoding whose ordering matches graph6 string order for fixed n."""
        mask = 0
        for j in range(1, self.n):
            r = self.rows[j]
            for i in range(j):
                mask = (mask << 1) | (r >> i & 1)
        return mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        k = n * (n - 1) // 2 - 1
        for j in range(1, n):
            for i in range(j):
                if mask >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        return cls(n, tuple(rows))


def upper_triangle_pairs(n: int) -> list[Edge]:
    """Vertex pairs in graph6 bit order: column j ascending, row i < j ascending."""
    return [(i, j) for j in range(1, n) for i in range(j)]


# -- construction ------------------------------------------------------------

def make_graph(n: int, edges: Iterable[Edge] = ()) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphInputError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise GraphInputError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def _check_edges(g: Graph, edges: Iterable[Edge], present: bool) -> list[Edge]:
    seen = set()
    out = []
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise GraphInputError(f"({u}, {v}) is not a vertex pair of the graph")
        e = norm_edge(u, v)
        if e in seen:
            raise GraphInputError(f"duplicate pair {e}")
        if g.has_edge(u, v) != present:
            raise GraphInputError(f"pair {e} is {'not ' if present else ''}an edge")
        seen.add(e)
        out.append(e)
    return out


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    rows = list(g.rows)
    for u, v in _check_edges(g, edges, present=True):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    rows = list(g.rows)
    for u, v in _check_edges(g, edges, present=False):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


class Relabeled(NamedTuple):
    graph: Graph
    old_of_new: tuple[int, ...]


def _vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphInputError(f"unknown vertex {v}")
        mask |= 1 << v
    return mask


def induced(g: Graph, vertices: Iterable[int]) -> Relabeled:
    """Subgraph induced on ``vertices``, relabelled order-preservingly to 0..k-1."""
    keep = bits(_vertex_mask(g, vertices))
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        r = 0
        for u in _bits(g.rows[old]):
            if u in pos:
                r |= 1 << pos[u]
        rows.append(r)
    return Relabeled(Graph(len(keep), tuple(rows)), tuple(keep))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Relabeled:
    drop = _vertex_mask(g, vertices)
    return induced(g, bits(g.vertex_mask & ~drop))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    rows = list(g.rows) + [r << shift for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    left = g.vertex_mask
    right = h.vertex_mask << g.n
    rows = [r | right if v < g.n else r | left for v, r in enumerate(u.rows)]
    return Graph(u.n, tuple(rows))


# -- degree statistics -----------------------------------------------------------

class EdgeDegreeStats(NamedTuple):
    delta: int
    Delta: int
    xi: Optional[int]


def edge_degree(g: Graph, u: int, v: int) -> int:
    return g.degree(u) + g.degree(v) - 2


def degree_stats(g: Graph) -> EdgeDegreeStats:
    """Minimum/maximum degree and minimum edge-degree; ``xi`` is None without edges."""
    if g.n == 0:
        return EdgeDegreeStats(0, 0, None)
    d = g.degrees()
    xi = min((d[u] + d[v] - 2 for u, v in g.edges()), default=None)
    return EdgeDegreeStats(min(d), max(d), xi)


# -- text formats -------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~"] + [chr(63 + (n >> s & 63)) for s in (12, 6, 0)]
    bitstream = [int(g.has_edge(i, j)) for i, j in upper_triangle_pairs(n)]
    bitstream += [0] * (-len(bitstream) % 6)
    for k in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str, *, line: int = 1) -> Graph:
    """Parse one graph6 string; errors report the 0-based byte offset and line."""
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10

    def fail(offset: int, msg: str) -> GraphInputError:
        return GraphInputError(f"graph6 line {line}, byte {base + offset}: {msg}")

    if not s:
        raise fail(0, "empty input")
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise fail(k, f"invalid character {ch!r}")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise fail(1, "unsupported or truncated size header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = 4
        if n <= 62:
            raise fail(0, "non-canonical long size header")
    if n > MAX_VERTICES:
        raise fail(0, f"{n} vertices exceeds cap {MAX_VERTICES}")
    pairs = upper_triangle_pairs(n)
    need = -(-len(pairs) // 6)
    if len(s) - body != need:
        raise fail(body, f"expected {need} data bytes for n={n}, got {len(s) - body}")
    rows = [0] * n
    k = 0
    for idx in range(need):
        val = ord(s[body + idx]) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < len(pairs):
                if bit:
                    i, j = pairs[k]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise fail(body + idx, "non-zero padding bit")
            k += 1
    return Graph(n, tuple(rows))


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def from_edgelist(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = text.splitlines(keepends=True)
    offsets = []
    pos = 0
    for ln in lines:
        offsets.append(pos)
        pos += len(ln.encode("ascii", "replace"))

    def fail(idx: int, msg: str) -> GraphInputError:
        off = offsets[idx] if idx < len(offsets) else pos
        return GraphInputError(f"edge list line {idx + 1}, byte {off}: {msg}")

    def ints(idx: int) -> tuple[int, int]:
        if idx >= len(lines):
            raise fail(idx, "unexpected end of input")
        parts = lines[idx].split()
        if len(parts) != 2:
            raise fail(idx, "expected two integers")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise fail(idx, "expected two integers") from None

    n, m = ints(0)
    edges = [ints(1 + k) for k in range(m)]
    for extra in range(1 + m, len(lines)):
        if lines[extra].strip():
            raise fail(extra, "trailing data after declared edges")
    try:
        return make_graph(n, edges)
    except GraphInputError as exc:
        raise GraphInputError(f"edge list: {exc}") from None
