"""Immutable bitmask-backed simple graphs and structural operations.

Vertices are the integers 0..n-1.  A vertex set is a plain ``int`` used as a
bitmask (type alias ``VertexSet``); adjacency is one mask per vertex.  Graph
values are frozen and validated on construction, so they can be shared freely
across threads and all operations here are pure functions.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import FormatError, LoopError, ParameterError, UnsupportedSizeError

VertexSet = int

_G6_HEADER = b">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_from(vertices: Iterable[int]) -> VertexSet:
    """Build a vertex-set mask from an iterable of indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[v]`` is the open neighborhood of v.

    Invariants (checked on construction): adjacency is symmetric, loop-free,
    and no mask has bits at or beyond index n.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency bits beyond vertex range at {v}")
            if row >> v & 1:
                raise LoopError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def closed(self, v: int) -> VertexSet:
        """Closed neighborhood mask N[v]."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs (u, v) with u < v, ascending."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)


@dataclass(frozen=True)
class ConnectivityProfile:
    """Connectivity facts at the granularity the solvers need."""

    connected: bool
    cut_vertices: VertexSet
    bridges: tuple[tuple[int, int], ...]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 0-based edge pairs; duplicates collapse."""
    if n < 0:
        raise ParameterError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def closed_neighborhood_of_set(g: Graph, s: VertexSet) -> VertexSet:
    """N[S]: the union of closed neighborhoods over the members of ``s``."""
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    """Open neighborhood N(v), or N[v] when ``closed`` is set."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    nb = g.adj[v]
    return nb | (1 << v) if closed else nb


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabeled 0..|s|-1 preserving index order.

    Returns the subgraph and the index map (new index -> original vertex).
    """
    if s & ~g.vertices:
        raise ParameterError("vertex set has bits outside the graph")
    old = list(bits(s))
    pos = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        for u in bits(g.adj[v] & s):
            adj[i] |= 1 << pos[u]
    return Graph(len(old), tuple(adj)), tuple(old)


def bipartition(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """2-color by BFS, lowest vertex of each component on side one.

    Returns ``(V1, V2)`` or ``None`` when an odd cycle exists.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    v1 = mask_from(v for v in range(g.n) if side[v] == 0)
    return v1, g.vertices & ~v1


def odd_closed_walk(g: Graph) -> Optional[list[int]]:
    """A closed walk of odd length witnessing non-bipartiteness, else None.

    The walk is returned as a vertex list whose first and last entries agree.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    def up(w):
                        path = [w]
                        while parent[path[-1]] != -1:
                            path.append(parent[path[-1]])
                        return path
                    pu, pv = up(u), up(v)
                    # trim to the lowest common ancestor
                    while len(pu) > 1 and len(pv) > 1 and pu[-2] == pv[-2]:
                        pu.pop()
                        pv.pop()
                    return list(reversed(pu)) + pv
    return None


def connectivity_profile(g: Graph) -> ConnectivityProfile:
    """Connected flag plus cut vertices and bridges (low-link search)."""
    n = g.n
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * n + 100))
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = 0
    bridges: list[tuple[int, int]] = []
    timer = 0

    def dfs(u: int) -> None:
        nonlocal timer, cuts
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for v in bits(g.adj[u]):
            if disc[v] < 0:
                parent[v] = u
                children += 1
                dfs(v)
                low[u] = min(low[u], low[v])
                if parent[u] == -1 and children > 1:
                    cuts_add(u)
                if parent[u] != -1 and low[v] >= disc[u]:
                    cuts_add(u)
                if low[v] > disc[u]:
                    bridges.append((min(u, v), max(u, v)))
            elif v != parent[u]:
                low[u] = min(low[u], disc[v])

    def cuts_add(u: int) -> None:
        nonlocal cuts
        cuts |= 1 << u

    components = 0
    for s in range(n):
        if disc[s] < 0:
            components += 1
            dfs(s)
    return ConnectivityProfile(components <= 1, cuts, tuple(sorted(bridges)))


def component_count(g: Graph) -> int:
    seen = 0
    count = 0
    for s in range(g.n):
        if seen >> s & 1:
            continue
        count += 1
        frontier = 1 << s
        while frontier:
            seen |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
    return count


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant to every vertex; pendant of v sits at index n+v."""
    n = g.n
    adj = [row for row in g.adj] + [0] * n
    for v in range(n):
        adj[v] |= 1 << (n + v)
        adj[n + v] = 1 << v
    return Graph(2 * n, tuple(adj))


def merge_copies(g: Graph, shared: VertexSet, copies: int) -> Graph:
    """Glue ``copies`` copies of ``g`` along the vertex set ``shared``.

    Shared vertices keep one instance (listed first, in original order); the
    remaining vertices are duplicated per copy.  Parallel edges arising inside
    the shared part collapse to single edges.
    """
    if copies < 1:
        raise ParameterError("need at least one copy")
    if shared & ~g.vertices:
        raise ParameterError("shared set has bits outside the graph")
    shared_vs = list(bits(shared))
    private_vs = [v for v in range(g.n) if not shared >> v & 1]
    k = len(shared_vs)
    p = len(private_vs)
    total = k + copies * p
    pos_shared = {v: i for i, v in enumerate(shared_vs)}
    edges = []
    for c in range(copies):
        base = k + c * p
        pos = dict(pos_shared)
        pos.update({v: base + i for i, v in enumerate(private_vs)})
        for u, v in g.edges():
            edges.append((pos[u], pos[v]))
    return from_edge_list(total, edges)


# --- graph6 codec -----------------------------------------------------------
#
# Layout: one size byte n+63 (n <= 62), then the upper triangle x(i,j) for
# 0 <= i < j <= n-1 in column-major order, packed big-endian into 6-bit
# groups, each group offset by 63.  Padding bits must be zero.


def to_graph6(g: Graph) -> bytes:
    if g.n > 62:
        raise UnsupportedSizeError(f"graph6 size byte limited to n <= 62, got {g.n}")
    out = bytearray([g.n + 63])
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[j] >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(data) -> Graph:
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError("graph6 records are ASCII") from exc
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    data = data.rstrip(b"\r\n")
    if not data:
        raise FormatError("empty graph6 record")
    first = data[0]
    if first == 126:
        raise FormatError("multi-byte graph6 size fields (n > 62) not supported")
    if not 63 <= first <= 126:
        raise FormatError(f"size byte {first} outside the printable range 63..126")
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    payload = data[1:]
    if len(payload) != need:
        raise FormatError(f"expected {need} payload bytes for n={n}, got {len(payload)}")
    bitstream = []
    for b in payload:
        if not 63 <= b <= 126:
            raise FormatError(f"payload byte {b} outside the printable range 63..126")
        group = b - 63
        bitstream.extend((group >> (5 - i)) & 1 for i in range(6))
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    if any(bitstream[idx:]):
        raise FormatError("nonzero padding bits")
    return Graph(n, tuple(adj))


# --- edge-list text format ---------------------------------------------------
#
# First non-comment line "n m", then m lines "u v" (0-based).  Lines starting
# with '#' are comments.


def parse_edge_list(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}") from exc
        if n is None:
            n, m = a, b
        else:
            edges.append((a, b))
    if n is None:
        raise FormatError("no header line 'n m' found")
    if len(edges) != m:
        raise FormatError(f"header declared {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
