"""Brute-force ground truth for small grids.

Everything here is deliberately independent of the analysis and reconfiguration
code: paths are enumerated by backtracking over raw vertex indices and
simplicity is re-derived from the vertex sequence alone.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .errors import CapExceeded
from .grid import EdgeBoard, GridDims, HamPath, from_moves
from .reconfig import reconfigure
from .switching import all_squares, is_switchable_square, switch_in_place

DEFAULT_CAP = 36

# lexicographic move order
_DIRS = (("D", 0, 1), ("L", -1, 0), ("R", 1, 0), ("U", 0, -1))


def _check_cap(dims: GridDims, cap: int) -> None:
    if dims.size() > cap:
        raise CapExceeded(f"{dims} grid has {dims.size()} vertices, above the enumeration cap {cap}")


def iter_st_moves(dims: GridDims, cap: int = DEFAULT_CAP) -> Iterator[str]:
    """Move strings of every s,t Hamiltonian path, in lexicographic order."""
    _check_cap(dims, cap)
    m, n = dims.m, dims.n
    total = m * n
    if not dims.admits_path():
        return
    if total == 1:
        yield ""
        return
    target = total - 1
    nbrs: list[list[tuple[str, int]]] = []
    for idx in range(total):
        x, y = idx % n, idx // n
        row = []
        for ch, dx, dy in _DIRS:
            xx, yy = x + dx, y + dy
            if 0 <= xx < n and 0 <= yy < m:
                row.append((ch, yy * n + xx))
        nbrs.append(row)
    plain = [[w for _, w in row] for row in nbrs]

    moves: list[str] = []

    def dead_end(visited: int, prev: int, cur: int) -> bool:
        # a vertex next to the one just left that can no longer get two path edges
        for w in plain[prev]:
            if visited >> w & 1:
                continue
            free = 0
            for z in plain[w]:
                if not visited >> z & 1 or z == cur:
                    free += 1
            if free < (1 if w == target else 2):
                return True
        return False

    def rec(cur: int, visited: int, count: int) -> Iterator[str]:
        if count == total:
            yield "".join(moves)
            return
        for ch, w in nbrs[cur]:
            if visited >> w & 1:
                continue
            if w == target and count + 1 != total:
                continue
            nv = visited | (1 << w)
            if dead_end(nv, cur, w):
                continue
            moves.append(ch)
            yield from rec(w, nv, count + 1)
            moves.pop()

    yield from rec(0, 1, 1)


def enumerate_st_hamiltonian(dims: GridDims, cap: int = DEFAULT_CAP) -> list[HamPath]:
    return [from_moves(dims, mv) for mv in iter_st_moves(dims, cap)]


def _sides(dims: GridDims, idx: int) -> set[str]:
    x, y = idx % dims.n, idx // dims.n
    out = set()
    if y == 0:
        out.add("N")
    if y == dims.m - 1:
        out.add("S")
    if x == 0:
        out.add("W")
    if x == dims.n - 1:
        out.add("E")
    return out


def independent_is_simple(dims: GridDims, moves: str) -> bool:
    """Simplicity re-derived from the move string alone.

    Every stretch of internal vertices, with the boundary vertex on each
    side, may bend 0 times between opposite sides, once between adjacent
    sides and twice when both ends are on one side.
    """
    if dims.m <= 2 or dims.n <= 2:
        return True
    step = {"D": dims.n, "U": -dims.n, "R": 1, "L": -1}
    seq = [0]
    for ch in moves:
        seq.append(seq[-1] + step[ch])
    internal = [not _sides(dims, v) for v in seq]
    i = 0
    while i < len(seq):
        if not internal[i]:
            i += 1
            continue
        j = i
        while internal[j]:
            j += 1
        run_moves = moves[i - 1 : j]  # the moves from seq[i-1] to seq[j]
        bends = sum(1 for a, b in zip(run_moves, run_moves[1:]) if a != b)
        a, b = _sides(dims, seq[i - 1]), _sides(dims, seq[j])
        if a & b:
            allowed = 2
        elif a | b in ({"N", "S"}, {"E", "W"}):
            allowed = 0
        else:
            allowed = 1
        if bends != allowed:
            return False
        i = j
    return True


def enumerate_simple(dims: GridDims, cap: int = DEFAULT_CAP) -> list[HamPath]:
    """Simple paths only, filtered by the independent bend counter."""
    return [from_moves(dims, mv) for mv in iter_st_moves(dims, cap) if independent_is_simple(dims, mv)]


@dataclass
class GraphStats:
    components: int
    diameter: Optional[int]  # None when disconnected
    degree_histogram: dict[int, int]
    asymmetric_switches: int
    strongly_connected: bool
    max_trace_length: Optional[int] = None

    def format(self) -> str:
        hist = " ".join(f"{d}:{c}" for d, c in sorted(self.degree_histogram.items()))
        lines = [
            f"components {self.components}",
            f"diameter {self.diameter if self.diameter is not None else '-'}",
            f"degrees {hist}",
            f"one-way switches {self.asymmetric_switches}",
            f"strongly connected {'yes' if self.strongly_connected else 'no'}",
        ]
        if self.max_trace_length is not None:
            lines.append(f"max algorithm trace {self.max_trace_length}")
        return "\n".join(lines) + "\n"


@dataclass
class HPGraph:
    """Simple paths joined when a single square-switch turns one into the other.

    ``arcs`` keeps the direction each switch was found in; ``edges`` is the
    undirected graph over which connectivity and distances are measured.
    """

    dims: GridDims
    nodes: list[HamPath]
    arcs: set[tuple[int, int]] = field(default_factory=set)

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(min(a, b), max(a, b)) for a, b in self.arcs}

    def index(self) -> dict[str, int]:
        return {p.moves: i for i, p in enumerate(self.nodes)}

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def out_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in sorted(self.arcs):
            adj[a].append(b)
        return adj

    def asymmetric_arcs(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, b in self.arcs if (b, a) not in self.arcs)

    def distances_from(self, source: int) -> list[int]:
        return bfs(self.adjacency(), source)

    def distance(self, a: HamPath, b: HamPath) -> int:
        idx = self.index()
        return self.distances_from(idx[a.moves])[idx[b.moves]]

    def export_edges(self) -> str:
        return "".join(f"{self.nodes[a].moves} {self.nodes[b].moves}\n" for a, b in sorted(self.edges))


def bfs(adj: list[list[int]], source: int) -> list[int]:
    """Hop counts from ``source``; -1 for unreachable nodes."""
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def switch_neighbours(path: HamPath) -> Iterator[tuple[HamPath, object]]:
    """Every (result, square) for switchable squares of ``path``; results may be non-simple."""
    for sq in all_squares(path.dims):
        board = EdgeBoard(path)
        if is_switchable_square(board, sq):
            switch_in_place(board, sq, check=False)
            yield board.freeze(), sq


def build_hp_graph(dims: GridDims, cap: int = DEFAULT_CAP) -> HPGraph:
    nodes = enumerate_simple(dims, cap)
    g = HPGraph(dims, nodes)
    idx = g.index()
    for i, p in enumerate(nodes):
        for q, _ in switch_neighbours(p):
            j = idx.get(q.moves)
            if j is not None:  # results that are not simple are not nodes
                g.arcs.add((i, j))
    return g


def _components(adj: list[list[int]]) -> int:
    seen = [False] * len(adj)
    count = 0
    for s in range(len(adj)):
        if seen[s]:
            continue
        count += 1
        for v, d in enumerate(bfs(adj, s)):
            if d >= 0:
                seen[v] = True
    return count


def _strongly_connected(g: HPGraph) -> bool:
    if not g.nodes:
        return True
    out = g.out_adjacency()
    back: list[list[int]] = [[] for _ in g.nodes]
    for a, b in g.arcs:
        back[b].append(a)
    return min(bfs(out, 0)) >= 0 and min(bfs(back, 0)) >= 0


def graph_stats(g: HPGraph, traces: bool = True) -> GraphStats:
    """Exact diameter by BFS from every node.

    With ``traces`` the reconfiguration algorithm is also run on every
    ordered pair of nodes and its longest trace is reported.
    """
    adj = g.adjacency()
    degrees = Counter(len(a) for a in adj)
    components = _components(adj) if g.nodes else 0
    diameter = None
    if components == 1:
        diameter = max(max(bfs(adj, s)) for s in range(len(adj)))
    stats = GraphStats(components, diameter, dict(degrees), len(g.asymmetric_arcs()), _strongly_connected(g))
    if traces and g.nodes:
        stats.max_trace_length = max(len(reconfigure(a, b, check=False)) for a in g.nodes for b in g.nodes)
    return stats
