"""Simple undirected graphs: parsing, structural metrics, the named corpus,
distance matrices, and a brute-force non-backtracking walk counter."""

from __future__ import annotations

import math
import re
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

N_CAP = 5000
INF = math.inf


class GraphFormatError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class StructureError(ValueError):
    """A graph does not meet an operation's structural precondition."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise StructureError("adjacency length differs from n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise StructureError(f"neighbors of {v} not sorted/unique")
            for u in nbrs:
                if u == v:
                    raise StructureError(f"self-loop at {v}")
                if not 0 <= u < self.n:
                    raise StructureError(f"neighbor {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise StructureError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise StructureError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        if self.n > N_CAP:
            raise StructureError(f"n = {self.n} exceeds the dense-matrix cap {N_CAP}")
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------

_INT = re.compile(r"0|[1-9][0-9]*")


def _ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2 or not all(_INT.fullmatch(p) for p in parts):
        raise GraphFormatError(lineno, f"expected two decimal integers separated by one space, got {line!r}")
    return int(parts[0]), int(parts[1])


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` header + `u v` edge lines format.

    Comment lines start with '#'. Edges must satisfy 0 <= u < v < n; a
    repeated edge (in either orientation) is an error.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            continue
        if line == "":
            continue
        if header is None:
            header = _ints(line, lineno)
            continue
        n = header[0]
        u, v = _ints(line, lineno)
        if u == v:
            raise GraphFormatError(lineno, f"self-loop {u} {v}")
        if u >= n or v >= n:
            raise GraphFormatError(lineno, f"vertex id out of range for n = {n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(lineno, f"duplicate edge {u} {v}")
        if u > v:
            raise GraphFormatError(lineno, f"edge must be written with u < v, got {u} {v}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError(1, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(lineno, f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------


def degree_profile(g: Graph) -> tuple[int, int, bool]:
    degs = [len(a) for a in g.adjacency]
    if not degs:
        return 0, 0, True
    return min(degs), max(degs), min(degs) == max(degs)


def bfs_distances(g: Graph, src: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def diameter(g: Graph) -> float:
    """Max eccentricity; math.inf when disconnected."""
    if g.n == 0:
        return 0
    return max(max(bfs_distances(g, s)) for s in range(g.n))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or max(bfs_distances(g, 0)) < INF


def girth(g: Graph) -> float:
    """Shortest cycle length by BFS from every vertex; math.inf for forests."""
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            # every cycle still to be found from this root has length >= 2 dist[u]
            if 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    q.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def regular_degree(g: Graph) -> int:
    """The common degree k; raises StructureError when g is not regular."""
    lo, hi, reg = degree_profile(g)
    if not reg:
        raise StructureError(f"graph is not regular (degrees {lo}..{hi})")
    return hi


# ---------------------------------------------------------------------------
# distance decomposition
# ---------------------------------------------------------------------------


@dataclass
class DistanceDecomposition:
    d: int
    matrices: list[np.ndarray]
    sums_to_j: bool
    uncovered_pairs: int = 0  # pairs at distance > d
    notes: list[str] = field(default_factory=list)


def distance_decomposition(g: Graph, d: int) -> DistanceDecomposition:
    """A_0..A_d with (A_i)_{ab} = 1 iff dist(a, b) = i.

    When d is below the diameter the sum misses some pairs; that comes back
    as sums_to_j = False rather than an exception, since it is itself a
    diameter check.
    """
    if not is_connected(g):
        raise StructureError("distance decomposition needs a connected graph")
    if d < 0:
        raise ValueError("d must be >= 0")
    if g.n > N_CAP:
        raise StructureError(f"n = {g.n} exceeds cap {N_CAP}")
    dist = np.array(distance_matrix(g), dtype=np.int64)
    mats = [(dist == i).astype(np.int64) for i in range(d + 1)]
    total = np.sum(mats, axis=0)
    ok = bool(np.array_equal(total, np.ones((g.n, g.n), dtype=np.int64)))
    missing = int(np.count_nonzero(total == 0))
    dd = DistanceDecomposition(d, mats, ok, missing)
    if not ok:
        dd.notes.append(f"{missing} ordered pairs lie at distance > {d}")
    return dd


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    verts = list(combinations(range(5), 2))
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[a], idx[b]) for a, b in combinations(verts, 2) if not set(a) & set(b)]
    return Graph.from_edges(len(verts), edges)


def heawood() -> Graph:
    """Point/line incidence graph of the Fano plane (lines {i, i+1, i+3} mod 7)."""
    edges = []
    for line in range(7):
        for p in (line, line + 1, line + 3):
            edges.append((p % 7, 7 + line))
    return Graph.from_edges(14, edges)


def hoffman_singleton() -> Graph:
    """Five pentagons P_h and five pentagrams Q_i.

    Vertex j of P_h is adjacent to j +- 1 in P_h; vertex j of Q_i to j +- 2
    in Q_i; and vertex j of P_h to vertex h*i + j (mod 5) of Q_i.
    """

    def p(h, j):
        return 5 * h + j % 5

    def q(i, j):
        return 25 + 5 * i + j % 5

    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add(tuple(sorted((p(h, j), p(h, j + 1)))))
            edges.add(tuple(sorted((q(h, j), q(h, j + 2)))))
            for i in range(5):
                edges.add(tuple(sorted((p(h, j), q(i, h * i + j)))))
    return Graph.from_edges(50, sorted(edges))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


_FIXED = {
    "petersen": petersen,
    "hoffman_singleton": hoffman_singleton,
    "heawood": heawood,
    "k33": lambda: complete_bipartite(3, 3),
}
_PARAM = re.compile(r"(complete|cycle)\((\d+)\)")

CORPUS_NAMES = ("petersen", "hoffman_singleton", "heawood", "complete(n)", "cycle(n)", "k33")


def corpus(name: str) -> Graph:
    """Look up a named graph: petersen, hoffman_singleton, heawood, k33,
    complete(n), cycle(n)."""
    key = name.strip().lower().replace("-", "_")
    if key in _FIXED:
        return _FIXED[key]()
    m = _PARAM.fullmatch(key)
    if m:
        fam, n = m.group(1), int(m.group(2))
        return complete(n) if fam == "complete" else cycle(n)
    raise KeyError(f"unknown corpus graph {name!r}; known: {', '.join(CORPUS_NAMES)}")


def small_corpus(max_n: int = 20) -> dict[str, Graph]:
    """Every corpus graph with at most max_n vertices (parametric families included)."""
    out = {}
    for name in ("petersen", "heawood", "k33", "hoffman_singleton"):
        g = corpus(name)
        if g.n <= max_n:
            out[name] = g
    for n in range(2, max_n + 1):
        out[f"complete({n})"] = complete(n)
    for n in range(3, max_n + 1):
        out[f"cycle({n})"] = cycle(n)
    return out


# ---------------------------------------------------------------------------
# non-backtracking walk oracle
# ---------------------------------------------------------------------------


def _walks_from(args) -> list[int]:
    adjacency, n, src, i = args
    row = [0] * n
    # explicit DFS over walks; state is (vertex, previous vertex, length)
    stack = [(src, -1, 0)]
    while stack:
        v, prev, length = stack.pop()
        row[v] += 1
        if length == i:
            continue
        for w in adjacency[v]:
            if w != prev:
                stack.append((w, v, length + 1))
    return row


def nb_walk_counts(g: Graph, i: int, workers: int = 1) -> np.ndarray:
    """Count non-backtracking walks of length <= i between every pair.

    Brute-force enumeration (exponential in i); used as an oracle, so i is
    capped at 6. Work is split by source vertex; the result does not depend
    on the worker count.
    """
    regular_degree(g)
    if not 0 <= i <= 6:
        raise ValueError("walk oracle supports 0 <= i <= 6")
    tasks = [(g.adjacency, g.n, s, i) for s in range(g.n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_walks_from, tasks))
    else:
        rows = [_walks_from(t) for t in tasks]
    return np.array(rows, dtype=object).reshape(g.n, g.n)
