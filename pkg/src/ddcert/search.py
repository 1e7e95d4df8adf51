"""Brute-force extremal orders n(k, d) for tiny parameters.

For each candidate order n (largest first) the search looks for a graph with
maximum degree <= k and diameter <= d. The pruned mode labels vertices in
BFS order from vertex 0: it first enumerates the BFS tree (a Moore-tree
shape of depth <= d), then decides the remaining edges one by one, dropping
any branch whose most optimistic completion still has diameter > d. The
unpruned mode enumerates every edge subset under the degree cap and exists
to cross-check the pruned one.
"""

from __future__ import annotations

from dataclasses import dataclass

from ddcert import bounds
from ddcert.graphcore import Graph

SUPPORTED_K = (2, 3)
MAX_N_CAP = 12
DEFAULT_BUDGET = 5_000_000

# n(k, d) values that verify_extremal accepts as ground truth
KNOWN_ORDERS = {(2, d): 2 * d + 1 for d in range(1, 6)} | {(3, 2): 10}


class UnsupportedParameters(ValueError):
    pass


class _BudgetExhausted(Exception):
    pass


@dataclass
class SearchResult:
    k: int
    d: int
    best_order: int
    witness: Graph
    exhaustive: bool
    nodes_explored: int


def _diameter_ok(masks: list[int], d: int) -> bool:
    n = len(masks)
    full = (1 << n) - 1
    for s in range(n):
        reach = 1 << s
        frontier = reach
        for _ in range(d):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reach
            reach |= nxt
            if reach == full:
                break
        if reach != full:
            return False
    return True


def _to_graph(masks: list[int]) -> Graph:
    n = len(masks)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
    return Graph.from_edges(n, edges)


class _Searcher:
    def __init__(self, k: int, d: int, budget: int):
        self.k, self.d, self.budget = k, d, budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted

    # -- pruned ------------------------------------------------------------

    def _trees(self, n: int):
        """Parent arrays of BFS trees: parents nondecreasing, depth <= d,
        root has <= k children, other vertices <= k - 1."""
        k, d = self.k, self.d
        parent = [-1] * n
        depth = [0] * n
        children = [0] * n

        def rec(v):
            self._tick()
            if v == n:
                yield list(parent), list(depth)
                return
            start = parent[v - 1] if v > 1 else 0
            for p in range(max(start, 0), v):
                cap = k if p == 0 else k - 1
                if children[p] >= cap or depth[p] + 1 > d:
                    continue
                parent[v], depth[v] = p, depth[p] + 1
                children[p] += 1
                yield from rec(v + 1)
                children[p] -= 1
            parent[v] = -1

        if n == 1:
            yield [-1], [0]
            return
        yield from rec(1)

    def _complete(self, masks, deg, cands, idx):
        self._tick()
        if _diameter_ok(masks, self.d):
            return list(masks)
        k = self.k
        opt = list(masks)
        for u, v in cands[idx:]:
            if deg[u] < k and deg[v] < k:
                opt[u] |= 1 << v
                opt[v] |= 1 << u
        if not _diameter_ok(opt, self.d):
            return None
        for j in range(idx, len(cands)):
            u, v = cands[j]
            if deg[u] < k and deg[v] < k:
                break
        else:
            return None
        # include (u, v) first, then every completion that omits it
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        found = self._complete(masks, deg, cands, j + 1)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        deg[u] -= 1
        deg[v] -= 1
        if found is not None:
            return found
        return self._complete(masks, deg, cands, j + 1)

    def find_pruned(self, n: int):
        if n > bounds.moore_bound(self.k, self.d):
            return None
        for parent, depth in self._trees(n):
            masks = [0] * n
            deg = [0] * n
            for v in range(1, n):
                p = parent[v]
                masks[v] |= 1 << p
                masks[p] |= 1 << v
                deg[v] += 1
                deg[p] += 1
            cands = []
            for u in range(n):
                for v in range(u + 1, n):
                    if parent[v] == u:
                        continue
                    if depth[v] == depth[u]:
                        cands.append((u, v))
                    elif depth[v] == depth[u] + 1 and u > parent[v]:
                        cands.append((u, v))
            found = self._complete(masks, deg, cands, 0)
            if found is not None:
                return found
        return None

    # -- unpruned ----------------------------------------------------------

    def find_unpruned(self, n: int):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        masks = [0] * n
        deg = [0] * n
        k, d = self.k, self.d

        def rec(idx, m):
            self._tick()
            if idx == len(pairs):
                if m >= n - 1 and _diameter_ok(masks, d):
                    return list(masks)
                return None
            u, v = pairs[idx]
            if deg[u] < k and deg[v] < k:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                found = rec(idx + 1, m + 1)
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
                deg[u] -= 1
                deg[v] -= 1
                if found is not None:
                    return found
            return rec(idx + 1, m)

        if n == 1:
            self._tick()
            return [0]
        return rec(0, 0)


def max_order_search(
    k: int,
    d: int,
    n_cap: int,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> SearchResult:
    """Largest n <= n_cap admitting a graph of max degree <= k, diameter <= d.

    exhaustive is True when every order above best_order (up to n_cap) was
    refuted within the node budget. Deterministic for fixed arguments.
    """
    if k not in SUPPORTED_K:
        raise UnsupportedParameters(f"search supports k in {SUPPORTED_K}, got {k}")
    if d < 1:
        raise UnsupportedParameters(f"need d >= 1, got {d}")
    if not 1 <= n_cap <= MAX_N_CAP:
        raise UnsupportedParameters(f"n_cap must lie in [1, {MAX_N_CAP}], got {n_cap}")
    s = _Searcher(k, d, budget)
    find = s.find_pruned if prune else s.find_unpruned
    try:
        for n in range(n_cap, 0, -1):
            found = find(n)
            if found is not None:
                return SearchResult(k, d, n, _to_graph(found), True, s.nodes)
    except _BudgetExhausted:
        pass
    # budget ran out before a witness was found: K_1 is always feasible
    return SearchResult(k, d, 1, Graph(1, ((),)), False, s.nodes)


def verify_extremal(k: int, d: int, budget: int = DEFAULT_BUDGET) -> bool:
    """n(k, d) for the tiny verified set: the search attains the Moore bound,
    or exhausts its space and lands on the tabulated value."""
    if (k, d) not in KNOWN_ORDERS:
        raise UnsupportedParameters(f"verify_extremal supports {sorted(KNOWN_ORDERS)}, got {(k, d)}")
    m = bounds.moore_bound(k, d)
    res = max_order_search(k, d, min(m, MAX_N_CAP), budget)
    if res.best_order == m:
        return True
    return res.exhaustive and res.best_order == KNOWN_ORDERS[(k, d)]
