"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive (full enumeration, no pruning, no
shared code with the search kernels) so the fast implementations can be
checked against it.
"""

from __future__ import annotations

import itertools

from crosscut.structures import Graph, TripleSystem


def contains_expansion_naive(host: TripleSystem, pattern: Graph) -> bool:
    """All injective core maps crossed with all completion assignments."""
    m = len(pattern.edges)
    pat_edges = pattern.edge_list()
    if pattern.n + m > host.n:
        return False
    for phi in itertools.permutations(range(host.n), pattern.n):
        cands = []
        ok = True
        for u, v in pat_edges:
            ws = [
                w
                for w in range(host.n)
                if w not in phi and host.has_triple(phi[u], phi[v], w)
            ]
            if not ws:
                ok = False
                break
            cands.append(ws)
        if not ok:
            continue
        if _sdr_exists(cands, 0, set()):
            return True
    return False


def _sdr_exists(cands: list[list[int]], i: int, used: set[int]) -> bool:
    if i == len(cands):
        return True
    return any(
        w not in used and _sdr_exists(cands, i + 1, used | {w}) for w in cands[i]
    )


def contains_subgraph_naive(host: Graph, pattern: Graph) -> bool:
    """Plain backtracking injective homomorphism test (not induced)."""
    if pattern.n > host.n:
        return False
    assignment: dict[int, int] = {}

    def place(v: int) -> bool:
        if v == pattern.n:
            return True
        for h in range(host.n):
            if h in assignment.values():
                continue
            if all(
                host.has_edge(h, assignment[w])
                for w in pattern.neighbors(v)
                if w in assignment
            ):
                assignment[v] = h
                if place(v + 1):
                    return True
                del assignment[v]
        return False

    return place(0)


def sigma_naive(graph: Graph) -> int:
    best = None
    for r in range(graph.n + 1):
        for sub in itertools.combinations(range(graph.n), r):
            s = set(sub)
            if any(u in s and v in s for u, v in graph.edges):
                continue
            cost = r + sum(1 for u, v in graph.edges if u not in s and v not in s)
            best = cost if best is None else min(best, cost)
    return best


def tau_naive(graph: Graph) -> int:
    for r in range(graph.n + 1):
        for sub in itertools.combinations(range(graph.n), r):
            s = set(sub)
            if all(u in s or v in s for u, v in graph.edges):
                return r
    raise AssertionError


def tau_ind_naive(graph: Graph) -> int | None:
    best = None
    for r in range(graph.n + 1):
        for sub in itertools.combinations(range(graph.n), r):
            s = set(sub)
            if all(len(s & {u, v}) == 1 for u, v in graph.edges):
                best = r
                break
        if best is not None:
            break
    return best


def canonical_key_naive(graph: Graph) -> tuple:
    """Minimum edge tuple over all vertex permutations (tiny graphs only)."""
    best = None
    for perm in itertools.permutations(range(graph.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in graph.edges))
        if best is None or key < best:
            best = key
    return (graph.n, best)


def ahu_code_naive(graph: Graph) -> str:
    """Independent rooted-shape canonical code for a free tree: strip leaf
    layers to the center(s), then take the best sorted-children code."""
    n = graph.n
    if n == 1:
        return "()"
    adj = {v: set(graph.neighbors(v)) for v in range(n)}
    degree = {v: len(adj[v]) for v in range(n)}
    stripped = set()
    layer = [v for v in range(n) if degree[v] == 1]
    while n - len(stripped) > 2:
        nxt = []
        for v in layer:
            stripped.add(v)
            for w in adj[v]:
                if w not in stripped:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = sorted(v for v in range(n) if v not in stripped)

    def code(v, parent):
        subs = sorted(code(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(code(c, -1) for c in centers)


def trees_by_prufer(n: int) -> set[str]:
    """AHU codes of all trees on n vertices via Prüfer sequences."""
    if n == 1:
        return {ahu_code_naive(Graph(1, []))}
    if n == 2:
        return {ahu_code_naive(Graph(2, [(0, 1)]))}
    keys = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, v = [x for x in range(n) if degree[x] == 1]
        edges.append((u, v))
        keys.add(ahu_code_naive(Graph(n, edges)))
    return keys


def count_triangles_naive(graph: Graph) -> int:
    return sum(
        1
        for a, b, c in itertools.combinations(range(graph.n), 3)
        if graph.has_edge(a, b) and graph.has_edge(a, c) and graph.has_edge(b, c)
    )


def turan_hypergraph_naive(n: int, pattern: Graph) -> int:
    """Maximum size over all 3-graphs on [n] avoiding the expansion."""
    triples = list(itertools.combinations(range(n), 3))
    best = 0
    for bits in range(1 << len(triples)):
        chosen = [t for i, t in enumerate(triples) if bits >> i & 1]
        if len(chosen) <= best:
            continue
        if not contains_expansion_naive(TripleSystem(n, chosen), pattern):
            best = len(chosen)
    return best


def generalized_turan_naive(n: int, pattern: Graph) -> int:
    """Maximum triangle count over graphs on [n] avoiding the blowup."""
    from crosscut.builders import triangle_blowup

    blowup = triangle_blowup(pattern)
    pairs = list(itertools.combinations(range(n), 2))
    best = 0
    for bits in range(1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if bits >> i & 1]
        g = Graph(n, chosen)
        tri = count_triangles_naive(g)
        if tri <= best:
            continue
        if not contains_subgraph_naive(g, blowup):
            best = tri
    return best


def maxcut_naive(graph: Graph) -> int:
    best = 0
    for bits in range(1 << max(graph.n - 1, 0)):
        side = {v for v in range(graph.n - 1) if bits >> v & 1}
        cut = sum(1 for u, v in graph.edges if (u in side) != (v in side))
        best = max(best, cut)
    return best


def rainbow_naive(coloring, pattern: Graph) -> bool:
    """Exhaustive rainbow-copy search in the complete host."""
    n = coloring.n
    m = len(pattern.edges)
    pat_edges = pattern.edge_list()
    if pattern.n + m > n:
        return False
    for phi in itertools.permutations(range(n), pattern.n):
        rest = [w for w in range(n) if w not in phi]
        for ws in itertools.permutations(rest, m):
            colors = {
                coloring.color(phi[u], phi[v], w)
                for (u, v), w in zip(pat_edges, ws)
            }
            if len(colors) == m:
                return True
    return False
