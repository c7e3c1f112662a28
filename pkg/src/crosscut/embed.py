"""Exact containment search for expansions and blowups.

A pattern graph F sits inside a 3-graph H as an expansion when F embeds
into the shadow of H and every pattern edge can be completed by its own
fresh host vertex.  The search backtracks over shadow embeddings (pattern
vertices by decreasing degree adjusted for connectivity, host candidates by
increasing id) and assigns completion vertices by bipartite matching, so the
decision never depends on greedy slack; a matching failure backtracks into
the shadow phase.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Mapping

from .builders import Coloring, triangle_system
from .config import SearchBudget
from .errors import HypothesisError, InputError
from .structures import Graph, Pair, TripleSystem, sorted_pair
from .trees import crosscut_number, cycle_graph, path_graph


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Embedding:
    """Witness that a pattern's expansion (or blowup) sits in a host.

    core_map[i] is the host image of pattern vertex i; expansion_map pairs
    each sorted pattern edge with its completion vertex.  Core and expansion
    images are jointly injective.
    """

    pattern: Graph
    core_map: tuple[int, ...]
    expansion_map: tuple[tuple[Pair, int], ...]
    host_kind: str  # "3graph" | "graph"

    def expansion_of(self, u: int, v: int) -> int:
        e = sorted_pair(u, v)
        for edge, w in self.expansion_map:
            if edge == e:
                return w
        raise KeyError(e)

    def violations(self, host: TripleSystem | Graph) -> list[str]:
        out = []
        if len(self.core_map) != self.pattern.n:
            out.append("core map size mismatch")
            return out
        used = list(self.core_map) + [w for _, w in self.expansion_map]
        if len(set(used)) != len(used):
            out.append("core/expansion images are not jointly injective")
        if sorted(e for e, _ in self.expansion_map) != self.pattern.edge_list():
            out.append("expansion map does not cover the pattern edges")
            return out
        if any(not 0 <= x < host.n for x in used):
            out.append("image vertex out of host range")
            return out
        for (u, v), w in self.expansion_map:
            a, b = self.core_map[u], self.core_map[v]
            if self.host_kind == "3graph":
                assert isinstance(host, TripleSystem)
                if not host.has_triple(a, b, w):
                    out.append(f"triple for pattern edge {(u, v)} missing")
            else:
                assert isinstance(host, Graph)
                if not (host.has_edge(a, b) and host.has_edge(a, w) and host.has_edge(b, w)):
                    out.append(f"triangle for pattern edge {(u, v)} missing")
        return out

    def validate(self, host: TripleSystem | Graph) -> bool:
        return not self.violations(host)

    def to_json(self) -> dict:
        return {
            "host_kind": self.host_kind,
            "pattern": {
                "n": self.pattern.n,
                "edges": [list(e) for e in self.pattern.edge_list()],
            },
            "core_map": list(self.core_map),
            "expansion_map": [
                {"edge": list(e), "vertex": w} for e, w in self.expansion_map
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Embedding":
        pattern = Graph(data["pattern"]["n"], [tuple(e) for e in data["pattern"]["edges"]])
        return Embedding(
            pattern=pattern,
            core_map=tuple(data["core_map"]),
            expansion_map=tuple(
                (sorted_pair(*item["edge"]), item["vertex"])
                for item in data["expansion_map"]
            ),
            host_kind=data["host_kind"],
        )


@dataclass(frozen=True)
class RainbowCertificate:
    """An embedding whose edge triples all received distinct colors."""

    embedding: Embedding
    colors: tuple[int, ...]


# ---------------------------------------------------------------------------
# bipartite matching over bitmask candidate sets


def _max_matching(masks: list[int]) -> tuple[int, dict[int, int]]:
    """Maximum matching of slots to candidate bits; returns (size, owner)
    with owner mapping vertex -> slot index."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: list[int]) -> bool:
        cand = masks[i] & ~seen[0]
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand ^= bit
            seen[0] |= bit
            if v not in owner or augment(owner[v], seen):
                owner[v] = i
                return True
        return False

    size = 0
    for i in range(len(masks)):
        if augment(i, [0]):
            size += 1
    return size, owner


def _matchable(masks: list[int], need: int) -> bool:
    size, _ = _max_matching(masks)
    return size >= need


def _lex_min_assignment(masks: list[int]) -> list[int] | None:
    """Lexicographically least system of distinct representatives, or None."""
    m = len(masks)
    if not _matchable(masks, m):
        return None
    chosen: list[int] = []
    used = 0
    for i in range(m):
        cand = masks[i] & ~used
        picked = -1
        while cand:
            bit = cand & -cand
            v = bit.bit_length() - 1
            cand ^= bit
            rest = [masks[j] & ~(used | bit) for j in range(i + 1, m)]
            if _matchable(rest, m - i - 1):
                picked = v
                break
        if picked < 0:
            return None
        chosen.append(picked)
        used |= 1 << picked
    return chosen


def _any_assignment(masks: list[int]) -> list[int] | None:
    size, owner = _max_matching(masks)
    if size < len(masks):
        return None
    out = [0] * len(masks)
    for v, i in owner.items():
        out[i] = v
    return out


# ---------------------------------------------------------------------------
# expansion search


def _embedding_order(pattern: Graph) -> list[int]:
    """Decreasing degree with id tie-break, adjusted so each vertex follows
    a placed neighbor whenever the pattern is connected so far."""
    key = lambda v: (-pattern.degree(v), v)
    placed: set[int] = set()
    remaining = set(range(pattern.n))
    order: list[int] = []
    while remaining:
        adjacent = [
            v
            for v in remaining
            if any(w in placed for w in pattern.neighbors(v))
        ]
        pool = adjacent if adjacent else sorted(remaining)
        v = min(pool, key=key)
        order.append(v)
        placed.add(v)
        remaining.remove(v)
    return order


@lru_cache(maxsize=256)
def _vertex_orbit(pattern: Graph, v0: int) -> frozenset[int]:
    """Automorphism orbit of one pattern vertex (patterns are tiny)."""
    degs = pattern.degrees()
    orbit = {v0}
    verts = list(range(pattern.n))
    for perm in itertools.permutations(verts):
        if any(degs[v] != degs[perm[v]] for v in verts):
            continue
        if all(pattern.has_edge(perm[u], perm[v]) for u, v in pattern.edges):
            orbit.add(perm[v0])
    return frozenset(orbit)


def find_expansion(
    host: TripleSystem,
    pattern: Graph,
    deterministic: bool = True,
    budget: SearchBudget | None = None,
) -> Embedding | None:
    """Decide whether the pattern's expansion embeds in the host; exact.

    Returns None iff no embedding exists.  With deterministic=True the
    certificate is canonical: least shadow images in the fixed search order,
    then the lexicographically least completion assignment; orbit pruning is
    only applied otherwise, where any witness is acceptable.
    """
    if not pattern.edges:
        raise InputError("pattern needs at least one edge")
    m = len(pattern.edges)
    if pattern.n + m > host.n:
        return None
    shadow = host.shadow()
    order = _embedding_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    pat_edges = pattern.edge_list()
    completed_at: list[list[int]] = [[] for _ in order]
    for ei, (u, v) in enumerate(pat_edges):
        completed_at[max(pos[u], pos[v])].append(ei)
    full_mask = (1 << host.n) - 1
    orbit = frozenset() if deterministic else _vertex_orbit(pattern, order[0]) - {order[0]}

    images = [-1] * pattern.n
    edge_raw = [0] * m  # host pair-neighborhood mask, set when the edge completes
    active_edges: list[int] = []

    def feasible(core_mask: int) -> bool:
        masks = [edge_raw[e] & ~core_mask for e in active_edges]
        return _matchable(masks, len(masks))

    def dfs(i: int, core_mask: int) -> Embedding | None:
        if budget is not None:
            budget.tick()
        if i == pattern.n:
            masks = [edge_raw[e] & ~core_mask for e in range(m)]
            assign = (
                _lex_min_assignment(masks) if deterministic else _any_assignment(masks)
            )
            if assign is None:
                return None
            return Embedding(
                pattern=pattern,
                core_map=tuple(images),
                expansion_map=tuple(
                    (pat_edges[e], assign[e]) for e in range(m)
                ),
                host_kind="3graph",
            )
        u = order[i]
        placed_nbrs = [w for w in pattern.neighbors(u) if pos[w] < i]
        cand = full_mask
        for w in placed_nbrs:
            cand &= shadow.adj[images[w]]
        cand &= ~core_mask
        if u in orbit and images[order[0]] >= 0:
            cand &= ~((1 << (images[order[0]] + 1)) - 1)
        while cand:
            bit = cand & -cand
            h = bit.bit_length() - 1
            cand ^= bit
            images[u] = h
            new_edges = completed_at[i]
            ok = True
            for e in new_edges:
                a, b = pat_edges[e]
                raw = host.codegree_mask(images[a], images[b])
                if raw == 0:
                    ok = False
                    break
                edge_raw[e] = raw
            if ok:
                active_edges.extend(new_edges)
                if feasible(core_mask | bit):
                    result = dfs(i + 1, core_mask | bit)
                    if result is not None:
                        return result
                del active_edges[len(active_edges) - len(new_edges):]
            images[u] = -1
        return None

    return dfs(0, 0)


def find_blowup(
    host: Graph,
    pattern: Graph,
    deterministic: bool = True,
    budget: SearchBudget | None = None,
) -> Embedding | None:
    """Decide whether the pattern's triangle blowup embeds in the host graph
    by searching its triangle system; the certificate is translated back."""
    emb = find_expansion(triangle_system(host), pattern, deterministic, budget)
    if emb is None:
        return None
    return replace(emb, host_kind="graph")


# ---------------------------------------------------------------------------
# partial completion


def _pattern_from_pairs(pairs: list[Pair]) -> tuple[Graph, list[int]]:
    verts = sorted({x for p in pairs for x in p})
    index = {v: i for i, v in enumerate(verts)}
    pattern = Graph(len(verts), [(index[u], index[v]) for u, v in pairs])
    return pattern, verts


def complete_partial_expansion(
    host: TripleSystem,
    shadow_copy: Iterable[Pair],
    pre_assigned: Mapping[Pair, int] | None = None,
) -> Embedding | None:
    """Extend a shadow copy plus a partial completion to a full expansion.

    The remaining edges get distinct fresh vertices via bipartite matching,
    so success is guaranteed whenever every unassigned pair has enough
    codegree (3m suffices, as does |F| + |V(F)|); None means no system of
    distinct representatives exists for this shadow copy.
    """
    pairs = [sorted_pair(*p) for p in shadow_copy]
    if len(set(pairs)) != len(pairs) or not pairs:
        raise InputError("shadow copy must be a nonempty list of distinct pairs")
    for p in pairs:
        if host.codegree_mask(*p) == 0:
            raise InputError(f"pair {p} is not in the host shadow")
    core = {x for p in pairs for x in p}
    core_mask = sum(1 << x for x in core)
    pre = {sorted_pair(*k): w for k, w in (pre_assigned or {}).items()}
    for p, w in pre.items():
        if p not in set(pairs):
            raise InputError(f"pre-assigned pair {p} is not in the shadow copy")
        if w in core:
            raise InputError(f"pre-assigned vertex {w} lies in the core")
        if not (host.codegree_mask(*p) >> w) & 1:
            raise InputError(f"pre-assigned triple {p} + {w} is not a host edge")
    ws = list(pre.values())
    if len(set(ws)) != len(ws):
        raise InputError("pre-assigned vertices must be distinct")
    pre_mask = sum(1 << w for w in ws)

    unassigned = [p for p in sorted(pairs) if p not in pre]
    masks = [
        host.codegree_mask(*p) & ~core_mask & ~pre_mask for p in unassigned
    ]
    assign = _lex_min_assignment(masks)
    if assign is None:
        return None
    completion = dict(pre)
    completion.update(zip(unassigned, assign))
    pattern, verts = _pattern_from_pairs(pairs)
    index = {v: i for i, v in enumerate(verts)}
    return Embedding(
        pattern=pattern,
        core_map=tuple(verts),
        expansion_map=tuple(
            sorted(
                (sorted_pair(index[u], index[v]), completion[(u, v)])
                for u, v in pairs
            )
        ),
        host_kind="3graph",
    )


# ---------------------------------------------------------------------------
# guaranteed tree embedding through two apex sets


def embed_tree_two_sets(
    host: TripleSystem,
    tree: Graph,
    s1: Iterable[int],
    s2: Iterable[int],
    v1: Iterable[int],
    v2: Iterable[int],
    g1: Graph,
    g2: Graph,
) -> Embedding | None:
    """Embed a tree's expansion using two apex sets with common-link graphs.

    Structure is validated (typed errors name the violated hypothesis); the
    embedding follows the constructive recipe -- maximum-independent crosscut
    pair, a vertex whose non-leaf neighborhood has size at most one, shared
    anchor in V1 and V2, matching completion -- and falls back to the exact
    search when slack hypotheses (the 3|V(T)| degree bound) are relaxed.
    """
    if not tree.is_tree() or not tree.edges:
        raise HypothesisError("tree", "pattern must be a tree with >= 1 edge")
    sigma, pair = crosscut_number(tree)
    t = sigma - 1
    s1s, s2s = set(s1), set(s2)
    v1s, v2s = set(v1), set(v2)
    if len(s1s) != t or len(s2s) != t:
        raise HypothesisError("apex-size", f"apex sets must have size sigma-1 = {t}")
    if s1s == s2s:
        raise HypothesisError("apex-distinct", "the two apex sets must differ")
    for name, vs in (("S1", s1s), ("S2", s2s), ("V1", v1s), ("V2", v2s)):
        if any(not 0 <= x < host.n for x in vs):
            raise HypothesisError("range", f"{name} contains an out-of-range vertex")
    if (v1s | v2s) & (s1s | s2s):
        raise HypothesisError("disjoint", "V1, V2 must avoid the apex sets")
    if not v1s & v2s:
        raise HypothesisError("overlap", "V1 and V2 must intersect")
    for name, g, vs in (("G1", g1, v1s), ("G2", g2, v2s)):
        if g.n != host.n:
            raise HypothesisError("carrier", f"{name} must live on the host vertex set")
        if any(u not in vs or v not in vs for u, v in g.edges):
            raise HypothesisError("carrier", f"{name} has an edge outside its set")
    for name, g, ss in (("G1", g1, s1s), ("G2", g2, s2s)):
        for x in ss:
            for u, v in g.edges:
                if not host.has_triple(x, u, v):
                    raise HypothesisError(
                        "link", f"{name} is not contained in the link of apex {x}"
                    )

    recipe = _two_set_recipe(host, tree, pair, s1s, s2s, v1s, v2s, g1, g2)
    if recipe is not None and recipe.validate(host):
        return recipe
    return find_expansion(host, tree, deterministic=True)


def _two_set_recipe(host, tree, pair, s1s, s2s, v1s, v2s, g1, g2):
    iset = set(pair.independent)
    candidates = [
        v
        for v in sorted(iset)
        if sum(1 for w in tree.neighbors(v) if tree.degree(w) > 1) <= 1
    ]
    if not candidates:
        return None
    v_star = candidates[0]
    non_leaf = [w for w in tree.neighbors(v_star) if tree.degree(w) > 1]
    u_star = non_leaf[0] if non_leaf else min(tree.neighbors(v_star))
    leaf_nbrs = sorted(set(tree.neighbors(v_star)) - {u_star})

    v_prime = min(s2s - s1s)
    shared = [h for h in sorted(v1s & v2s) if g1.adj[h] and g2.adj[h]]
    if not shared:
        return None
    u_prime = shared[0]
    leaf_pool = [h for h in sorted(v2s - {u_prime}) if g2.adj[h]]
    n_images = leaf_pool[: len(leaf_nbrs)]
    if len(n_images) < len(leaf_nbrs):
        return None
    v1_free = sorted(v1s - set(n_images))

    images: dict[int, int] = {v_star: v_prime, u_star: u_prime}
    for leaf, img in zip(leaf_nbrs, n_images):
        images[leaf] = img

    rest_i = sorted(iset - {v_star})
    for x, s in zip(rest_i, sorted(s1s)):
        images[x] = s

    # grow the leftover-edge forest inside G1 restricted to the free part
    free_mask = sum(1 << x for x in v1_free)
    used = set(images.values())
    r_edges = list(pair.leftover)
    r_adj: dict[int, list[int]] = {}
    for a, b in r_edges:
        r_adj.setdefault(a, []).append(b)
        r_adj.setdefault(b, []).append(a)
    done: set[int] = set()
    roots = ([u_star] if u_star in r_adj else []) + sorted(r_adj)
    for root in roots:
        if root in done:
            continue
        if root not in images:
            spot = next(
                (
                    h
                    for h in v1_free
                    if h not in used and g1.adj[h] & free_mask
                ),
                None,
            )
            if spot is None:
                return None
            images[root] = spot
            used.add(spot)
        done.add(root)
        stack = [root]
        while stack:
            a = stack.pop()
            for b in r_adj[a]:
                if b in done:
                    continue
                done.add(b)
                opts = g1.adj[images[a]] & free_mask
                h = next((x for x in _bits(opts) if x not in used), None)
                if h is None:
                    return None
                images[b] = h
                used.add(h)
                stack.append(b)

    # remaining tree vertices have all their edges into I: park them in V1
    for v in range(tree.n):
        if v in images:
            continue
        spot = next(
            (h for h in v1_free if h not in used and g1.adj[h]), None
        )
        if spot is None:
            return None
        images[v] = spot
        used.add(spot)

    # leftover apexes complete the leftover edges
    leftover_apexes = sorted(s1s - {images[x] for x in rest_i})
    if len(leftover_apexes) != len(r_edges):
        return None
    pre = {}
    for (a, b), s in zip(sorted(r_edges), leftover_apexes):
        pre[sorted_pair(images[a], images[b])] = s

    shadow_pairs = []
    for a, b in tree.edge_list():
        p = sorted_pair(images[a], images[b])
        if host.codegree_mask(*p) == 0:
            return None
        shadow_pairs.append(p)
    if len(set(shadow_pairs)) != len(shadow_pairs):
        return None
    try:
        completed = complete_partial_expansion(host, shadow_pairs, pre)
    except InputError:
        return None
    if completed is None:
        return None
    by_pair = dict(
        (tuple(sorted((completed.core_map[u], completed.core_map[v]))), w)
        for (u, v), w in completed.expansion_map
    )
    return Embedding(
        pattern=tree,
        core_map=tuple(images[v] for v in range(tree.n)),
        expansion_map=tuple(
            (e, by_pair[sorted_pair(images[e[0]], images[e[1]])])
            for e in tree.edge_list()
        ),
        host_kind="3graph",
    )


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


# ---------------------------------------------------------------------------
# varying the length of an alternating cycle witness


@dataclass(frozen=True)
class AlternatingWitness:
    """Hub walk w[0..] with interleaved vertices x[i] between w[i] and its
    successor, each triple {w[i], x[i], w[i+1]} a host edge.  closed=True
    encodes a cycle witness (the last triple wraps around)."""

    hubs: tuple[int, ...]
    interleaved: tuple[int, ...]
    closed: bool = True


def vary_cycle_length(
    host: TripleSystem, witness: AlternatingWitness
) -> dict[int, Embedding]:
    """Produce an expansion embedding of every cycle (or path) length in
    [t, 2t] from one alternating witness with codegree slack 6t+6.

    Lengths below 3 are clipped for cycle witnesses, with a warning.
    """
    w = witness.hubs
    x = witness.interleaved
    t = len(x)
    if witness.closed:
        if len(w) != t or t < 2:
            raise HypothesisError(
                "shape", "cycle witness needs equal hub and interleave counts >= 2"
            )
    else:
        if len(w) != t + 1 or t < 1:
            raise HypothesisError("shape", "path witness needs one more hub than gaps")
    all_verts = list(w) + list(x)
    if len(set(all_verts)) != len(all_verts):
        raise HypothesisError("distinct", "witness vertices must be distinct")
    gaps = [(w[i], x[i], w[(i + 1) % len(w)]) for i in range(t)]
    need = 6 * t + 6
    for a, mid, b in gaps:
        if not host.has_triple(a, mid, b):
            raise HypothesisError("triples", f"{(a, mid, b)} is not a host edge")
        if min(host.codegree(a, mid), host.codegree(mid, b)) < need:
            raise HypothesisError(
                "codegree", f"pairs through {mid} need codegree >= {need}"
            )

    lengths = list(range(t, 2 * t + 1))
    if witness.closed and lengths and lengths[0] < 3:
        warnings.warn("cycle lengths below 3 clipped from the witness range")
        lengths = [l for l in lengths if l >= 3]

    out: dict[int, Embedding] = {}
    for ell in lengths:
        k = ell - t
        seq: list[int] = []
        for i in range(k):
            seq += [w[i], x[i]]
        seq += list(w[k:])
        if witness.closed:
            edge_pairs = [
                sorted_pair(seq[i], seq[(i + 1) % ell]) for i in range(ell)
            ]
            pattern = cycle_graph(ell)
        else:
            edge_pairs = [sorted_pair(seq[i], seq[i + 1]) for i in range(ell)]
            pattern = path_graph(ell)
        pre: dict[Pair, int] = {}
        for j in range(k, t):
            pre[sorted_pair(w[j], w[(j + 1) % len(w)])] = x[j]
        completed = complete_partial_expansion(host, edge_pairs, pre)
        if completed is None:
            raise AssertionError(
                "completion is guaranteed under the witness codegree bound"
            )
        by_pair = dict(
            (
                sorted_pair(completed.core_map[u], completed.core_map[v]),
                ww,
            )
            for (u, v), ww in completed.expansion_map
        )
        emb = Embedding(
            pattern=pattern,
            core_map=tuple(seq),
            expansion_map=tuple(
                sorted(
                    (
                        sorted_pair(i, (i + 1) % ell)
                        if witness.closed
                        else sorted_pair(i, i + 1),
                        by_pair[edge_pairs[i]],
                    )
                    for i in range(ell)
                )
            ),
            host_kind="3graph",
        )
        if not emb.validate(host):
            raise AssertionError("witness-derived embedding failed validation")
        out[ell] = emb
    return out


# ---------------------------------------------------------------------------
# rainbow search


def find_rainbow_expansion(
    coloring: Coloring,
    pattern: Graph,
    budget: SearchBudget | None = None,
) -> RainbowCertificate | None:
    """Exact search for an expansion of the pattern inside the complete
    3-graph whose edge triples all receive distinct colors."""
    if not pattern.edges:
        raise InputError("pattern needs at least one edge")
    n = coloring.n
    m = len(pattern.edges)
    if pattern.n + m > n:
        return None
    order = _embedding_order(pattern)
    images = [-1] * pattern.n
    pat_edges = pattern.edge_list()

    def assign(idx: int, used_mask: int, used_colors: set[int], ws: list[int]):
        if budget is not None:
            budget.tick()
        if idx == m:
            return list(ws)
        u, v = pat_edges[idx]
        a, b = images[u], images[v]
        for w in range(n):
            if (used_mask >> w) & 1:
                continue
            c = coloring.color(a, b, w)
            if c in used_colors:
                continue
            used_colors.add(c)
            ws.append(w)
            got = assign(idx + 1, used_mask | (1 << w), used_colors, ws)
            if got is not None:
                return got
            ws.pop()
            used_colors.remove(c)
        return None

    def place(i: int, core_mask: int):
        if budget is not None:
            budget.tick()
        if i == pattern.n:
            got = assign(0, core_mask, set(), [])
            if got is None:
                return None
            emb = Embedding(
                pattern=pattern,
                core_map=tuple(images),
                expansion_map=tuple(
                    (pat_edges[e], got[e]) for e in range(m)
                ),
                host_kind="3graph",
            )
            colors = tuple(
                coloring.color(images[u], images[v], got[e])
                for e, (u, v) in enumerate(pat_edges)
            )
            return RainbowCertificate(emb, colors)
        u = order[i]
        for h in range(n):
            if (core_mask >> h) & 1:
                continue
            images[u] = h
            got = place(i + 1, core_mask | (1 << h))
            if got is not None:
                return got
            images[u] = -1
        return None

    return place(0, 0)
