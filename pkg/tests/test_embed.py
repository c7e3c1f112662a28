import itertools
import random

import pytest

from crosscut.builders import (
    constant_coloring,
    expansion,
    lower_bound_coloring,
    s_construction,
    s_graph,
    triangle_blowup,
    triangle_system,
)
from crosscut.embed import (
    AlternatingWitness,
    complete_partial_expansion,
    embed_tree_two_sets,
    find_blowup,
    find_expansion,
    find_rainbow_expansion,
    vary_cycle_length,
)
from crosscut.errors import HypothesisError, InputError
from crosscut.structures import Graph, TripleSystem
from crosscut.trees import complete_graph, cycle_graph, path_graph, star_graph

from conftest import random_graph, random_triple_system
from oracles import contains_expansion_naive, contains_subgraph_naive, rainbow_naive


def complete_3graph(n):
    return TripleSystem(n, itertools.combinations(range(n), 3))


PATTERNS = [
    path_graph(1),
    path_graph(2),
    path_graph(3),
    path_graph(4),
    path_graph(5),
    cycle_graph(3),
    cycle_graph(4),
    cycle_graph(5),
    star_graph(3),
    Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),  # double star
]


class TestFindExpansion:
    def test_pattern_in_its_own_expansion(self):
        for pat in (path_graph(3), cycle_graph(5), star_graph(4)):
            host = expansion(pat)
            emb = find_expansion(host, pat)
            assert emb is not None and emb.validate(host)

    def test_known_small_instances(self):
        assert find_expansion(s_construction(10, 2), path_graph(5)) is None
        assert find_expansion(complete_3graph(6), cycle_graph(4)) is None
        emb = find_expansion(complete_3graph(8), cycle_graph(4))
        assert emb is not None and emb.validate(complete_3graph(8))

    def test_rejects_edgeless_pattern(self):
        with pytest.raises(InputError):
            find_expansion(complete_3graph(5), Graph(3, []))

    def test_isolated_pattern_vertices_need_room(self):
        pattern = Graph(3, [(0, 1)])  # vertex 2 is isolated but must embed
        tight = expansion(Graph(2, [(0, 1)]))  # only 3 vertices
        assert find_expansion(tight, pattern) is None
        roomy = TripleSystem(4, [(0, 1, 2)])
        emb = find_expansion(roomy, pattern)
        assert emb is not None and emb.validate(roomy)

    def test_agreement_with_naive_on_corpus(self):
        rng = random.Random(97)
        hosts = [
            s_construction(7, 1),
            s_construction(7, 2),
            s_construction(8, 1),
            complete_3graph(7),
            expansion(path_graph(3)),
            TripleSystem(6, []),
            TripleSystem(7, [(0, 1, 2)]),
        ]
        hosts += [
            random_triple_system(rng, rng.randint(5, 8), rng.uniform(0.1, 0.7))
            for _ in range(10)
        ]
        for host in hosts:
            for pat in PATTERNS:
                got = find_expansion(host, pat)
                expect = contains_expansion_naive(host, pat)
                assert (got is not None) == expect, (host, pat.edge_list())
                if got is not None:
                    assert got.validate(host)

    def test_decision_independent_of_deterministic_flag(self):
        rng = random.Random(5)
        for _ in range(15):
            host = random_triple_system(rng, rng.randint(5, 8), rng.uniform(0.1, 0.6))
            for pat in (path_graph(2), cycle_graph(3), star_graph(3)):
                a = find_expansion(host, pat, deterministic=True)
                b = find_expansion(host, pat, deterministic=False)
                assert (a is None) == (b is None)
                if b is not None:
                    assert b.validate(host)

    def test_deterministic_certificate_is_reproducible(self):
        host = complete_3graph(8)
        a = find_expansion(host, cycle_graph(4))
        b = find_expansion(host, cycle_graph(4))
        assert a == b


class TestFindBlowup:
    def test_blowup_in_itself(self):
        for pat in (path_graph(2), cycle_graph(4)):
            host = triangle_blowup(pat)
            emb = find_blowup(host, pat)
            assert emb is not None and emb.validate(host)

    def test_bipartite_host_is_always_free(self):
        from crosscut.builders import balanced_bipartite

        assert find_blowup(balanced_bipartite(8), path_graph(2)) is None

    def test_joined_graph_examples(self):
        host = s_graph(9, 1)
        assert find_blowup(host, path_graph(3)) is None
        emb = find_blowup(host, path_graph(2))
        assert emb is not None and emb.validate(host)

    def test_agreement_with_direct_subgraph_search(self):
        rng = random.Random(41)
        hosts = [s_graph(8, 1), complete_graph(8), triangle_blowup(cycle_graph(3))]
        hosts += [
            random_graph(rng, rng.randint(5, 8), rng.uniform(0.2, 0.8))
            for _ in range(12)
        ]
        for host in hosts:
            for pat in PATTERNS[:8]:
                got = find_blowup(host, pat)
                expect = contains_subgraph_naive(host, triangle_blowup(pat))
                assert (got is not None) == expect
                if got is not None:
                    assert got.validate(host)

    def test_blowup_equivalence_with_triangle_system(self):
        rng = random.Random(13)
        for _ in range(15):
            host = random_graph(rng, rng.randint(5, 8), rng.uniform(0.3, 0.8))
            for pat in (path_graph(2), cycle_graph(3), path_graph(3)):
                via_triangles = find_expansion(triangle_system(host), pat)
                direct = contains_subgraph_naive(host, triangle_blowup(pat))
                assert (via_triangles is not None) == direct


class TestCompletePartial:
    def test_high_codegree_always_completes(self):
        host = complete_3graph(12)
        pairs = [(0, 1), (1, 2), (2, 3)]
        emb = complete_partial_expansion(host, pairs)
        assert emb is not None and emb.validate(host)

    def test_zero_codegree_pair_rejected(self):
        host = TripleSystem(6, [(0, 1, 2)])
        with pytest.raises(InputError):
            complete_partial_expansion(host, [(0, 1), (3, 4)])

    def test_hall_violation_returns_none(self):
        # two pairs whose only completion is the same third vertex
        host = TripleSystem(5, [(0, 1, 4), (2, 3, 4)])
        assert complete_partial_expansion(host, [(0, 1), (2, 3)]) is None

    def test_preassignment_validation(self):
        host = complete_3graph(8)
        with pytest.raises(InputError):
            complete_partial_expansion(host, [(0, 1)], {(0, 1): 1})  # inside core
        with pytest.raises(InputError):
            complete_partial_expansion(host, [(0, 1)], {(2, 3): 5})  # not in copy
        emb = complete_partial_expansion(host, [(0, 1), (1, 2)], {(0, 1): 7})
        assert emb is not None and emb.expansion_of(0, 1) == 7

    def test_guarantee_threshold(self):
        # every unassigned pair with codegree >= |F| + |V(F)| must complete
        rng = random.Random(7)
        for _ in range(20):
            host = random_triple_system(rng, 9, 0.8)
            pat = path_graph(3)
            shadow = host.shadow()
            copy = None
            for phi in itertools.permutations(range(9), 4):
                if all(shadow.has_edge(phi[u], phi[v]) for u, v in pat.edges):
                    copy = [tuple(sorted((phi[u], phi[v]))) for u, v in pat.edges]
                    break
            if copy is None:
                continue
            threshold = len(pat.edges) + pat.n
            if all(host.codegree(*p) >= threshold for p in copy):
                assert complete_partial_expansion(host, copy) is not None


class TestEmbedTreeTwoSets:
    def _host(self):
        v1 = list(range(2, 16))
        v2 = list(range(9, 23))
        g1 = Graph(23, itertools.combinations(v1, 2))
        g2 = Graph(23, itertools.combinations(v2, 2))
        triples = [(0, a, b) for a, b in g1.edges] + [(1, c, d) for c, d in g2.edges]
        return TripleSystem(23, triples), v1, v2, g1, g2

    def test_full_hypotheses_succeed(self):
        host, v1, v2, g1, g2 = self._host()
        emb = embed_tree_two_sets(host, path_graph(3), {0}, {1}, v1, v2, g1, g2)
        assert emb is not None and emb.validate(host)

    def test_star_and_spider_patterns(self):
        host, v1, v2, g1, g2 = self._host()
        for tree in (path_graph(3), star_graph(2), Graph(4, [(0, 1), (1, 2), (1, 3)])):
            if len(tree.edges) < 1:
                continue
            from crosscut.trees import crosscut_value

            if crosscut_value(tree) - 1 != 1:
                continue
            emb = embed_tree_two_sets(host, tree, {0}, {1}, v1, v2, g1, g2)
            assert emb is not None and emb.validate(host)

    def test_empty_overlap_is_a_hypothesis_error(self):
        host, v1, v2, g1, g2 = self._host()
        with pytest.raises(HypothesisError) as err:
            embed_tree_two_sets(
                host,
                path_graph(3),
                {0},
                {1},
                list(range(2, 9)),
                list(range(16, 23)),
                Graph(23, itertools.combinations(range(2, 9), 2)),
                Graph(23, itertools.combinations(range(16, 23), 2)),
            )
        assert err.value.hypothesis == "overlap"

    def test_degree_one_with_exact_cover_tree_still_succeeds(self):
        g1 = Graph(8, [(2, 3), (4, 5)])
        g2 = Graph(8, [(3, 4), (6, 7)])
        host = TripleSystem(8, [(0, 2, 3), (0, 4, 5), (1, 3, 4), (1, 6, 7)])
        emb = embed_tree_two_sets(
            host, path_graph(3), {0}, {1}, {2, 3, 4, 5}, {3, 4, 6, 7}, g1, g2
        )
        assert emb is not None and emb.validate(host)
        assert contains_expansion_naive(host, path_graph(3))

    def test_link_hypothesis_checked(self):
        host = TripleSystem(8, [(0, 2, 3)])
        with pytest.raises(HypothesisError) as err:
            embed_tree_two_sets(
                host,
                path_graph(3),
                {0},
                {1},
                {2, 3, 4, 5},
                {3, 4, 6, 7},
                Graph(8, [(2, 3), (4, 5)]),
                Graph(8, [(3, 4)]),
            )
        assert err.value.hypothesis in ("link", "carrier")


class TestVaryCycleLength:
    def test_dense_host_witness(self):
        host = complete_3graph(32)
        witness = AlternatingWitness((0, 1, 2, 3), (4, 5, 6, 7), closed=True)
        out = vary_cycle_length(host, witness)
        assert sorted(out) == [4, 5, 6, 7, 8]
        for ell, emb in out.items():
            assert emb.validate(host)
            assert len(emb.pattern.edges) == ell

    def test_short_cycle_range_is_clipped(self):
        host = complete_3graph(22)
        with pytest.warns(UserWarning):
            out = vary_cycle_length(
                host, AlternatingWitness((0, 1), (2, 3), closed=True)
            )
        assert sorted(out) == [3, 4]

    def test_path_variant(self):
        host = complete_3graph(22)
        out = vary_cycle_length(
            host, AlternatingWitness((0, 1, 2), (3, 4), closed=False)
        )
        assert sorted(out) == [2, 3, 4]
        for emb in out.values():
            assert emb.validate(host)

    def test_codegree_validation(self):
        host = TripleSystem(8, [(0, 2, 1), (1, 3, 0)])
        with pytest.raises(HypothesisError) as err:
            vary_cycle_length(host, AlternatingWitness((0, 1), (2, 3), closed=True))
        assert err.value.hypothesis == "codegree"

    def test_structured_nonuniform_host(self):
        # dense apex-free zone plus the wheel structure, not fully complete
        rng = random.Random(31)
        base = [
            t
            for t in itertools.combinations(range(26), 3)
            if rng.random() < 0.9
        ]
        witness = AlternatingWitness((0, 1, 2), (3, 4, 5), closed=True)
        needed = [(0, 3, 1), (1, 4, 2), (2, 5, 0)]
        host = TripleSystem(26, base + [tuple(sorted(t)) for t in needed])
        try:
            out = vary_cycle_length(host, witness)
        except HypothesisError:
            return  # random host missed the codegree floor; nothing to check
        for emb in out.values():
            assert emb.validate(host)


class TestRainbow:
    def test_all_distinct_coloring_contains_pattern(self):
        triples = list(itertools.combinations(range(7), 3))
        from crosscut.builders import Coloring

        chi = Coloring(7, {t: i for i, t in enumerate(triples)})
        cert = find_rainbow_expansion(chi, path_graph(2))
        assert cert is not None
        assert len(set(cert.colors)) == 2

    def test_constant_coloring_has_no_rainbow(self):
        chi = constant_coloring(8)
        assert find_rainbow_expansion(chi, path_graph(2)) is None

    def test_agreement_with_naive(self):
        rng = random.Random(3)
        triples = list(itertools.combinations(range(6), 3))
        from crosscut.builders import Coloring

        for _ in range(10):
            chi = Coloring(
                6, {t: rng.randint(0, 4) for t in triples}
            )
            for pat in (path_graph(1), path_graph(2), cycle_graph(3)):
                got = find_rainbow_expansion(chi, pat)
                assert (got is not None) == rainbow_naive(chi, pat)
                if got is not None:
                    assert len(set(got.colors)) == len(pat.edges)

    def test_lower_bound_certificate_blocks_cycle_augmentation(self):
        chi = lower_bound_coloring(s_construction(8, 1))
        c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert find_rainbow_expansion(chi, c4) is None
