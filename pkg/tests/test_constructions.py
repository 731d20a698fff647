import math

import pytest

from gridblob.constructions import build_2d, build_genus, build_treewidth, build_universal, plan_stars
from gridblob.errors import GraphError, TreeDecompositionError
from gridblob.gadgets import (
    clique_union, grid_graph, nested_triangles, random_degree4_graph, random_outerplanar_embedding,
    random_partial_ktree, random_planar_embedding, random_tree,
)
from gridblob.graph_model import Graph, PlaneEmbedding, embed_planar
from gridblob.grid_core import rep_peeling_depth, size, verify
from gridblob.oracle import pixel_lower_bound
from gridblob.tree_decomp import NiceTreeDecomposition, td_exact_small, td_heuristic, to_nice
from conftest import complete, cycle, path, star


class TestUniversal:

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 25])
    def test_complete_graph_size(self, n):
        r = build_universal(complete(n))
        assert r.dimension == 3
        assert size(r) == n * (4 * n - 1) + n * (n - 1) // 2
        assert verify(r, complete(n)).valid

    def test_k10(self):
        assert size(build_universal(complete(10))) == 435

    @pytest.mark.parametrize("g", [path(7), Graph(4), star(6)], ids=["path", "edgeless", "star"])
    def test_sparse_graphs(self, g):
        r = build_universal(g)
        assert size(r) == g.n * (4 * g.n - 1) + g.m
        assert verify(r, g).valid

    def test_needs_a_vertex(self):
        with pytest.raises(GraphError):
            build_universal(Graph(0))


def nice_for(g: Graph, exact: bool = False):
    return to_nice(td_exact_small(g) if exact else td_heuristic(g))


# frozen across the whole suite; the tree layout contributes the log factor
GROWTH_CONSTANT = 1000


def assert_treewidth_growth(g: Graph, nice: NiceTreeDecomposition):
    r = build_treewidth(g, nice)
    assert verify(r, g).valid
    if g.n >= 16:
        assert size(r) <= GROWTH_CONSTANT * g.n * math.log2(g.n) * (nice.width + 1)


class TestTreewidth:

    @pytest.mark.parametrize("g", [
        path(8), cycle(7), complete(4), grid_graph(3, 3), star(6), Graph.from_edges(5, [(0, 1), (3, 4)]),
    ], ids=["path", "cycle", "k4", "grid", "star", "forest"])
    def test_small_graphs(self, g):
        nice = nice_for(g, exact=True)
        r = build_treewidth(g, nice)
        assert verify(r, g).valid
        lo, hi = r.bounding_box()
        assert lo[2] >= 1
        assert hi[2] - lo[2] < 3 * (nice.width + 1)

    @pytest.mark.parametrize("seed", range(3))
    def test_random_trees(self, seed):
        g = random_tree(20, seed)
        r = build_treewidth(g, nice_for(g))
        assert verify(r, g).valid
        lo, hi = r.bounding_box()
        assert hi[2] - lo[2] < 6

    @pytest.mark.parametrize("seed", range(3))
    def test_partial_ktrees(self, seed):
        g = random_partial_ktree(15, 2, seed)
        assert verify(build_treewidth(g, nice_for(g)), g).valid

    @pytest.mark.parametrize("n, k", [(16, 1), (24, 2), (32, 3), (40, 4)])
    def test_size_growth(self, n, k):
        g = random_partial_ktree(n, k, seed=n)
        assert_treewidth_growth(g, nice_for(g))

    def test_clique_union_growth(self):
        g = clique_union(4, 5)
        assert_treewidth_growth(g, nice_for(g))

    def test_petersen(self, petersen):
        assert verify(build_treewidth(petersen, nice_for(petersen)), petersen).valid

    def test_foreign_decomposition(self):
        with pytest.raises(TreeDecompositionError):
            build_treewidth(cycle(4), nice_for(path(4)))

    def test_empty_graph(self):
        empty = NiceTreeDecomposition(None, {}, {}, {})
        assert size(build_treewidth(Graph(0), empty)) == 0

    def test_star_plan_uses_node_cells(self):
        g = cycle(4)
        nice = nice_for(g)
        cells = {node: {(node, 0), (node, 1)} for node in nice.bags}
        plan = plan_stars(nice, g, cells)
        assert set(plan.owner) == set(plan.anchors)
        assert all(plan.anchors[node] == (node, 0) for node in plan.anchors)


class TestPlanar:

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_nested_triangles_meet_the_lower_bound(self, k):
        e = nested_triangles(k)
        r = build_2d(e)
        assert r.dimension == 2
        assert verify(r, e.graph).valid
        assert size(r) >= pixel_lower_bound(k)

    @pytest.mark.parametrize("seed", range(4))
    def test_outerplanar(self, seed):
        e = random_outerplanar_embedding(12, seed)
        assert verify(build_2d(e), e.graph).valid

    @pytest.mark.parametrize("seed", range(4))
    def test_random_planar(self, seed):
        e = random_planar_embedding(14, seed)
        assert verify(build_2d(e), e.graph).valid

    def test_nested_triangles_cannot_be_peeled_at_once(self):
        assert rep_peeling_depth(build_2d(nested_triangles(2))) >= 2

    @pytest.mark.parametrize("seed", range(4))
    def test_size_respects_the_peeling_bound(self, seed):
        for e in (random_outerplanar_embedding(12, seed), random_planar_embedding(14, seed)):
            r = build_2d(e)
            assert size(r) >= pixel_lower_bound(rep_peeling_depth(r))

    def test_high_degree_tree(self):
        g = star(9)
        r = build_2d(PlaneEmbedding.for_forest(g))
        assert verify(r, g).valid
        assert rep_peeling_depth(r) >= 1

    def test_disconnected(self):
        g = complete(4).disjoint_union(cycle(5))
        assert verify(build_2d(embed_planar(g)), g).valid

    def test_empty(self):
        assert size(build_2d(embed_planar(Graph(0)))) == 0


class TestGenus:

    @pytest.mark.parametrize("g", [complete(5), complete(6), complete(7)], ids=["k5", "k6", "k7"])
    def test_cliques(self, g):
        r = build_genus(g)
        assert r.dimension == 3
        assert verify(r, g).valid

    def test_k33(self, k33):
        assert verify(build_genus(k33), k33).valid

    def test_petersen(self, petersen):
        assert verify(build_genus(petersen), petersen).valid

    @pytest.mark.parametrize("seed", range(3))
    def test_random_degree4(self, seed):
        g = random_degree4_graph(15, 25, seed)
        assert verify(build_genus(g), g).valid

    def test_custom_rotation(self):
        g = complete(6)
        rotation = {v: tuple(reversed(g.neighbors(v))) for v in range(g.n)}
        assert verify(build_genus(g, rotation), g).valid

    def test_empty(self):
        assert size(build_genus(Graph(0))) == 0


@pytest.mark.slow
class TestAtScale:

    @pytest.mark.parametrize("seed", range(50))
    def test_partial_ktrees(self, seed):
        g = random_partial_ktree(50 + 3 * seed, 1 + seed % 5, seed)
        assert_treewidth_growth(g, nice_for(g))

    @pytest.mark.parametrize("seed", range(20))
    def test_trees(self, seed):
        g = random_tree(20 + 9 * seed, seed)
        assert_treewidth_growth(g, nice_for(g))

    @pytest.mark.parametrize("q, c", [(2, 40), (3, 20), (4, 12), (5, 10), (6, 8)])
    def test_clique_unions(self, q, c):
        g = clique_union(q, c)
        assert_treewidth_growth(g, nice_for(g))

    @pytest.mark.parametrize("seed", range(50))
    def test_outerplanar(self, seed):
        e = random_outerplanar_embedding(20 + 2 * seed, seed)
        r = build_2d(e)
        assert verify(r, e.graph).valid
        assert size(r) >= pixel_lower_bound(rep_peeling_depth(r))

    @pytest.mark.parametrize("seed", range(50))
    def test_planar(self, seed):
        e = random_planar_embedding(20 + 2 * seed, seed)
        r = build_2d(e)
        assert verify(r, e.graph).valid
        assert size(r) >= pixel_lower_bound(rep_peeling_depth(r))
