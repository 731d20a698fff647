import networkx as nx
import pytest

from gridblob.errors import GadgetError
from gridblob.gadgets import (
    CageParams, cage, cage_attach, clique_union, grid_graph, lower_bound_components, nested_triangles,
    random_degree4_graph, random_outerplanar_embedding, random_partial_ktree, random_planar_graph,
    random_tree, wheel_gadget, wheel_representation,
)
from gridblob.graph_model import AngledGraph, Graph, peel_embedding
from gridblob.grid_core import contact_graph, size, verify
from gridblob.tree_decomp import td_exact_small
from conftest import complete, path


def k2_east_west():
    return AngledGraph(complete(2), {(0, 1): 'E', (1, 0): 'W'})


def square():
    g = Graph.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    ports = {
        (0, 1): 'E', (1, 0): 'W', (2, 3): 'E', (3, 2): 'W',
        (0, 2): 'N', (2, 0): 'S', (1, 3): 'N', (3, 1): 'S',
    }
    return AngledGraph(g, ports)


class TestWheel:

    def test_counts(self):
        g = wheel_gadget(k2_east_west())
        assert g.n == 19
        assert g.m == 26

    def test_every_block_is_a_subdivided_wheel(self):
        g = wheel_gadget(k2_east_west())
        assert g.degree(0) == 4
        assert sorted(g.degree(v) for v in range(1, 9)) == [2, 2, 2, 2, 3, 3, 3, 4]
        assert g.degree(18) == 2

    def test_representation_realizes_the_gadget(self):
        a = k2_east_west()
        r = wheel_representation(a, {0: (0, 0), 1: (1, 0)})
        assert verify(r, wheel_gadget(a)).valid
        assert size(r) == 19

    def test_square(self):
        a = square()
        r = wheel_representation(a, {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)})
        assert contact_graph(r) == wheel_gadget(a)

    def test_positions_must_follow_ports(self):
        with pytest.raises(GadgetError):
            wheel_representation(k2_east_west(), {0: (0, 0), 1: (0, 1)})


class TestCage:

    def test_2d_count(self):
        c = cage(CageParams(2, 3, (8, 3)))
        assert c.params.outer == (14, 9)
        assert c.graph.n == 102
        assert verify(c.representation, c.graph).valid

    def test_3d_count(self):
        c = cage(CageParams(3, 1, (7, 3, 7)))
        assert c.graph.n == 258
        assert verify(c.representation, c.graph).valid

    def test_hole_is_empty(self):
        c = cage(CageParams(3, 1, (3, 3, 3)))
        assert c.graph.n == 98
        assert (2, 2, 2) not in set(c.cells.values())

    @pytest.mark.parametrize("dimension, thickness, interior", [
        (4, 1, (1, 1, 1, 1)), (2, 0, (3, 3)), (3, 1, (3, 3)),
    ])
    def test_bad_parameters(self, dimension, thickness, interior):
        with pytest.raises(GadgetError):
            CageParams(dimension, thickness, interior)

    def test_attach(self):
        c = cage(CageParams(3, 1, (3, 3, 3)))
        g = cage_attach(c, path(3))
        assert g.n == 101
        assert g.m == c.graph.m + 2 + 2
        assert g.degree(98) == 3
        assert nx.is_connected(g.to_networkx())

    def test_attach_needs_height_three(self):
        with pytest.raises(GadgetError):
            cage_attach(cage(CageParams(3, 1, (3, 4, 3))), path(2))

    def test_attach_nothing(self):
        with pytest.raises(GadgetError):
            cage_attach(cage(CageParams(3, 1, (3, 3, 3))), Graph(0))


class TestNestedTriangles:

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_counts(self, k):
        g = nested_triangles(k).graph
        assert g.n == 6 * k
        assert g.m == 6 * k + 3 * (2 * k - 1)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_balanced_depth(self, k):
        assert peel_embedding(nested_triangles(k)).k == k

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_unbalanced_depth(self, k):
        assert peel_embedding(nested_triangles(k, balanced=False)).k == 2 * k

    def test_k_must_be_positive(self):
        with pytest.raises(GadgetError):
            nested_triangles(0)

    def test_lower_bound_components(self):
        e, bound = lower_bound_components(2, 3)
        assert e.graph.n == 36
        assert len(e.outer) == 3
        assert bound == 24


class TestFamilies:

    def test_clique_union(self):
        g = clique_union(3, 2)
        assert g.n == 6
        assert g.m == 6
        assert len(g.components()) == 2

    def test_grid_graph(self):
        g = grid_graph(3, 2)
        assert g.n == 6
        assert g.m == 7

    def test_bad_clique_union(self):
        with pytest.raises(GadgetError):
            clique_union(0, 2)


class TestRandom:

    @pytest.mark.parametrize("seed", range(3))
    def test_tree(self, seed):
        assert random_tree(17, seed).is_tree()

    def test_tree_is_seeded(self):
        assert random_tree(30, 7) == random_tree(30, 7)

    def test_partial_ktree_width(self):
        g = random_partial_ktree(10, 2, seed=1)
        assert td_exact_small(g).width <= 2

    @pytest.mark.parametrize("seed", range(3))
    def test_outerplanar(self, seed):
        e = random_outerplanar_embedding(10, seed)
        assert peel_embedding(e).k == 1

    @pytest.mark.parametrize("seed", range(3))
    def test_planar(self, seed):
        g = random_planar_graph(15, seed)
        nxg = g.to_networkx()
        assert nx.check_planarity(nxg)[0]
        assert nx.is_connected(nxg)

    def test_degree4(self):
        g = random_degree4_graph(10, 15, seed=2)
        assert g.max_degree <= 4
        assert g.m <= 15
