"""Shared graph and representation factories"""
import networkx as nx
import pytest

from gridblob.graph_model import Graph
from gridblob.grid_core import Representation


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def from_nx(nxg) -> Graph:
    return Graph.from_networkx(nx.convert_node_labels_to_integers(nxg, ordering='sorted'))


@pytest.fixture
def triangle_rep():
    """Four-pixel representation of K3 with an L-shaped blob"""
    return Representation.from_cells(2, {
        0: [(0, 0), (1, 0)],
        1: [(0, 1)],
        2: [(1, 1)],
    })


@pytest.fixture
def k2_rep():
    return Representation.from_cells(2, {0: [(0, 0)], 1: [(1, 0)]})


@pytest.fixture
def petersen():
    return from_nx(nx.petersen_graph())


@pytest.fixture
def k33():
    return from_nx(nx.complete_bipartite_graph(3, 3))
