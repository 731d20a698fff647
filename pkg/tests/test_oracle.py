import pytest

from gridblob.constructions import build_2d, build_genus, build_treewidth, build_universal
from gridblob.errors import GraphError, GridDimensionError
from gridblob.gadgets import wheel_gadget, wheel_representation
from gridblob.graph_model import AngledGraph, Graph, embed_planar
from gridblob.grid_core import size, verify
from gridblob.oracle import SearchOutcome, min_rep_search, pixel_lower_bound, unit_drawing_search
from gridblob.tree_decomp import td_exact_small, to_nice
from conftest import complete, cycle, path


def horizontal_path(n: int) -> AngledGraph:
    ports = {}
    for v in range(n - 1):
        ports[(v, v + 1)] = 'E'
        ports[(v + 1, v)] = 'W'
    return AngledGraph(path(n), ports)


class TestLowerBound:

    @pytest.mark.parametrize("k, expected", [(1, 0), (2, 8), (3, 24), (10, 360)])
    def test_values(self, k, expected):
        assert pixel_lower_bound(k) == expected

    def test_needs_positive_depth(self):
        with pytest.raises(ValueError):
            pixel_lower_bound(0)


class TestMinRepSearch:

    def test_triangle(self):
        result = min_rep_search(complete(3), bounds=(3, 3), cap=2)
        assert result.outcome is SearchOutcome.OPTIMAL
        assert result.size == 4
        assert verify(result.representation, complete(3)).valid

    def test_square(self):
        result = min_rep_search(cycle(4), bounds=(3, 3), cap=2)
        assert result.outcome is SearchOutcome.OPTIMAL
        assert result.size == 4

    def test_triangle_needs_two_cells(self):
        result = min_rep_search(complete(3), bounds=(3, 3), cap=1)
        assert result.outcome is SearchOutcome.INFEASIBLE
        assert result.representation is None

    def test_k4_fits_a_3x3_box(self):
        result = min_rep_search(complete(4), bounds=(3, 3), cap=3)
        assert result.outcome is SearchOutcome.OPTIMAL
        assert 5 <= result.size <= 9
        assert verify(result.representation, complete(4)).valid

    def test_voxels(self):
        result = min_rep_search(complete(3), dimension=3, bounds=(2, 2, 2), cap=2)
        assert result.outcome is SearchOutcome.OPTIMAL
        assert result.size == 4
        assert result.representation.dimension == 3

    def test_budget(self):
        result = min_rep_search(complete(3), bounds=(3, 3), cap=2, budget=1)
        assert result.outcome is SearchOutcome.UNKNOWN
        assert result.size is None

    def test_empty_graph(self):
        result = min_rep_search(Graph(0))
        assert result.outcome is SearchOutcome.OPTIMAL
        assert result.size == 0

    def test_normalized_output(self):
        result = min_rep_search(complete(2), bounds=(4, 4), cap=1)
        assert result.size == 2
        assert result.representation.bounding_box()[0] == (0, 0)

    def test_too_many_vertices(self):
        with pytest.raises(GraphError):
            min_rep_search(path(6))

    @pytest.mark.parametrize("bounds, cap", [((5, 5), 2), ((3, 3), 5), ((3,), 2)])
    def test_limits(self, bounds, cap):
        with pytest.raises(GridDimensionError):
            min_rep_search(complete(2), bounds=bounds, cap=cap)


class TestUnitDrawing:

    def test_single_edge(self):
        a = horizontal_path(2)
        result = unit_drawing_search(a)
        assert result.exists
        (x0, y0), (x1, y1) = result.positions[0], result.positions[1]
        assert (x1 - x0, y1 - y0) == (1, 0)
        assert result.drawing(a).audit().ok

    def test_collinear_path(self):
        result = unit_drawing_search(horizontal_path(3))
        assert result.exists
        assert len({y for _, y in result.positions.values()}) == 1

    def test_grid_too_narrow(self):
        assert unit_drawing_search(horizontal_path(3), grid=2).outcome is SearchOutcome.NONE

    def test_inconsistent_triangle(self):
        ports = {(0, 1): 'E', (1, 0): 'W', (1, 2): 'N', (2, 1): 'S', (2, 0): 'E', (0, 2): 'W'}
        result = unit_drawing_search(AngledGraph(complete(3), ports))
        assert result.outcome is SearchOutcome.NONE
        with pytest.raises(GraphError):
            result.drawing(AngledGraph(complete(3), ports))

    def test_bent_edge(self):
        a = AngledGraph(complete(2), {(0, 1): 'E', (1, 0): 'N'})
        assert unit_drawing_search(a).outcome is SearchOutcome.NONE

    def test_too_large(self):
        assert unit_drawing_search(horizontal_path(9)).outcome is SearchOutcome.UNKNOWN

    def test_square_and_its_wheel_gadget(self):
        g = cycle(4)
        ports = {
            (0, 1): 'E', (1, 0): 'W', (1, 2): 'N', (2, 1): 'S',
            (2, 3): 'W', (3, 2): 'E', (3, 0): 'S', (0, 3): 'N',
        }
        a = AngledGraph(g, ports)
        result = unit_drawing_search(a, grid=2)
        assert result.exists
        r = wheel_representation(a, result.positions)
        assert verify(r, wheel_gadget(a)).valid

    def test_components_do_not_collide(self):
        a = horizontal_path(2)
        two = AngledGraph(
            a.graph.disjoint_union(a.graph),
            {**a.ports, (2, 3): 'E', (3, 2): 'W'},
        )
        result = unit_drawing_search(two, grid=2)
        assert result.exists
        assert len(set(result.positions.values())) == 4


class TestBuildersAgainstSearch:

    @pytest.mark.parametrize("g, optimum", [
        (complete(1), 1), (complete(2), 2), (complete(3), 4), (cycle(4), 4),
    ], ids=["k1", "k2", "k3", "c4"])
    def test_no_builder_beats_the_optimum(self, g, optimum):
        result = min_rep_search(g, bounds=(3, 3), cap=2)
        assert result.outcome is SearchOutcome.OPTIMAL
        assert result.size == optimum
        built = [
            build_2d(embed_planar(g)),
            build_universal(g),
            build_treewidth(g, to_nice(td_exact_small(g))),
            build_genus(g),
        ]
        for r in built:
            assert verify(r, g).valid
            assert size(r) >= result.size
