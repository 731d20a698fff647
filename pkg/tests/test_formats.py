import pytest

from gridblob.errors import FormatError
from gridblob.formats import (
    emit_angled, emit_drawing, emit_embedding, emit_graph, emit_rep, emit_rotation, emit_td, parse_angled,
    parse_drawing, parse_embedding, parse_graph, parse_rep, parse_rotation, parse_td,
)
from gridblob.graph_model import embed_planar
from gridblob.grid_core import Representation
from gridblob.ortho_layout import layout_deg4_any, layout_tree
from gridblob.tree_decomp import td_heuristic, validate_td
from conftest import complete, cycle, path, star

TRIANGLE_EMBEDDING = """\
# a triangle, counter-clockwise
0: 1 2
1: 2 0
2: 0 1
"""


class TestGraphFormat:

    def test_header_and_edges(self):
        g = parse_graph("3 2\n0 1\n1 2")
        assert g.n == 3
        assert g.sorted_edges() == [(0, 1), (1, 2)]
        assert emit_graph(g) == "3 2\n0 1\n1 2\n"

    def test_comments_and_blank_lines(self):
        g = parse_graph("# header\n3 2\n\n0 1  # first\n2 1\n")
        assert g.sorted_edges() == [(0, 1), (1, 2)]

    def test_emit(self):
        assert emit_graph(cycle(3)) == "3 3\n0 1\n0 2\n1 2\n"
        assert parse_graph(emit_graph(cycle(5))) == cycle(5)

    def test_isolated_vertices(self):
        g = parse_graph("4 1\n0 3\n")
        assert g.n == 4
        assert g.degree(1) == 0

    def test_missing_header(self):
        with pytest.raises(FormatError):
            parse_graph("")

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError) as info:
            parse_graph("3 3\n0 1\n1 2\n")
        assert info.value.line == 1

    def test_vertex_out_of_range(self):
        with pytest.raises(FormatError) as info:
            parse_graph("2 2\n0 1\n1 2\n")
        assert info.value.line == 3
        assert "line 3" in str(info.value)

    def test_self_loop(self):
        with pytest.raises(FormatError):
            parse_graph("2 1\n1 1\n")

    def test_repeated_edge(self):
        with pytest.raises(FormatError):
            parse_graph("2 2\n0 1\n1 0\n")

    def test_not_a_number(self):
        with pytest.raises(FormatError):
            parse_graph("two 1\n")

    def test_extra_tokens(self):
        with pytest.raises(FormatError):
            parse_graph("3 1\n0 1 2\n")


class TestEmbeddingFormat:

    def test_rotation(self):
        rotation = parse_rotation(TRIANGLE_EMBEDDING)
        assert rotation == {0: (1, 2), 1: (2, 0), 2: (0, 1)}
        assert emit_rotation(rotation) == "0: 1 2\n1: 2 0\n2: 0 1\n"

    def test_isolated_vertex_line(self):
        assert parse_rotation("0:\n1:\n") == {0: (), 1: ()}

    def test_outer_lines_are_not_rotation(self):
        assert parse_rotation(TRIANGLE_EMBEDDING + "outer 0 1\n") == parse_rotation(TRIANGLE_EMBEDDING)

    def test_default_outer_marker(self):
        e = parse_embedding(TRIANGLE_EMBEDDING)
        assert e.graph == complete(3)
        assert len(e.outer) == 1

    def test_explicit_outer_marker(self):
        e = parse_embedding(TRIANGLE_EMBEDDING + "outer 1 0\n")
        assert e.outer == ((1, 0),)
        assert emit_embedding(e) == "0: 1 2\n1: 2 0\n2: 0 1\nouter 1 0\n"

    def test_asymmetric_rotation(self):
        with pytest.raises(FormatError) as info:
            parse_embedding("0: 1 2\n1: 0\n2: 1\n")
        assert "does not list" in str(info.value)

    def test_missing_vertex(self):
        with pytest.raises(FormatError) as info:
            parse_rotation("0: 2\n2: 0\n")
        assert info.value.line == 2

    def test_nonplanar_rotation(self):
        text = "".join(f"{v}: {' '.join(str(w) for w in range(5) if w != v)}\n" for v in range(5))
        with pytest.raises(FormatError):
            parse_embedding(text)

    def test_repeated_rotation(self):
        with pytest.raises(FormatError):
            parse_rotation("0: 1\n0: 1\n")

    def test_missing_colon(self):
        with pytest.raises(FormatError):
            parse_rotation("0 1 2\n")

    def test_emit(self):
        e = embed_planar(complete(4))
        again = parse_embedding(emit_embedding(e))
        assert again.rotation == e.rotation
        assert again.outer == e.outer


class TestAngledFormat:

    def test_without_header(self):
        a = parse_angled("0 1 E W\n1 2 N S\n")
        assert a.graph == path(3)
        assert a.port(2, 1) == 'S'

    def test_ports_are_case_insensitive(self):
        a = parse_angled("2 1\n0 1 e w\n")
        assert a.port(0, 1) == 'E'
        assert a.port(1, 0) == 'W'
        assert emit_angled(a) == "2 1\n0 1 E W\n"

    def test_repeated_port(self):
        with pytest.raises(FormatError):
            parse_angled("0 1 E W\n1 2 W E\n")

    def test_unknown_port(self):
        with pytest.raises(FormatError):
            parse_angled("0 1 E X\n")


class TestDrawingFormat:

    def test_reversed_route(self):
        d = parse_drawing("0 0 0\n1 2 1\ne 1 0 : 2 1 ; 2 0 ; 0 0\n")
        assert d.dimension == 2
        assert d.routes[(0, 1)] == ((0, 0), (2, 0), (2, 1))
        assert d.total_length == 3
        assert emit_drawing(d) == "0 0 0\n1 2 1\ne 0 1 : 0 0 ; 2 0 ; 2 1\n"

    def test_voxel_drawing(self):
        d = parse_drawing("0 0 0 0\n1 0 0 2\ne 0 1 : 0 0 0 ; 0 0 2\n")
        assert d.dimension == 3
        assert d.total_length == 2

    def test_tree_layout(self):
        d = layout_tree(star(4))
        again = parse_drawing(emit_drawing(d))
        assert again.positions == d.positions
        assert again.routes == d.routes

    def test_crossings_flag(self):
        d = layout_deg4_any(complete(5))
        text = emit_drawing(d)
        assert "crossings allowed" in text
        again = parse_drawing(text)
        assert again.crossings_allowed
        assert again.routes == d.routes

    def test_mixed_dimensions(self):
        with pytest.raises(FormatError) as info:
            parse_drawing("0 0 0\n1 1 0 0\n")
        assert info.value.line == 2

    def test_missing_position(self):
        with pytest.raises(FormatError):
            parse_drawing("0 0 0\n2 1 0\n")

    def test_short_route(self):
        with pytest.raises(FormatError):
            parse_drawing("0 0 0\n1 1 0\ne 0 1 : 0 0\n")

    def test_wrong_point_arity(self):
        with pytest.raises(FormatError):
            parse_drawing("0 0 0\n1 1 0\ne 0 1 : 0 0 ; 1 0 0\n")


class TestDecompositionFormat:

    def test_parse(self):
        t = parse_td("node 0: 0 1\nnode 1: 1 2\ntedge 0 1\n")
        assert t.width == 1
        assert validate_td(path(3), t)[0]
        assert validate_td(cycle(3), t)[0] is False
        assert emit_td(t) == "node 0: 0 1\nnode 1: 1 2\ntedge 0 1\n"

    def test_emit(self):
        t = td_heuristic(cycle(6))
        again = parse_td(emit_td(t))
        assert again.bags == t.bags
        assert validate_td(cycle(6), again)[0]

    def test_missing_bag(self):
        with pytest.raises(FormatError):
            parse_td("node 0: 0 1\ntedge 0 1\n")

    def test_unknown_keyword(self):
        with pytest.raises(FormatError) as info:
            parse_td("node 0: 0\nbag 1: 1\n")
        assert info.value.line == 2


class TestRepresentationFormat:

    def test_header_and_cells(self):
        r = parse_rep("2 2\n0 0 0\n1 0 1")
        assert r.dimension == 2
        assert r.blobs[0].cells == {(0, 0)}
        assert r.blobs[1].cells == {(1, 0)}

    def test_parse(self, triangle_rep):
        r = parse_rep("2 3\n0 0 0\n1 0 0\n0 1 1\n1 1 2\n")
        assert r.blobs[0].cells == triangle_rep.blobs[0].cells
        assert emit_rep(r) == emit_rep(triangle_rep)

    def test_emit_is_sorted(self, k2_rep):
        assert emit_rep(k2_rep) == "2 2\n0 0 0\n1 0 1\n"

    def test_voxels(self):
        r = parse_rep("3 1\n0 0 5 0\n")
        assert r.blobs[0].cells == {(0, 0, 5)}
        assert emit_rep(r) == "3 1\n0 0 5 0\n"

    def test_empty(self):
        assert emit_rep(parse_rep("2 0\n")) == "2 0\n"
        assert emit_rep(Representation(3, {})) == "3 0\n"

    def test_bad_dimension(self):
        with pytest.raises(FormatError):
            parse_rep("4 1\n0 0 0 0 0\n")

    def test_vertex_without_cells(self):
        with pytest.raises(FormatError) as info:
            parse_rep("2 2\n0 0 0\n")
        assert "[1]" in str(info.value)

    def test_wrong_arity(self):
        with pytest.raises(FormatError):
            parse_rep("3 1\n0 0 0\n")

    def test_duplicate_cell(self):
        with pytest.raises(FormatError):
            parse_rep("2 1\n0 0 0\n0 0 0\n")

    def test_overlap_is_left_to_verification(self):
        r = parse_rep("2 2\n0 0 0\n0 0 1\n")
        assert r.blobs[0].cells == r.blobs[1].cells
