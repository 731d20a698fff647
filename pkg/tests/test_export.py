import re

import pytest

from gridblob.errors import GridDimensionError
from gridblob.export import export_obj, export_svg, rect, vertex_color
from gridblob.grid_core import Representation


def test_vertex_colors_are_hex_and_distinct():
    colors = [vertex_color(v) for v in range(20)]
    assert all(re.fullmatch(r"#[0-9a-f]{6}", c) for c in colors)
    assert len(set(colors)) == 20


def test_rect_defaults():
    assert rect(1, 2, 3, 4) == '<rect x="1" y="2" width="3" height="4" stroke="black" stroke-width="1" fill="none"/>'


class TestSvg:

    def test_one_square_per_pixel(self, triangle_rep):
        svg = export_svg(triangle_rep, cell_size=5)
        assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" width="10" height="10"')
        assert svg.count('<rect') == 4
        assert svg.rstrip().endswith('</svg>')

    def test_y_axis_points_up(self):
        r = Representation.from_cells(2, {0: [(0, 0)], 1: [(0, 1)]})
        svg = export_svg(r, cell_size=10)
        assert re.search(r'<rect x="0" y="10" [^>]*class="v0"', svg)
        assert re.search(r'<rect x="0" y="0" [^>]*class="v1"', svg)

    def test_vertex_colors(self, k2_rep):
        svg = export_svg(k2_rep)
        assert f'fill="{vertex_color(0)}"' in svg
        assert f'fill="{vertex_color(1)}"' in svg

    def test_voxels_are_rejected(self):
        with pytest.raises(GridDimensionError):
            export_svg(Representation.from_cells(3, {0: [(0, 0, 0)]}))


class TestObj:

    @staticmethod
    def records(obj: str, kind: str):
        return [line.split()[1:] for line in obj.splitlines() if line.startswith(kind + " ")]

    def test_cubes(self):
        r = Representation.from_cells(3, {0: [(0, 0, 0), (1, 0, 0)], 1: [(0, 1, 0)]})
        obj = export_obj(r)
        assert len(self.records(obj, "v")) == 24
        assert len(self.records(obj, "f")) == 36
        lines = obj.splitlines()
        assert "# cubes 3" in lines
        assert f"# vertex 0 color {vertex_color(0)} cubes 2" in lines
        assert f"# vertex 1 color {vertex_color(1)} cubes 1" in lines

    def test_unit_cube_corners(self):
        obj = export_obj(Representation.from_cells(3, {0: [(2, -1, 5)]}))
        points = {tuple(float(c) for c in record[:3]) for record in self.records(obj, "v")}
        assert points == {(2 + dx, -1 + dy, 5 + dz) for dx in (0, 1) for dy in (0, 1) for dz in (0, 1)}

    def test_face_indices_are_one_based(self):
        obj = export_obj(Representation.from_cells(3, {0: [(0, 0, 0)]}))
        indices = [int(token.split('/')[0]) for record in self.records(obj, "f") for token in record]
        assert min(indices) == 1
        assert max(indices) == 8

    def test_blobs_in_vertex_order(self):
        r = Representation.from_cells(3, {0: [(5, 5, 5)], 1: [(0, 0, 0)]})
        points = [tuple(float(c) for c in record[:3]) for record in self.records(export_obj(r), "v")]
        assert min(points[:8]) == (5.0, 5.0, 5.0)
        assert min(points[8:]) == (0.0, 0.0, 0.0)

    def test_empty(self):
        assert export_obj(Representation(3, {})) == "# gridblob voxel representation\n# cubes 0\n"

    def test_pixels_are_rejected(self, k2_rep):
        with pytest.raises(GridDimensionError):
            export_obj(k2_rep)
