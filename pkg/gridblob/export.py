"""
SVG and OBJ exporters: one square or cube per cell, coloured by vertex id
"""
import colorsys
import logging
from typing import List, Optional

import numpy as np
import trimesh

from .config import Config
from .errors import GridDimensionError
from .grid_core import Representation, size

logger = logging.getLogger(__name__)

GOLDEN_ANGLE = 0.618033988749895


def vertex_color(v: int) -> str:
    """Stable, well-spread hex colour for vertex v"""
    r, g, b = colorsys.hsv_to_rgb((v * GOLDEN_ANGLE) % 1.0, 0.55, 0.95)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def rect(x, y, w, h, style={}):
    s = '<rect x="%s" y="%s" width="%s" height="%s"' % (x, y, w, h)
    default = {'stroke': 'black', 'stroke-width': 1, 'fill': 'none'}
    for k, v in default.items():
        s += ' %s="%s"' % (k, style.get(k, v))
    if 'class' in style:
        s += ' class="%s"' % style['class']
    s += '/>'
    return s


def export_svg(r: Representation, cell_size: Optional[int] = None) -> str:
    """SVG document with one square per pixel, y axis pointing up"""
    if r.dimension != 2:
        raise GridDimensionError(f"SVG export needs a 2D representation, got {r.dimension}D")
    cell = cell_size or Config.SVG_CELL_SIZE
    (lo_x, lo_y), (hi_x, hi_y) = r.bounding_box()
    width = (hi_x - lo_x + 1) * cell if r.blobs else 0
    height = (hi_y - lo_y + 1) * cell if r.blobs else 0
    parts: List[str] = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" viewBox="0 0 %s %s">'
        % (width, height, width, height)
    ]
    for v in r.vertices:
        color = vertex_color(v)
        for x, y in sorted(r.blobs[v].cells):
            parts.append(rect((x - lo_x) * cell, (hi_y - y) * cell, cell, cell,
                              {'fill': color, 'stroke-width': 0.5, 'class': f"v{v}"}))
    parts.append('</svg>')
    logger.debug(f"SVG export: {size(r)} squares")
    return "\n".join(parts) + "\n"


def _unit_cube() -> trimesh.Trimesh:
    cube = trimesh.creation.box(extents=(1, 1, 1))
    cube.apply_translation((0.5, 0.5, 0.5))
    return cube


def _blob_mesh(cells, cube: trimesh.Trimesh) -> trimesh.Trimesh:
    """One unit cube per cell, cells in sorted order, nothing merged"""
    corners = np.asarray(sorted(cells), dtype=float)
    vertices = (corners[:, None, :] + cube.vertices[None, :, :]).reshape(-1, 3)
    offsets = len(cube.vertices) * np.arange(len(corners))
    faces = (cube.faces[None, :, :] + offsets[:, None, None]).reshape(-1, 3)
    return trimesh.Trimesh(vertices=vertices, faces=faces, process=False)


def export_obj(r: Representation) -> str:
    """Wavefront OBJ mesh with one cube per voxel; blobs follow each other in vertex order"""
    if r.dimension != 3:
        raise GridDimensionError(f"OBJ export needs a 3D representation, got {r.dimension}D")
    header = ["# gridblob voxel representation", f"# cubes {size(r)}"]
    header += [f"# vertex {v} color {vertex_color(v)} cubes {len(r.blobs[v].cells)}" for v in r.vertices]
    if not r.blobs:
        return "\n".join(header) + "\n"
    cube = _unit_cube()
    mesh = trimesh.util.concatenate([_blob_mesh(r.blobs[v].cells, cube) for v in r.vertices])
    body = mesh.export(file_type='obj', include_normals=False)
    logger.debug(f"OBJ export: {size(r)} cubes, {len(mesh.faces)} triangles")
    return "\n".join(header) + "\n" + body.rstrip("\n") + "\n"
