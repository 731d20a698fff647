"""
Drawing-to-representation conversion and minor-taking on representations
"""
import logging
from collections import defaultdict
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import DrawingError, GraphError, RepresentationError
from .graph_model import Edge, Graph, MinorRecipe, edge_key, minor_with_mapping
from .grid_core import (
    Blob, GridPoint, Representation, contact_graph, grid_neighbors, scale, size, unit_steps,
)
from .ortho_layout import OrthoDrawing, simplify_route

logger = logging.getLogger(__name__)


def lattice_path(points) -> List[GridPoint]:
    """Every unit lattice point along an axis-aligned polyline, endpoints included"""
    pts = simplify_route(points)
    path = [pts[0]]
    for a, b in zip(pts, pts[1:]):
        axis = next(i for i in range(len(a)) if a[i] != b[i])
        step = 1 if b[axis] > a[axis] else -1
        cur = list(a)
        for _ in range(abs(b[axis] - a[axis])):
            cur[axis] += step
            path.append(tuple(cur))
    return path


def drawing_to_rep(g: Graph, d: OrthoDrawing) -> Representation:
    """Scale the drawing by 2 and give every route cell to the nearer endpoint"""
    if sorted(d.positions) != list(range(g.n)) or set(d.routes) != set(g.edges):
        raise GraphError(f"Drawing does not draw {g}")
    audit = d.audit()
    if not audit.ok:
        raise DrawingError(f"Cannot convert an invalid drawing: {audit.problems[0]}")
    if audit.crossings:
        raise DrawingError(f"Drawing has {audit.crossings} crossings; split it into layers first")

    cells: Dict[int, Set[GridPoint]] = {
        v: {tuple(2 * c for c in p)} for v, p in d.positions.items()
    }
    for (u, v), pts in d.routes.items():
        path = lattice_path([tuple(2 * c for c in p) for p in pts])
        half = (len(path) - 1) // 2
        cells[u].update(path[1:half + 1])
        cells[v].update(path[half + 1:-1])

    rep = Representation.from_cells(d.dimension, cells)
    expected = 2 * d.total_length + g.n - g.m
    if size(rep) != expected:
        raise RepresentationError(f"Converted representation has {size(rep)} cells, expected {expected}")
    logger.debug(f"Drawing of length {d.total_length} converted into {size(rep)} cells")
    return rep


def _facing_blocks(r: Representation, pairs: Set[Edge]) -> Dict[Edge, List[Tuple[GridPoint, GridPoint]]]:
    """For each pair (a, b) with a < b, the cells of a with the step leading into b"""
    owner = r.owner_map()
    steps = unit_steps(r.dimension)
    facing: Dict[Edge, List[Tuple[GridPoint, GridPoint]]] = defaultdict(list)
    for c, a in owner.items():
        for step, q in zip(steps, grid_neighbors(c)):
            b = owner.get(q)
            if b is not None and b > a and (a, b) in pairs:
                facing[(a, b)].append((c, step))
    return facing


def _face_layer(c: GridPoint, step: GridPoint) -> List[GridPoint]:
    """Cells of the 3-block of c on the side that step points to"""
    ranges = []
    for x, s in zip(c, step):
        if s > 0:
            ranges.append((3 * x + 2,))
        elif s < 0:
            ranges.append((3 * x,))
        else:
            ranges.append((3 * x, 3 * x + 1, 3 * x + 2))
    return list(product(*ranges))


def _delete_contacts(r: Representation, deleted: Sequence[Edge]) -> Dict[int, FrozenSet[GridPoint]]:
    """Scale r by 3, then for each deleted (u, v) drop the cells of min(u, v) touching the other blob"""
    owner = r.owner_map()
    facing = _facing_blocks(r, {edge_key(u, v) for u, v in deleted})
    removed: Dict[int, Set[GridPoint]] = defaultdict(set)
    gone: Set[GridPoint] = set()

    def owner_of(p: GridPoint) -> Optional[int]:
        if p in gone:
            return None
        return owner.get(tuple(x // 3 for x in p))

    for u, v in deleted:
        keep, other = edge_key(u, v)
        for c, step in facing.get((keep, other), ()):
            for p in _face_layer(c, step):
                if p not in gone and any(owner_of(q) == other for q in grid_neighbors(p)):
                    removed[keep].add(p)
        gone |= removed[keep]

    scaled = scale(r, 3)
    blobs = {v: blob.cells - removed[v] if v in removed else blob.cells for v, blob in scaled.blobs.items()}
    for v in sorted(removed):
        if not blobs[v] or not Blob(blobs[v], r.dimension).is_connected():
            raise RepresentationError(f"Edge deletion disconnected the blob of vertex {v}")
    return blobs


def take_minor(r: Representation, recipe: MinorRecipe) -> Representation:
    """Representation of the minor of r's contact graph described by recipe"""
    _, mapping = minor_with_mapping(contact_graph(r), recipe)
    if recipe.is_empty:
        return r

    if recipe.deleted_edges:
        blobs = _delete_contacts(r, recipe.deleted_edges)
    else:
        blobs = {v: b.cells for v, b in r.blobs.items()}

    for v in recipe.deleted_vertices:
        del blobs[v]
    for u, v, into in recipe.contractions:
        gone = v if into == u else u
        blobs[into] = blobs[into] | blobs.pop(gone)

    result = Representation(r.dimension, {mapping[old]: Blob(frozenset(cs), r.dimension) for old, cs in blobs.items()})
    logger.debug(f"Minor taken: {size(r)} -> {size(result)} cells")
    return result


def contact_diff(r: Representation, g: Graph) -> MinorRecipe:
    """Recipe deleting exactly the contacts of r that g does not have"""
    realized = contact_graph(r)
    if realized.n != g.n:
        raise GraphError(f"Representation has {realized.n} blobs but graph has {g.n} vertices")
    missing = sorted(g.edges - realized.edges)
    if missing:
        raise RepresentationError(f"Representation misses required edges {missing[:5]}")
    return MinorRecipe(deleted_edges=tuple(sorted(realized.edges - g.edges)))
