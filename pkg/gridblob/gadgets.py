"""
Instance generators: hardness gadgets, lower-bound families and random graphs
"""
import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .errors import GadgetError
from .graph_model import (
    DIRECTION_VECTORS, AngledGraph, Graph, OuterMarker, PlaneEmbedding, edge_key, embed_planar,
)
from .grid_core import GridPoint, Representation, grid_neighbors
from .oracle import pixel_lower_bound

logger = logging.getLogger(__name__)

# Offsets of the nine wheel vertices inside a vertex's id block and on the grid
WHEEL_SLOTS = ('C', 'N', 'E', 'S', 'W', 'NE', 'SE', 'SW', 'NW')
WHEEL_CELLS = {
    'C': (0, 0), 'N': (0, 1), 'E': (1, 0), 'S': (0, -1), 'W': (-1, 0),
    'NE': (1, 1), 'SE': (1, -1), 'SW': (-1, -1), 'NW': (-1, 1),
}
WHEEL_RIM = ('N', 'NE', 'E', 'SE', 'S', 'SW', 'W', 'NW')


def wheel_gadget(a: AngledGraph) -> Graph:
    """Replace every vertex by a rim-subdivided wheel and subdivide every original edge"""
    g = a.graph
    n = g.n
    slot = {name: i for i, name in enumerate(WHEEL_SLOTS)}
    edges = []
    for v in range(n):
        base = 9 * v
        for spoke in ('N', 'E', 'S', 'W'):
            edges.append((base, base + slot[spoke]))
        for x, y in zip(WHEEL_RIM, WHEEL_RIM[1:] + WHEEL_RIM[:1]):
            edges.append((base + slot[x], base + slot[y]))
    for index, (u, v) in enumerate(g.sorted_edges()):
        middle = 9 * n + index
        edges.append((9 * u + slot[a.port(u, v)], middle))
        edges.append((middle, 9 * v + slot[a.port(v, u)]))
    return Graph.from_edges(9 * n + g.m, edges)


def wheel_representation(a: AngledGraph, positions: Dict[int, Tuple[int, int]]) -> Representation:
    """One pixel per gadget vertex, read off a unit-length drawing of a"""
    g = a.graph
    for u, v in g.edges:
        du = DIRECTION_VECTORS[a.port(u, v)]
        if tuple(p + d for p, d in zip(positions[u], du)) != tuple(positions[v]):
            raise GadgetError(f"Edge ({u}, {v}) is not a unit step along its port")
    cells: Dict[int, List[GridPoint]] = {}
    for v in range(g.n):
        cx, cy = 4 * positions[v][0], 4 * positions[v][1]
        for i, name in enumerate(WHEEL_SLOTS):
            dx, dy = WHEEL_CELLS[name]
            cells[9 * v + i] = [(cx + dx, cy + dy)]
    for index, (u, v) in enumerate(g.sorted_edges()):
        dx, dy = DIRECTION_VECTORS[a.port(u, v)]
        cells[9 * g.n + index] = [(4 * positions[u][0] + 2 * dx, 4 * positions[u][1] + 2 * dy)]
    return Representation.from_cells(2, cells)


@dataclass(frozen=True)
class CageParams:
    """Wall thickness and interior extent of a cage"""
    dimension: int
    thickness: int
    interior: Tuple[int, ...]

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise GadgetError(f"Cages are 2D or 3D, got {self.dimension}")
        if len(self.interior) != self.dimension:
            raise GadgetError(f"Interior {self.interior} does not match dimension {self.dimension}")
        if self.thickness < 1 or any(s < 1 for s in self.interior):
            raise GadgetError("Cage thickness and interior sizes must be positive")

    @property
    def outer(self) -> Tuple[int, ...]:
        return tuple(2 * self.thickness + s for s in self.interior)


@dataclass(frozen=True)
class Cage:
    """Cage graph with its one-cell-per-vertex representation"""
    params: CageParams
    graph: Graph
    representation: Representation = field(hash=False)
    cells: Dict[int, GridPoint] = field(hash=False)


def cage(p: CageParams) -> Cage:
    """Grid graph of the outer box with the centred interior box removed"""
    t = p.thickness

    def in_hole(c):
        return all(t <= c[i] < t + p.interior[i] for i in range(p.dimension))

    cells: Dict[int, GridPoint] = {}
    ranges = [range(s) for s in reversed(p.outer)]
    for coords in product(*ranges):
        c = tuple(reversed(coords))
        if not in_hole(c):
            cells[len(cells)] = c
    index = {c: v for v, c in cells.items()}
    edges = [(v, index[q]) for v, c in cells.items() for q in grid_neighbors(c) if q in index and index[q] > v]
    graph = Graph.from_edges(len(cells), edges)
    rep = Representation.from_cells(p.dimension, {v: [c] for v, c in cells.items()})
    logger.debug(f"Cage {p.outer} minus {p.interior}: {graph}")
    return Cage(p, graph, rep, cells)


def cage_attach(c: Cage, g: Graph) -> Graph:
    """Cage plus g, with g's vertex 0 joined to the walls below and above the interior centre"""
    p = c.params
    if p.dimension != 3 or p.interior[1] != 3:
        raise GadgetError("Attachment needs a 3D cage with interior height 3")
    if g.n == 0:
        raise GadgetError("Nothing to attach: the graph is empty")
    capacity = p.interior[0] * p.interior[1] * p.interior[2]
    if g.n > capacity:
        logger.warning(f"⚠️ Cage interior has {capacity} cells for {g.n} vertices")
    t = p.thickness
    cx, cz = t + p.interior[0] // 2, t + p.interior[2] // 2
    index = {cell: v for v, cell in c.cells.items()}
    below = index[(cx, t - 1, cz)]
    above = index[(cx, t + p.interior[1], cz)]
    base = c.graph.n
    union = c.graph.disjoint_union(g)
    return Graph(union.n, union.edges | {edge_key(below, base), edge_key(above, base)})


def embedding_from_coordinates(g: Graph, coords: Dict[int, Tuple[float, float]],
                               outer: Tuple[OuterMarker, ...]) -> PlaneEmbedding:
    """Rotation system of a straight-line drawing, neighbours sorted counter-clockwise"""
    rotation = {}
    for v in range(g.n):
        x, y = coords[v]
        rotation[v] = tuple(sorted(g.neighbors(v), key=lambda w: math.atan2(coords[w][1] - y, coords[w][0] - x)))
    return PlaneEmbedding(g, rotation, outer)


def nested_triangles(k: int, balanced: bool = True) -> PlaneEmbedding:
    """2k concentric triangles joined by matchings; ring 0 is outermost"""
    if k < 1:
        raise GadgetError(f"Nested triangles need k >= 1, got {k}")
    rings = 2 * k
    coords = {}
    edges = []
    for i in range(rings):
        radius = rings - i
        for j, angle in enumerate((90, 210, 330)):
            coords[3 * i + j] = (radius * math.cos(math.radians(angle)), radius * math.sin(math.radians(angle)))
            edges.append((3 * i + j, 3 * i + (j + 1) % 3))
            if i + 1 < rings:
                edges.append((3 * i + j, 3 * (i + 1) + j))
    g = Graph.from_edges(3 * rings, edges)
    marker = (3 * (k - 1), 3 * (k - 1) + 1) if balanced else (1, 0)
    return embedding_from_coordinates(g, coords, (marker,))


def disjoint_embeddings(parts: List[PlaneEmbedding]) -> PlaneEmbedding:
    """Disjoint union of embeddings, ids shifted in order"""
    graph = Graph(0)
    rotation = {}
    outer = []
    for part in parts:
        shift = graph.n
        rotation.update({v + shift: tuple(w + shift for w in ring) for v, ring in part.rotation.items()})
        outer.extend(tuple(v + shift for v in m) for m in part.outer)
        graph = graph.disjoint_union(part.graph)
    return PlaneEmbedding(graph, rotation, tuple(outer))


def lower_bound_components(k: int, c: int) -> Tuple[PlaneEmbedding, int]:
    """c disjoint nested-triangle graphs and the pixel lower bound they force"""
    if c < 1:
        raise GadgetError(f"Need at least one component, got {c}")
    embedding = disjoint_embeddings([nested_triangles(k) for _ in range(c)])
    return embedding, c * pixel_lower_bound(k)


def clique_union(q: int, c: int) -> Graph:
    """c disjoint copies of K_q"""
    if q < 1 or c < 1:
        raise GadgetError(f"Clique union needs q, c >= 1, got ({q}, {c})")
    edges = [(b * q + i, b * q + j) for b in range(c) for i in range(q) for j in range(i + 1, q)]
    return Graph.from_edges(q * c, edges)


def grid_graph(w: int, h: int) -> Graph:
    """w x h grid graph, row-major ids"""
    return Graph.from_networkx(nx.convert_node_labels_to_integers(nx.grid_2d_graph(h, w), ordering='sorted'))


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    rng = random.Random(seed)
    if n < 1:
        raise GadgetError("Trees need at least one vertex")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_partial_ktree(n: int, k: int, seed: Optional[int] = None, keep: float = 0.7) -> Graph:
    """Random k-tree on n vertices with each edge kept with probability keep"""
    if n < k + 1:
        raise GadgetError(f"A {k}-tree needs at least {k + 1} vertices")
    rng = random.Random(seed)
    edges = {edge_key(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)}
    cliques = list(combinations(range(k + 1), k))
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        edges.update(edge_key(v, u) for u in base)
        cliques.extend(tuple(sorted(set(base) - {u} | {v})) for u in base)
    kept = [e for e in sorted(edges) if rng.random() < keep]
    return Graph.from_edges(n, kept)


def random_outerplanar_embedding(n: int, seed: Optional[int] = None, chord_rate: float = 0.6) -> PlaneEmbedding:
    """Polygon on a circle with random non-crossing chords"""
    rng = random.Random(seed)
    if n < 1:
        raise GadgetError("Outerplanar graphs need at least one vertex")
    coords = {v: (math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n)) for v in range(n)}
    edges = {edge_key(v, (v + 1) % n) for v in range(n)} if n > 2 else set()
    if n == 2:
        edges.add((0, 1))
    stack = [list(range(n))]
    while stack:
        polygon = stack.pop()
        if len(polygon) < 4 or rng.random() > chord_rate:
            continue
        i = rng.randrange(len(polygon) - 2)
        j = rng.randrange(i + 2, len(polygon) - (1 if i == 0 else 0))
        edges.add(edge_key(polygon[i], polygon[j]))
        stack.append(polygon[i:j + 1])
        stack.append(polygon[j:] + polygon[:i + 1])
    g = Graph.from_edges(n, edges)
    outer = ((1, 0),) if n > 1 else ((0,),)
    return embedding_from_coordinates(g, coords, outer)


def random_planar_graph(n: int, seed: Optional[int] = None, keep: float = 0.8) -> Graph:
    """Stacked triangulation with random edge removals that keep it connected"""
    rng = random.Random(seed)
    if n < 3:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.update({edge_key(a, v), edge_key(b, v), edge_key(c, v)})
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    nxg = nx.Graph(list(edges))
    for e in sorted(edges):
        if rng.random() > keep:
            nxg.remove_edge(*e)
            if not nx.is_connected(nxg):
                nxg.add_edge(*e)
    return Graph.from_networkx(nxg)


def random_planar_embedding(n: int, seed: Optional[int] = None, keep: float = 0.8) -> PlaneEmbedding:
    return embed_planar(random_planar_graph(n, seed, keep))


def random_degree4_graph(n: int, m: int, seed: Optional[int] = None) -> Graph:
    """Random simple graph with at most m edges and maximum degree 4"""
    rng = random.Random(seed)
    degree = [0] * n
    edges = set()
    attempts = 0
    while len(edges) < m and attempts < 50 * m:
        attempts += 1
        u, v = rng.randrange(n), rng.randrange(n)
        e = edge_key(u, v)
        if u == v or e in edges or degree[u] >= 4 or degree[v] >= 4:
            continue
        edges.add(e)
        degree[u] += 1
        degree[v] += 1
    return Graph.from_edges(n, edges)
