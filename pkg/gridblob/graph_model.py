"""
Graphs, rotation-system embeddings, outerplanarity peeling and degree reduction
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx

from .errors import EmbeddingError, GraphError, MinorRecipeError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Dart = Tuple[int, int]
# A dart (u, v) with the outer face on its left, or (v,) for an isolated vertex
OuterMarker = Tuple[int, ...]

DIRECTION_VECTORS: Dict[str, Tuple[int, int]] = {
    'N': (0, 1),
    'E': (1, 0),
    'S': (0, -1),
    'W': (-1, 0),
}
OPPOSITE = {'N': 'S', 'S': 'N', 'E': 'W', 'W': 'E'}


def edge_key(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge"""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids 0..n-1"""
    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"Edge ({u}, {v}) is not canonical or out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """Build a graph, normalizing edge orientation and merging duplicates"""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            normalized.add(edge_key(u, v))
        return cls(n, frozenset(normalized))

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> 'Graph':
        """Convert a networkx graph, relabelling nodes to 0..n-1 in sorted order"""
        nodes = sorted(nxg.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nxg.edges() if a != b))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        adj: Dict[int, List[int]] = {v: [] for v in range(self.n)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(ws) for ws in self.adjacency.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges)
        return nxg

    def components(self) -> List[List[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex"""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and nx.is_connected(self.to_networkx())

    def is_subgraph_of(self, other: 'Graph') -> bool:
        return self.n == other.n and self.edges <= other.edges

    def disjoint_union(self, other: 'Graph') -> 'Graph':
        """Union with other's ids shifted by self.n"""
        shifted = ((u + self.n, v + self.n) for u, v in other.edges)
        return Graph(self.n + other.n, self.edges | frozenset(shifted))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class AngledGraph:
    """Graph of maximum degree 4 with a compass port at every edge end.

    ports[(v, w)] is the direction in which the edge vw leaves v.
    """
    graph: Graph
    ports: Dict[Tuple[int, int], str] = field(hash=False)

    def __post_init__(self):
        g = self.graph
        if g.max_degree > 4:
            raise GraphError(f"Angled graphs need maximum degree 4, got {g.max_degree}")
        expected = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
        if set(self.ports) != expected:
            raise GraphError("Ports must be given for both ends of every edge")
        for v in range(g.n):
            used = [self.ports[(v, w)] for w in g.neighbors(v)]
            if any(p not in DIRECTION_VECTORS for p in used):
                raise GraphError(f"Unknown port direction at vertex {v}: {used}")
            if len(set(used)) != len(used):
                raise GraphError(f"Ports at vertex {v} are not distinct: {used}")

    def port(self, v: int, w: int) -> str:
        return self.ports[(v, w)]

    def has_opposite_ports(self) -> bool:
        """True when both ends of every edge point at each other"""
        return all(self.ports[(u, v)] == OPPOSITE[self.ports[(v, u)]] for u, v in self.graph.edges)


class Contraction(NamedTuple):
    u: int
    v: int
    into: int


@dataclass(frozen=True)
class MinorRecipe:
    """Edge deletions, then isolated-vertex deletions, then contractions.

    Labels always refer to the ids of the graph the recipe is applied to;
    surviving labels are compacted to 0..n'-1 (sorted) only once, at the end.
    """
    deleted_edges: Tuple[Edge, ...] = ()
    deleted_vertices: Tuple[int, ...] = ()
    contractions: Tuple[Contraction, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not (self.deleted_edges or self.deleted_vertices or self.contractions)

    @property
    def has_deletions(self) -> bool:
        return bool(self.deleted_edges)

    def then(self, other: 'MinorRecipe') -> 'MinorRecipe':
        """Recipe applying self and afterwards other, if the result stays in normal form"""
        if (self.contractions or self.deleted_vertices) and other.deleted_edges:
            raise MinorRecipeError("Composition would delete edges after contracting or removing vertices")
        if self.contractions and other.deleted_vertices:
            raise MinorRecipeError("Composition would delete vertices after contracting")
        return MinorRecipe(
            deleted_edges=self.deleted_edges + other.deleted_edges,
            deleted_vertices=self.deleted_vertices + other.deleted_vertices,
            contractions=self.contractions + other.contractions,
        )


def minor_with_mapping(g: Graph, recipe: MinorRecipe) -> Tuple[Graph, Dict[int, int]]:
    """Apply a recipe and return the minor plus the old-label to new-id map of survivors"""
    adj: Dict[int, set] = {v: set(ws) for v, ws in g.adjacency.items()}

    for u, v in recipe.deleted_edges:
        if u not in adj or v not in adj[u]:
            raise MinorRecipeError(f"Cannot delete missing edge ({u}, {v})")
        adj[u].discard(v)
        adj[v].discard(u)

    for v in recipe.deleted_vertices:
        if v not in adj:
            raise MinorRecipeError(f"Cannot delete missing vertex {v}")
        if adj[v]:
            raise MinorRecipeError(f"Vertex {v} is not isolated after edge deletions")
        del adj[v]

    for u, v, into in recipe.contractions:
        if u not in adj or v not in adj[u]:
            raise MinorRecipeError(f"Cannot contract missing edge ({u}, {v})")
        if into not in (u, v):
            raise MinorRecipeError(f"Contraction of ({u}, {v}) must keep one of its endpoints, got {into}")
        gone = v if into == u else u
        for w in adj.pop(gone):
            adj[w].discard(gone)
            if w != into:
                adj[w].add(into)
                adj[into].add(w)

    survivors = sorted(adj)
    index = {old: new for new, old in enumerate(survivors)}
    edges = ((index[a], index[b]) for a in survivors for b in adj[a] if a < b)
    return Graph.from_edges(len(survivors), edges), index


def apply_minor(g: Graph, recipe: MinorRecipe) -> Graph:
    """The minor of g described by recipe"""
    return minor_with_mapping(g, recipe)[0]


def trace_faces(rotation: Dict[int, Tuple[int, ...]]) -> List[Tuple[Dart, ...]]:
    """Faces as dart cycles; each face lies on the left of its darts"""
    position = {v: {w: i for i, w in enumerate(ws)} for v, ws in rotation.items()}
    seen = set()
    faces = []
    for start_v in sorted(rotation):
        for start_w in rotation[start_v]:
            if (start_v, start_w) in seen:
                continue
            face = []
            u, v = start_v, start_w
            while (u, v) not in seen:
                seen.add((u, v))
                face.append((u, v))
                ring = rotation[v]
                w = ring[(position[v][u] - 1) % len(ring)]
                u, v = v, w
            faces.append(tuple(face))
    return faces


@dataclass(frozen=True)
class PlaneEmbedding:
    """Counter-clockwise rotation system with one outer marker per component"""
    graph: Graph
    rotation: Dict[int, Tuple[int, ...]] = field(hash=False)
    outer: Tuple[OuterMarker, ...] = ()

    def __post_init__(self):
        g = self.graph
        if set(self.rotation) != set(range(g.n)):
            raise EmbeddingError("Rotation must list every vertex exactly once")
        for v, ring in self.rotation.items():
            if len(ring) != len(set(ring)) or set(ring) != set(g.neighbors(v)):
                raise EmbeddingError(f"Rotation at {v} is not a permutation of its neighbours")

        component_of = {}
        for index, comp in enumerate(g.components()):
            for v in comp:
                component_of[v] = index
        marked = set()
        for marker in self.outer:
            if len(marker) == 1:
                (v,) = marker
                if v not in component_of or g.degree(v) != 0:
                    raise EmbeddingError(f"Outer marker ({v},) must name an isolated vertex")
            elif len(marker) == 2:
                if not g.has_edge(*marker):
                    raise EmbeddingError(f"Outer marker {marker} is not an edge")
            else:
                raise EmbeddingError(f"Malformed outer marker {marker}")
            comp = component_of[marker[0]]
            if comp in marked:
                raise EmbeddingError(f"Component of vertex {marker[0]} has two outer markers")
            marked.add(comp)
        if self.outer and len(marked) != len(set(component_of.values())):
            raise EmbeddingError("Every component needs an outer marker")

        faces_per_comp: Dict[int, int] = {}
        for face in self.faces:
            comp = component_of[face[0][0]]
            faces_per_comp[comp] = faces_per_comp.get(comp, 0) + 1
        for index, comp in enumerate(g.components()):
            edges = sum(g.degree(v) for v in comp) // 2
            faces = faces_per_comp.get(index, 1)
            if len(comp) - edges + faces != 2:
                raise EmbeddingError(
                    f"Rotation is not planar on component containing {comp[0]} "
                    f"(n={len(comp)}, m={edges}, f={faces})")

    @classmethod
    def for_forest(cls, g: Graph) -> 'PlaneEmbedding':
        """Sorted rotation with a default outer marker; planar exactly when g is a forest"""
        rotation = {v: g.neighbors(v) for v in range(g.n)}
        return cls(g, rotation, default_outer_markers(g, rotation))

    @cached_property
    def faces(self) -> List[Tuple[Dart, ...]]:
        return trace_faces(self.rotation)

    @cached_property
    def face_of_dart(self) -> Dict[Dart, int]:
        return {dart: i for i, face in enumerate(self.faces) for dart in face}

    def outer_faces(self) -> List[int]:
        """Indices of the marked outer faces (isolated vertices have none)"""
        return [self.face_of_dart[m] for m in self.outer if len(m) == 2]

    def face_vertices(self, index: int) -> List[int]:
        return [u for u, _ in self.faces[index]]

    def outer_vertices(self) -> List[int]:
        verts = set()
        for marker in self.outer:
            if len(marker) == 1:
                verts.add(marker[0])
        for index in self.outer_faces():
            verts.update(self.face_vertices(index))
        return sorted(verts)


def default_outer_markers(g: Graph, rotation: Dict[int, Tuple[int, ...]]) -> Tuple[OuterMarker, ...]:
    """Per component, the first dart of its longest face (ties by first occurrence)"""
    faces = trace_faces(rotation)
    markers = []
    for comp in g.components():
        members = set(comp)
        candidates = [f for f in faces if f[0][0] in members]
        if not candidates:
            markers.append((comp[0],))
            continue
        longest = max(candidates, key=len)
        markers.append(longest[0])
    return tuple(markers)


def embed_planar(g: Graph) -> PlaneEmbedding:
    """Plane embedding of a planar graph via the networkx planarity test"""
    is_planar, embedding = nx.check_planarity(g.to_networkx())
    if not is_planar:
        raise GraphError(f"{g} is not planar")
    rotation = {
        v: tuple(reversed(list(embedding.neighbors_cw_order(v)))) if g.degree(v) else ()
        for v in range(g.n)
    }
    return PlaneEmbedding(g, rotation, default_outer_markers(g, rotation))


@dataclass
class PeelingResult:
    """Peeling round per vertex"""
    depth: Dict[int, int]
    k: int
    width: Optional[int] = None


@dataclass
class _PeelTrace:
    depth: Dict[int, int]
    face_round: Dict[int, int]


def _peel(e: PlaneEmbedding) -> _PeelTrace:
    if e.graph.n and not e.outer:
        raise EmbeddingError("Peeling needs an outer marker for every component")
    faces_at: Dict[int, set] = {v: set() for v in range(e.graph.n)}
    for index, face in enumerate(e.faces):
        for u, _ in face:
            faces_at[u].add(index)

    depth: Dict[int, int] = {}
    face_round = {index: 0 for index in e.outer_faces()}
    frontier = {m[0] for m in e.outer if len(m) == 1}
    for index in face_round:
        frontier.update(e.face_vertices(index))

    current = 0
    while frontier:
        current += 1
        for v in frontier:
            depth[v] = current
        new_faces = set()
        for v in frontier:
            new_faces.update(f for f in faces_at[v] if f not in face_round)
        for index in new_faces:
            face_round[index] = current
        frontier = {u for index in new_faces for u in e.face_vertices(index) if u not in depth}

    if len(depth) != e.graph.n:
        raise EmbeddingError("Some vertices were never reached from an outer face")
    return _PeelTrace(depth, face_round)


def peel_embedding(e: PlaneEmbedding) -> PeelingResult:
    """Delete outer-face vertices round by round and record each vertex's round"""
    trace = _peel(e)
    k = max(trace.depth.values(), default=0)
    logger.debug(f"Peeled {e.graph} in {k} rounds")
    return PeelingResult(depth=trace.depth, k=k)


def is_triangulated(e: PlaneEmbedding) -> bool:
    """True when every inner face is a triangle"""
    outer = set(e.outer_faces())
    return all(len(face) == 3 for i, face in enumerate(e.faces) if i not in outer)


def insert_chord(rotation: Dict[int, List[int]], face: Tuple[Dart, ...], i: int, j: int):
    """Add chord between corners i and j of face, inside that face"""
    size = len(face)
    xi, xj = face[i][0], face[j][0]
    before_i = face[(i - 1) % size][0]
    before_j = face[(j - 1) % size][0]
    ring = rotation[xi]
    ring.insert(ring.index(before_i), xj)
    ring = rotation[xj]
    ring.insert(ring.index(before_j), xi)


def _chord_candidates(face: Tuple[Dart, ...], depth: Dict[int, int], adj: Dict[int, set]):
    """Corner pairs (i, j, safe) for a simple chord

    Chords from every min-depth corner come first, one anchor after another, then pairs
    with a min-depth corner on both sides. Both kinds keep depths. Any other simple
    chord follows with safe=False and has to be checked by re-peeling.
    """
    corners = [u for u, _ in face]
    size = len(corners)
    lowest = min(depth[u] for u in corners)
    anchors = sorted((c for c in range(size) if depth[corners[c]] == lowest), key=lambda c: (corners[c], c))

    def usable(i, j):
        a, b = corners[i], corners[j]
        return a != b and b not in adj[a] and (j - i) % size not in (1, size - 1)

    for anchor in anchors:
        for step in range(2, size - 1):
            j = (anchor + step) % size
            if usable(anchor, j):
                yield anchor, j, True
    rest = []
    for i in range(size):
        for j in range(i + 2, size):
            if not usable(i, j):
                continue
            side_a = corners[i:j + 1]
            side_b = corners[j:] + corners[:i + 1]
            if min(depth[u] for u in side_a) == lowest and min(depth[u] for u in side_b) == lowest:
                yield i, j, True
            else:
                rest.append((i, j))
    for i, j in rest:
        yield i, j, False


def triangulate_preserving_depth(e: PlaneEmbedding) -> PlaneEmbedding:
    """Add chords until every inner face is a triangle, keeping peeling depths"""
    before = _peel(e).depth
    rotation = {v: list(ring) for v, ring in e.rotation.items()}
    adj = {v: set(ws) for v, ws in e.graph.adjacency.items()}
    edges = set(e.graph.edges)
    outer_darts = {m for m in e.outer if len(m) == 2}

    def keeps_depth(face, i, j):
        trial = {v: list(ring) for v, ring in rotation.items()}
        insert_chord(trial, face, i, j)
        graph = Graph(e.graph.n, frozenset(edges | {edge_key(face[i][0], face[j][0])}))
        return _peel(PlaneEmbedding(graph, {v: tuple(r) for v, r in trial.items()}, e.outer)).depth == before

    while True:
        faces = trace_faces({v: tuple(r) for v, r in rotation.items()})
        target = next((f for f in faces if len(f) > 3 and not outer_darts.intersection(f)), None)
        if target is None:
            break
        chord = next(((i, j) for i, j, safe in _chord_candidates(target, before, adj)
                      if safe or keeps_depth(target, i, j)), None)
        if chord is None:
            raise GraphError(f"Face through {target[0][0]} has no simple chord that keeps peeling depths")
        i, j = chord
        a, b = target[i][0], target[j][0]
        insert_chord(rotation, target, i, j)
        adj[a].add(b)
        adj[b].add(a)
        edges.add(edge_key(a, b))

    graph = Graph(e.graph.n, frozenset(edges))
    result = PlaneEmbedding(graph, {v: tuple(r) for v, r in rotation.items()}, e.outer)
    after = _peel(result).depth
    if after != before:
        raise EmbeddingError("Triangulation changed peeling depths")
    logger.debug(f"Triangulated {e.graph} into {graph}")
    return result


def width(e: PlaneEmbedding) -> int:
    """1 + the largest BFS distance from the outer-face vertex set"""
    if not is_triangulated(e):
        logger.warning("⚠️ Embedding is not triangulated; width is only an upper bound")
    sources = e.outer_vertices()
    if not sources:
        return 0
    nxg = e.graph.to_networkx()
    nxg.add_edges_from(('outer', s) for s in sources)
    layers = nx.single_source_shortest_path_length(nxg, 'outer')
    return max(d for v, d in layers.items() if v != 'outer')


def reduce_degree_path(e: PlaneEmbedding) -> Tuple[PlaneEmbedding, MinorRecipe]:
    """Replace every vertex of degree > 4 by a path along a face merging with the outer face one round earlier"""
    graph = e.graph
    if graph.max_degree <= 4:
        return e, MinorRecipe()

    original_depth = _peel(e).depth
    current = e
    contractions: List[Contraction] = []
    next_id = graph.n

    for u in range(graph.n):
        if current.graph.degree(u) <= 4:
            continue
        trace = _peel(current)
        target_round = trace.depth[u] - 1
        corner = None
        for index, face in enumerate(current.faces):
            if trace.face_round.get(index) != target_round:
                continue
            for dart_index, (x, y) in enumerate(face):
                if y == u:
                    corner = face[dart_index][0]
                    break
            if corner is not None:
                break
        if corner is None:
            raise EmbeddingError(f"No face at round {target_round} is incident to vertex {u}")

        ring = current.rotation[u]
        start = ring.index(corner)
        neighbours = [ring[(start + t) % len(ring)] for t in range(len(ring))]
        path = [u] + list(range(next_id, next_id + len(neighbours) - 1))
        next_id += len(neighbours) - 1

        rotation = {v: list(r) for v, r in current.rotation.items()}
        for idx, (ui, vi) in enumerate(zip(path, neighbours)):
            ring_v = rotation[vi]
            ring_v[ring_v.index(u)] = ui
            if idx == 0:
                rotation[ui] = [vi, path[1]]
            elif idx == len(path) - 1:
                rotation[ui] = [path[idx - 1], vi]
            else:
                rotation[ui] = [path[idx - 1], vi, path[idx + 1]]

        owner = dict(zip(neighbours, path))
        edges = {edge_key(a, b) for a, b in current.graph.edges if u not in (a, b)}
        edges.update(edge_key(owner[v], v) for v in neighbours)
        edges.update(edge_key(a, b) for a, b in zip(path, path[1:]))
        outer = tuple(_rename_marker(m, u, owner) for m in current.outer)
        current = PlaneEmbedding(
            Graph.from_edges(next_id, edges), {v: tuple(r) for v, r in rotation.items()}, outer)
        contractions.extend(Contraction(u, ui, u) for ui in path[1:])
        logger.debug(f"Vertex {u} of degree {len(neighbours)} replaced by a path")

    after = _peel(current).depth
    if any(after[v] != d for v, d in original_depth.items()):
        raise EmbeddingError("Degree reduction changed peeling depths")
    return current, MinorRecipe(contractions=tuple(contractions))


def _rename_marker(marker: OuterMarker, u: int, owner: Dict[int, int]) -> OuterMarker:
    if len(marker) != 2 or u not in marker:
        return marker
    a, b = marker
    if a == u:
        return (owner[b], b)
    return (a, owner[a])


def reduce_degree_cycle(
    g: Graph, rotation: Optional[Dict[int, Tuple[int, ...]]] = None
) -> Tuple[Graph, Dict[int, Tuple[int, ...]], MinorRecipe]:
    """Replace every vertex of degree >= 5 by a cycle in rotation order"""
    if rotation is None:
        rotation = {v: g.neighbors(v) for v in range(g.n)}
    rot = {v: list(r) for v, r in rotation.items()}
    edges = set(g.edges)
    contractions: List[Contraction] = []
    next_id = g.n

    for u in range(g.n):
        ring = rot[u]
        if len(ring) < 5:
            continue
        cycle = [u] + list(range(next_id, next_id + len(ring) - 1))
        next_id += len(ring) - 1
        size = len(cycle)
        for idx, (ui, vi) in enumerate(zip(cycle, list(ring))):
            ring_v = rot[vi]
            ring_v[ring_v.index(u)] = ui
            edges.discard(edge_key(u, vi))
            edges.add(edge_key(ui, vi))
            rot[ui] = [vi, cycle[(idx + 1) % size], cycle[idx - 1]]
            edges.add(edge_key(ui, cycle[(idx + 1) % size]))
        contractions.extend(Contraction(u, ui, u) for ui in cycle[1:])
        logger.debug(f"Vertex {u} of degree {size} replaced by a cycle")

    result = Graph.from_edges(next_id, edges)
    return result, {v: tuple(r) for v, r in rot.items()}, MinorRecipe(contractions=tuple(contractions))
