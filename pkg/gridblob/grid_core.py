"""
Grid cells, blobs, representations and the contact-graph verifier
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from .errors import GraphError, GridDimensionError, RepresentationError
from .graph_model import Edge, Graph, edge_key

logger = logging.getLogger(__name__)

GridPoint = Tuple[int, ...]


def unit_steps(dimension: int) -> List[GridPoint]:
    """Face-neighbour offsets of a cell, two per axis"""
    steps = []
    for axis in range(dimension):
        for sign in (1, -1):
            step = [0] * dimension
            step[axis] = sign
            steps.append(tuple(step))
    return steps


def grid_neighbors(p: GridPoint) -> List[GridPoint]:
    """Face neighbours of p, in unit_steps order"""
    if len(p) == 2:
        x, y = p
        return [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]
    if len(p) == 3:
        x, y, z = p
        return [(x + 1, y, z), (x - 1, y, z), (x, y + 1, z), (x, y - 1, z), (x, y, z + 1), (x, y, z - 1)]
    return [tuple(a + b for a, b in zip(p, step)) for step in unit_steps(len(p))]


def are_adjacent(p: GridPoint, q: GridPoint) -> bool:
    """True iff the two cells share a face"""
    if len(p) != len(q):
        raise GridDimensionError(f"Cannot compare {p} and {q}")
    return sum(abs(a - b) for a, b in zip(p, q)) == 1


def _connected(cells: FrozenSet[GridPoint]) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        for q in grid_neighbors(queue.popleft()):
            if q in cells and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class Blob:
    """A set of same-dimension grid cells"""
    cells: FrozenSet[GridPoint]
    dimension: int

    def __post_init__(self):
        if not self.cells:
            raise RepresentationError("A blob must contain at least one cell")
        for c in self.cells:
            if len(c) != self.dimension:
                raise GridDimensionError(f"Cell {c} does not have dimension {self.dimension}")

    def is_connected(self) -> bool:
        return _connected(self.cells)

    def __len__(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class Representation:
    """Map vertex id -> blob, all of one dimension"""
    dimension: int
    blobs: Dict[int, Blob] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise GridDimensionError(f"Unsupported dimension {self.dimension}")
        for v, blob in self.blobs.items():
            if blob.dimension != self.dimension:
                raise GridDimensionError(f"Blob of vertex {v} has dimension {blob.dimension}")

    @classmethod
    def from_cells(cls, dimension: int, cells: Dict[int, Iterable[GridPoint]]) -> 'Representation':
        blobs = {}
        for v, cs in cells.items():
            frozen = frozenset(tuple(c) for c in cs)
            blobs[v] = Blob(frozen, dimension)
        return cls(dimension, blobs)

    @property
    def vertices(self) -> List[int]:
        return sorted(self.blobs)

    def owner_map(self) -> Dict[GridPoint, int]:
        """Cell -> vertex; later vertices win on overlap"""
        return {c: v for v, blob in self.blobs.items() for c in blob.cells}

    def all_cells(self) -> Set[GridPoint]:
        return {c for blob in self.blobs.values() for c in blob.cells}

    def bounding_box(self) -> Tuple[GridPoint, GridPoint]:
        cells = self.all_cells()
        if not cells:
            zero = (0,) * self.dimension
            return zero, zero
        lo = tuple(min(c[i] for c in cells) for i in range(self.dimension))
        hi = tuple(max(c[i] for c in cells) for i in range(self.dimension))
        return lo, hi

    def translated(self, offset: GridPoint) -> 'Representation':
        return Representation.from_cells(self.dimension, {
            v: (tuple(a + b for a, b in zip(c, offset)) for c in blob.cells)
            for v, blob in self.blobs.items()
        })

    def normalized(self) -> 'Representation':
        """Translate so the bounding box starts at the origin"""
        lo, _ = self.bounding_box()
        return self.translated(tuple(-a for a in lo))


@dataclass
class VerifyReport:
    """Diagnostics of a representation checked against a graph"""
    missing_edges: List[Edge] = None
    extra_contacts: List[Edge] = None
    overlap_cells: List[GridPoint] = None
    disconnected_vertices: List[int] = None

    def __post_init__(self):
        if self.missing_edges is None:
            self.missing_edges = []
        if self.extra_contacts is None:
            self.extra_contacts = []
        if self.overlap_cells is None:
            self.overlap_cells = []
        if self.disconnected_vertices is None:
            self.disconnected_vertices = []

    @property
    def valid(self) -> bool:
        return not (self.missing_edges or self.extra_contacts
                    or self.overlap_cells or self.disconnected_vertices)

    def summary(self) -> str:
        if self.valid:
            return "valid"
        parts = []
        if self.missing_edges:
            parts.append(f"missing edges {self.missing_edges}")
        if self.extra_contacts:
            parts.append(f"extra contacts {self.extra_contacts}")
        if self.overlap_cells:
            parts.append(f"{len(self.overlap_cells)} overlapping cells")
        if self.disconnected_vertices:
            parts.append(f"disconnected blobs {self.disconnected_vertices}")
        return "; ".join(parts)


def _overlaps(r: Representation) -> List[GridPoint]:
    seen: Set[GridPoint] = set()
    shared: Set[GridPoint] = set()
    for blob in r.blobs.values():
        for c in blob.cells:
            if c in seen:
                shared.add(c)
            seen.add(c)
    return sorted(shared)


def _contacts(r: Representation) -> Set[Edge]:
    owner = r.owner_map()
    contacts = set()
    for c, v in owner.items():
        for q in grid_neighbors(c):
            w = owner.get(q)
            if w is not None and w != v:
                contacts.add(edge_key(v, w))
    return contacts


def _check_ids(r: Representation):
    if r.vertices != list(range(len(r.blobs))):
        raise GraphError(f"Representation ids must be 0..{len(r.blobs) - 1}")


def contact_graph(r: Representation) -> Graph:
    """Graph with an edge for every pair of blobs containing face-adjacent cells"""
    _check_ids(r)
    report = VerifyReport(
        overlap_cells=_overlaps(r),
        disconnected_vertices=[v for v in r.vertices if not r.blobs[v].is_connected()],
    )
    if not report.valid:
        raise RepresentationError(f"Invalid representation: {report.summary()}", report)
    return Graph(len(r.blobs), frozenset(_contacts(r)))


def verify(r: Representation, g: Graph) -> VerifyReport:
    """Check r against g and collect every diagnostic"""
    if r.vertices != list(range(g.n)):
        raise GraphError(f"Representation has {len(r.blobs)} blobs but graph has {g.n} vertices")
    contacts = _contacts(r)
    report = VerifyReport(
        missing_edges=sorted(g.edges - contacts),
        extra_contacts=sorted(contacts - g.edges),
        overlap_cells=_overlaps(r),
        disconnected_vertices=[v for v in r.vertices if not r.blobs[v].is_connected()],
    )
    if not report.valid:
        logger.debug(f"Verification failed: {report.summary()}")
    return report


def size(r: Representation) -> int:
    """Total number of cells"""
    return sum(len(blob) for blob in r.blobs.values())


def scale(r: Representation, f: int) -> Representation:
    """Replace every cell by an f^d block"""
    if f < 1:
        raise ValueError(f"Scale factor must be positive, got {f}")
    if f == 1:
        return r
    offsets = list(product(range(f), repeat=r.dimension))
    return Representation.from_cells(r.dimension, {
        v: (tuple(a * f + o for a, o in zip(c, off)) for c in blob.cells for off in offsets)
        for v, blob in r.blobs.items()
    })


def rep_peeling_depth(r: Representation) -> int:
    """Rounds needed to strip blobs that touch the unbounded region"""
    if r.dimension != 2:
        raise GridDimensionError("Peeling depth is defined for pixel representations only")
    if not r.blobs:
        raise RepresentationError("Peeling depth of an empty representation")
    remaining = dict(r.blobs)
    rounds = 0
    while remaining:
        rounds += 1
        owner = {c: v for v, blob in remaining.items() for c in blob.cells}
        xs = [c[0] for c in owner]
        ys = [c[1] for c in owner]
        lo_x, hi_x, lo_y, hi_y = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
        start = (lo_x, lo_y)
        outside = {start}
        queue = deque([start])
        touching = set()
        while queue:
            for q in grid_neighbors(queue.popleft()):
                if not (lo_x <= q[0] <= hi_x and lo_y <= q[1] <= hi_y):
                    continue
                if q in owner:
                    touching.add(owner[q])
                elif q not in outside:
                    outside.add(q)
                    queue.append(q)
        for v in touching:
            del remaining[v]
    return rounds
