"""
Exact search for minimum representations and unit-length drawings on tiny instances
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .config import Config
from .errors import GraphError, GridDimensionError, SearchBudgetError
from .graph_model import DIRECTION_VECTORS, AngledGraph, Graph
from .grid_core import GridPoint, Representation, grid_neighbors
from .ortho_layout import OrthoDrawing

logger = logging.getLogger(__name__)


class SearchOutcome(str, Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNKNOWN = 'unknown'
    EXISTS = 'exists'
    NONE = 'none'


@dataclass
class MinRepResult:
    """Outcome of a minimum-representation search

    size is only set for OPTIMAL; an UNKNOWN result may still carry the best
    representation seen before the budget ran out.
    """
    outcome: SearchOutcome
    size: Optional[int] = None
    representation: Optional[Representation] = None
    nodes: int = 0


@dataclass
class UnitDrawingResult:
    outcome: SearchOutcome
    positions: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def exists(self) -> bool:
        return self.outcome is SearchOutcome.EXISTS

    def drawing(self, a: AngledGraph) -> OrthoDrawing:
        if not self.exists:
            raise GraphError(f"No unit-length drawing to return ({self.outcome.value})")
        routes = {(u, v): (self.positions[u], self.positions[v]) for u, v in a.graph.sorted_edges()}
        return OrthoDrawing(2, dict(self.positions), routes)


def pixel_lower_bound(k: int) -> int:
    """Pixels needed by any representation of a graph with peeling depth k"""
    if k < 1:
        raise ValueError(f"Peeling depth must be at least 1, got {k}")
    return 4 * k * k - 4 * k


def _search_order(g: Graph) -> List[int]:
    """Breadth-first order per component, components by smallest vertex"""
    order = []
    for comp in g.components():
        seen = {comp[0]}
        frontier = [comp[0]]
        while frontier:
            order.extend(frontier)
            nxt = []
            for v in frontier:
                for w in g.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
    return order


class _Box:
    """Cells of a bounded grid box indexed for bitmask search"""

    def __init__(self, bounds: Sequence[int]):
        self.bounds = tuple(bounds)
        self.cells: List[GridPoint] = list(product(*(range(b) for b in self.bounds)))
        self.index = {c: i for i, c in enumerate(self.cells)}
        self.halo_of = []
        for c in self.cells:
            mask = 0
            for q in grid_neighbors(c):
                if q in self.index:
                    mask |= 1 << self.index[q]
            self.halo_of.append(mask)

    def halo(self, mask: int) -> int:
        around = 0
        rest = mask
        while rest:
            low = rest & -rest
            around |= self.halo_of[low.bit_length() - 1]
            rest ^= low
        return around & ~mask

    def polyominoes(self, cap: int) -> List[Tuple[int, int, int]]:
        """All connected cell sets of at most cap cells as (size, mask, halo)"""
        layer = {1 << i for i in range(len(self.cells))}
        found = []
        for k in range(1, cap + 1):
            found.extend((k, mask, self.halo(mask)) for mask in layer)
            if k == cap:
                break
            grown = set()
            for mask in layer:
                rest = self.halo(mask)
                while rest:
                    low = rest & -rest
                    grown.add(mask | low)
                    rest ^= low
            layer = grown
        found.sort()
        return found

    def symmetries(self) -> List[List[int]]:
        """Cell permutations of the rotations and reflections that map the box onto itself"""
        d = len(self.bounds)
        maps = []
        for axes in permutations(range(d)):
            if any(self.bounds[axes[i]] != self.bounds[i] for i in range(d)):
                continue
            for flips in product((False, True), repeat=d):
                perm = []
                for c in self.cells:
                    image = tuple(
                        self.bounds[i] - 1 - c[axes[i]] if flips[i] else c[axes[i]] for i in range(d)
                    )
                    perm.append(self.index[image])
                maps.append(perm)
        return maps

    def image(self, mask: int, perm: List[int]) -> int:
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            out |= 1 << perm[low.bit_length() - 1]
            rest ^= low
        return out

    def cells_of(self, mask: int) -> List[GridPoint]:
        return [self.cells[i] for i in range(len(self.cells)) if mask >> i & 1]


class MinRepSearch:
    """Branch and bound over blob placements in a bounded grid"""

    def __init__(self, g: Graph, dimension: int, bounds: Sequence[int], cap: int,
                 budget: Optional[int] = None):
        if g.n > Config.ORACLE_MAX_VERTICES:
            raise GraphError(f"Exact search handles at most {Config.ORACLE_MAX_VERTICES} vertices, got {g.n}")
        if dimension not in Config.ORACLE_GRID_LIMITS:
            raise GridDimensionError(f"Unsupported dimension {dimension}")
        axis_limit, cap_limit = Config.ORACLE_GRID_LIMITS[dimension]
        if len(bounds) != dimension or any(b < 1 or b > axis_limit for b in bounds):
            raise GridDimensionError(f"Grid bounds {tuple(bounds)} outside 1..{axis_limit} per axis")
        if cap < 1 or cap > cap_limit:
            raise GridDimensionError(f"Blob cap {cap} outside 1..{cap_limit}")
        self.g = g
        self.dimension = dimension
        self.cap = cap
        self.budget = budget if budget is not None else Config.ORACLE_NODE_BUDGET
        self.box = _Box(bounds)
        self.order = _search_order(g)
        self.nodes = 0
        self.best = g.n * cap + 1
        self.best_masks: Optional[Dict[int, int]] = None

    def run(self) -> MinRepResult:
        if self.g.n == 0:
            return MinRepResult(SearchOutcome.OPTIMAL, 0, Representation(self.dimension, {}))
        candidates = self.box.polyominoes(self.cap)
        symmetries = self.box.symmetries()
        first = [c for c in candidates if c[1] == min(self.box.image(c[1], p) for p in symmetries)]
        logger.debug(f"Searching {self.g} in {self.box.bounds}: {len(candidates)} blobs, "
                     f"{len(first)} canonical first blobs")
        try:
            self._dfs(0, 0, 0, {}, candidates, first)
        except SearchBudgetError:
            logger.warning(f"⚠️ Node budget of {self.budget} exhausted")
            return MinRepResult(SearchOutcome.UNKNOWN, None, self._representation(), self.nodes)
        if self.best_masks is None:
            return MinRepResult(SearchOutcome.INFEASIBLE, None, None, self.nodes)
        return MinRepResult(SearchOutcome.OPTIMAL, self.best, self._representation(), self.nodes)

    def _representation(self) -> Optional[Representation]:
        if self.best_masks is None:
            return None
        return Representation.from_cells(self.dimension, {
            v: self.box.cells_of(mask) for v, mask in sorted(self.best_masks.items())
        }).normalized()

    def _dfs(self, depth: int, occupied: int, total: int, placed: Dict[int, Tuple[int, int]],
             candidates, first):
        if depth == len(self.order):
            self.best = total
            self.best_masks = {v: mask for v, (mask, _) in placed.items()}
            return
        v = self.order[depth]
        remaining = len(self.order) - depth - 1
        touching = [halo for u, (_, halo) in placed.items() if self.g.has_edge(u, v)]
        avoiding = [halo for u, (_, halo) in placed.items() if not self.g.has_edge(u, v)]
        for k, mask, halo in (first if depth == 0 else candidates):
            if total + k + remaining >= self.best:
                break
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetError(f"Exceeded {self.budget} nodes")
            if mask & occupied:
                continue
            if any(not mask & h for h in touching) or any(mask & h for h in avoiding):
                continue
            placed[v] = (mask, halo)
            self._dfs(depth + 1, occupied | mask, total + k, placed, candidates, first)
            del placed[v]


def min_rep_search(g: Graph, dimension: int = 2, bounds: Optional[Sequence[int]] = None,
                   cap: Optional[int] = None, budget: Optional[int] = None) -> MinRepResult:
    """Minimum total cell count over all representations inside the given box"""
    axis_limit, cap_limit = Config.ORACLE_GRID_LIMITS.get(dimension, (0, 0))
    if bounds is None:
        bounds = (axis_limit,) * dimension
    result = MinRepSearch(g, dimension, bounds, cap or cap_limit, budget).run()
    logger.info(f"🔍 Exact search on {g}: {result.outcome.value}"
                f"{'' if result.size is None else f', size {result.size}'} after {result.nodes} nodes")
    return result


def unit_drawing_search(a: AngledGraph, grid: Optional[int] = None) -> UnitDrawingResult:
    """Place every vertex on a grid x grid box so each edge is one step along its ports"""
    g = a.graph
    grid = grid if grid is not None else Config.UNIT_DRAWING_GRID_LIMIT
    if g.n > Config.UNIT_DRAWING_MAX_VERTICES or grid > Config.UNIT_DRAWING_GRID_LIMIT or grid < 1:
        logger.warning(f"⚠️ Unit drawing search is limited to {Config.UNIT_DRAWING_MAX_VERTICES} vertices "
                       f"on a {Config.UNIT_DRAWING_GRID_LIMIT}x{Config.UNIT_DRAWING_GRID_LIMIT} grid")
        return UnitDrawingResult(SearchOutcome.UNKNOWN)
    if not a.has_opposite_ports():
        return UnitDrawingResult(SearchOutcome.NONE)

    shapes = []
    for comp in g.components():
        offsets = {comp[0]: (0, 0)}
        stack = [comp[0]]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                dx, dy = DIRECTION_VECTORS[a.port(u, w)]
                expected = (offsets[u][0] + dx, offsets[u][1] + dy)
                if w not in offsets:
                    offsets[w] = expected
                    stack.append(w)
                elif offsets[w] != expected:
                    return UnitDrawingResult(SearchOutcome.NONE)
        if len(set(offsets.values())) != len(offsets):
            return UnitDrawingResult(SearchOutcome.NONE)
        shapes.append(offsets)

    positions: Dict[int, Tuple[int, int]] = {}

    def place(i: int, used: set) -> bool:
        if i == len(shapes):
            return True
        for x, y in product(range(grid), repeat=2):
            spots = {v: (x + ox, y + oy) for v, (ox, oy) in shapes[i].items()}
            if any(not (0 <= p[0] < grid and 0 <= p[1] < grid) or p in used for p in spots.values()):
                continue
            positions.update(spots)
            if place(i + 1, used | set(spots.values())):
                return True
            for v in spots:
                del positions[v]
        return False

    if place(0, set()):
        return UnitDrawingResult(SearchOutcome.EXISTS, dict(sorted(positions.items())))
    return UnitDrawingResult(SearchOutcome.NONE)
