"""
Orthogonal drawings and the layout engines that produce them
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .config import Config
from .errors import DrawingError, LayoutError
from .graph_model import (
    Contraction, Edge, Graph, MinorRecipe, PlaneEmbedding, edge_key, insert_chord,
    reduce_degree_path, trace_faces,
)

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def simplify_route(points: Sequence[Point]) -> List[Point]:
    """Drop repeated points and straight-through polyline vertices"""
    pts: List[Point] = []
    for p in points:
        if not pts or pts[-1] != p:
            pts.append(tuple(p))
    result = pts[:1]
    for idx in range(1, len(pts) - 1):
        a, b, c = result[-1], pts[idx], pts[idx + 1]
        d1 = tuple((y > x) - (y < x) for x, y in zip(a, b))
        d2 = tuple((y > x) - (y < x) for x, y in zip(b, c))
        if d1 != d2:
            result.append(b)
    if len(pts) > 1:
        result.append(pts[-1])
    return result


def _l1(a: Point, b: Point) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


@dataclass
class DrawingAudit:
    """Outcome of checking a drawing's invariants"""
    problems: List[str] = None
    crossings: int = 0

    def __post_init__(self):
        if self.problems is None:
            self.problems = []

    @property
    def ok(self) -> bool:
        return not self.problems


@dataclass(frozen=True)
class OrthoDrawing:
    """Integer vertex positions plus axis-aligned routes from pos[min] to pos[max]"""
    dimension: int
    positions: Dict[int, Point] = field(hash=False)
    routes: Dict[Edge, Tuple[Point, ...]] = field(default_factory=dict, hash=False)
    crossings_allowed: bool = False

    @property
    def total_length(self) -> int:
        return sum(self.route_length(e) for e in self.routes)

    def route_length(self, e: Edge) -> int:
        pts = self.routes[e]
        return sum(_l1(a, b) for a, b in zip(pts, pts[1:]))

    def bends(self, e: Edge) -> List[Point]:
        return simplify_route(self.routes[e])[1:-1]

    @property
    def bend_count(self) -> int:
        return sum(len(self.bends(e)) for e in self.routes)

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.positions), self.routes)

    def audit(self) -> DrawingAudit:
        """Check positions, route endpoints, pass-through and shared points"""
        report = DrawingAudit()
        problems = report.problems
        by_position = {}
        for v, p in self.positions.items():
            if len(p) != self.dimension:
                problems.append(f"vertex {v} has a {len(p)}-dimensional position")
            if p in by_position:
                problems.append(f"vertices {by_position[p]} and {v} share position {p}")
            by_position[p] = v

        usage: Dict[Point, List[Tuple[Edge, str, Optional[int]]]] = defaultdict(list)
        for e in sorted(self.routes):
            u, v = e
            pts = simplify_route(self.routes[e])
            if u >= v or u not in self.positions or v not in self.positions:
                problems.append(f"route key {e} is not an edge between drawn vertices")
                continue
            if len(pts) < 2:
                problems.append(f"route {e} is degenerate")
                continue
            if pts[0] != self.positions[u] or pts[-1] != self.positions[v]:
                problems.append(f"route {e} does not join its endpoints")
            raster = self._rasterize(e, pts, problems)
            seen = set()
            for p, kind, axis in raster:
                if p in seen:
                    problems.append(f"route {e} revisits {p}")
                seen.add(p)
                if kind != 'end' and p in by_position:
                    problems.append(f"route {e} passes through vertex {by_position[p]}")
                usage[p].append((e, kind, axis))

        for p, users in usage.items():
            if len(users) < 2:
                continue
            if all(kind == 'end' for _, kind, _ in users) and p in by_position:
                continue
            if (self.crossings_allowed and self.dimension == 2 and len(users) == 2
                    and all(kind == 'pass' for _, kind, _ in users)
                    and users[0][2] != users[1][2]):
                report.crossings += 1
                continue
            problems.append(f"routes {[e for e, _, _ in users]} share point {p}")
        return report

    @staticmethod
    def _rasterize(e: Edge, pts: List[Point], problems: List[str]):
        raster = [(pts[0], 'end', None)]
        for idx in range(1, len(pts)):
            a, b = pts[idx - 1], pts[idx]
            moving = [i for i in range(len(a)) if a[i] != b[i]]
            if len(moving) != 1:
                problems.append(f"route {e} has a non-axis-aligned segment {a} -> {b}")
                continue
            axis = moving[0]
            step = 1 if b[axis] > a[axis] else -1
            cur = list(a)
            for _ in range(abs(b[axis] - a[axis])):
                cur[axis] += step
                raster.append((tuple(cur), 'pass', axis))
            last = 'end' if idx == len(pts) - 1 else 'bend'
            raster[-1] = (raster[-1][0], last, None)
        return raster

    def validate(self):
        audit = self.audit()
        if not audit.ok:
            raise DrawingError(f"Invalid drawing: {audit.problems[0]} ({len(audit.problems)} problems)")
        return audit

    def translated(self, offset: Point) -> 'OrthoDrawing':
        def move(p):
            return tuple(a + b for a, b in zip(p, offset))
        return OrthoDrawing(
            self.dimension,
            {v: move(p) for v, p in self.positions.items()},
            {e: tuple(move(p) for p in pts) for e, pts in self.routes.items()},
            self.crossings_allowed,
        )

    def compacted(self) -> 'OrthoDrawing':
        """Order-preserving coordinate compression on every axis"""
        points = list(self.positions.values())
        for pts in self.routes.values():
            points.extend(pts)
        if not points:
            return self
        ranks = []
        for axis in range(self.dimension):
            values = sorted({p[axis] for p in points})
            ranks.append({value: i for i, value in enumerate(values)})

        def squash(p):
            return tuple(ranks[axis][p[axis]] for axis in range(self.dimension))
        return OrthoDrawing(
            self.dimension,
            {v: squash(p) for v, p in self.positions.items()},
            {e: tuple(simplify_route([squash(p) for p in pts])) for e, pts in self.routes.items()},
            self.crossings_allowed,
        )

    def extent(self) -> Tuple[Point, Point]:
        points = list(self.positions.values())
        for pts in self.routes.values():
            points.extend(pts)
        if not points:
            zero = (0,) * self.dimension
            return zero, zero
        lo = tuple(min(p[i] for p in points) for i in range(self.dimension))
        hi = tuple(max(p[i] for p in points) for i in range(self.dimension))
        return lo, hi


def _oriented(a: int, b: int, pts: Sequence[Point]) -> Tuple[Edge, Tuple[Point, ...]]:
    """Route keyed canonically, running from the smaller id's position"""
    pts = tuple(simplify_route(pts))
    if a < b:
        return (a, b), pts
    return (b, a), tuple(reversed(pts))


def _side_by_side(parts: List[OrthoDrawing], gap: int, crossings_allowed: bool = False) -> OrthoDrawing:
    positions, routes = {}, {}
    x = 0
    for part in parts:
        lo, hi = part.extent()
        moved = part.translated((x - lo[0], -lo[1]))
        positions.update(moved.positions)
        routes.update(moved.routes)
        x += hi[0] - lo[0] + 1 + gap
    return OrthoDrawing(2, positions, routes, crossings_allowed)


class TreeLayoutEngine:
    """Heavy-child-first box layout for trees of maximum degree 4.

    Each subtree is drawn in a box whose root sits on the left edge. The
    largest child continues straight east; the next child is stacked above
    and the last one below, both reached by an up-or-down then east route.
    """
    name = 'heavy-path-tree'

    def layout(self, t: Graph) -> OrthoDrawing:
        if not t.is_tree():
            raise LayoutError(f"{t} is not a tree")
        if t.max_degree > 4:
            raise LayoutError(f"Tree has maximum degree {t.max_degree}; reduce it first")
        if t.n == 1:
            return OrthoDrawing(2, {0: (0, 0)})

        root = min(v for v in range(t.n) if t.degree(v) == 1)
        order = list(nx.bfs_tree(t.to_networkx(), root))
        parent = {root: None}
        for v in order:
            for w in t.neighbors(v):
                if w != parent[v]:
                    parent[w] = v
        children = {v: [w for w in t.neighbors(v) if w != parent[v]] for v in order}

        weight = {}
        box = {}  # v -> (right, bottom, top) relative to v
        offsets = {}  # child -> (offset, local route)
        for v in reversed(order):
            weight[v] = 1 + sum(weight[c] for c in children[v])
            kids = sorted(children[v], key=lambda c: (-weight[c], c))
            right, bottom, top = 0, 0, 0
            for slot, c in zip(('E', 'N', 'S'), kids):
                c_right, c_bottom, c_top = box[c]
                if slot == 'E':
                    dy = 0
                elif slot == 'N':
                    dy = top + 1 - c_bottom
                else:
                    dy = bottom - 1 - c_top
                route = [(0, 0), (1, 0)] if dy == 0 else [(0, 0), (0, dy), (1, dy)]
                offsets[c] = ((1, dy), route)
                right = max(right, 1 + c_right)
                bottom = min(bottom, dy + c_bottom)
                top = max(top, dy + c_top)
            box[v] = (right, bottom, top)

        positions = {root: (0, 0)}
        routes = {}
        for v in order:
            if v == root:
                continue
            (dx, dy), route = offsets[v]
            px, py = positions[parent[v]]
            positions[v] = (px + dx, py + dy)
            key, pts = _oriented(parent[v], v, [(px + x, py + y) for x, y in route])
            routes[key] = pts
        drawing = OrthoDrawing(2, positions, routes)
        logger.debug(f"Tree layout of {t}: length {drawing.total_length}")
        return drawing


class PlanarLayoutEngine:
    """Column sweep over an st-ordering of a max-degree-4 plane graph.

    Vertices are placed row by row; every edge owns a column for its vertical
    part. Components are biconnected first with chords that are never drawn.
    """
    name = 'st-columns'

    def layout(self, e: PlaneEmbedding) -> OrthoDrawing:
        g = e.graph
        if g.max_degree > 4:
            raise LayoutError(f"Planar layout needs maximum degree 4, got {g.max_degree}")
        if g.n and not e.outer:
            raise LayoutError("Planar layout needs an outer marker per component")
        marker_of = {m[0]: m for m in e.outer}
        parts = []
        for comp in g.components():
            marker = next(marker_of[v] for v in comp if v in marker_of)
            parts.append(self._layout_component(e, comp, marker))
        drawing = _side_by_side(parts, Config.COMPONENT_GAP)
        audit = drawing.audit()
        if not audit.ok:
            raise LayoutError(f"Planar layout produced an invalid drawing: {audit.problems[0]}")
        logger.debug(f"Planar layout of {g}: length {drawing.total_length}")
        return drawing

    def _layout_component(self, e: PlaneEmbedding, comp: List[int], marker) -> OrthoDrawing:
        if len(comp) == 1:
            return OrthoDrawing(2, {comp[0]: (0, 0)})
        rotation, ghosts = self._biconnect({v: e.rotation[v] for v in comp})
        s, t = marker
        st_order = self._st_order(rotation, s, t)
        return self._sweep(rotation, ghosts, st_order, s, t)

    @staticmethod
    def _biconnect(rotation: Dict[int, Tuple[int, ...]]):
        """Add chords between consecutive neighbours of cut vertices until biconnected"""
        rot = {v: list(r) for v, r in rotation.items()}
        ghosts = set()
        while True:
            nxg = nx.Graph()
            nxg.add_nodes_from(rot)
            nxg.add_edges_from((v, w) for v, r in rot.items() for w in r)
            cuts = sorted(nx.articulation_points(nxg))
            if not cuts:
                return rot, ghosts
            block_of = {}
            for idx, block in enumerate(nx.biconnected_component_edges(nxg)):
                for a, b in block:
                    block_of[edge_key(a, b)] = idx
            c = cuts[0]
            ring = rot[c]
            for p in range(len(ring)):
                b, a = ring[p], ring[(p + 1) % len(ring)]
                if block_of[edge_key(c, a)] != block_of[edge_key(c, b)]:
                    break
            else:
                raise LayoutError(f"Cut vertex {c} has no neighbours in different blocks")
            faces = trace_faces({v: tuple(r) for v, r in rot.items()})
            face = next(f for f in faces if (a, c) in f)
            i = face.index((a, c))
            insert_chord(rot, face, i, (i + 2) % len(face))
            ghosts.add(edge_key(a, b))

    @staticmethod
    def _st_order(rotation: Dict[int, List[int]], s: int, t: int) -> List[int]:
        """st-numbering by depth-first search with (s, t) as the first tree edge"""
        preorder = [s]
        number = {s: 0}
        parent = {s: None}
        stack = [(s, iter([t] + [w for w in rotation[s] if w != t]))]
        while stack:
            v, neighbours = stack[-1]
            for w in neighbours:
                if w not in number:
                    number[w] = len(preorder)
                    preorder.append(w)
                    parent[w] = v
                    stack.append((w, iter(rotation[w])))
                    break
            else:
                stack.pop()

        low = {}
        for v in reversed(preorder):
            candidates = [number[v]] + [number[w] for w in rotation[v] if w != parent[v]]
            candidates += [low[c] for c in rotation[v] if parent.get(c) == v]
            low[v] = min(candidates)

        after = {s: t, t: None}
        before = {s: None, t: s}
        sign = {s: '-'}
        for v in preorder[2:]:
            p = parent[v]
            if sign.get(preorder[low[v]]) == '+':
                nxt = after[p]
                after[p], before[v], after[v] = v, p, nxt
                if nxt is not None:
                    before[nxt] = v
                sign[p] = '-'
            else:
                prv = before[p]
                before[p], after[v], before[v] = v, p, prv
                if prv is not None:
                    after[prv] = v
                sign[p] = '+'

        order = []
        v = s
        while v is not None:
            order.append(v)
            v = after[v]
        rank = {v: i for i, v in enumerate(order)}
        for v in order:
            if v in (s, t):
                continue
            ranks = [rank[w] for w in rotation[v]]
            if not (min(ranks) < rank[v] < max(ranks)):
                raise LayoutError(f"st-ordering failed at vertex {v}")
        return order

    @staticmethod
    def _sweep(rotation, ghosts, st_order, s, t) -> OrthoDrawing:
        rank = {v: i for i, v in enumerate(st_order)}
        columns: List[int] = []
        column_of: Dict[Tuple[int, int], int] = {}
        paths: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        open_edges: List[Tuple[int, int]] = []
        place: Dict[int, Tuple[int, int]] = {}
        finished: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        counter = [0]

        def new_column(anchor: Optional[int], after: bool) -> int:
            col = counter[0]
            counter[0] += 1
            if anchor is None:
                columns.insert(0, col)
            else:
                idx = columns.index(anchor)
                columns.insert(idx + 1 if after else idx, col)
            return col

        def is_real(a, b):
            return edge_key(a, b) not in ghosts

        out_ports = {
            0: {0: [], 1: ['N'], 2: ['N', 'E'], 3: ['W', 'N', 'E'], 4: ['S', 'W', 'N', 'E']},
            1: {0: [], 1: ['N'], 2: ['N', 'E'], 3: ['W', 'N', 'E']},
            2: {0: [], 1: ['N'], 2: ['W', 'N']},
            3: {0: [], 1: ['N']},
            4: {0: []},
        }
        in_ports = {1: ['S'], 2: ['S', 'E'], 3: ['W', 'S', 'E'], 4: ['W', 'S', 'E', 'N']}

        for k, v in enumerate(st_order):
            y = 4 * k
            idxs = [i for i, (_, b) in enumerate(open_edges) if b == v]
            if idxs and idxs != list(range(idxs[0], idxs[-1] + 1)):
                raise LayoutError(f"Incoming edges of {v} are not consecutive")
            lo, hi = (idxs[0], idxs[-1] + 1) if idxs else (0, 0)
            incoming = open_edges[lo:hi]

            ring = list(rotation[v])
            if incoming:
                start = ring.index(incoming[0][0])
                ccw = ring[start:] + ring[:start]
                if ccw[:len(incoming)] != [a for a, _ in incoming]:
                    raise LayoutError(f"Rotation at {v} disagrees with the sweep order")
                outs = list(reversed(ccw[len(incoming):]))
            else:
                start = ring.index(t)
                ccw = ring[start:] + ring[:start]
                outs = [t] + list(reversed(ccw[1:]))
            if any(rank[w] < rank[v] for w in outs):
                raise LayoutError(f"Vertex {v} has an unexpected lower neighbour")

            real_in = [edge for edge in incoming if is_real(*edge)]
            real_out = [(v, w) for w in outs if is_real(v, w)]
            i, o = len(real_in), len(real_out)
            if i == 0:
                left = None
                for edge in reversed(open_edges[:lo]):
                    if edge in column_of:
                        left = column_of[edge]
                        break
                x = new_column(left, after=True)
            elif i <= 2:
                x = column_of[real_in[0]]
            else:
                x = column_of[real_in[1]]
            place[v] = (x, y)

            for edge, port in zip(real_in, in_ports.get(i, [])):
                col = column_of[edge]
                pts = paths.pop(edge)
                if port == 'S':
                    pts.append((x, y))
                elif port in ('W', 'E'):
                    pts += [(col, y), (x, y)]
                else:
                    pts += [(col, y + 1), (x, y + 1), (x, y)]
                finished[edge] = pts

            ports = out_ports.get(i, {}).get(o)
            if ports is None:
                raise LayoutError(f"Vertex {v} has too many edges ({i} in, {o} out)")
            port_of = dict(zip(ports, real_out))
            west_col = None
            if 'W' in port_of:
                west_col = new_column(x, after=False)
                column_of[port_of['W']] = west_col
                paths[port_of['W']] = [(x, y), (west_col, y)]
            if 'S' in port_of:
                col = new_column(west_col if west_col is not None else x, after=False)
                column_of[port_of['S']] = col
                paths[port_of['S']] = [(x, y), (x, y - 1), (col, y - 1)]
            if 'N' in port_of:
                column_of[port_of['N']] = x
                paths[port_of['N']] = [(x, y)]
            if 'E' in port_of:
                col = new_column(x, after=True)
                column_of[port_of['E']] = col
                paths[port_of['E']] = [(x, y), (col, y)]

            open_edges[lo:hi] = [(v, w) for w in outs]

        x_of = {col: i for i, col in enumerate(columns)}
        positions = {v: (x_of[x], y) for v, (x, y) in place.items()}
        routes = {}
        for (a, b), pts in finished.items():
            key, route = _oriented(a, b, [(x_of[x], y) for x, y in pts])
            routes[key] = route
        return OrthoDrawing(2, positions, routes).compacted()


class DiagonalLayoutEngine:
    """Vertices on the diagonal, every edge on two reserved lanes with at most 3 bends.

    An edge is horizontal-first (ports E/S at both ends) or vertical-first
    (ports N/W). Each vertex carries at most two edges of each kind, so every
    port is used once and lanes of different edges only meet transversally.
    """
    name = 'diagonal'

    def __init__(self, separation: Optional[int] = None):
        self.separation = separation if separation is not None else Config.LAYOUT_SEPARATION
        if self.separation < 3:
            raise LayoutError(f"Separation must be at least 3, got {self.separation}")

    def layout(self, g: Graph) -> OrthoDrawing:
        if g.max_degree > 4:
            raise LayoutError(f"Diagonal layout needs maximum degree 4, got {g.max_degree}")
        step = self.separation
        positions = {v: (v * step, v * step) for v in range(g.n)}
        kinds = self._assign_kinds(g)
        ports = self._assign_ports(g, kinds)

        routes = {}
        for e in g.sorted_edges():
            u, v = e
            (xu, yu), (xv, yv) = positions[u], positions[v]
            pu, pv = ports[(u, e)], ports[(v, e)]
            pts = [(xu, yu)]
            if kinds[e] == 'H':
                row = yu
                if pu == 'S':
                    row = yu - 1
                    pts.append((xu, row))
                col = xv if pv == 'S' else xv + 1
                pts += [(col, row), (col, yv), (xv, yv)]
            else:
                col = xu
                if pu == 'W':
                    col = xu - 1
                    pts.append((col, yu))
                row = yv if pv == 'W' else yv + 1
                pts += [(col, row), (xv, row), (xv, yv)]
            routes[e] = tuple(simplify_route(pts))

        drawing = OrthoDrawing(2, positions, routes, crossings_allowed=True)
        audit = drawing.audit()
        if not audit.ok:
            raise LayoutError(f"Diagonal layout produced an invalid drawing: {audit.problems[0]}")
        logger.debug(f"Diagonal layout of {g}: length {drawing.total_length}, {audit.crossings} crossings")
        return drawing

    @classmethod
    def _assign_kinds(cls, g: Graph) -> Dict[Edge, str]:
        horizontal, vertical = Counter(), Counter()
        kinds = {}
        for e in g.sorted_edges():
            u, v = e
            if horizontal[u] < 2 and horizontal[v] < 2:
                kinds[e] = 'H'
                horizontal[u] += 1
                horizontal[v] += 1
            elif vertical[u] < 2 and vertical[v] < 2:
                kinds[e] = 'V'
                vertical[u] += 1
                vertical[v] += 1
            else:
                logger.debug("Greedy lane assignment failed; splitting along Euler circuits")
                return cls._euler_split(g)
        return kinds

    @staticmethod
    def _euler_split(g: Graph) -> Dict[Edge, str]:
        """Alternate kinds along Euler circuits so each vertex gets at most two of each"""
        aug = g.to_networkx()
        dummy = g.n
        odd = [v for v in range(g.n) if g.degree(v) % 2]
        aug.add_edges_from((dummy, v) for v in odd)
        kinds = {}
        for comp in nx.connected_components(aug):
            sub = aug.subgraph(comp)
            if sub.number_of_edges() == 0:
                continue
            if dummy in comp:
                source = dummy
            else:
                source = min((v for v in comp if sub.degree(v) < 4), default=min(comp))
            for idx, (a, b) in enumerate(nx.eulerian_circuit(sub, source=source)):
                if dummy in (a, b):
                    continue
                kinds[edge_key(a, b)] = 'H' if idx % 2 == 0 else 'V'
        return kinds

    @staticmethod
    def _assign_ports(g: Graph, kinds: Dict[Edge, str]) -> Dict[Tuple[int, Edge], str]:
        groups = {'H': ('E', 'S'), 'V': ('N', 'W')}
        ports = {}
        for v in range(g.n):
            incident = sorted(edge_key(v, w) for w in g.neighbors(v))
            for kind, (lower_port, upper_port) in groups.items():
                used = set()
                for e in (e for e in incident if kinds[e] == kind):
                    preferred, other = (lower_port, upper_port) if e[0] == v else (upper_port, lower_port)
                    port = preferred if preferred not in used else other
                    if port in used:
                        raise LayoutError(f"Vertex {v} has more than two {kind} edges")
                    used.add(port)
                    ports[(v, e)] = port
        return ports


def layout_tree(t: Graph) -> OrthoDrawing:
    """Planar orthogonal drawing of a tree of maximum degree 4"""
    return TreeLayoutEngine().layout(t)


def layout_tree_reduced(t: Graph) -> Tuple[Graph, OrthoDrawing, MinorRecipe]:
    """Tree drawing after path-replacing vertices of degree above 4"""
    if t.max_degree <= 4:
        return t, layout_tree(t), MinorRecipe()
    reduced, recipe = reduce_degree_path(PlaneEmbedding.for_forest(t))
    return reduced.graph, layout_tree(reduced.graph), recipe


def layout_deg4_planar(e: PlaneEmbedding) -> OrthoDrawing:
    """Planar orthogonal drawing respecting the embedding up to reflection"""
    return PlanarLayoutEngine().layout(e)


def layout_deg4_any(g: Graph, separation: Optional[int] = None) -> OrthoDrawing:
    """Orthogonal drawing with transversal crossings of any max-degree-4 graph"""
    return DiagonalLayoutEngine(separation).layout(g)


def subdivide_bends(d: OrthoDrawing) -> Tuple[Graph, OrthoDrawing, MinorRecipe]:
    """Put a vertex on every bend; the recipe contracts each chain back to its smaller endpoint"""
    if d.dimension != 2:
        raise DrawingError("Bend subdivision expects a 2D drawing")
    next_id = len(d.positions)
    positions = dict(d.positions)
    routes = {}
    contractions = []
    for a, b in sorted(d.routes):
        pts = simplify_route(d.routes[(a, b)])
        chain = [a]
        for p in pts[1:-1]:
            positions[next_id] = p
            chain.append(next_id)
            contractions.append(Contraction(a, next_id, a))
            next_id += 1
        chain.append(b)
        for idx in range(len(chain) - 1):
            key, route = _oriented(chain[idx], chain[idx + 1], [pts[idx], pts[idx + 1]])
            routes[key] = route
    graph = Graph.from_edges(next_id, routes)
    drawing = OrthoDrawing(2, positions, routes, d.crossings_allowed)
    logger.debug(f"Subdivided {len(contractions)} bends")
    return graph, drawing, MinorRecipe(contractions=tuple(contractions))


def split_layers(g: Graph, d: OrthoDrawing,
                 subdivision: Optional[MinorRecipe] = None) -> Tuple[Graph, OrthoDrawing, MinorRecipe]:
    """Lift a bend-free 2D drawing to 3D: horizontal edges at z=0, vertical ones at z=1"""
    if d.dimension != 2:
        raise DrawingError("Layer split expects a 2D drawing")
    n = g.n
    positions = {}
    routes = {}
    for v in range(n):
        x, y = d.positions[v]
        positions[v] = (x, y, 0)
        positions[n + v] = (x, y, 1)
        routes[(v, n + v)] = ((x, y, 0), (x, y, 1))
    for (a, b), pts in d.routes.items():
        pts = simplify_route(pts)
        if len(pts) != 2:
            raise DrawingError(f"Route {(a, b)} is not straight")
        p, q = pts
        if p[1] == q[1]:
            routes[(a, b)] = (p + (0,), q + (0,))
        else:
            routes[(n + a, n + b)] = (p + (1,), q + (1,))
    recipe = MinorRecipe(contractions=tuple(Contraction(v, n + v, v) for v in range(n)))
    if subdivision is not None:
        recipe = recipe.then(subdivision)
    graph = Graph.from_edges(2 * n, routes)
    return graph, OrthoDrawing(3, positions, routes), recipe
