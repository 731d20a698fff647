"""
Line-oriented text formats for graphs, embeddings, drawings, decompositions and representations

Every format ignores blank lines and anything after '#'. Emitters write fields
in a stable order so files can be diffed.

    graph            n m / u v
    embedding        v: n1 n2 ... (counter-clockwise) / outer u v
    angled graph     [n m] / u v PORT_U PORT_V
    drawing          v x y [z] / e u v : x1 y1 [z1] ; x2 y2 [z2] ; ...
    decomposition    node i: v1 v2 ... / tedge i j
    representation   dim n / x y [z] v
"""
import logging
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .errors import FormatError
from .graph_model import AngledGraph, Graph, PlaneEmbedding, default_outer_markers
from .grid_core import Representation
from .ortho_layout import OrthoDrawing
from .tree_decomp import TreeDecomposition

logger = logging.getLogger(__name__)

Line = Tuple[int, List[str]]


def _lines(text: str) -> Iterator[Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if content:
            yield number, content.split()


def _int(token: str, line: int, what: str = "integer") -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"expected {what}, got '{token}'", line)


def _expect(tokens: List[str], count: int, line: int, usage: str):
    if len(tokens) != count:
        raise FormatError(f"expected '{usage}'", line)


def _header(lines: List[Line], usage: str) -> Tuple[int, int, int]:
    """The two counts of the first line, plus its line number"""
    if not lines:
        raise FormatError(f"missing '{usage}' header")
    number, tokens = lines[0]
    _expect(tokens, 2, number, usage)
    first, second = (_int(t, number, "count") for t in tokens)
    if first < 0 or second < 0:
        raise FormatError(f"counts in '{usage}' must be non-negative", number)
    return first, second, number


def _split_colon(tokens: List[str], line: int, usage: str) -> Tuple[List[str], List[str]]:
    """Tokens before and after the first ':' of a line"""
    text = " ".join(tokens)
    if ':' not in text:
        raise FormatError(f"expected '{usage}'", line)
    head, tail = text.split(':', 1)
    return head.split(), tail.split()


def _vertex(token: str, n: int, line: int) -> int:
    v = _int(token, line, "vertex id")
    if not 0 <= v < n:
        raise FormatError(f"vertex {v} outside 0..{n - 1}", line)
    return v


def _dense_ids(ids: Dict[int, int], what: str):
    """ids maps every listed id to its line; they must be exactly 0..len-1"""
    for v, number in sorted(ids.items()):
        if not 0 <= v < len(ids):
            raise FormatError(f"{what} ids must be 0..{len(ids) - 1}, got {v}", number)


def _checked(build: Callable, line: Optional[int]):
    try:
        return build()
    except FormatError:
        raise
    except Exception as e:
        raise FormatError(str(e), line)


# ---------------------------------------------------------------- graphs

def parse_graph(text: str) -> Graph:
    """`n m` header followed by exactly m `u v` lines"""
    lines = list(_lines(text))
    n, m, header = _header(lines, "n m")
    edges = set()
    for number, tokens in lines[1:]:
        _expect(tokens, 2, number, "u v")
        u, v = _vertex(tokens[0], n, number), _vertex(tokens[1], n, number)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", number)
        if (min(u, v), max(u, v)) in edges:
            raise FormatError(f"edge {u} {v} listed twice", number)
        edges.add((min(u, v), max(u, v)))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}", header)
    return Graph.from_edges(n, edges)


def emit_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- rotations and embeddings

def _parse_rotation_lines(lines: List[Line]) -> Tuple[Dict[int, Tuple[int, ...]], List[Line]]:
    """Rotation from the `v: ...` lines; the remaining lines are handed back"""
    raw: Dict[int, Tuple[int, List[str]]] = {}
    rest = []
    for number, tokens in lines:
        if tokens[0] == 'outer':
            rest.append((number, tokens))
            continue
        head, tail = _split_colon(tokens, number, "v: n1 n2 ...")
        _expect(head, 1, number, "v: n1 n2 ...")
        v = _int(head[0], number, "vertex id")
        if v in raw:
            raise FormatError(f"second rotation for vertex {v}", number)
        raw[v] = (number, tail)
    _dense_ids({v: number for v, (number, _) in raw.items()}, "vertex")
    n = len(raw)
    rotation = {
        v: tuple(_vertex(t, n, number) for t in tail)
        for v, (number, tail) in sorted(raw.items())
    }
    return rotation, rest


def _graph_of_rotation(n: int, rotation: Dict[int, Tuple[int, ...]], line: Optional[int]) -> Graph:
    darts = {(v, w) for v, ring in rotation.items() for w in ring}
    for v, w in sorted(darts):
        if (w, v) not in darts:
            raise FormatError(f"vertex {v} lists {w} but {w} does not list {v}", line)
    return _checked(lambda: Graph.from_edges(n, [(v, w) for v, w in darts if v < w]), line)


def parse_rotation(text: str) -> Dict[int, Tuple[int, ...]]:
    """`v: n1 n2 ...` lines, neighbours counter-clockwise; `outer` lines are ignored"""
    rotation, _ = _parse_rotation_lines(list(_lines(text)))
    return rotation


def emit_rotation(rotation: Dict[int, Tuple[int, ...]]) -> str:
    out = [f"{v}: {' '.join(map(str, ring))}".rstrip() for v, ring in sorted(rotation.items())]
    return "".join(line + "\n" for line in out)


def parse_embedding(text: str) -> PlaneEmbedding:
    """Rotation lines plus optional `outer u v` (or `outer v` for an isolated vertex) markers"""
    lines = list(_lines(text))
    rotation, rest = _parse_rotation_lines(lines)
    n = len(rotation)
    markers = []
    for number, tokens in rest:
        if len(tokens) not in (2, 3):
            raise FormatError("expected 'outer u v'", number)
        markers.append(tuple(_vertex(t, n, number) for t in tokens[1:]))
    first = lines[0][0] if lines else None
    g = _graph_of_rotation(n, rotation, first)
    outer = tuple(markers) if markers else default_outer_markers(g, rotation)
    return _checked(lambda: PlaneEmbedding(g, rotation, outer), first)


def emit_embedding(e: PlaneEmbedding) -> str:
    out = emit_rotation(e.rotation)
    return out + "".join(f"outer {' '.join(map(str, m))}\n" for m in e.outer)


# ---------------------------------------------------------------- angled graphs

def parse_angled(text: str) -> AngledGraph:
    """`u v PORT_AT_U PORT_AT_V` lines, optionally after an `n m` header"""
    lines = list(_lines(text))
    n = None
    if lines and len(lines[0][1]) == 2:
        n, m, header = _header(lines, "n m")
        lines = lines[1:]
        if len(lines) != m:
            raise FormatError(f"header announces {m} edges, found {len(lines)}", header)
    if n is None:
        n = 1 + max((_int(t, number, "vertex id") for number, tokens in lines for t in tokens[:2]), default=-1)
    edges, ports = [], {}
    for number, tokens in lines:
        _expect(tokens, 4, number, "u v port_u port_v")
        u, v = _vertex(tokens[0], n, number), _vertex(tokens[1], n, number)
        edges.append((u, v))
        ports[(u, v)] = tokens[2].upper()
        ports[(v, u)] = tokens[3].upper()
    first = lines[0][0] if lines else None
    g = _checked(lambda: Graph.from_edges(n, edges), first)
    return _checked(lambda: AngledGraph(g, ports), first)


def emit_angled(a: AngledGraph) -> str:
    out = [f"{a.graph.n} {a.graph.m}"]
    out.extend(f"{u} {v} {a.port(u, v)} {a.port(v, u)}" for u, v in a.graph.sorted_edges())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- drawings

def _route_points(tail: List[str], dimension: int, line: int) -> Tuple[Tuple[int, ...], ...]:
    points = []
    for part in " ".join(tail).split(';'):
        coords = part.split()
        if len(coords) != dimension:
            raise FormatError(f"route point '{part.strip()}' needs {dimension} coordinates", line)
        points.append(tuple(_int(c, line, "coordinate") for c in coords))
    if len(points) < 2:
        raise FormatError("a route needs at least two points", line)
    return tuple(points)


def parse_drawing(text: str) -> OrthoDrawing:
    """`v x y [z]` position lines, then `e u v : x1 y1 ; x2 y2 ; ...` routes

    A `crossings allowed` line marks a drawing whose routes may cross.
    """
    positions: Dict[int, Tuple[int, ...]] = {}
    position_lines: Dict[int, int] = {}
    route_lines = []
    crossings = False
    dimension = None
    for number, tokens in _lines(text):
        if tokens == ['crossings', 'allowed']:
            crossings = True
        elif tokens[0] == 'e':
            route_lines.append((number, tokens[1:]))
        else:
            if len(tokens) not in (3, 4):
                raise FormatError("expected 'v x y [z]'", number)
            if dimension is None:
                dimension = len(tokens) - 1
            elif len(tokens) - 1 != dimension:
                raise FormatError(f"position has {len(tokens) - 1} coordinates, expected {dimension}", number)
            v = _int(tokens[0], number, "vertex id")
            if v in positions:
                raise FormatError(f"second position for vertex {v}", number)
            positions[v] = tuple(_int(t, number, "coordinate") for t in tokens[1:])
            position_lines[v] = number
    _dense_ids(position_lines, "vertex")
    dimension = dimension or 2
    n = len(positions)
    routes = {}
    for number, tokens in route_lines:
        head, tail = _split_colon(tokens, number, "e u v : x1 y1 ; x2 y2 ...")
        _expect(head, 2, number, "e u v : x1 y1 ; x2 y2 ...")
        u, v = _vertex(head[0], n, number), _vertex(head[1], n, number)
        pts = _route_points(tail, dimension, number)
        if u > v:
            u, v, pts = v, u, pts[::-1]
        if (u, v) in routes:
            raise FormatError(f"second route for edge {u} {v}", number)
        routes[(u, v)] = pts
    return OrthoDrawing(dimension, positions, routes, crossings)


def emit_drawing(d: OrthoDrawing) -> str:
    def fmt(p):
        return " ".join(map(str, p))

    out = []
    if d.crossings_allowed:
        out.append("crossings allowed")
    out.extend(f"{v} {fmt(p)}" for v, p in sorted(d.positions.items()))
    out.extend(f"e {u} {v} : {' ; '.join(fmt(p) for p in pts)}" for (u, v), pts in sorted(d.routes.items()))
    return "".join(line + "\n" for line in out)


# ---------------------------------------------------------------- tree decompositions

def parse_td(text: str) -> TreeDecomposition:
    """`node i: v1 v2 ...` bag lines and `tedge i j` tree edges"""
    bags: Dict[int, frozenset] = {}
    bag_lines: Dict[int, int] = {}
    edge_lines = []
    for number, tokens in _lines(text):
        if tokens[0] == 'tedge':
            _expect(tokens, 3, number, "tedge i j")
            edge_lines.append((number, tokens[1:]))
        elif tokens[0] == 'node':
            head, tail = _split_colon(tokens[1:], number, "node i: v1 v2 ...")
            _expect(head, 1, number, "node i: v1 v2 ...")
            node = _int(head[0], number, "node id")
            if node in bags:
                raise FormatError(f"second bag for node {node}", number)
            bags[node] = frozenset(_int(t, number, "vertex id") for t in tail)
            bag_lines[node] = number
        else:
            raise FormatError(f"unexpected '{tokens[0]}'", number)
    _dense_ids(bag_lines, "node")
    k = len(bags)
    edges = [(_vertex(a, k, number), _vertex(b, k, number)) for number, (a, b) in edge_lines]
    first = edge_lines[0][0] if edge_lines else None
    return TreeDecomposition(_checked(lambda: Graph.from_edges(k, edges), first), bags)


def emit_td(t: TreeDecomposition) -> str:
    out = [f"node {node}: {' '.join(map(str, sorted(bag)))}".rstrip() for node, bag in sorted(t.bags.items())]
    out.extend(f"tedge {a} {b}" for a, b in t.tree.sorted_edges())
    return "".join(line + "\n" for line in out)


# ---------------------------------------------------------------- representations

def parse_rep(text: str) -> Representation:
    """`dim n` header, then one `x y [z] v` line per cell"""
    lines = list(_lines(text))
    dimension, n, header = _header(lines, "dim n")
    if dimension not in (2, 3):
        raise FormatError(f"dimension must be 2 or 3, got {dimension}", header)
    cells: Dict[int, List[Tuple[int, ...]]] = {v: [] for v in range(n)}
    seen = set()
    for number, tokens in lines[1:]:
        _expect(tokens, dimension + 1, number, " ".join("xyz"[:dimension]) + " v")
        cell = tuple(_int(t, number, "coordinate") for t in tokens[:-1])
        v = _vertex(tokens[-1], n, number)
        if (cell, v) in seen:
            raise FormatError(f"cell {cell} listed twice for vertex {v}", number)
        seen.add((cell, v))
        cells[v].append(cell)
    empty = [v for v, cs in cells.items() if not cs]
    if empty:
        raise FormatError(f"vertices without cells: {empty}", header)
    return Representation.from_cells(dimension, cells)


def emit_rep(r: Representation) -> str:
    out = [f"{r.dimension} {len(r.blobs)}"]
    for v in r.vertices:
        out.extend(f"{' '.join(map(str, c))} {v}" for c in sorted(r.blobs[v].cells))
    return "\n".join(out) + "\n"
