"""
Text-in, text-out operations shared by the CLI and the MCP server
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .constructions import build_2d, build_genus, build_treewidth, build_universal
from .errors import GadgetError, TreeDecompositionError
from .export import export_obj, export_svg
from .formats import (
    emit_embedding, emit_graph, emit_rep, parse_angled, parse_embedding, parse_graph,
    parse_rep, parse_rotation, parse_td,
)
from .gadgets import CageParams, cage, clique_union, nested_triangles, wheel_gadget, wheel_representation
from .grid_core import Representation, VerifyReport, rep_peeling_depth, size, verify
from .oracle import MinRepResult, min_rep_search, pixel_lower_bound, unit_drawing_search
from .tree_decomp import td_exact_small, td_heuristic, to_nice, validate_td

logger = logging.getLogger(__name__)

TD_METHODS = ('heuristic', 'exact')
EXPORT_FORMATS = ('svg', 'obj', 'txt')
GADGETS = ('wheel', 'cage2d', 'cage3d', 'nested-triangles', 'clique-union')


@dataclass
class RepStats:
    """Summary numbers of a representation"""
    dimension: int
    vertices: int
    size: int
    bounding_box: Tuple[Tuple[int, ...], Tuple[int, ...]]
    largest_blob: int
    peeling_depth: Optional[int] = None
    pixel_lower_bound: Optional[int] = None

    def lines(self) -> List[str]:
        lo, hi = self.bounding_box
        out = [
            f"dimension {self.dimension}",
            f"vertices {self.vertices}",
            f"size {self.size}",
            f"bbox {','.join(map(str, lo))} {','.join(map(str, hi))}",
            f"largest_blob {self.largest_blob}",
        ]
        if self.peeling_depth is not None:
            out.append(f"peeling_depth {self.peeling_depth}")
            out.append(f"pixel_lower_bound {self.pixel_lower_bound}")
        return out


def build2d(embedding_text: str) -> str:
    return emit_rep(build_2d(parse_embedding(embedding_text)))


def build3d_universal(graph_text: str) -> str:
    return emit_rep(build_universal(parse_graph(graph_text)))


def build3d_treewidth(graph_text: str, td_text: Optional[str] = None, method: str = 'heuristic') -> str:
    """Treewidth construction with a given decomposition or one computed by method"""
    g = parse_graph(graph_text)
    if td_text is not None:
        td = parse_td(td_text)
        valid, problems = validate_td(g, td)
        if not valid:
            raise TreeDecompositionError(f"Invalid decomposition: {'; '.join(problems[:3])}")
    elif method == 'exact':
        td = td_exact_small(g)
    elif method == 'heuristic':
        td = td_heuristic(g)
    else:
        raise TreeDecompositionError(f"Unknown decomposition method '{method}', use one of {TD_METHODS}")
    logger.info(f"📐 Decomposition of width {td.width} with {td.tree.n} bags")
    return emit_rep(build_treewidth(g, to_nice(td)))


def build3d_genus(graph_text: str, rotation_text: Optional[str] = None) -> str:
    g = parse_graph(graph_text)
    rotation = parse_rotation(rotation_text) if rotation_text is not None else None
    return emit_rep(build_genus(g, rotation))


def verify_rep(rep_text: str, graph_text: str) -> VerifyReport:
    return verify(parse_rep(rep_text), parse_graph(graph_text))


def minimize(graph_text: str, dimension: int = 2, bounds: Optional[Sequence[int]] = None,
             cap: Optional[int] = None, budget: Optional[int] = None) -> MinRepResult:
    return min_rep_search(parse_graph(graph_text), dimension, bounds, cap, budget)


def representation_stats(r: Representation) -> RepStats:
    stats = RepStats(
        dimension=r.dimension,
        vertices=len(r.blobs),
        size=size(r),
        bounding_box=r.bounding_box(),
        largest_blob=max((len(b) for b in r.blobs.values()), default=0),
    )
    if r.dimension == 2 and r.blobs:
        stats.peeling_depth = rep_peeling_depth(r)
        stats.pixel_lower_bound = pixel_lower_bound(stats.peeling_depth)
    return stats


def stats(rep_text: str) -> str:
    return "\n".join(representation_stats(parse_rep(rep_text)).lines()) + "\n"


def export(fmt: str, rep_text: str) -> str:
    r = parse_rep(rep_text)
    if fmt == 'svg':
        return export_svg(r)
    if fmt == 'obj':
        return export_obj(r)
    if fmt == 'txt':
        return emit_rep(r)
    raise ValueError(f"Unknown export format '{fmt}', use one of {EXPORT_FORMATS}")


def _ints(params: Sequence[str], count: int, usage: str) -> List[int]:
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise GadgetError(f"Expected integers: {usage}")
    if len(values) != count:
        raise GadgetError(f"Expected {count} parameters: {usage}")
    return values


def gadget(kind: str, params: Sequence[str] = (), source_text: Optional[str] = None,
           as_rep: bool = False, balanced: bool = True) -> str:
    """Emit a generated instance; as_rep asks for its canonical representation where one exists"""
    if kind == 'wheel':
        if source_text is None:
            raise GadgetError("The wheel gadget needs an angled graph")
        angled = parse_angled(source_text)
        if not as_rep:
            return emit_graph(wheel_gadget(angled))
        drawing = unit_drawing_search(angled)
        if not drawing.exists:
            raise GadgetError(f"No unit-length drawing of the angled graph ({drawing.outcome.value})")
        return emit_rep(wheel_representation(angled, drawing.positions))
    if kind in ('cage2d', 'cage3d'):
        dimension = 2 if kind == 'cage2d' else 3
        values = _ints(params, dimension + 1, f"{kind} THICKNESS " + " ".join("WHD"[:dimension]))
        result = cage(CageParams(dimension, values[0], tuple(values[1:])))
        return emit_rep(result.representation) if as_rep else emit_graph(result.graph)
    if kind == 'nested-triangles':
        (k,) = _ints(params, 1, "nested-triangles K")
        return emit_embedding(nested_triangles(k, balanced))
    if kind == 'clique-union':
        q, c = _ints(params, 2, "clique-union Q C")
        return emit_graph(clique_union(q, c))
    raise GadgetError(f"Unknown gadget '{kind}', use one of {GADGETS}")
