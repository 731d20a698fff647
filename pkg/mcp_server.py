#!/usr/bin/env python3
"""
FastMCP Server exposing the gridblob builders over the text formats
"""
import os
import sys
import logging
from typing import Optional

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from fastmcp import FastMCP
from gridblob import service
from gridblob.config import Config
from gridblob.errors import GridblobError

# Configure logging
logging.basicConfig(level=getattr(logging, Config.log_level(), logging.INFO))
logger = logging.getLogger(__name__)

# Initialize FastMCP server
mcp = FastMCP("gridblob")


def _failure(action: str, e: Exception) -> str:
    logger.error(f"{action} failed: {e}")
    return f"❌ {action} failed: {e}"


@mcp.tool()
def build_pixel_representation(embedding: str) -> str:
    """
    Build a pixel representation of a plane embedding.

    Args:
        embedding: Embedding text ('v: w1 w2 ...' lines counter-clockwise, optional 'outer u v')

    Returns:
        Representation text ('2 n' header, one 'x y v' line per pixel)
    """
    try:
        return service.build2d(embedding)
    except GridblobError as e:
        return _failure("Pixel construction", e)


@mcp.tool()
def build_voxel_representation(graph: str, method: str = 'treewidth',
                               decomposition: Optional[str] = None,
                               rotation: Optional[str] = None) -> str:
    """
    Build a voxel representation of a graph.

    Args:
        graph: Graph text ('n m' header, then one 'u v' line per edge)
        method: 'universal', 'treewidth' or 'genus'
        decomposition: Optional tree decomposition text for the treewidth method
        rotation: Optional rotation system text for the genus method

    Returns:
        Representation text ('3 n' header, one 'x y z v' line per voxel)
    """
    try:
        if method == 'universal':
            return service.build3d_universal(graph)
        if method == 'treewidth':
            return service.build3d_treewidth(graph, decomposition)
        if method == 'genus':
            return service.build3d_genus(graph, rotation)
        return f"❌ Error: Unknown method '{method}'. Available: universal, treewidth, genus"
    except GridblobError as e:
        return _failure("Voxel construction", e)


@mcp.tool()
def verify_representation(representation: str, graph: str) -> str:
    """
    Check that a representation realizes a graph exactly.

    Args:
        representation: Representation text
        graph: Graph text

    Returns:
        Validation verdict with every missing edge, extra contact, overlap and split blob
    """
    try:
        report = service.verify_rep(representation, graph)
    except GridblobError as e:
        return _failure("Verification", e)
    if report.valid:
        return "✅ Representation is valid"
    return f"❌ Representation is invalid: {report.summary()}"


@mcp.tool()
def representation_stats(representation: str) -> str:
    """
    Summarize a representation.

    Args:
        representation: Representation text

    Returns:
        Dimension, vertex count, size, bounding box, largest blob and (2D) peeling depth
    """
    try:
        return service.stats(representation)
    except GridblobError as e:
        return _failure("Stats", e)


@mcp.tool()
def generate_gadget(kind: str, params: str = "", angled_graph: Optional[str] = None,
                    as_representation: bool = False) -> str:
    """
    Generate a gadget or lower-bound instance.

    Args:
        kind: One of wheel, cage2d, cage3d, nested-triangles, clique-union
        params: Space-separated integer parameters (e.g. "3 8 3" for cage2d)
        angled_graph: Angled graph text for the wheel gadget
        as_representation: Emit the canonical representation instead of the graph

    Returns:
        Graph, embedding or representation text
    """
    try:
        return service.gadget(kind, params.split(), angled_graph, as_representation)
    except GridblobError as e:
        return _failure("Gadget generation", e)


if __name__ == "__main__":
    mcp.run()
