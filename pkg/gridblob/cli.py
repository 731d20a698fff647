#!/usr/bin/env python3
"""gridblob CLI using Click"""

import functools
import logging
import re
import sys

import click

from . import service
from .config import Config
from .errors import FormatError, GridblobError
from .formats import emit_rep
from .oracle import SearchOutcome

# Configure logging; data goes to stdout, logs to stderr
logging.basicConfig(
    level=getattr(logging, Config.log_level(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

EXIT_INVALID = 1
EXIT_USAGE = 2


def handle_errors(command):
    """Map library errors onto exit codes: 2 for unreadable input, 1 for everything else"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except FormatError as e:
            click.echo(f"❌ Malformed input: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except (GridblobError, ValueError) as e:
            if Config.DEBUG:
                logger.exception("Command failed")
            click.echo(f"❌ {e}", err=True)
            sys.exit(EXIT_INVALID)
    return wrapper


def parse_grid(value: str):
    """Parse grid bounds like '4x4' or '3,3,3'"""
    parts = [p for p in re.split(r'[x,]', value.strip()) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise click.BadParameter(f"expected bounds like 4x4 or 3x3x3, got '{value}'")


@click.group()
@click.version_option()
def cli():
    """Pixel and voxel contact representations of graphs"""
    pass


@cli.command()
@click.argument('embedding', type=click.File('r'), default='-')
@handle_errors
def build2d(embedding):
    """Pixel representation of a plane embedding"""
    click.echo(service.build2d(embedding.read()), nl=False)
    click.echo("✅ Pixel representation built", err=True)


@cli.command('build3d-universal')
@click.argument('graph', type=click.File('r'), default='-')
@handle_errors
def build3d_universal(graph):
    """Voxel representation of any graph with O(n^2) voxels"""
    click.echo(service.build3d_universal(graph.read()), nl=False)
    click.echo("✅ Voxel representation built", err=True)


@cli.command('build3d-treewidth')
@click.argument('graph', type=click.File('r'), default='-')
@click.option('--td', 'td_file', type=click.File('r'), help='Tree decomposition file')
@click.option('--exact', 'method', flag_value='exact', help='Compute an optimal decomposition (small graphs)')
@click.option('--heuristic', 'method', flag_value='heuristic', default=True, help='Use the min-fill heuristic')
@handle_errors
def build3d_treewidth(graph, td_file, method):
    """Voxel representation driven by a tree decomposition"""
    td_text = td_file.read() if td_file else None
    click.echo(service.build3d_treewidth(graph.read(), td_text, method), nl=False)
    click.echo("✅ Voxel representation built", err=True)


@cli.command('build3d-genus')
@click.argument('graph', type=click.File('r'))
@click.argument('rotation', type=click.File('r'), required=False)
@handle_errors
def build3d_genus(graph, rotation):
    """Voxel representation through a two-layer orthogonal drawing"""
    rotation_text = rotation.read() if rotation else None
    click.echo(service.build3d_genus(graph.read(), rotation_text), nl=False)
    click.echo("✅ Voxel representation built", err=True)


@cli.command()
@click.argument('rep', type=click.File('r'))
@click.argument('graph', type=click.File('r'))
@handle_errors
def verify(rep, graph):
    """Check that a representation realizes a graph"""
    report = service.verify_rep(rep.read(), graph.read())
    if report.valid:
        click.echo("✅ Representation is valid")
        return
    click.echo(f"❌ Representation is invalid: {report.summary()}")
    for u, v in report.missing_edges:
        click.echo(f"missing {u} {v}")
    for u, v in report.extra_contacts:
        click.echo(f"extra {u} {v}")
    for v in report.disconnected_vertices:
        click.echo(f"disconnected {v}")
    for cell in report.overlap_cells:
        click.echo(f"overlap {' '.join(map(str, cell))}")
    sys.exit(EXIT_INVALID)


@cli.command()
@click.argument('graph', type=click.File('r'), default='-')
@click.option('--dim', 'dimension', type=click.IntRange(2, 3), default=2, help='Grid dimension')
@click.option('--grid', help='Grid bounds, e.g. 4x4 or 3x3x3')
@click.option('--cap', type=int, help='Maximum cells per blob')
@click.option('--budget', type=int, default=Config.ORACLE_NODE_BUDGET, help='Search node budget')
@handle_errors
def minimize(graph, dimension, grid, cap, budget):
    """Exact minimum representation of a tiny graph"""
    bounds = parse_grid(grid) if grid else None
    result = service.minimize(graph.read(), dimension, bounds, cap, budget)
    click.echo(f"# outcome {result.outcome.value}")
    click.echo(f"# nodes {result.nodes}")
    if result.outcome is SearchOutcome.OPTIMAL:
        click.echo(f"# size {result.size}")
        click.echo(emit_rep(result.representation), nl=False)
    elif result.outcome is SearchOutcome.UNKNOWN:
        click.echo("⚠️ Node budget exhausted; no minimum certified", err=True)
    else:
        click.echo("❌ No representation fits the bounds", err=True)
        sys.exit(EXIT_INVALID)


@cli.command()
@click.argument('kind', type=click.Choice(service.GADGETS))
@click.argument('params', nargs=-1)
@click.option('-i', '--input', 'source', type=click.File('r'), help='Angled graph for the wheel gadget')
@click.option('--rep', 'as_rep', is_flag=True, help='Emit the canonical representation instead of the graph')
@click.option('--unbalanced', is_flag=True, help='Nested triangles with the outer face outside all rings')
@handle_errors
def gadget(kind, params, source, as_rep, unbalanced):
    """Generate gadget and lower-bound instances"""
    source_text = source.read() if source else None
    click.echo(service.gadget(kind, params, source_text, as_rep, not unbalanced), nl=False)


@cli.command()
@click.argument('rep', type=click.File('r'), default='-')
@handle_errors
def stats(rep):
    """Size, bounding box and peeling numbers of a representation"""
    click.echo(service.stats(rep.read()), nl=False)


@cli.command()
@click.argument('fmt', type=click.Choice(service.EXPORT_FORMATS))
@click.argument('rep', type=click.File('r'), default='-')
@click.option('-o', '--output-file', type=click.File('w'), default='-', help='Output file path')
@handle_errors
def export(fmt, rep, output_file):
    """Render a representation as SVG, OBJ or text"""
    output_file.write(service.export(fmt, rep.read()))


if __name__ == '__main__':
    cli()
