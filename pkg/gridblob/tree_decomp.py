"""
Tree decompositions, nice normal form, star mapping and bag colouring
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in

from .config import Config
from .errors import TreeDecompositionError
from .graph_model import Edge, Graph, edge_key

logger = logging.getLogger(__name__)

Bag = FrozenSet[int]


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags X_mu on the nodes of a tree"""
    tree: Graph
    bags: Dict[int, Bag] = field(hash=False)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1


class NodeKind(Enum):
    LEAF = 'leaf'
    INTRODUCE = 'introduce'
    FORGET = 'forget'
    JOIN = 'join'


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Rooted binary decomposition with typed nodes"""
    root: Optional[int]
    children: Dict[int, Tuple[int, ...]] = field(hash=False)
    kind: Dict[int, NodeKind] = field(hash=False)
    bags: Dict[int, Bag] = field(hash=False)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    @property
    def node_count(self) -> int:
        return len(self.bags)

    def postorder(self) -> List[int]:
        if self.root is None:
            return []
        order, stack = [], [self.root]
        while stack:
            node = stack.pop()
            order.append(node)
            stack.extend(self.children[node])
        return order[::-1]

    def preorder(self) -> List[int]:
        return self.postorder()[::-1]

    def introduced(self, node: int) -> Optional[int]:
        """Vertex added at an introduce or leaf node"""
        kind = self.kind[node]
        if kind == NodeKind.LEAF:
            return next(iter(self.bags[node]))
        if kind == NodeKind.INTRODUCE:
            (child,) = self.children[node]
            (vertex,) = self.bags[node] - self.bags[child]
            return vertex
        return None

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = [(node, child) for node, kids in self.children.items() for child in kids]
        return TreeDecomposition(Graph.from_edges(len(self.bags), edges), dict(self.bags))

    def structure_problems(self) -> List[str]:
        """Violations of the leaf/introduce/forget/join shape rules"""
        problems = []
        for node, kind in self.kind.items():
            kids = self.children[node]
            bag = self.bags[node]
            if kind == NodeKind.LEAF:
                if kids or len(bag) != 1:
                    problems.append(f"leaf {node} must have one vertex and no children")
            elif kind == NodeKind.JOIN:
                if len(kids) != 2 or any(self.bags[c] != bag for c in kids):
                    problems.append(f"join {node} needs two children with equal bags")
            elif len(kids) != 1:
                problems.append(f"{kind.value} node {node} needs exactly one child")
            else:
                child_bag = self.bags[kids[0]]
                if kind == NodeKind.INTRODUCE and not (child_bag < bag and len(bag - child_bag) == 1):
                    problems.append(f"introduce {node} must add exactly one vertex")
                if kind == NodeKind.FORGET and not (bag < child_bag and len(child_bag - bag) == 1):
                    problems.append(f"forget {node} must drop exactly one vertex")
        return problems


@dataclass
class BagColoring:
    """Vertex colours 1..k, distinct inside every bag"""
    color: Dict[int, int]
    k: int


@dataclass
class StarMap:
    """Edge -> decomposition node, with the centre of each node's star"""
    assignment: Dict[Edge, int]
    centers: Dict[int, int]

    def stars(self) -> Dict[int, List[Edge]]:
        grouped: Dict[int, List[Edge]] = {}
        for e, node in sorted(self.assignment.items()):
            grouped.setdefault(node, []).append(e)
        return grouped


def validate_td(g: Graph, t: TreeDecomposition) -> Tuple[bool, List[str]]:
    """Check vertex coverage, edge coverage and subtree connectivity"""
    problems = []
    if sorted(t.bags) != list(range(t.tree.n)):
        problems.append("bags must be given for exactly the tree nodes 0..N-1")
        return False, problems
    if t.tree.n == 0 or not t.tree.is_tree():
        problems.append("decomposition tree is not a tree")
        return False, problems

    holders: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for node, bag in t.bags.items():
        for v in bag:
            if v not in holders:
                problems.append(f"bag {node} names unknown vertex {v}")
            else:
                holders[v].append(node)
    for v, nodes in holders.items():
        if not nodes:
            problems.append(f"vertex {v} is in no bag")
    for u, v in g.sorted_edges():
        if not any(u in bag and v in bag for bag in t.bags.values()):
            problems.append(f"edge ({u}, {v}) is in no bag")
    tree = t.tree.to_networkx()
    for v, nodes in holders.items():
        if len(nodes) > 1 and not nx.is_connected(tree.subgraph(nodes)):
            problems.append(f"bags containing vertex {v} are not connected")
    return not problems, problems


def td_from_elimination(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Decomposition whose bags are the eliminated vertices with their later neighbours"""
    if g.n == 0:
        return TreeDecomposition(Graph(1), {0: frozenset()})
    position = {v: i for i, v in enumerate(order)}
    adj = {v: set(ws) for v, ws in g.adjacency.items()}
    bags = {}
    for v in order:
        later = {w for w in adj[v] if position[w] > position[v]}
        bags[position[v]] = frozenset(later | {v})
        for a in later:
            adj[a].update(later - {a})
    edges = []
    last = len(order) - 1
    for v in order:
        later = bags[position[v]] - {v}
        if later:
            edges.append((position[v], min(position[w] for w in later)))
        elif position[v] != last:
            edges.append((position[v], last))
    return TreeDecomposition(Graph.from_edges(len(order), edges), bags)


def td_heuristic(g: Graph) -> TreeDecomposition:
    """Min-fill-in heuristic decomposition"""
    if g.n == 0:
        return td_from_elimination(g, [])
    width, decomposition = treewidth_min_fill_in(g.to_networkx())
    nodes = sorted(decomposition.nodes(), key=lambda bag: (sorted(bag), len(bag)))
    index = {bag: i for i, bag in enumerate(nodes)}
    tree = Graph.from_edges(len(nodes), ((index[a], index[b]) for a, b in decomposition.edges()))
    td = TreeDecomposition(tree, {index[bag]: frozenset(bag) for bag in nodes})
    logger.debug(f"Min-fill decomposition of {g}: width {width}, {len(nodes)} bags")
    return td


def td_exact_small(g: Graph) -> TreeDecomposition:
    """Minimum-width decomposition by search over elimination orders"""
    if g.n > Config.EXACT_TD_MAX_VERTICES:
        raise TreeDecompositionError(
            f"Exact treewidth is limited to {Config.EXACT_TD_MAX_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        return td_from_elimination(g, [])
    adj = {v: set(ws) for v, ws in g.adjacency.items()}
    everyone = frozenset(range(g.n))
    bound = td_heuristic(g).width

    def later_neighbours(eliminated: FrozenSet[int], v: int) -> int:
        """Vertices outside eliminated+v reachable from v through eliminated vertices"""
        seen, stack, reach = {v}, [v], set()
        while stack:
            for w in adj[stack.pop()]:
                if w in seen:
                    continue
                seen.add(w)
                if w in eliminated:
                    stack.append(w)
                else:
                    reach.add(w)
        return len(reach)

    @lru_cache(maxsize=None)
    def best(eliminated: FrozenSet[int]) -> Tuple[int, Tuple[int, ...]]:
        if eliminated == everyone:
            return -1, ()
        result = (g.n, ())
        for v in sorted(everyone - eliminated):
            cost = later_neighbours(eliminated, v)
            if cost > bound or cost >= result[0]:
                continue
            rest_width, rest_order = best(eliminated | {v})
            width = max(cost, rest_width)
            if width < result[0]:
                result = (width, (v,) + rest_order)
        return result

    width, order = best(frozenset())
    if len(order) != g.n:
        return td_heuristic(g)
    logger.debug(f"Exact treewidth of {g}: {width}")
    return td_from_elimination(g, order)


def _compress(t: TreeDecomposition) -> Tuple[nx.Graph, Dict[int, Bag]]:
    """Merge every node whose bag is contained in a neighbour's bag"""
    tree = t.tree.to_networkx()
    bags = dict(t.bags)
    merged = True
    while merged:
        merged = False
        for node in sorted(tree.nodes(), key=lambda x: (sorted(bags[x]), x)):
            supersets = [w for w in tree.neighbors(node) if bags[node] <= bags[w]]
            if not supersets:
                continue
            target = min(supersets, key=lambda w: (sorted(bags[w]), w))
            tree = nx.contracted_nodes(tree, target, node, self_loops=False)
            del bags[node]
            merged = True
            break
    return tree, bags


def to_nice(t: TreeDecomposition) -> NiceTreeDecomposition:
    """Nice decomposition of the same width, rooted at a bag containing vertex 0"""
    if sorted(t.bags) != list(range(t.tree.n)) or not t.tree.is_tree():
        raise TreeDecompositionError("Input is not a tree decomposition")
    tree, bags = _compress(t)
    vertices = set().union(*bags.values()) if bags else set()
    if not vertices:
        return NiceTreeDecomposition(None, {}, {}, {})
    for v in vertices:
        holders = [node for node, bag in bags.items() if v in bag]
        if not nx.is_connected(tree.subgraph(holders)):
            raise TreeDecompositionError(f"Bags containing vertex {v} are not connected")

    first = min(vertices)
    root = min((node for node, bag in bags.items() if first in bag), key=lambda x: (sorted(bags[x]), x))
    children_of = {
        node: sorted(kids, key=lambda x: (sorted(bags[x]), x))
        for node, kids in nx.bfs_successors(tree, root)
    }

    out_children: Dict[int, Tuple[int, ...]] = {}
    out_kind: Dict[int, NodeKind] = {}
    out_bags: Dict[int, Bag] = {}

    def add(kind: NodeKind, bag: Bag, kids: Tuple[int, ...]) -> int:
        node = len(out_bags)
        out_children[node], out_kind[node], out_bags[node] = kids, kind, bag
        return node

    def chain(bottom: int, bag: Bag) -> int:
        """Forget then introduce from bottom's bag up to bag"""
        current = bottom
        for v in sorted(out_bags[bottom] - bag):
            current = add(NodeKind.FORGET, out_bags[current] - {v}, (current,))
        for v in sorted(bag - out_bags[current]):
            current = add(NodeKind.INTRODUCE, out_bags[current] | {v}, (current,))
        return current

    built: Dict[int, int] = {}
    order = [root] + [kid for node in nx.bfs_tree(tree, root) for kid in children_of.get(node, [])]
    for node in reversed(order):
        bag = frozenset(bags[node])
        kids = children_of.get(node, [])
        if not kids:
            start = min(bag)
            top = add(NodeKind.LEAF, frozenset({start}), ())
            built[node] = chain(top, bag)
            continue
        tops = [chain(built[kid], bag) for kid in kids]
        current = tops[0]
        for other in tops[1:]:
            current = add(NodeKind.JOIN, bag, (current, other))
        built[node] = current

    nice = NiceTreeDecomposition(built[root], out_children, out_kind, out_bags)
    limit = Config.NICE_NODE_FACTOR * len(vertices) * (nice.width + 2)
    if nice.node_count > limit:
        raise TreeDecompositionError(f"Nice decomposition has {nice.node_count} nodes, limit {limit}")
    logger.debug(f"Nice decomposition: {nice.node_count} nodes, width {nice.width}")
    return nice


def star_map(t: NiceTreeDecomposition, g: Graph) -> StarMap:
    """Assign each edge to an introduce node of one endpoint; per node the edges share that endpoint"""
    assignment: Dict[Edge, int] = {}
    centers: Dict[int, int] = {}
    for node in t.postorder():
        if t.kind[node] != NodeKind.INTRODUCE:
            continue
        u = t.introduced(node)
        for w in sorted(t.bags[node] - {u}):
            e = edge_key(u, w)
            if e in g.edges and e not in assignment:
                assignment[e] = node
                centers[node] = u
    uncovered = sorted(g.edges - set(assignment))
    if uncovered:
        raise TreeDecompositionError(f"Edges {uncovered[:5]} are not covered by the decomposition")
    return StarMap(assignment, centers)


def bag_coloring(t: NiceTreeDecomposition) -> BagColoring:
    """Colour vertices top-down so that vertices sharing a bag differ"""
    color: Dict[int, int] = {}
    for node in t.preorder():
        bag = t.bags[node]
        used = {color[v] for v in bag if v in color}
        for v in sorted(bag):
            if v in color:
                continue
            c = 1
            while c in used:
                c += 1
            color[v] = c
            used.add(c)
    return BagColoring(color=color, k=t.width + 1)
