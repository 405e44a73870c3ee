"""Clique search trees.

The tree of a graph has one node per clique: the root carries the full
vertex set as its candidate label, and a node with label L gets one child
per vertex of L, produced by repeatedly choosing a minimum-degree vertex v
of the subgraph induced on the current L (smallest id on ties), attaching a
child labelled L intersect N(v), and then removing v from L. The clique at
a node is the set of chosen vertices along its root path.

Counting and census run streaming through the selected kernel backend and
never materialize nodes; build_tree materializes the node structure for
inspection, subject to a node cap.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, NamedTuple

from . import backend as _backend
from .errors import CapacityError
from .graph import Graph, degeneracy, min_degree_vertex

DEFAULT_NODE_CAP = 10_000_000


class CliqueTreeNode:
    """One node of a materialized clique search tree."""

    __slots__ = ("label_bits", "label_size", "depth", "chosen_vertex", "parent",
                 "index", "children")

    def __init__(self, label_bits, depth, chosen_vertex, parent, index):
        self.label_bits: int = label_bits
        self.label_size: int = label_bits.bit_count()
        self.depth: int = depth
        self.chosen_vertex: int | None = chosen_vertex
        self.parent: CliqueTreeNode | None = parent
        self.index: int = index
        self.children: list[CliqueTreeNode] = []

    @property
    def label(self) -> frozenset[int]:
        out = set()
        m = self.label_bits
        while m:
            low = m & -m
            out.add(low.bit_length() - 1)
            m ^= low
        return frozenset(out)

    def clique(self) -> frozenset[int]:
        """Chosen vertices along the path from the root to this node."""
        out = set()
        node = self
        while node is not None and node.chosen_vertex is not None:
            out.add(node.chosen_vertex)
            node = node.parent
        return frozenset(out)

    def __repr__(self) -> str:
        return (f"CliqueTreeNode(index={self.index}, depth={self.depth}, "
                f"label_size={self.label_size})")


class CliqueSearchTree:
    """A materialized clique search tree, or a re-rooted view of one."""

    def __init__(self, graph: Graph | None, root: CliqueTreeNode,
                 nodes: list[CliqueTreeNode]):
        self.graph = graph
        self.root = root
        self.nodes = nodes
        self._subtree_sizes: dict[int, int] | None = None

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def depth_of(self, node: CliqueTreeNode) -> int:
        return node.depth - self.root.depth

    def height(self) -> int:
        return max(self.depth_of(node) for node in self.nodes)

    def census_counts(self) -> list[int]:
        counts = [0] * (self.height() + 1)
        for node in self.nodes:
            counts[self.depth_of(node)] += 1
        return counts

    def subtree_sizes(self) -> dict[int, int]:
        """Node count of the subtree below each node, keyed by node index."""
        if self._subtree_sizes is None:
            sizes = {node.index: 1 for node in self.nodes}
            for node in reversed(self.nodes):
                if node is not self.root and node.parent is not None:
                    sizes[node.parent.index] += sizes[node.index]
            self._subtree_sizes = sizes
        return self._subtree_sizes

    def contains(self, node: CliqueTreeNode) -> bool:
        i = node.index - self.root.index
        return 0 <= i < len(self.nodes) and self.nodes[i] is node


def build_tree(g: Graph, node_cap: int = DEFAULT_NODE_CAP) -> CliqueSearchTree:
    """Materialize the clique search tree of g, in depth-first creation order.

    Node indices are preorder positions, so a node's subtree occupies a
    contiguous index range. Raises CapacityError (with the partial node
    count) once the tree would exceed node_cap nodes.
    """
    root = CliqueTreeNode(g.full_mask(), 0, None, None, 0)
    nodes = [root]
    stack: list[tuple[CliqueTreeNode, int]] = [(root, root.label_bits)]
    while stack:
        node, remaining = stack.pop()
        if remaining == 0:
            continue
        v = min_degree_vertex(g, remaining)
        child_bits = remaining & g.bits[v]
        if len(nodes) >= node_cap:
            raise CapacityError(
                f"clique tree exceeds node cap {node_cap}", partial_count=len(nodes)
            )
        child = CliqueTreeNode(child_bits, node.depth + 1, v, node, len(nodes))
        node.children.append(child)
        nodes.append(child)
        stack.append((node, remaining ^ (1 << v)))
        stack.append((child, child_bits))
    return CliqueSearchTree(g, root, nodes)


@dataclass(frozen=True)
class CliqueCensus:
    """Per-size clique counts; counts[k] is the number of k-cliques."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def max_clique_size(self) -> int:
        return len(self.counts) - 1

    def to_json_array(self) -> list[str]:
        return [str(c) for c in self.counts]


def _root_split_counts(g: Graph, threads: int, backend: str | None) -> list[int]:
    # The root's choice sequence is exactly the degeneracy peeling order, so
    # the children's subtrees are independent jobs.
    order = degeneracy(g).ordering
    jobs = []
    mask = g.full_mask()
    for v in order:
        jobs.append(g.bits[v] & mask)
        mask ^= 1 << v
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(
            lambda child_mask: _backend.census_of_subset(g, child_mask, backend),
            jobs,
        ))
    counts = [1]
    for res in results:
        for d, c in enumerate(res):
            while len(counts) <= d + 1:
                counts.append(0)
            counts[d + 1] += c
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def census(g: Graph, threads: int = 1, backend: str | None = None) -> CliqueCensus:
    """Exact per-size clique counts, computed streaming.

    Depth-k tree nodes are exactly the k-cliques, so the per-depth node
    counts of the traversal are the census. The list is trimmed after the
    last nonzero entry. threads > 1 splits the traversal at the root; with
    the compiled backend the split runs in parallel.
    """
    if threads > 1 and g.n > 1:
        counts = _root_split_counts(g, threads, backend)
    else:
        counts = _backend.census_of_subset(g, g.full_mask(), backend)
    return CliqueCensus(tuple(counts))


def count_cliques(g: Graph, threads: int = 1, backend: str | None = None) -> int:
    """Total number of cliques of g, the empty clique included."""
    return census(g, threads=threads, backend=backend).total


def enumerate_cliques(g: Graph) -> Iterator[frozenset[int]]:
    """Yield every clique of g, in depth-first child-creation order.

    The empty clique comes first. Memory stays proportional to the depth of
    the tree, not to the clique count.
    """
    yield frozenset()
    stack: list[tuple[int, tuple[int, ...]]] = [(g.full_mask(), ())]
    while stack:
        remaining, chosen = stack.pop()
        if remaining == 0:
            continue
        v = min_degree_vertex(g, remaining)
        child_bits = remaining & g.bits[v]
        clique = chosen + (v,)
        stack.append((remaining ^ (1 << v), chosen))
        yield frozenset(clique)
        stack.append((child_bits, clique))
    return


def subtree_at(tree: CliqueSearchTree, node: CliqueTreeNode) -> CliqueSearchTree:
    """The subtree on `node` and its descendants, re-rooted at `node`.

    Nodes are shared with the original tree; labels keep original ids and
    depths keep their absolute values (use depth_of for relative depth).
    """
    if not tree.contains(node):
        raise ValueError("node does not belong to this tree")
    size = tree.subtree_sizes()[node.index]
    start = node.index - tree.root.index
    return CliqueSearchTree(tree.graph, node, tree.nodes[start:start + size])


class RootedSubtree:
    """A subtree of a clique search tree containing the root and closed
    under taking parents."""

    def __init__(self, tree: CliqueSearchTree, included):
        self.tree = tree
        self.included = frozenset(included)
        if tree.root.index not in self.included:
            raise ValueError("rooted subtree must contain the root")
        base = tree.root.index
        for idx in self.included:
            i = idx - base
            if not (0 <= i < len(tree.nodes)):
                raise ValueError(f"node index {idx} not in tree")
            node = tree.nodes[i]
            if node is not tree.root and node.parent.index not in self.included:
                raise ValueError(
                    f"node {idx} included without its parent {node.parent.index}"
                )

    @property
    def size(self) -> int:
        return len(self.included)

    def node(self, idx: int) -> CliqueTreeNode:
        return self.tree.nodes[idx - self.tree.root.index]

    def boundary_nodes(self) -> list[CliqueTreeNode]:
        """Included nodes with at least one child outside the subtree."""
        out = []
        for idx in sorted(self.included):
            node = self.node(idx)
            if any(c.index not in self.included for c in node.children):
                out.append(node)
        return out

    def excluded_children(self, node: CliqueTreeNode) -> list[CliqueTreeNode]:
        return [c for c in node.children if c.index not in self.included]


class BoundCheck(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def subtree_bound_check(tree: CliqueSearchTree, t: int,
                        sub: RootedSubtree) -> BoundCheck:
    """Check |tree| <= |sub| * sum_{i<t} C(m, i), m the largest boundary label.

    Valid whenever the graph has no clique of t vertices (the caller is
    expected to know this, for instance from the census). Exact integers
    throughout.
    """
    if sub.tree is not tree:
        raise ValueError("subtree does not belong to this tree")
    if t < 1:
        raise ValueError("t must be positive")
    boundary = sub.boundary_nodes()
    m = max((node.label_size for node in boundary), default=0)
    rhs = sub.size * sum(comb(m, i) for i in range(t))
    lhs = tree.node_count
    return BoundCheck(lhs, rhs, lhs <= rhs)


def trees_isomorphic(a: CliqueSearchTree, b: CliqueSearchTree,
                     vertex_map: dict[int, int] | None = None) -> bool:
    """Structural equality of two trees as rooted ordered labelled trees.

    vertex_map translates a's vertex ids into b's; None means identity.
    Chosen vertices and full labels must correspond under the map.
    """

    def translate(bits: int) -> int:
        if vertex_map is None:
            return bits
        out = 0
        m = bits
        while m:
            low = m & -m
            out |= 1 << vertex_map[low.bit_length() - 1]
            m ^= low
        return out

    stack = [(a.root, b.root)]
    while stack:
        x, y = stack.pop()
        if translate(x.label_bits) != y.label_bits:
            return False
        if len(x.children) != len(y.children):
            return False
        for cx, cy in zip(x.children, y.children):
            vx = cx.chosen_vertex if vertex_map is None else vertex_map[cx.chosen_vertex]
            if vx != cy.chosen_vertex:
                return False
            stack.append((cx, cy))
    return True
