"""Clique search tree structure, counting, and enumeration."""

import random

import pytest
from hypothesis import given, settings

from clique_census import (
    CapacityError,
    Graph,
    RootedSubtree,
    build_tree,
    census,
    count_cliques,
    enumerate_cliques,
    induced_subgraph,
    subtree_at,
    subtree_bound_check,
)
from clique_census.tree import trees_isomorphic

from brute import brute_census, brute_cliques
from strategies import graphs


def k(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_k3_has_eight_nodes():
    tree = build_tree(k(3))
    assert tree.node_count == 8
    assert tree.height() == 3


def test_empty_graph():
    tree = build_tree(Graph(0, []))
    assert tree.node_count == 1
    assert count_cliques(Graph(0, [])) == 1
    assert census(Graph(0, [])).counts == (1,)


def test_preorder_indices_contiguous():
    tree = build_tree(k(4))
    sizes = tree.subtree_sizes()
    for node in tree.nodes:
        assert tree.nodes[node.index] is node
        last = node.index + sizes[node.index] - 1
        assert last < tree.node_count
        for child in node.children:
            assert node.index < child.index <= last


@given(graphs())
@settings(max_examples=80)
def test_census_matches_brute_force(g):
    assert list(census(g).counts) == brute_census(g)


@given(graphs())
def test_count_matches_tree_node_count(g):
    tree = build_tree(g)
    assert tree.node_count == count_cliques(g)
    assert list(tree.census_counts()) == list(census(g).counts)


@given(graphs(max_n=8))
def test_enumerate_exactly_once(g):
    seen = list(enumerate_cliques(g))
    assert len(seen) == len(set(seen)) == count_cliques(g)
    assert set(seen) == brute_cliques(g)
    assert seen[0] == frozenset()


@given(graphs(max_n=8))
def test_enumeration_order_matches_tree(g):
    tree = build_tree(g)
    assert [node.clique() for node in tree.nodes] == list(enumerate_cliques(g))


@given(graphs())
def test_depth_equals_clique_size(g):
    tree = build_tree(g)
    for node in tree.nodes:
        assert node.depth == len(node.clique())
        assert node.label_size == node.label_bits.bit_count()


@given(graphs())
def test_labels_nest_strictly(g):
    tree = build_tree(g)
    for node in tree.nodes:
        for child in node.children:
            assert child.label_bits & ~node.label_bits == 0
            assert child.label_bits != node.label_bits
            assert not child.label_bits >> child.chosen_vertex & 1


@given(graphs())
@settings(max_examples=40)
def test_subtree_matches_rebuilt_label_graph(g):
    tree = build_tree(g)
    rng = random.Random(17)
    sample = rng.sample(tree.nodes, min(8, tree.node_count))
    for node in sample:
        sub = subtree_at(tree, node)
        label = sorted(node.label)
        rebuilt = build_tree(induced_subgraph(g, label)[0])
        vmap = {old: new for new, old in enumerate(label)}
        assert sub.node_count == rebuilt.node_count
        assert trees_isomorphic(sub, rebuilt, vmap)


def test_subtree_at_rejects_foreign_node():
    a = build_tree(k(3))
    b = build_tree(k(3))
    with pytest.raises(ValueError):
        subtree_at(a, b.nodes[1])


def test_node_cap():
    with pytest.raises(CapacityError) as err:
        build_tree(k(10), node_cap=100)
    assert err.value.partial_count == 100
    assert build_tree(k(10), node_cap=1024).node_count == 1024


def random_rooted_subtree(tree, rng):
    included = {tree.root.index}
    queue = [tree.root]
    while queue:
        node = queue.pop()
        for child in node.children:
            if rng.random() < 0.6:
                included.add(child.index)
                queue.append(child)
    return RootedSubtree(tree, included)


@given(graphs(max_n=9))
@settings(max_examples=40)
def test_subtree_bound_check_holds(g):
    tree = build_tree(g)
    t = len(census(g).counts)  # g has no clique of this size
    rng = random.Random(5)
    for _ in range(5):
        sub = random_rooted_subtree(tree, rng)
        check = subtree_bound_check(tree, t, sub)
        assert check.holds
        assert check.lhs == tree.node_count


def test_rooted_subtree_validation():
    tree = build_tree(k(3))
    with pytest.raises(ValueError):
        RootedSubtree(tree, set())
    leafy = [n for n in tree.nodes if n.depth == 2][0]
    with pytest.raises(ValueError):
        RootedSubtree(tree, {tree.root.index, leafy.index})
    with pytest.raises(ValueError):
        RootedSubtree(tree, {tree.root.index, 999})


def test_census_total_and_max_size():
    c = census(k(4))
    assert c.total == 16
    assert c.max_clique_size == 4
    assert c.to_json_array() == ["1", "4", "6", "4", "1"]
