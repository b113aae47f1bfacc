"""Brute-force oracles, deliberately independent of the package internals.

Colorings come from ``itertools.product`` filtered by a direct edge check;
the configuration graph is built as a networkx graph by comparing every
pair of colorings.
"""

from __future__ import annotations

import itertools

import networkx as nx


def all_graphs(n, connected=True):
    """Every labeled graph on ``n`` vertices as (n, edge list), by edge-subset enumeration."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if connected and n > 1:
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(edges)
            if not nx.is_connected(h):
                continue
        yield n, edges


def proper_colorings(n, edges, k):
    return [c for c in itertools.product(range(k), repeat=n) if all(c[u] != c[v] for u, v in edges)]


def config_graph(n, edges, k):
    """Configuration graph: colorings adjacent iff they differ in exactly one position."""
    cols = proper_colorings(n, edges, k)
    h = nx.Graph()
    h.add_nodes_from(cols)
    for a, b in itertools.combinations(cols, 2):
        if sum(x != y for x, y in zip(a, b)) == 1:
            h.add_edge(a, b)
    return h


def is_mixing(n, edges, k):
    h = config_graph(n, edges, k)
    return h.number_of_nodes() == 0 or nx.is_connected(h)


def stuck_colorings(n, edges):
    """3-colorings whose configuration component holds no coloring with <= 2 colors."""
    h = config_graph(n, edges, 3)
    out = []
    for comp in nx.connected_components(h):
        if not any(len(set(c)) <= 2 for c in comp):
            out.extend(comp)
    return sorted(out)


def is_bipartite(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.is_bipartite(h)


def cycle_chromatic(n, k):
    return (k - 1) ** n + (-1) ** n * (k - 1)


def tree_chromatic(n, k):
    return k * (k - 1) ** (n - 1)


def complete_chromatic(n, k):
    out = 1
    for i in range(n):
        out *= k - i
    return max(out, 0)
