"""Maximal cliques of circulant graphs, which bound the supports of factors."""
from __future__ import annotations

import networkx as nx


def circulant_graph(d: int, connections) -> nx.Graph:
    conn = {int(k) % d for k in connections} - {0}
    g = nx.Graph()
    g.add_nodes_from(range(d))
    g.add_edges_from((i, (i + k) % d) for i in range(d) for k in conn)
    return g


def maximal_cliques_circulant(d: int, connections) -> list[tuple[int, ...]]:
    """Maximal cliques of the circulant graph on Z_d joining ``i`` and ``i + k`` for ``k`` in ``connections``.

    If ``a = x * reverse(x)`` with ``x >= 0`` has support ``{0} | connections``,
    every factor ``x`` is supported inside one of these cliques.
    """
    if d < 1:
        raise ValueError("d must be positive")
    cliques = (tuple(sorted(c)) for c in nx.find_cliques(circulant_graph(d, connections)))
    return sorted(cliques, key=lambda c: (len(c), c))


def cliques_through_zero(d: int, connections) -> list[tuple[int, ...]]:
    """One representative per shift class, translated to contain 0 as its smallest element."""
    reps = set()
    for c in maximal_cliques_circulant(d, connections):
        shifts = [tuple(sorted((x - p) % d for x in c)) for p in c]
        reps.add(min(shifts))
    return sorted(reps, key=lambda c: (len(c), c))
