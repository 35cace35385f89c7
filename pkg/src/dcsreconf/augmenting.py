"""Search for alternating trails with prescribed endpoint types.

A trail here alternates between edges outside and inside a reference edge set
("member" edges), with distinct edges but freely repeated vertices. The search
builds a gadget graph: every candidate edge becomes a matched pair of ports
(one per endpoint), passing through a vertex pairs ports of opposite sides,
and virtual terminals encode the admissible start/end vertices. Alternating
trails then correspond exactly to matching-augmenting paths between the
terminals, which are found with a blossom search (the gadget graph contains
odd alternating cycles, so plain BFS is not enough).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import Graph
from .trail_type import Trail

_SIGMA = 0
_TAU = 1


def find_alternating_trail(
    graph: Graph,
    pool: Iterable[int],
    member: set[int],
    sources: set[int],
    add_sinks: set[int],
    remove_sinks: set[int] = frozenset(),
) -> Trail | None:
    """Find a trail within ``pool`` alternating around ``member``.

    The trail starts at a vertex in ``sources`` with a non-member edge and
    either ends at a vertex in ``add_sinks`` with a non-member edge (odd
    trail, one more non-member than member edge) or at a vertex in
    ``remove_sinks`` with a member edge (even trail). Returns None when no
    such trail exists.
    """
    pool = sorted(pool)
    if not pool or not sources or not (add_sinks or remove_sinks):
        return None
    local = {e: j for j, e in enumerate(pool)}

    def port(j: int, v: int) -> int:
        u, _ = graph.edges[pool[j]]
        return 2 + 2 * j + (0 if v == u else 1)

    n_nodes = 2 + 2 * len(pool)
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    match = [-1] * n_nodes
    for j in range(len(pool)):
        match[2 + 2 * j] = 3 + 2 * j
        match[3 + 2 * j] = 2 + 2 * j

    def link(x: int, y: int) -> None:
        adj[x].append(y)
        adj[y].append(x)

    by_vertex_member: list[list[int]] = [[] for _ in range(graph.n)]
    by_vertex_outside: list[list[int]] = [[] for _ in range(graph.n)]
    for j, e in enumerate(pool):
        u, v = graph.edges[e]
        target = by_vertex_member if e in member else by_vertex_outside
        target[u].append(j)
        target[v].append(j)

    for v in range(graph.n):
        for j in by_vertex_member[v]:
            for jj in by_vertex_outside[v]:
                link(port(j, v), port(jj, v))
    for u in sorted(sources):
        for j in by_vertex_outside[u]:
            link(_SIGMA, port(j, u))
    for w in sorted(add_sinks):
        for j in by_vertex_outside[w]:
            link(port(j, w), _TAU)
    for w in sorted(remove_sinks):
        for j in by_vertex_member[w]:
            link(port(j, w), _TAU)

    node_path = _augmenting_node_path(n_nodes, adj, match, _SIGMA)
    if node_path is None:
        return None
    return _decode(graph, pool, match, node_path)


def _decode(graph: Graph, pool: list[int], match: list[int], node_path: list[int]) -> Trail:
    """Turn a terminal-to-terminal gadget path back into a trail."""
    assert node_path[0] == _SIGMA and node_path[-1] == _TAU
    inner = node_path[1:-1]
    assert inner and len(inner) % 2 == 0

    def owner(node: int) -> tuple[int, int]:
        j, side = divmod(node - 2, 2)
        return pool[j], graph.edges[pool[j]][side]

    edges: list[int] = []
    vertices: list[int] = []
    for i in range(0, len(inner), 2):
        entry, arrive = inner[i], inner[i + 1]
        assert match[entry] == arrive, "gadget path lost alternation"
        e, from_v = owner(entry)
        _, to_v = owner(arrive)
        if not vertices:
            vertices.append(from_v)
        assert vertices[-1] == from_v, "gadget path lost vertex continuity"
        edges.append(e)
        vertices.append(to_v)
    return Trail(tuple(vertices), tuple(edges))


def _augmenting_node_path(
    n_nodes: int, adj: list[list[int]], match: list[int], root: int
) -> list[int] | None:
    """Blossom search for an augmenting path from ``root`` to any free node.

    Blossom contraction keeps explicit member lists per base class so each
    event touches only the absorbed nodes, not the whole graph.
    """
    parent = [-1] * n_nodes
    base = list(range(n_nodes))
    members: list[list[int] | None] = [[i] for i in range(n_nodes)]
    used = [False] * n_nodes
    used[root] = True
    queue = deque([root])
    stamp = [0] * n_nodes
    epoch = 0

    def lca(a: int, b: int) -> int:
        nonlocal epoch
        epoch += 1
        x = a
        while True:
            x = base[x]
            stamp[x] = epoch
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if stamp[y] == epoch:
                return y
            y = parent[match[y]]

    def mark_path(v: int, stem: int, child: int, absorbed: list[int]) -> None:
        while base[v] != stem:
            absorbed.append(base[v])
            absorbed.append(base[match[v]])
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or match[v] == u:
                continue
            if u == root or (match[u] != -1 and parent[match[u]] != -1):
                stem = lca(v, u)
                absorbed: list[int] = []
                mark_path(v, stem, u, absorbed)
                mark_path(u, stem, v, absorbed)
                bucket = members[stem]
                for rep in absorbed:
                    if rep == stem:
                        continue
                    group = members[rep]
                    if group is None:
                        continue
                    members[rep] = None
                    for i in group:
                        base[i] = stem
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
                    bucket.extend(group)
            elif parent[u] == -1:
                parent[u] = v
                if match[u] == -1:
                    return _walk_back(u, parent, match)
                used[match[u]] = True
                queue.append(match[u])
    return None


def _walk_back(end: int, parent: list[int], match: list[int]) -> list[int]:
    path = [end]
    v = parent[end]
    while True:
        path.append(v)
        if match[v] == -1:
            break
        w = match[v]
        path.append(w)
        v = parent[w]
    path.reverse()
    return path
