"""Maximum and feasibility solving for degree-constrained subgraphs.

Both phases run on the generic alternating-trail search: first, deficient
vertices (below their lower bound) are repaired one unit at a time by trails
that add net degree there without hurting anyone else; then the subgraph is
grown by augmenting trails until none exists, which certifies maximality.
"""

from __future__ import annotations

from .augmenting import find_alternating_trail
from .core import DegreeBounds, Graph, Subgraph, is_ab_constrained
from .errors import ContractError, SynthesisError
from .trail_type import Trail


def feasible_subgraph(graph: Graph, bounds: DegreeBounds) -> Subgraph | None:
    """Some subgraph within the bounds, or None when the lower bounds are unsatisfiable."""
    sub = Subgraph(graph)
    while True:
        deficient = next(
            (v for v in range(graph.n) if sub.degrees[v] < bounds.lower[v]), None
        )
        if deficient is None:
            return sub
        v = deficient
        add_sinks = {
            w for w in range(graph.n) if w != v and sub.degrees[w] < bounds.upper[w]
        }
        if sub.degrees[v] + 2 <= bounds.upper[v]:
            add_sinks.add(v)
        remove_sinks = {
            w for w in range(graph.n) if w != v and sub.degrees[w] > bounds.lower[w]
        }
        trail = find_alternating_trail(
            graph, range(graph.m), sub.edge_set, {v}, add_sinks, remove_sinks
        )
        if trail is None:
            return None
        for e in trail.edges:
            if e in sub:
                sub.remove(e)
            else:
                sub.add(e)


def augment_trail(graph: Graph, bounds: DegreeBounds, sub: Subgraph) -> Trail | None:
    """A trail whose flip grows ``sub`` by one edge and stays feasible, or None."""
    room = {v for v in range(graph.n) if sub.degrees[v] < bounds.upper[v]}
    found = find_alternating_trail(graph, range(graph.m), sub.edge_set, room, room)
    if found is None:
        return None
    if not found.is_closed or sub.degrees[found.vertices[0]] + 2 <= bounds.upper[
        found.vertices[0]
    ]:
        return found
    for u in sorted(room):
        sinks = {w for w in room if w != u}
        if sub.degrees[u] + 2 <= bounds.upper[u]:
            sinks.add(u)
        found = find_alternating_trail(graph, range(graph.m), sub.edge_set, {u}, sinks)
        if found is not None:
            return found
    return None


def augment(graph: Graph, bounds: DegreeBounds, sub: Subgraph) -> Subgraph | None:
    """One edge bigger and still feasible, or None iff ``sub`` is maximum."""
    if not is_ab_constrained(sub, bounds):
        raise ContractError("augment requires a feasible subgraph")
    trail = augment_trail(graph, bounds, sub)
    if trail is None:
        return None
    out = sub.copy()
    for e in trail.edges:
        if e in out:
            out.remove(e)
        else:
            out.add(e)
    if len(out) != len(sub) + 1 or not is_ab_constrained(out, bounds):
        raise SynthesisError("augmenting trail produced an invalid subgraph")
    return out


def is_maximum(graph: Graph, bounds: DegreeBounds, sub: Subgraph) -> bool:
    if not is_ab_constrained(sub, bounds):
        raise ContractError("maximality test requires a feasible subgraph")
    return augment_trail(graph, bounds, sub) is None


def maximum_dcs(graph: Graph, bounds: DegreeBounds) -> Subgraph | None:
    """A feasible subgraph of maximum edge count, or None when none exists."""
    sub = feasible_subgraph(graph, bounds)
    if sub is None:
        return None
    while True:
        bigger = augment(graph, bounds, sub)
        if bigger is None:
            return sub
        sub = bigger
