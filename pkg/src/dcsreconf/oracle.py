"""Exhaustive ground truth on small hosts: enumerate states, BFS over single-edge flips."""

from __future__ import annotations

from collections import deque

from .core import DegreeBounds, Graph, Instance, Subgraph
from .errors import OracleCapError

DEFAULT_EDGE_CAP = 16


def _check_cap(graph: Graph, cap: int) -> None:
    if graph.m > cap:
        raise OracleCapError(f"{graph.m} edges exceed the exhaustive-enumeration cap {cap}")


def _feasible_masks(graph: Graph, bounds: DegreeBounds) -> list[int]:
    """All edge bitmasks whose degree vector lies within the bounds."""
    masks = []
    for mask in range(1 << graph.m):
        deg = [0] * graph.n
        rest = mask
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            u, v = graph.edges[e]
            deg[u] += 1
            deg[v] += 1
            rest ^= low
        if all(bounds.lower[v] <= deg[v] <= bounds.upper[v] for v in range(graph.n)):
            masks.append(mask)
    return masks


def enumerate_ab_constrained(
    graph: Graph, bounds: DegreeBounds, size_floor: int = 0, cap: int = DEFAULT_EDGE_CAP
) -> list[Subgraph]:
    """All feasible subgraphs with at least ``size_floor`` edges."""
    _check_cap(graph, cap)
    out = []
    for mask in _feasible_masks(graph, bounds):
        if mask.bit_count() >= size_floor:
            out.append(Subgraph(graph, _mask_edges(mask)))
    return out


def _mask_edges(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(sub: Subgraph) -> int:
    mask = 0
    for e in sub.edge_set:
        mask |= 1 << e
    return mask


def _reachable_masks(inst: Instance, floor: int, cap: int) -> set[int]:
    """BFS component of the source over feasible states of size >= floor."""
    graph = inst.graph
    _check_cap(graph, cap)
    allowed = {
        m for m in _feasible_masks(graph, inst.bounds) if m.bit_count() >= floor
    }
    start = _mask_of(inst.source)
    if start not in allowed:
        return set()
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for e in range(graph.m):
            nxt = cur ^ (1 << e)
            if nxt in allowed and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def oracle_decide(inst: Instance, cap: int = DEFAULT_EDGE_CAP) -> bool:
    """True iff the target is reachable from the source under the instance's slack."""
    inst.validate()
    reach = _reachable_masks(inst, inst.size_floor(), cap)
    return _mask_of(inst.target) in reach


def oracle_min_k(
    graph: Graph,
    bounds: DegreeBounds,
    source: Subgraph,
    target: Subgraph,
    cap: int = DEFAULT_EDGE_CAP,
) -> int | None:
    """Smallest slack k >= 1 making the instance reachable, or None if none exists.

    Slacks above the edge count cannot relax the floor any further, so
    unreachability at k = |E| settles unreachability for every k.
    """
    for k in range(1, graph.m + 2):
        inst = Instance(graph, bounds, source, target, k)
        if oracle_decide(inst, cap):
            return k
        if min(len(source), len(target)) - k <= 0:
            break
    return None


def oracle_reachable_states(inst: Instance, cap: int = DEFAULT_EDGE_CAP) -> list[Subgraph]:
    """All states reachable from the source (used by invariant tests)."""
    reach = _reachable_masks(inst, inst.size_floor(), cap)
    return [Subgraph(inst.graph, _mask_edges(m)) for m in sorted(reach)]
