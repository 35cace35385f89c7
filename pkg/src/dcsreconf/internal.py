"""Move synthesis for trails reconfigured inside the symmetric difference.

The workhorse is a recursive splitter: an even alternating trail is cut into
smaller even pieces whose reconfiguration order is chosen so that every
piece's entry conditions hold in the subgraph produced by the earlier pieces.
The base case is a two-edge trail handled by one paired remove/add (ordered
by the middle vertex's upper-bound slack). Emitted sequences touch only trail
edges, keep every intermediate state feasible, and never let the edge count
drop more than one below the ambient size, except for the fully upper-tight
cycles which need a dip of two.

Workers with a leading underscore mutate the passed subgraph in place and
append to the move list; the public functions wrap them on a copy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ADD, REMOVE, DegreeBounds, Move, Subgraph
from .errors import (
    ContractError,
    NeedsK2Error,
    NotInternallyReconfigurableError,
    SynthesisError,
)
from .trail_type import Trail, alternates, inside_first, reverse_keep_first_edge
from .trails import is_alternatingly_ab_tight

GROW = "grow"  # odd trail whose flip adds one edge (danglers outside)
SHRINK = "shrink"  # odd trail whose flip removes one edge (danglers inside)


@dataclass(frozen=True)
class Violation:
    condition: str
    vertex: int | None = None


def check_internal_conditions(
    trail: Trail, current: Subgraph, bounds: DegreeBounds
) -> Violation | None:
    """Check the exact conditions under which an even trail flips in place.

    Open trails need a start that can shed an edge and an end that can accept
    one; closed trails must not be uniformly upper-tight, uniformly
    lower-tight, or alternately tight; no trail vertex may have coinciding
    bounds. Returns None when every applicable condition holds.
    """
    if not trail.edges or len(trail) % 2 != 0:
        raise ContractError("internal conditions are defined for non-empty even trails")
    if not alternates(trail, current):
        raise ContractError("trail does not alternate around the current subgraph")
    t = inside_first(trail, current)
    for v in t.vertices:
        if bounds.lower[v] == bounds.upper[v]:
            return Violation("pinned-vertex", v)
    if not t.is_closed:
        if current.degrees[t.vertices[0]] == bounds.lower[t.vertices[0]]:
            return Violation("start-at-lower-bound", t.vertices[0])
        if current.degrees[t.vertices[-1]] == bounds.upper[t.vertices[-1]]:
            return Violation("end-at-upper-bound", t.vertices[-1])
        return None
    if all(current.degrees[v] == bounds.upper[v] for v in t.vertices):
        return Violation("cycle-all-at-upper-bound")
    if all(current.degrees[v] == bounds.lower[v] for v in t.vertices):
        return Violation("cycle-all-at-lower-bound")
    if is_alternatingly_ab_tight(t, current, bounds):
        return Violation("cycle-alternately-tight")
    return None


def _emit(ctx: Subgraph, bounds: DegreeBounds, out: list[Move], kind: str, edge: int) -> None:
    try:
        if kind == ADD:
            ctx.add(edge)
        else:
            ctx.remove(edge)
    except Exception as exc:  # noqa: BLE001 - rewrapped with synthesis context
        raise SynthesisError(f"synthesized an illegal move {kind} {edge}: {exc}") from exc
    for v in ctx.graph.edges[edge]:
        if not bounds.lower[v] <= ctx.degrees[v] <= bounds.upper[v]:
            raise SynthesisError(
                f"synthesized move {kind} {edge} violates bounds at vertex {v}"
            )
    out.append(Move(kind, edge))


def _flip(ctx: Subgraph, trail: Trail) -> None:
    for e in trail.edges:
        if e in ctx:
            ctx.remove(e)
        else:
            ctx.add(e)


def _first_valid_order(
    parts: list[Trail], ctx: Subgraph, bounds: DegreeBounds, orders: list[tuple[int, ...]]
) -> tuple[Trail, ...]:
    """First ordering whose pieces all pass their entry conditions in turn."""
    for order in orders:
        done: list[Trail] = []
        ok = True
        for idx in order:
            part = parts[idx]
            if check_internal_conditions(part, ctx, bounds) is not None:
                ok = False
                break
            _flip(ctx, part)
            done.append(part)
        for part in reversed(done):
            _flip(ctx, part)
        if ok:
            return tuple(parts[idx] for idx in order)
    raise SynthesisError("no admissible ordering of trail pieces")


def _elementary(trail: Trail, ctx: Subgraph, bounds: DegreeBounds, out: list[Move]) -> None:
    viol = check_internal_conditions(trail, ctx, bounds)
    if viol is not None:
        raise NotInternallyReconfigurableError(viol.condition, viol.vertex)
    t = inside_first(trail, ctx)
    if len(t) == 2:
        mid = t.vertices[1]
        if ctx.degrees[mid] == bounds.upper[mid]:
            _emit(ctx, bounds, out, REMOVE, t.edges[0])
            _emit(ctx, bounds, out, ADD, t.edges[1])
        else:
            _emit(ctx, bounds, out, ADD, t.edges[1])
            _emit(ctx, bounds, out, REMOVE, t.edges[0])
        return
    if t.is_closed:
        _elementary_closed(t, ctx, bounds, out)
    else:
        _elementary_open(t, ctx, bounds, out)


# Orderings below are index tuples into [q, r, s]: the freshly cut middle
# piece first, then the prefix, then the suffix, with all fallbacks.
_THREE_PIECE_ORDERS = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]


def _elementary_open(t: Trail, ctx: Subgraph, bounds: DegreeBounds, out: list[Move]) -> None:
    tt = len(t)
    pivot = None
    for i in range(0, tt - 1, 2):
        v, w = t.vertices[i], t.vertices[i + 2]
        if ctx.degrees[v] > bounds.lower[v] and ctx.degrees[w] < bounds.upper[w]:
            pivot = i
            break
    if pivot is None:
        raise SynthesisError("open trail admits no two-edge pivot despite valid conditions")
    q = t.segment(pivot, pivot + 2)
    parts = [q]
    order_pool: list[tuple[int, ...]] = []
    if pivot > 0:
        parts.append(t.segment(0, pivot))
    if pivot + 2 < tt:
        parts.append(t.segment(pivot + 2, tt))
    if len(parts) == 1:
        order_pool = [(0,)]
    elif len(parts) == 2:
        order_pool = [(0, 1), (1, 0)]
    else:
        order_pool = _THREE_PIECE_ORDERS
    for part in _first_valid_order(parts, ctx, bounds, order_pool):
        _elementary(part, ctx, bounds, out)


def _elementary_closed(t: Trail, ctx: Subgraph, bounds: DegreeBounds, out: list[Move]) -> None:
    def loose(v: int) -> bool:
        return bounds.lower[v] < ctx.degrees[v] < bounds.upper[v]

    def at_lower(v: int) -> bool:
        return ctx.degrees[v] == bounds.lower[v]

    def at_upper(v: int) -> bool:
        return ctx.degrees[v] == bounds.upper[v]

    tt = len(t)
    v0, v1 = t.vertices[0], t.vertices[1]
    candidates: list[tuple[Trail, Trail]] = []
    if loose(v0) or loose(v1):
        if not loose(v0):
            t = reverse_keep_first_edge(t)
        q = t.segment(0, 2)
        r = t.segment(2, tt)
        if not at_upper(t.vertices[2]):
            candidates = [(q, r), (r, q)]
        else:
            candidates = [(r, q), (q, r)]
    elif (at_lower(v0) and at_upper(v1)) or (at_upper(v0) and at_lower(v1)):
        if at_upper(v0):
            t = reverse_keep_first_edge(t)
        # start sits at its lower bound, its neighbour at the upper one
        for i in range(0, tt, 2):
            if not at_lower(t.vertices[i]):
                q = t.segment(i, tt)
                r = t.segment(0, i)
                candidates = [(q, r), (r, q)]
                break
            if not at_upper(t.vertices[i + 1]):
                flipped = reverse_keep_first_edge(t)
                q = flipped.segment(0, tt - i)
                r = flipped.segment(tt - i, tt)
                candidates = [(q, r), (r, q)]
                break
        if not candidates:
            raise SynthesisError("mixed-tight cycle scan failed despite valid conditions")
    elif at_upper(v0) and at_upper(v1):
        i = _even_position(t, lambda v: not at_upper(v))
        if i is None:
            t = reverse_keep_first_edge(t)
            i = _even_position(t, lambda v: not at_upper(v))
        if i is None:
            raise SynthesisError("upper-tight cycle scan failed despite valid conditions")
        candidates = [(t.segment(0, i), t.segment(i, tt)), (t.segment(i, tt), t.segment(0, i))]
    else:
        i = _even_position(t, lambda v: not at_lower(v))
        if i is None:
            t = reverse_keep_first_edge(t)
            i = _even_position(t, lambda v: not at_lower(v))
        if i is None:
            raise SynthesisError("lower-tight cycle scan failed despite valid conditions")
        candidates = [(t.segment(i, tt), t.segment(0, i)), (t.segment(0, i), t.segment(i, tt))]

    for first, second in candidates:
        if check_internal_conditions(first, ctx, bounds) is not None:
            continue
        _flip(ctx, first)
        second_ok = check_internal_conditions(second, ctx, bounds) is None
        _flip(ctx, first)
        if not second_ok:
            continue
        _elementary(first, ctx, bounds, out)
        _elementary(second, ctx, bounds, out)
        return
    raise SynthesisError("no admissible split of the closed trail")


def _even_position(t: Trail, predicate) -> int | None:
    for i in range(2, len(t) - 1, 2):
        if predicate(t.vertices[i]):
            return i
    return None


def _validate_odd(trail: Trail, ctx: Subgraph, bounds: DegreeBounds, mode: str) -> None:
    if len(trail) % 2 != 1:
        raise ContractError("odd-trail synthesis requires an odd trail")
    if not alternates(trail, ctx):
        raise ContractError("trail does not alternate around the current subgraph")
    inside = trail.edges[0] in ctx
    if inside != (trail.edges[-1] in ctx):
        raise ContractError("odd trail with mismatched dangling sides")
    if mode == GROW and inside:
        raise ContractError("growing trail must dangle outside the current subgraph")
    if mode == SHRINK and not inside:
        raise ContractError("shrinking trail must dangle inside the current subgraph")
    for v in trail.vertices:
        if bounds.lower[v] == bounds.upper[v]:
            raise NotInternallyReconfigurableError("pinned-vertex", v)
    head, tail = trail.vertices[0], trail.vertices[-1]
    if mode == GROW:
        if trail.is_closed:
            if ctx.degrees[head] + 2 > bounds.upper[head]:
                raise NotInternallyReconfigurableError("closed-end-lacks-room", head)
        else:
            for v in (head, tail):
                if ctx.degrees[v] >= bounds.upper[v]:
                    raise NotInternallyReconfigurableError("end-at-upper-bound", v)
    else:
        if trail.is_closed:
            if ctx.degrees[head] - 2 < bounds.lower[head]:
                raise NotInternallyReconfigurableError("closed-end-lacks-slack", head)
        else:
            for v in (head, tail):
                if ctx.degrees[v] <= bounds.lower[v]:
                    raise NotInternallyReconfigurableError("end-at-lower-bound", v)


def _odd_grow(trail: Trail, ctx: Subgraph, bounds: DegreeBounds, out: list[Move]) -> None:
    """Flip an odd trail with outside danglers; net effect adds one edge."""
    _validate_odd(trail, ctx, bounds, GROW)
    tt = len(trail)
    if tt == 1:
        _emit(ctx, bounds, out, ADD, trail.edges[0])
        return
    pivot = None
    for i in range(1, tt):
        v = trail.vertices[i]
        if ctx.degrees[v] > bounds.lower[v]:
            pivot = i
            break
    if pivot is None:
        # every interior vertex sits at its lower bound: lead with the first edge
        _emit(ctx, bounds, out, ADD, trail.edges[0])
        _elementary(trail.segment(1, tt), ctx, bounds, out)
        return
    if pivot % 2 == 0:
        even_part = trail.segment(0, pivot).reversed()
        rest = trail.segment(pivot, tt)
    else:
        even_part = trail.segment(pivot, tt)
        rest = trail.segment(0, pivot)
    _elementary(even_part, ctx, bounds, out)
    _odd_grow(rest, ctx, bounds, out)


def _odd_shrink(trail: Trail, ctx: Subgraph, bounds: DegreeBounds, out: list[Move]) -> None:
    """Flip an odd trail with inside danglers; net effect removes one edge."""
    _validate_odd(trail, ctx, bounds, SHRINK)
    tt = len(trail)
    if tt == 1:
        _emit(ctx, bounds, out, REMOVE, trail.edges[0])
        return
    pivot = None
    for i in range(1, tt):
        v = trail.vertices[i]
        if ctx.degrees[v] < bounds.upper[v]:
            pivot = i
            break
    if pivot is None:
        # every interior vertex sits at its upper bound: drop the first edge
        _emit(ctx, bounds, out, REMOVE, trail.edges[0])
        _elementary(trail.segment(1, tt), ctx, bounds, out)
        return
    if pivot % 2 == 0:
        even_part = trail.segment(0, pivot)
        rest = trail.segment(pivot, tt).reversed()
    else:
        even_part = trail.segment(pivot, tt)
        rest = trail.segment(0, pivot)
    _elementary(even_part, ctx, bounds, out)
    _odd_shrink(rest, ctx, bounds, out)


def _closed_even(
    trail: Trail, ctx: Subgraph, bounds: DegreeBounds, out: list[Move], allow_deep_dip: bool
) -> None:
    """Flip a closed even trail; needs a two-step dip when fully upper-tight."""
    if not trail.is_closed or len(trail) % 2 != 0:
        raise ContractError("closed even-length trail expected")
    if not alternates(trail, ctx):
        raise ContractError("trail does not alternate around the current subgraph")
    t = inside_first(trail, ctx)
    if is_alternatingly_ab_tight(t, ctx, bounds):
        raise NotInternallyReconfigurableError("cycle-alternately-tight")
    tt = len(t)
    if all(ctx.degrees[v] == bounds.lower[v] for v in t.vertices):
        # uniformly lower-tight: lead with an addition, close with a removal
        _emit(ctx, bounds, out, ADD, t.edges[-1])
        _elementary(t.segment(1, tt - 1), ctx, bounds, out)
        _emit(ctx, bounds, out, REMOVE, t.edges[0])
    elif all(ctx.degrees[v] == bounds.upper[v] for v in t.vertices):
        if not allow_deep_dip:
            raise NeedsK2Error("uniformly upper-tight cycle needs a dip of two")
        _emit(ctx, bounds, out, REMOVE, t.edges[0])
        _elementary(t.segment(1, tt - 1), ctx, bounds, out)
        _emit(ctx, bounds, out, ADD, t.edges[-1])
    else:
        _elementary(t, ctx, bounds, out)


# -- public, non-mutating wrappers -------------------------------------------


def reconfigure_elementary(trail: Trail, current: Subgraph, bounds: DegreeBounds) -> list[Move]:
    """Moves flipping an even trail in place; exactly one per trail edge."""
    ctx = current.copy()
    out: list[Move] = []
    _elementary(trail, ctx, bounds, out)
    return out


def reconfigure_open_even_maximal(
    trail: Trail, current: Subgraph, bounds: DegreeBounds, diff: Subgraph | None = None
) -> list[Move]:
    """Flip a maximal open even trail (its end conditions follow from maximality)."""
    if trail.is_closed or len(trail) % 2 != 0 or not trail.edges:
        raise ContractError("open even-length trail expected")
    if diff is not None and _extendable(trail, current, diff):
        raise ContractError("trail is not maximal in the symmetric difference")
    ctx = current.copy()
    out: list[Move] = []
    _elementary(trail, ctx, bounds, out)
    return out


def reconfigure_odd_maximal(
    trail: Trail, current: Subgraph, bounds: DegreeBounds, direction: str
) -> list[Move]:
    """Flip a maximal odd trail either growing (net +1) or shrinking (net -1)."""
    if direction not in (GROW, SHRINK):
        raise ContractError(f"unknown direction {direction!r}")
    ctx = current.copy()
    out: list[Move] = []
    if direction == GROW:
        _odd_grow(trail, ctx, bounds, out)
    else:
        _odd_shrink(trail, ctx, bounds, out)
    return out


def reconfigure_closed_even(
    trail: Trail, current: Subgraph, bounds: DegreeBounds, allow_k2: bool
) -> list[Move]:
    """Flip a closed even trail; ``allow_k2`` admits the deeper dip it may need."""
    ctx = current.copy()
    out: list[Move] = []
    _closed_even(trail, ctx, bounds, out, allow_deep_dip=allow_k2)
    return out


def _extendable(trail: Trail, current: Subgraph, diff: Subgraph) -> bool:
    graph = current.graph
    used = set(trail.edges)
    for at, side_of in ((trail.vertices[-1], trail.edges[-1]), (trail.vertices[0], trail.edges[0])):
        want_inside = side_of not in current
        for e in graph.incident[at]:
            if e not in used and e in diff and (e in current) == want_inside:
                return True
    return False
