"""Brute-force route enumeration over pathway graphs.

This module is the independent oracle the validator and the test suite
check the journey engine against. It re-derives edge enablement from
first principles on every call — a full rescan of the rule lists, no
indexes, and deliberately no shared rule-evaluation code with the journey
engine. Keep it that way: the whole point of the dual route is that a bug
has to be made twice before it goes unnoticed.

Routes are edge-simple (no edge repeats) but not node-simple: a body may
be revisited via different actions. Every prefix of a route honours the
prerequisite and exclusion rules at the moment each edge is taken.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidPrefix, UnknownEntryPoint
from .model import (
    LEGAL_CLAIM_KINDS,
    NO_ACTION,
    BodyCategory,
    PathwayGraph,
    RedressEdge,
)


@dataclass(frozen=True)
class RouteFlags:
    contains_legal_claim: bool
    min_time_limit_days: int | None


@dataclass(frozen=True)
class Route:
    """One complete walk from an entry point to a terminal node.

    ``abandoned`` routes are the optional extras produced by
    ``include_abandonments``: valid prefixes at which the person stops via
    NO_ACTION, so their final node is not terminal.
    """

    entry_point_id: str
    edges: tuple[str, ...]
    terminal_node: str
    flags: RouteFlags
    abandoned: bool = False


@dataclass(frozen=True)
class RouteSet:
    """Enumeration result. ``depth_exceeded`` is a warning, not a failure:

    it means some branch still had enabled continuations when the depth
    cap cut it off, so the listing may be incomplete.
    """

    routes: tuple[Route, ...]
    depth_exceeded: bool

    def __iter__(self) -> Iterator[Route]:
        return iter(self.routes)

    def __len__(self) -> int:
        return len(self.routes)


def _allowed(graph: PathwayGraph, edge: RedressEdge, taken: frozenset[str]) -> bool:
    # Full rescan on purpose; see the module docstring.
    if edge.id in taken:
        return False
    for rule in graph.prerequisite_rules:
        if rule.edge == edge.id:
            for required in rule.requires:
                if required not in taken:
                    return False
    for group in graph.exclusion_groups:
        if edge.id in group.members:
            for member in group.members:
                if member != edge.id and member in taken:
                    return False
    return True


def _outgoing(graph: PathwayGraph, node_id: str) -> list[RedressEdge]:
    # Declaration-order scan. Edges with unknown targets (possible on
    # unvalidated in-memory graphs) are not traversable.
    return [e for e in graph.edges if e.source == node_id and e.target in graph.nodes_by_id]


def _is_terminal(graph: PathwayGraph, node_id: str) -> bool:
    node = graph.nodes_by_id[node_id]
    return node.category is BodyCategory.OUTCOME or not _outgoing(graph, node_id)


def _entry_node(graph: PathwayGraph, entry_point_id: str) -> str:
    entry = graph.entry_points_by_id.get(entry_point_id)
    if entry is None:
        raise UnknownEntryPoint(f"no entry point {entry_point_id!r} in graph {graph.id!r}")
    if entry.node not in graph.nodes_by_id:
        raise UnknownEntryPoint(f"entry point {entry_point_id!r} references unknown node {entry.node!r}")
    return entry.node


def _route(
    graph: PathwayGraph, entry_point_id: str, path: list[RedressEdge], end: str, abandoned: bool
) -> Route:
    limits = [e.time_limit_days for e in path if e.time_limit_days is not None]
    return Route(
        entry_point_id=entry_point_id,
        edges=tuple(e.id for e in path),
        terminal_node=end,
        flags=RouteFlags(
            contains_legal_claim=any(e.kind in LEGAL_CLAIM_KINDS for e in path),
            min_time_limit_days=min(limits) if limits else None,
        ),
        abandoned=abandoned,
    )


def enumerate_routes(
    graph: PathwayGraph,
    entry_point_id: str,
    max_depth: int = 20,
    include_abandonments: bool = False,
) -> RouteSet:
    """Every rule-consistent, edge-simple route from the entry point.

    Routes come out in lexicographic order of their edge-id sequences. An
    entry point sitting directly on a terminal node yields zero routes.
    With ``include_abandonments``, each rule-consistent prefix ending at a
    non-terminal node is also emitted, flagged ``abandoned`` — those are
    the journeys a person concludes by choosing to stop.
    """
    start = _entry_node(graph, entry_point_id)
    routes: list[Route] = []
    truncated = False

    def walk(node: str, path: list[RedressEdge], taken: frozenset[str]) -> None:
        nonlocal truncated
        if _is_terminal(graph, node):
            if path:
                routes.append(_route(graph, entry_point_id, path, node, abandoned=False))
            return
        if include_abandonments:
            routes.append(_route(graph, entry_point_id, path, node, abandoned=True))
        candidates = [e for e in _outgoing(graph, node) if _allowed(graph, e, taken)]
        if len(path) >= max_depth:
            if candidates:
                truncated = True
            return
        for edge in sorted(candidates, key=lambda e: e.id):
            path.append(edge)
            walk(edge.target, path, taken | {edge.id})
            path.pop()

    walk(start, [], frozenset())
    return RouteSet(routes=tuple(routes), depth_exceeded=truncated)


def reachable_nodes(graph: PathwayGraph, entry_point_id: str) -> set[str]:
    """Nodes standing on any rule-consistent walk from the entry point.

    This honours prerequisites and exclusions, so a node gated behind
    contradictory rules is genuinely unreachable and excluded from the
    set. States are memoized on (node, taken-edge set): enablement depends
    only on the set of traversed edges, never on their order.
    """
    start = _entry_node(graph, entry_point_id)
    seen_states: set[tuple[str, frozenset[str]]] = set()
    found: set[str] = set()
    stack: list[tuple[str, frozenset[str]]] = [(start, frozenset())]
    while stack:
        node, taken = stack.pop()
        if (node, taken) in seen_states:
            continue
        seen_states.add((node, taken))
        found.add(node)
        if _is_terminal(graph, node):
            continue
        for edge in _outgoing(graph, node):
            if _allowed(graph, edge, taken):
                stack.append((edge.target, taken | {edge.id}))
    return found


def oracle_options(
    graph: PathwayGraph, entry_point_id: str, chosen: Sequence[str]
) -> list[tuple[str, bool]]:
    """(choice, enabled) pairs after walking ``chosen`` from the entry point.

    Recomputed from scratch against the full rule lists; the journey
    engine's ``options`` must agree with this at every reachable state.
    The listing follows edge declaration order and always ends with one
    enabled NO_ACTION pseudo-choice.
    """
    node = _entry_node(graph, entry_point_id)
    taken: frozenset[str] = frozenset()
    for position, edge_id in enumerate(chosen):
        if _is_terminal(graph, node):
            raise InvalidPrefix(f"step {position}: node {node!r} is terminal")
        edge = graph.edges_by_id.get(edge_id)
        if edge is None or edge.source != node or not _allowed(graph, edge, taken):
            raise InvalidPrefix(f"step {position}: edge {edge_id!r} is not available at {node!r}")
        taken = taken | {edge.id}
        node = edge.target
    pairs = [(e.id, _allowed(graph, e, taken)) for e in _outgoing(graph, node)]
    pairs.append((NO_ACTION, True))
    return pairs
