"""Semantic validation for pathway graphs.

``validate`` returns diagnostics, never raises. Errors block publication;
warnings are authoring advice. Structural problems (duplicate ids,
dangling references, blank translations) are normally caught by the
strict parser, but graphs can also be built in memory, so the checks here
are defence in depth: validate never assumes the parser ran.

Published diagnostic codes:

=====================  ========  ====================================================
code                   severity  condition
=====================  ========  ====================================================
DuplicateId            Error     an id space (node/edge/entry/group) repeats an id
DanglingReference      Error     an edge endpoint or rule reference names a missing id
E001                   Error     edge from a node to itself
E002                   Error     node unreachable from every entry point
E003                   Error     entry point cannot reach any Outcome node
E004                   Error     missing or empty translation
E005                   Error     exclusion group member unknown, or group smaller than 2
E006                   Error     prerequisite rules form a dependency cycle
E007                   Error     Outcome node with outgoing edges
E008                   Error     entry point references an unknown node (or none declared)
W001                   Warning   node detail text equals its summary
W002                   Warning   Appeal/JudicialReview edge without timeLimitDays
W003                   Warning   Court/Tribunal node with no advice links and no disclaimer
=====================  ========  ====================================================

Reachability for E002/E003 is rule-consistent: it honours prerequisites
and exclusions, via the brute-force pathfinder.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import pathfinder
from .errors import GraphParseError
from .model import (
    LANGUAGES,
    LEGAL_CLAIM_KINDS,
    BodyCategory,
    LocalizedText,
    PathwayGraph,
    parse_graph,
)


class Severity(str, Enum):
    ERROR = "Error"
    WARNING = "Warning"


@dataclass(frozen=True)
class Diagnostic:
    code: str
    severity: Severity
    subject: str
    message: str


def _error(code: str, subject: str, message: str) -> Diagnostic:
    return Diagnostic(code=code, severity=Severity.ERROR, subject=subject, message=message)


def _warning(code: str, subject: str, message: str) -> Diagnostic:
    return Diagnostic(code=code, severity=Severity.WARNING, subject=subject, message=message)


def _blank(text: LocalizedText, lang: str) -> bool:
    value = getattr(text, lang, None)
    return not isinstance(value, str) or not value.strip()


def _walk_texts(graph: PathwayGraph):
    """Yield (path, LocalizedText) for every translatable field."""
    yield "title", graph.title
    yield "disclaimer", graph.disclaimer
    for node in graph.nodes:
        yield f"nodes[{node.id}].title", node.title
        yield f"nodes[{node.id}].summary", node.summary
        yield f"nodes[{node.id}].detail", node.detail
        for i, link in enumerate(node.advice_links):
            yield f"nodes[{node.id}].adviceLinks[{i}].label", link.label
    for edge in graph.edges:
        yield f"edges[{edge.id}].label", edge.label
        yield f"edges[{edge.id}].explanation", edge.explanation
    for entry in graph.entry_points:
        yield f"entryPoints[{entry.id}].description", entry.description
    for group in graph.exclusion_groups:
        yield f"exclusionGroups[{group.id}].explanation", group.explanation
    for i, rule in enumerate(graph.prerequisite_rules):
        yield f"prerequisiteRules[{i}].explanation", rule.explanation


def _duplicates(ids: list[str]) -> set[str]:
    seen: set[str] = set()
    dupes: set[str] = set()
    for value in ids:
        if value in seen:
            dupes.add(value)
        seen.add(value)
    return dupes


def _rule_cycle_edges(graph: PathwayGraph, edge_ids: set[str]) -> set[str]:
    """Edge ids stuck on a cycle of the requires-relation (Kahn peeling)."""
    requires: dict[str, set[str]] = {}
    for rule in graph.prerequisite_rules:
        if rule.edge not in edge_ids:
            continue
        deps = {r for r in rule.requires if r in edge_ids}
        requires.setdefault(rule.edge, set()).update(deps)
    # peel edges whose requirements are all already peeled
    remaining = dict(requires)
    resolved = edge_ids - set(remaining)
    progress = True
    while progress:
        progress = False
        for edge, deps in list(remaining.items()):
            if deps <= resolved:
                resolved.add(edge)
                del remaining[edge]
                progress = True
    return set(remaining)


def validate(graph: PathwayGraph) -> list[Diagnostic]:
    """All diagnostics for the graph, ordered by (code, subject)."""
    diagnostics: list[Diagnostic] = []
    node_ids = {n.id for n in graph.nodes}
    edge_ids = {e.id for e in graph.edges}

    for space, ids in (
        ("node", [n.id for n in graph.nodes]),
        ("edge", [e.id for e in graph.edges]),
        ("entry point", [p.id for p in graph.entry_points]),
        ("exclusion group", [g.id for g in graph.exclusion_groups]),
    ):
        for dupe in _duplicates(ids):
            diagnostics.append(_error("DuplicateId", dupe, f"duplicate {space} id {dupe!r}"))

    for edge in graph.edges:
        for ref in (edge.source, edge.target):
            if ref not in node_ids:
                diagnostics.append(
                    _error("DanglingReference", edge.id, f"edge {edge.id!r} references unknown node {ref!r}")
                )
        if edge.source == edge.target:
            diagnostics.append(_error("E001", edge.id, f"edge {edge.id!r} loops from {edge.source!r} to itself"))
        if edge.kind in LEGAL_CLAIM_KINDS and edge.time_limit_days is None:
            diagnostics.append(
                _warning("W002", edge.id, f"{edge.kind.value} edge {edge.id!r} has no timeLimitDays")
            )

    for rule in graph.prerequisite_rules:
        for ref in (rule.edge, *rule.requires):
            if ref not in edge_ids:
                diagnostics.append(
                    _error("DanglingReference", ref, f"prerequisite rule references unknown edge {ref!r}")
                )

    for path, text in _walk_texts(graph):
        for lang in LANGUAGES:
            if _blank(text, lang):
                diagnostics.append(_error("E004", f"{path}.{lang}", f"missing or empty translation at {path}.{lang}"))

    for group in graph.exclusion_groups:
        if len(set(group.members)) < 2:
            diagnostics.append(
                _error("E005", group.id, f"exclusion group {group.id!r} needs at least two distinct members")
            )
        for member in group.members:
            if member not in edge_ids:
                diagnostics.append(
                    _error("E005", group.id, f"exclusion group {group.id!r} references unknown edge {member!r}")
                )

    for edge_id in sorted(_rule_cycle_edges(graph, edge_ids)):
        diagnostics.append(
            _error("E006", edge_id, f"prerequisite rules for edge {edge_id!r} form a dependency cycle")
        )

    for node in graph.nodes:
        if node.category is BodyCategory.OUTCOME and graph.outgoing.get(node.id):
            diagnostics.append(_error("E007", node.id, f"Outcome node {node.id!r} has outgoing edges"))
        if node.detail == node.summary:
            diagnostics.append(_warning("W001", node.id, f"node {node.id!r} detail text merely repeats its summary"))
        if (
            node.category in (BodyCategory.COURT, BodyCategory.TRIBUNAL)
            and not node.advice_links
            and not node.disclaimer_required
        ):
            diagnostics.append(
                _warning(
                    "W003",
                    node.id,
                    f"{node.category.value} node {node.id!r} has no advice links and no disclaimer",
                )
            )

    valid_entries = []
    if not graph.entry_points:
        diagnostics.append(_error("E008", "entryPoints", "graph declares no entry points"))
    for entry in graph.entry_points:
        if entry.node not in node_ids:
            diagnostics.append(
                _error("E008", entry.id, f"entry point {entry.id!r} references unknown node {entry.node!r}")
            )
        else:
            valid_entries.append(entry)

    reachable: set[str] = set()
    outcome_ids = {n.id for n in graph.nodes if n.category is BodyCategory.OUTCOME}
    for entry in valid_entries:
        from_here = pathfinder.reachable_nodes(graph, entry.id)
        reachable |= from_here
        if not from_here & outcome_ids:
            diagnostics.append(
                _error("E003", entry.id, f"entry point {entry.id!r} cannot reach any Outcome node")
            )
    for node in graph.nodes:
        if node.id not in reachable:
            diagnostics.append(_error("E002", node.id, f"node {node.id!r} is unreachable from every entry point"))

    diagnostics.sort(key=lambda d: (d.code, d.subject, d.message))
    return diagnostics


def is_publishable(graph: PathwayGraph) -> bool:
    """True when validation finds no Errors. Warnings do not block."""
    return not any(d.severity is Severity.ERROR for d in validate(graph))


def check_bytes(data: bytes) -> list[Diagnostic]:
    """Parse-then-validate for raw file bytes.

    A parse failure comes back as a single Error diagnostic carrying the
    parse error's code, so file-level tooling sees one vocabulary whether
    the problem is structural or semantic.
    """
    try:
        graph = parse_graph(data)
    except GraphParseError as exc:
        return [_error(exc.code, exc.subject or "", exc.detail or exc.code)]
    return validate(graph)
