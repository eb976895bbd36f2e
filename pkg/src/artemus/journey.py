"""Guided journeys over a pathway graph.

A journey is a client-held, immutable document: the entry point, the
ordered list of choices made, and nothing else — no personal data, ever.
The engine is stateless; every operation takes the graph and the journey
and returns a fresh value. Steps replay deterministically, which is what
lets a server hand the document back to the client and forget it.

At every decision point the engine lists one option per outgoing edge of
the current node, in declaration order, plus exactly one synthesized
NO_ACTION option. Doing nothing is always a valid choice and always
concludes the journey. Disabled options are listed, not hidden, each
carrying the explanation of the rule that closed it — seeing a route shut
is half the point.

An edge is enabled iff it has not already been traversed, every
prerequisite rule targeting it is satisfied by the visited edges, and no
exclusion group containing it has another member among the visited edges.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Sequence

from . import validation
from .errors import (
    ChoiceNotEnabled,
    GraphMismatch,
    IndexOutOfRange,
    InvalidPrefix,
    InvalidValue,
    JourneyConcluded,
    MissingField,
    SchemaVersionMismatch,
    UnexpectedField,
    UnknownEntryPoint,
    UnpublishableGraph,
)
from .model import (
    LANGUAGES,
    NO_ACTION,
    ExclusionGroup,
    LocalizedText,
    PathwayGraph,
    PrerequisiteRule,
    RedressEdge,
    graph_hash,
    canonical_json_bytes,
)

JOURNEY_SCHEMA_VERSION = "artemus-journey/1"

#: Engine-synthesized texts. NO_ACTION is not an authored edge, so its
#: wording (bilingual, like everything else) lives here.
NO_ACTION_LABEL = LocalizedText(en="Do nothing", cy="Gwneud dim")
NO_ACTION_EXPLANATION = LocalizedText(
    en=(
        "Deciding not to take the matter further is a valid choice. "
        "You can stop here; if you change your mind you can come back to this decision."
    ),
    cy=(
        "Mae penderfynu peidio â mynd â'r mater ymhellach yn ddewis dilys. "
        "Gallwch aros yma; os newidiwch eich meddwl gallwch ddod yn ôl at y penderfyniad hwn."
    ),
)
ALREADY_TAKEN_EXPLANATION = LocalizedText(
    en="You have already taken this step on this journey.",
    cy="Rydych eisoes wedi cymryd y cam hwn ar y daith hon.",
)


@dataclass(frozen=True)
class Step:
    at_node: str
    chosen: str  # edge id, or NO_ACTION


@dataclass(frozen=True)
class JourneyDoc:
    """Opaque journey token. Contains choices and graph binding only."""

    graph_id: str
    graph_hash: str
    language: str
    entry_point_id: str
    steps: tuple[Step, ...]
    concluded: bool
    schema_version: str = JOURNEY_SCHEMA_VERSION


@dataclass(frozen=True)
class OptionReason:
    """Why an option is disabled: the governing rule and its explanation."""

    code: str  # "PrerequisiteUnmet" | "ExcludedBy"
    blocking_ids: tuple[str, ...]
    explanation: LocalizedText


@dataclass(frozen=True)
class OptionView:
    choice: str
    enabled: bool
    reason: OptionReason | None
    label: LocalizedText
    explanation: LocalizedText
    time_limit_days: int | None
    pre_action_protocol: bool
    disclaimer_required: bool


def visited_edges(journey: JourneyDoc) -> frozenset[str]:
    """Edge ids traversed so far. NO_ACTION is a choice, not an edge."""
    return frozenset(s.chosen for s in journey.steps if s.chosen != NO_ACTION)


def current_node(graph: PathwayGraph, journey: JourneyDoc) -> str:
    """Replay the steps and return the node the journey stands on.

    Raises InvalidPrefix when the recorded steps do not form a coherent
    walk through this graph — journeys arrive from clients and are never
    trusted blindly.
    """
    entry = graph.entry_points_by_id.get(journey.entry_point_id)
    if entry is None:
        raise UnknownEntryPoint(f"no entry point {journey.entry_point_id!r} in graph {graph.id!r}")
    node = entry.node
    for position, step in enumerate(journey.steps):
        if step.at_node != node:
            raise InvalidPrefix(f"step {position} claims node {step.at_node!r}, expected {node!r}")
        if step.chosen == NO_ACTION:
            if position != len(journey.steps) - 1:
                raise InvalidPrefix(f"step {position}: journey continues after NO_ACTION")
            return node
        edge = graph.edges_by_id.get(step.chosen)
        if edge is None or edge.source != node:
            raise InvalidPrefix(f"step {position}: edge {step.chosen!r} does not leave {node!r}")
        node = edge.target
    return node


def _require_binding(graph: PathwayGraph, journey: JourneyDoc) -> None:
    if journey.graph_hash != graph_hash(graph):
        raise GraphMismatch(
            f"journey was minted against {journey.graph_id!r}@{journey.graph_hash[:12]}, "
            f"got {graph.id!r}@{graph_hash(graph)[:12]}"
        )


def _disable_reason(
    graph: PathwayGraph, edge: RedressEdge, visited: frozenset[str]
) -> OptionReason | None:
    """First governing rule that closes the edge, or None when enabled.

    Precedence: an edge already traversed excludes itself; then unmet
    prerequisites in declaration order; then exclusion groups in
    declaration order.
    """
    if edge.id in visited:
        return OptionReason(code="ExcludedBy", blocking_ids=(edge.id,), explanation=ALREADY_TAKEN_EXPLANATION)
    for rule in _rules_for(graph, edge.id):
        missing = tuple(r for r in rule.requires if r not in visited)
        if missing:
            return OptionReason(code="PrerequisiteUnmet", blocking_ids=missing, explanation=rule.explanation)
    for group in _groups_for(graph, edge.id):
        traversed_others = tuple(m for m in group.members if m != edge.id and m in visited)
        if traversed_others:
            return OptionReason(code="ExcludedBy", blocking_ids=traversed_others, explanation=group.explanation)
    return None


def _rules_for(graph: PathwayGraph, edge_id: str) -> tuple[PrerequisiteRule, ...]:
    return _rule_index(graph).get(edge_id, ())


def _groups_for(graph: PathwayGraph, edge_id: str) -> tuple[ExclusionGroup, ...]:
    return _group_index(graph).get(edge_id, ())


def _rule_index(graph: PathwayGraph) -> dict[str, tuple[PrerequisiteRule, ...]]:
    cached = graph.__dict__.get("_journey_rule_index")
    if cached is None:
        index: dict[str, list[PrerequisiteRule]] = {}
        for rule in graph.prerequisite_rules:
            index.setdefault(rule.edge, []).append(rule)
        cached = {k: tuple(v) for k, v in index.items()}
        graph.__dict__["_journey_rule_index"] = cached
    return cached


def _group_index(graph: PathwayGraph) -> dict[str, tuple[ExclusionGroup, ...]]:
    cached = graph.__dict__.get("_journey_group_index")
    if cached is None:
        index: dict[str, list[ExclusionGroup]] = {}
        for group in graph.exclusion_groups:
            for member in group.members:
                index.setdefault(member, []).append(group)
        cached = {k: tuple(v) for k, v in index.items()}
        graph.__dict__["_journey_group_index"] = cached
    return cached


def _no_action_option() -> OptionView:
    return OptionView(
        choice=NO_ACTION,
        enabled=True,
        reason=None,
        label=NO_ACTION_LABEL,
        explanation=NO_ACTION_EXPLANATION,
        time_limit_days=None,
        pre_action_protocol=False,
        disclaimer_required=False,
    )


def start(graph: PathwayGraph, entry_point_id: str, lang: str) -> JourneyDoc:
    """Mint a journey at an entry point of a publishable graph."""
    if lang not in LANGUAGES:
        raise InvalidValue(f"unsupported language {lang!r}")
    entry = graph.entry_points_by_id.get(entry_point_id)
    if entry is None:
        raise UnknownEntryPoint(f"no entry point {entry_point_id!r} in graph {graph.id!r}")
    if not validation.is_publishable(graph):
        raise UnpublishableGraph(f"graph {graph.id!r} has validation errors")
    return JourneyDoc(
        graph_id=graph.id,
        graph_hash=graph_hash(graph),
        language=lang,
        entry_point_id=entry_point_id,
        steps=(),
        concluded=graph.is_terminal(entry.node),
    )


def options(graph: PathwayGraph, journey: JourneyDoc) -> list[OptionView]:
    """The decision point: every outgoing edge, then one NO_ACTION."""
    _require_binding(graph, journey)
    if journey.concluded:
        raise JourneyConcluded("journey has concluded; no further options")
    node = current_node(graph, journey)
    visited = visited_edges(journey)
    views = []
    for edge in graph.outgoing.get(node, ()):
        reason = _disable_reason(graph, edge, visited)
        views.append(
            OptionView(
                choice=edge.id,
                enabled=reason is None,
                reason=reason,
                label=edge.label,
                explanation=edge.explanation,
                time_limit_days=edge.time_limit_days,
                pre_action_protocol=edge.pre_action_protocol,
                disclaimer_required=edge.disclaimer_required,
            )
        )
    views.append(_no_action_option())
    return views


def step(graph: PathwayGraph, journey: JourneyDoc, choice: str) -> JourneyDoc:
    """Take an enabled option. NO_ACTION concludes on the spot."""
    _require_binding(graph, journey)
    if journey.concluded:
        raise JourneyConcluded("journey has concluded; no further steps")
    node = current_node(graph, journey)
    for option in options(graph, journey):
        if option.choice == choice:
            if not option.enabled:
                raise ChoiceNotEnabled(f"option {choice!r} is not enabled here", reason=option.reason)
            break
    else:
        raise ChoiceNotEnabled(f"{choice!r} is not an option at node {node!r}")
    steps = journey.steps + (Step(at_node=node, chosen=choice),)
    if choice == NO_ACTION:
        return replace(journey, steps=steps, concluded=True)
    target = graph.edges_by_id[choice].target
    return replace(journey, steps=steps, concluded=graph.is_terminal(target))


def rewind(graph: PathwayGraph, journey: JourneyDoc, keep: int) -> JourneyDoc:
    """Drop all but the first ``keep`` steps. ``rewind(j, 0)`` restarts."""
    _require_binding(graph, journey)
    if keep < 0 or keep > len(journey.steps):
        raise IndexOutOfRange(f"keep={keep} outside 0..{len(journey.steps)}")
    truncated = replace(journey, steps=journey.steps[:keep], concluded=False)
    node = current_node(graph, truncated)
    concluded = graph.is_terminal(node) or (
        bool(truncated.steps) and truncated.steps[-1].chosen == NO_ACTION
    )
    return replace(truncated, concluded=concluded)


# --- canonical journey documents --------------------------------------------------


def journey_to_doc(journey: JourneyDoc) -> dict:
    return {
        "schemaVersion": journey.schema_version,
        "graphId": journey.graph_id,
        "graphHash": journey.graph_hash,
        "language": journey.language,
        "entryPointId": journey.entry_point_id,
        "steps": [{"atNode": s.at_node, "chosen": s.chosen} for s in journey.steps],
        "concluded": journey.concluded,
    }


def journey_to_bytes(journey: JourneyDoc) -> bytes:
    """Canonical bytes: sorted keys, UTF-8, LF. Equal journeys, equal bytes."""
    return canonical_json_bytes(journey_to_doc(journey))


def _replay(graph: PathwayGraph, entry_point_id: str, lang: str, choices: Sequence[str]) -> JourneyDoc:
    entry = graph.entry_points_by_id.get(entry_point_id)
    if entry is None:
        raise UnknownEntryPoint(f"no entry point {entry_point_id!r} in graph {graph.id!r}")
    journey = JourneyDoc(
        graph_id=graph.id,
        graph_hash=graph_hash(graph),
        language=lang,
        entry_point_id=entry_point_id,
        steps=(),
        concluded=graph.is_terminal(entry.node),
    )
    for choice in choices:
        journey = step(graph, journey, choice)
    return journey


def journey_from_doc(graph: PathwayGraph, doc: Any) -> JourneyDoc:
    """Strictly parse a client-supplied journey document and verify it.

    The step sequence is replayed against the graph; a document whose
    steps, claimed nodes or concluded flag disagree with the replay is
    rejected with InvalidPrefix. The returned journey is the replayed one,
    so whatever comes out of here is canonical by construction.
    """
    if not isinstance(doc, dict):
        raise InvalidValue("journey must be an object", subject="journey")
    allowed = {"schemaVersion", "graphId", "graphHash", "language", "entryPointId", "steps", "concluded"}
    for key in doc:
        if key not in allowed:
            raise UnexpectedField(f"unknown field journey.{key}", subject=f"journey.{key}")
    for key in allowed:
        if key not in doc:
            raise MissingField(f"missing field journey.{key}", subject=f"journey.{key}")
    if doc["schemaVersion"] != JOURNEY_SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"expected {JOURNEY_SCHEMA_VERSION!r}, got {doc['schemaVersion']!r}", subject="journey.schemaVersion"
        )
    if doc["language"] not in LANGUAGES:
        raise InvalidValue(f"unsupported language {doc['language']!r}", subject="journey.language")
    if not isinstance(doc["steps"], list):
        raise InvalidValue("journey.steps must be an array", subject="journey.steps")
    if not isinstance(doc["concluded"], bool):
        raise InvalidValue("journey.concluded must be a boolean", subject="journey.concluded")
    for key in ("graphId", "graphHash", "entryPointId"):
        if not isinstance(doc[key], str) or not doc[key]:
            raise InvalidValue(f"journey.{key} must be a non-empty string", subject=f"journey.{key}")
    claimed_steps = []
    for i, raw in enumerate(doc["steps"]):
        if not isinstance(raw, dict) or set(raw) != {"atNode", "chosen"}:
            raise InvalidValue(f"journey.steps[{i}] must have exactly atNode and chosen", subject=f"journey.steps[{i}]")
        if not isinstance(raw["atNode"], str) or not isinstance(raw["chosen"], str):
            raise InvalidValue(f"journey.steps[{i}] fields must be strings", subject=f"journey.steps[{i}]")
        claimed_steps.append(Step(at_node=raw["atNode"], chosen=raw["chosen"]))

    if doc["graphId"] != graph.id or doc["graphHash"] != graph_hash(graph):
        raise GraphMismatch(
            f"journey bound to {doc['graphId']!r}@{str(doc['graphHash'])[:12]}, "
            f"got {graph.id!r}@{graph_hash(graph)[:12]}"
        )
    try:
        replayed = _replay(graph, doc["entryPointId"], doc["language"], [s.chosen for s in claimed_steps])
    except (ChoiceNotEnabled, JourneyConcluded) as exc:
        raise InvalidPrefix(f"steps do not replay: {exc.detail}") from None
    if replayed.steps != tuple(claimed_steps) or replayed.concluded != doc["concluded"]:
        raise InvalidPrefix("journey document disagrees with its own replay")
    return replayed
