"""Domain model for redress pathway graphs.

A pathway graph is a typed directed graph. Nodes are public bodies (or
final outcomes); an edge means "take an issue to the next body" and is
itself typed: an internal review, an appeal, a complaint, a judicial
review or a plain signpost. Exclusion groups and prerequisite rules
constrain which edges are open at any point of a journey.

Everything a person reads is bilingual (English and Welsh), both variants
always present; there is no fallback between languages. Graphs are
immutable once constructed, and parsing is strict: unknown fields,
dangling references, duplicate ids and structurally missing translations
are rejected outright so that downstream code can rely on the invariants
without re-checking them. Blank (present but empty) translations parse,
so draft content can be loaded; validation flags them as Errors and the
journey engine refuses unpublishable graphs.

Serialization is canonical: keys sorted, arrays in declaration order,
UTF-8, LF line endings. Two graphs with equal content therefore share a
stable content hash, which journeys use to bind themselves to the exact
graph they were minted against.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Mapping

from .errors import (
    DanglingReference,
    DuplicateId,
    InvalidValue,
    MalformedJson,
    MissingField,
    MissingTranslation,
    SchemaVersionMismatch,
    UnexpectedField,
)

SCHEMA_VERSION = "artemus-graph/1"
LANGUAGES = ("en", "cy")

#: Distinguished choice value meaning "stop here; take no further action".
#: Synthesized by the journey engine at every decision point; never an edge id.
NO_ACTION = "NO_ACTION"


class BodyCategory(str, Enum):
    LOCAL_AUTHORITY = "LocalAuthority"
    SCHOOL = "School"
    COURT = "Court"
    TRIBUNAL = "Tribunal"
    OMBUDSMAN = "Ombudsman"
    COMMISSIONER = "Commissioner"
    ADVICE_PROVIDER = "AdviceProvider"
    OUTCOME = "Outcome"


class EdgeKind(str, Enum):
    INTERNAL_REVIEW = "InternalReview"
    APPEAL = "Appeal"
    COMPLAINT = "Complaint"
    JUDICIAL_REVIEW = "JudicialReview"
    SIGNPOST = "Signpost"


#: Edge kinds that put a legal claim before a court or tribunal.
LEGAL_CLAIM_KINDS = frozenset({EdgeKind.APPEAL, EdgeKind.JUDICIAL_REVIEW})

#: Colour token per body category, injective. The UI maps tokens to its
#: palette; the engine never deals in actual colours.
COLOUR_TOKENS: Mapping[BodyCategory, str] = {
    BodyCategory.LOCAL_AUTHORITY: "cat-local-authority",
    BodyCategory.SCHOOL: "cat-school",
    BodyCategory.COURT: "cat-court",
    BodyCategory.TRIBUNAL: "cat-tribunal",
    BodyCategory.OMBUDSMAN: "cat-ombudsman",
    BodyCategory.COMMISSIONER: "cat-commissioner",
    BodyCategory.ADVICE_PROVIDER: "cat-advice-provider",
    BodyCategory.OUTCOME: "cat-outcome",
}

#: Legend tag per edge kind: complaints render green, court/tribunal appeals
#: red, judicial review purple, everything else neutral.
LEGEND_TAGS: Mapping[EdgeKind, str] = {
    EdgeKind.COMPLAINT: "green",
    EdgeKind.APPEAL: "red",
    EdgeKind.JUDICIAL_REVIEW: "purple",
    EdgeKind.INTERNAL_REVIEW: "neutral",
    EdgeKind.SIGNPOST: "neutral",
}


@dataclass(frozen=True)
class LocalizedText:
    """Bilingual text; both variants always present.

    Blankness is a validation concern (E004), not a parse one, so a
    variant can be empty on a draft graph. Publishable graphs never
    carry blank variants.
    """

    en: str
    cy: str


def text_for(text: LocalizedText, lang: str) -> str:
    """Return the variant for ``lang`` ('en' or 'cy'). Total; no fallback."""
    if lang == "en":
        return text.en
    if lang == "cy":
        return text.cy
    raise ValueError(f"unsupported language {lang!r}")


@dataclass(frozen=True)
class AdviceLink:
    label: LocalizedText
    url: str


@dataclass(frozen=True)
class Node:
    """A public body, or a final outcome, a journey can stand on."""

    id: str
    category: BodyCategory
    title: LocalizedText
    summary: LocalizedText
    detail: LocalizedText
    advice_links: tuple[AdviceLink, ...]
    disclaimer_required: bool


@dataclass(frozen=True)
class RedressEdge:
    """A directed action: take the issue from ``source`` to ``target``.

    ``time_limit_days`` is informational only. The engine surfaces it but
    never disables an option because time has passed; whether a limit has
    expired in the real world is not something a journey can know.
    """

    id: str
    source: str
    target: str
    kind: EdgeKind
    label: LocalizedText
    explanation: LocalizedText
    time_limit_days: int | None
    pre_action_protocol: bool
    disclaimer_required: bool


@dataclass(frozen=True)
class ExclusionGroup:
    """Mutually exclusive edges: traversing one disables all the others."""

    id: str
    members: tuple[str, ...]
    explanation: LocalizedText


@dataclass(frozen=True)
class PrerequisiteRule:
    """``edge`` only becomes available once every edge in ``requires`` was taken."""

    edge: str
    requires: tuple[str, ...]
    explanation: LocalizedText


@dataclass(frozen=True)
class EntryPoint:
    """A named way into the graph, with per-language search keywords."""

    id: str
    node: str
    description: LocalizedText
    keywords: Mapping[str, tuple[str, ...]]


@dataclass(frozen=True)
class PathwayGraph:
    """An immutable redress graph. Construct via :func:`parse_graph`.

    The dataclass itself does not re-check invariants; code that builds
    graphs in memory (tests, authoring tools) should run them through the
    validation module before publishing.
    """

    id: str
    title: LocalizedText
    disclaimer: LocalizedText
    nodes: tuple[Node, ...]
    edges: tuple[RedressEdge, ...]
    entry_points: tuple[EntryPoint, ...]
    exclusion_groups: tuple[ExclusionGroup, ...]
    prerequisite_rules: tuple[PrerequisiteRule, ...]
    schema_version: str = SCHEMA_VERSION

    @cached_property
    def nodes_by_id(self) -> dict[str, Node]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def edges_by_id(self) -> dict[str, RedressEdge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def entry_points_by_id(self) -> dict[str, EntryPoint]:
        return {p.id: p for p in self.entry_points}

    @cached_property
    def outgoing(self) -> dict[str, tuple[RedressEdge, ...]]:
        """Outgoing edges per node id, in declaration order."""
        out: dict[str, list[RedressEdge]] = {n.id: [] for n in self.nodes}
        for edge in self.edges:
            out.setdefault(edge.source, []).append(edge)
        return {nid: tuple(edges) for nid, edges in out.items()}

    @cached_property
    def content_hash(self) -> str:
        """SHA-256 of the canonical serialization."""
        return hashlib.sha256(serialize_graph(self)).hexdigest()

    def is_terminal(self, node_id: str) -> bool:
        """A journey concludes on outcome nodes and on dead ends."""
        node = self.nodes_by_id[node_id]
        return node.category is BodyCategory.OUTCOME or not self.outgoing.get(node_id)


def node_colour_token(category: BodyCategory) -> str:
    return COLOUR_TOKENS[category]


def edge_legend_tag(kind: EdgeKind) -> str:
    return LEGEND_TAGS[kind]


def graph_hash(graph: PathwayGraph) -> str:
    return graph.content_hash


# --- strict parsing ---------------------------------------------------------


def _expect_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise InvalidValue(f"{path} must be an object", subject=path)
    return value


def _expect_keys(obj: dict, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> None:
    allowed = set(required) | set(optional)
    for key in obj:
        if key not in allowed:
            raise UnexpectedField(f"unknown field {path}.{key}", subject=f"{path}.{key}")
    for key in required:
        if key not in obj:
            raise MissingField(f"missing field {path}.{key}", subject=f"{path}.{key}")


def _string(obj: dict, key: str, path: str) -> str:
    value = obj[key]
    if not isinstance(value, str) or not value.strip():
        raise InvalidValue(f"{path}.{key} must be a non-empty string", subject=f"{path}.{key}")
    return value


def _bool(obj: dict, key: str, path: str) -> bool:
    value = obj[key]
    if not isinstance(value, bool):
        raise InvalidValue(f"{path}.{key} must be a boolean", subject=f"{path}.{key}")
    return value


def _text(obj: dict, key: str, path: str) -> LocalizedText:
    value = _expect_object(obj[key], f"{path}.{key}")
    for k in value:
        if k not in LANGUAGES:
            raise UnexpectedField(f"unknown field {path}.{key}.{k}", subject=f"{path}.{key}.{k}")
    variants = {}
    for lang in LANGUAGES:
        variant = value.get(lang)
        if not isinstance(variant, str):
            raise MissingTranslation(
                f"missing translation at {path}.{key}.{lang}",
                subject=f"{path}.{key}.{lang}",
            )
        # blank-but-present text parses; validation flags it as E004 so
        # draft content can still be loaded and linted
        variants[lang] = variant
    return LocalizedText(en=variants["en"], cy=variants["cy"])


def _string_list(obj: dict, key: str, path: str) -> tuple[str, ...]:
    value = obj[key]
    if not isinstance(value, list) or not value:
        raise InvalidValue(f"{path}.{key} must be a non-empty array", subject=f"{path}.{key}")
    items = []
    for i, item in enumerate(value):
        if not isinstance(item, str) or not item.strip():
            raise InvalidValue(f"{path}.{key}[{i}] must be a non-empty string", subject=f"{path}.{key}[{i}]")
        items.append(item)
    if len(set(items)) != len(items):
        raise InvalidValue(f"{path}.{key} contains duplicates", subject=f"{path}.{key}")
    return tuple(items)


def _enum(obj: dict, key: str, path: str, enum_cls):
    raw = _string(obj, key, path)
    try:
        return enum_cls(raw)
    except ValueError:
        raise InvalidValue(f"{path}.{key}: {raw!r} is not a valid {enum_cls.__name__}", subject=f"{path}.{key}")


def _parse_node(obj: Any, path: str) -> Node:
    obj = _expect_object(obj, path)
    _expect_keys(obj, path, ("id", "category", "title", "summary", "detail", "adviceLinks", "disclaimerRequired"))
    links_raw = obj["adviceLinks"]
    if not isinstance(links_raw, list):
        raise InvalidValue(f"{path}.adviceLinks must be an array", subject=f"{path}.adviceLinks")
    links = []
    for i, link in enumerate(links_raw):
        link = _expect_object(link, f"{path}.adviceLinks[{i}]")
        _expect_keys(link, f"{path}.adviceLinks[{i}]", ("label", "url"))
        links.append(
            AdviceLink(
                label=_text(link, "label", f"{path}.adviceLinks[{i}]"),
                url=_string(link, "url", f"{path}.adviceLinks[{i}]"),
            )
        )
    return Node(
        id=_string(obj, "id", path),
        category=_enum(obj, "category", path, BodyCategory),
        title=_text(obj, "title", path),
        summary=_text(obj, "summary", path),
        detail=_text(obj, "detail", path),
        advice_links=tuple(links),
        disclaimer_required=_bool(obj, "disclaimerRequired", path),
    )


def _parse_edge(obj: Any, path: str) -> RedressEdge:
    obj = _expect_object(obj, path)
    _expect_keys(
        obj,
        path,
        ("id", "from", "to", "kind", "label", "explanation", "preActionProtocol", "disclaimerRequired"),
        optional=("timeLimitDays",),
    )
    time_limit = None
    if "timeLimitDays" in obj:
        raw = obj["timeLimitDays"]
        if not isinstance(raw, int) or isinstance(raw, bool) or raw <= 0:
            raise InvalidValue(f"{path}.timeLimitDays must be a positive integer", subject=f"{path}.timeLimitDays")
        time_limit = raw
    kind = _enum(obj, "kind", path, EdgeKind)
    disclaimer = _bool(obj, "disclaimerRequired", path)
    if kind in LEGAL_CLAIM_KINDS and not disclaimer:
        # court and tribunal claims always carry the legal-information disclaimer
        raise InvalidValue(
            f"{path}.disclaimerRequired must be true for kind {kind.value}",
            subject=f"{path}.disclaimerRequired",
        )
    return RedressEdge(
        id=_string(obj, "id", path),
        source=_string(obj, "from", path),
        target=_string(obj, "to", path),
        kind=kind,
        label=_text(obj, "label", path),
        explanation=_text(obj, "explanation", path),
        time_limit_days=time_limit,
        pre_action_protocol=_bool(obj, "preActionProtocol", path),
        disclaimer_required=disclaimer,
    )


def _parse_group(obj: Any, path: str) -> ExclusionGroup:
    obj = _expect_object(obj, path)
    _expect_keys(obj, path, ("id", "members", "explanation"))
    return ExclusionGroup(
        id=_string(obj, "id", path),
        members=_string_list(obj, "members", path),
        explanation=_text(obj, "explanation", path),
    )


def _parse_rule(obj: Any, path: str) -> PrerequisiteRule:
    obj = _expect_object(obj, path)
    _expect_keys(obj, path, ("edge", "requires", "explanation"))
    rule = PrerequisiteRule(
        edge=_string(obj, "edge", path),
        requires=_string_list(obj, "requires", path),
        explanation=_text(obj, "explanation", path),
    )
    if rule.edge in rule.requires:
        raise InvalidValue(f"{path}: an edge cannot require itself", subject=path)
    return rule


def _parse_entry(obj: Any, path: str) -> EntryPoint:
    obj = _expect_object(obj, path)
    _expect_keys(obj, path, ("id", "node", "description", "keywords"))
    keywords_raw = _expect_object(obj["keywords"], f"{path}.keywords")
    _expect_keys(keywords_raw, f"{path}.keywords", LANGUAGES)
    keywords = {lang: _string_list(keywords_raw, lang, f"{path}.keywords") for lang in LANGUAGES}
    return EntryPoint(
        id=_string(obj, "id", path),
        node=_string(obj, "node", path),
        description=_text(obj, "description", path),
        keywords=keywords,
    )


def _check_unique(ids: list[str], what: str) -> None:
    seen = set()
    for value in ids:
        if value in seen:
            raise DuplicateId(f"duplicate {what} id {value!r}", subject=value)
        seen.add(value)


def parse_graph(data: bytes | str) -> PathwayGraph:
    """Parse canonical graph JSON, strictly.

    Raises a :class:`GraphParseError` subclass naming the first problem
    found: MalformedJson, SchemaVersionMismatch, MissingField,
    UnexpectedField, InvalidValue, DuplicateId, DanglingReference or
    MissingTranslation. Only structural invariants are enforced here;
    semantic checks (reachability, rule cycles, self-loops) live in the
    validation module.
    """
    try:
        doc = json.loads(data)
    except (ValueError, UnicodeDecodeError) as exc:
        raise MalformedJson(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedJson("top-level value must be an object")
    if "schemaVersion" not in doc:
        raise MissingField("missing field schemaVersion", subject="schemaVersion")
    if doc["schemaVersion"] != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"expected {SCHEMA_VERSION!r}, got {doc['schemaVersion']!r}", subject="schemaVersion"
        )
    _expect_keys(
        doc,
        "graph",
        (
            "schemaVersion",
            "id",
            "title",
            "disclaimer",
            "nodes",
            "edges",
            "entryPoints",
            "exclusionGroups",
            "prerequisiteRules",
        ),
    )
    for key in ("nodes", "edges", "entryPoints", "exclusionGroups", "prerequisiteRules"):
        if not isinstance(doc[key], list):
            raise InvalidValue(f"graph.{key} must be an array", subject=f"graph.{key}")

    nodes = tuple(_parse_node(o, f"nodes[{i}]") for i, o in enumerate(doc["nodes"]))
    edges = tuple(_parse_edge(o, f"edges[{i}]") for i, o in enumerate(doc["edges"]))
    groups = tuple(_parse_group(o, f"exclusionGroups[{i}]") for i, o in enumerate(doc["exclusionGroups"]))
    rules = tuple(_parse_rule(o, f"prerequisiteRules[{i}]") for i, o in enumerate(doc["prerequisiteRules"]))
    entries = tuple(_parse_entry(o, f"entryPoints[{i}]") for i, o in enumerate(doc["entryPoints"]))
    if not entries:
        raise InvalidValue("entryPoints must not be empty", subject="graph.entryPoints")

    _check_unique([n.id for n in nodes], "node")
    _check_unique([e.id for e in edges], "edge")
    _check_unique([g.id for g in groups], "exclusion group")
    _check_unique([p.id for p in entries], "entry point")

    node_ids = {n.id for n in nodes}
    edge_ids = {e.id for e in edges}
    for edge in edges:
        for ref in (edge.source, edge.target):
            if ref not in node_ids:
                raise DanglingReference(f"edge {edge.id!r} references unknown node {ref!r}", subject=ref)
    for group in groups:
        for member in group.members:
            if member not in edge_ids:
                raise DanglingReference(f"group {group.id!r} references unknown edge {member!r}", subject=member)
    for rule in rules:
        for ref in (rule.edge, *rule.requires):
            if ref not in edge_ids:
                raise DanglingReference(f"prerequisite rule references unknown edge {ref!r}", subject=ref)
    for entry in entries:
        if entry.node not in node_ids:
            raise DanglingReference(f"entry point {entry.id!r} references unknown node {entry.node!r}", subject=entry.node)

    return PathwayGraph(
        id=_string(doc, "id", "graph"),
        title=_text(doc, "title", "graph"),
        disclaimer=_text(doc, "disclaimer", "graph"),
        nodes=nodes,
        edges=edges,
        entry_points=entries,
        exclusion_groups=groups,
        prerequisite_rules=rules,
    )


# --- canonical serialization ----------------------------------------------------


def _text_doc(text: LocalizedText) -> dict:
    return {"en": text.en, "cy": text.cy}


def graph_to_doc(graph: PathwayGraph) -> dict:
    """Plain-dict form of a graph, mirroring the file schema exactly."""
    nodes = []
    for node in graph.nodes:
        nodes.append(
            {
                "id": node.id,
                "category": node.category.value,
                "title": _text_doc(node.title),
                "summary": _text_doc(node.summary),
                "detail": _text_doc(node.detail),
                "adviceLinks": [{"label": _text_doc(l.label), "url": l.url} for l in node.advice_links],
                "disclaimerRequired": node.disclaimer_required,
            }
        )
    edges = []
    for edge in graph.edges:
        doc = {
            "id": edge.id,
            "from": edge.source,
            "to": edge.target,
            "kind": edge.kind.value,
            "label": _text_doc(edge.label),
            "explanation": _text_doc(edge.explanation),
            "preActionProtocol": edge.pre_action_protocol,
            "disclaimerRequired": edge.disclaimer_required,
        }
        if edge.time_limit_days is not None:
            doc["timeLimitDays"] = edge.time_limit_days
        edges.append(doc)
    return {
        "schemaVersion": graph.schema_version,
        "id": graph.id,
        "title": _text_doc(graph.title),
        "disclaimer": _text_doc(graph.disclaimer),
        "nodes": nodes,
        "edges": edges,
        "entryPoints": [
            {
                "id": p.id,
                "node": p.node,
                "description": _text_doc(p.description),
                "keywords": {lang: list(p.keywords[lang]) for lang in LANGUAGES},
            }
            for p in graph.entry_points
        ],
        "exclusionGroups": [
            {"id": g.id, "members": list(g.members), "explanation": _text_doc(g.explanation)}
            for g in graph.exclusion_groups
        ],
        "prerequisiteRules": [
            {"edge": r.edge, "requires": list(r.requires), "explanation": _text_doc(r.explanation)}
            for r in graph.prerequisite_rules
        ],
    }


def canonical_json_bytes(doc: dict) -> bytes:
    """Canonical JSON: sorted keys, two-space indent, UTF-8, trailing LF."""
    return (json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode("utf-8")


def serialize_graph(graph: PathwayGraph) -> bytes:
    """Canonical bytes; ``parse_graph`` of the result round-trips exactly."""
    return canonical_json_bytes(graph_to_doc(graph))
