"""Artemus: redress pathway graphs, guided journeys and the tools around them.

The package models administrative-justice redress as typed directed
graphs, walks people through them one decision at a time without storing
anything about the person, and ships the validation, search, HTTP and
CLI layers an authored dataset needs to become a live service.
"""
from .errors import (
    ArtemusError,
    ChoiceNotEnabled,
    DanglingReference,
    DuplicateId,
    GraphMismatch,
    GraphParseError,
    IndexOutOfRange,
    InvalidPrefix,
    InvalidValue,
    JourneyConcluded,
    MalformedJson,
    MissingField,
    MissingTranslation,
    SchemaVersionMismatch,
    UnexpectedField,
    UnknownDataset,
    UnknownEntryPoint,
    UnknownGraph,
    UnpublishableGraph,
)
from .journey import (
    JOURNEY_SCHEMA_VERSION,
    NO_ACTION_EXPLANATION,
    NO_ACTION_LABEL,
    JourneyDoc,
    OptionReason,
    OptionView,
    Step,
    current_node,
    journey_from_doc,
    journey_to_bytes,
    journey_to_doc,
    options,
    rewind,
    start,
    step,
    visited_edges,
)
from .model import (
    LANGUAGES,
    NO_ACTION,
    SCHEMA_VERSION,
    AdviceLink,
    BodyCategory,
    EdgeKind,
    EntryPoint,
    ExclusionGroup,
    LocalizedText,
    Node,
    PathwayGraph,
    PrerequisiteRule,
    RedressEdge,
    canonical_json_bytes,
    graph_hash,
    parse_graph,
    serialize_graph,
    text_for,
)
from .pathfinder import Route, RouteFlags, RouteSet, enumerate_routes, oracle_options, reachable_nodes
from .search import SearchMatch, search, tokenize
from .validation import Diagnostic, Severity, check_bytes, is_publishable, validate
from .viewmodel import EdgeClass, EdgeStyle, JourneyBlock, NodeClass, NodeStyle, ViewModel, Zoom, build

__version__ = "0.1.0"

__all__ = [
    "ArtemusError",
    "AdviceLink",
    "BodyCategory",
    "ChoiceNotEnabled",
    "DanglingReference",
    "Diagnostic",
    "DuplicateId",
    "EdgeClass",
    "EdgeKind",
    "EdgeStyle",
    "EntryPoint",
    "ExclusionGroup",
    "GraphMismatch",
    "GraphParseError",
    "IndexOutOfRange",
    "InvalidPrefix",
    "InvalidValue",
    "JOURNEY_SCHEMA_VERSION",
    "JourneyBlock",
    "JourneyConcluded",
    "JourneyDoc",
    "LANGUAGES",
    "LocalizedText",
    "MalformedJson",
    "MissingField",
    "MissingTranslation",
    "NO_ACTION",
    "NO_ACTION_EXPLANATION",
    "NO_ACTION_LABEL",
    "Node",
    "NodeClass",
    "NodeStyle",
    "OptionReason",
    "OptionView",
    "PathwayGraph",
    "PrerequisiteRule",
    "RedressEdge",
    "Route",
    "RouteFlags",
    "RouteSet",
    "SCHEMA_VERSION",
    "SchemaVersionMismatch",
    "SearchMatch",
    "Severity",
    "Step",
    "UnexpectedField",
    "UnknownDataset",
    "UnknownEntryPoint",
    "UnknownGraph",
    "UnpublishableGraph",
    "ViewModel",
    "Zoom",
    "build",
    "canonical_json_bytes",
    "check_bytes",
    "current_node",
    "enumerate_routes",
    "graph_hash",
    "is_publishable",
    "journey_from_doc",
    "journey_to_bytes",
    "journey_to_doc",
    "options",
    "oracle_options",
    "parse_graph",
    "reachable_nodes",
    "rewind",
    "search",
    "serialize_graph",
    "start",
    "step",
    "text_for",
    "tokenize",
    "validate",
    "visited_edges",
]
