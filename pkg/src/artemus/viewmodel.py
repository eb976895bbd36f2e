"""Focus-and-context projection of a journey onto its graph.

The view model tells a renderer everything except geometry: which nodes
are the walked strip, which edges are open or closed right now, and what
to grey out. Layout coordinates are deliberately absent — the rendering
side owns layout. Fold state of the history blocks is presentation state
and lives in the UI, not here.

Every node gets exactly one class (Current, Visited, Frontier or Elided)
plus its category colour token; every edge gets exactly one class
(Traversed, Enabled, Disabled or Elided) plus its legend tag. The two
zoom levels share the same classification — Pathway zoom just licenses
the renderer to drop Elided entries from the picture, never from the
style maps.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .journey import (
    NO_ACTION_EXPLANATION,
    NO_ACTION_LABEL,
    JourneyDoc,
    OptionView,
    current_node,
    options,
    visited_edges,
)
from .model import (
    NO_ACTION,
    LocalizedText,
    PathwayGraph,
    edge_legend_tag,
    node_colour_token,
)


class Zoom(str, Enum):
    PATHWAY = "Pathway"
    FULL = "Full"


class NodeClass(str, Enum):
    CURRENT = "Current"
    VISITED = "Visited"
    FRONTIER = "Frontier"
    ELIDED = "Elided"


class EdgeClass(str, Enum):
    TRAVERSED = "Traversed"
    ENABLED = "Enabled"
    DISABLED = "Disabled"
    ELIDED = "Elided"


@dataclass(frozen=True)
class NodeStyle:
    node_class: NodeClass
    colour: str


@dataclass(frozen=True)
class EdgeStyle:
    edge_class: EdgeClass
    legend: str


@dataclass(frozen=True)
class JourneyBlock:
    """One foldable history entry: the choice made and why it mattered."""

    step_index: int
    title: LocalizedText
    body: LocalizedText


@dataclass(frozen=True)
class ViewModel:
    zoom: Zoom
    strip: tuple[str, ...]
    frontier: tuple[OptionView, ...]
    node_styles: dict[str, NodeStyle]
    edge_styles: dict[str, EdgeStyle]
    journey_blocks: tuple[JourneyBlock, ...]


def build(graph: PathwayGraph, journey: JourneyDoc, zoom: Zoom = Zoom.PATHWAY) -> ViewModel:
    node = current_node(graph, journey)
    strip = tuple(s.at_node for s in journey.steps) + (node,)
    frontier: tuple[OptionView, ...] = ()
    if not journey.concluded:
        frontier = tuple(options(graph, journey))

    traversed = visited_edges(journey)
    frontier_by_edge = {o.choice: o for o in frontier if o.choice != NO_ACTION}

    edge_styles: dict[str, EdgeStyle] = {}
    for edge in graph.edges:
        if edge.id in traversed:
            cls = EdgeClass.TRAVERSED
        elif edge.id in frontier_by_edge:
            cls = EdgeClass.ENABLED if frontier_by_edge[edge.id].enabled else EdgeClass.DISABLED
        else:
            cls = EdgeClass.ELIDED
        edge_styles[edge.id] = EdgeStyle(edge_class=cls, legend=edge_legend_tag(edge.kind))

    on_strip = set(strip)
    frontier_targets = {
        graph.edges_by_id[o.choice].target for o in frontier if o.choice != NO_ACTION
    }
    node_styles: dict[str, NodeStyle] = {}
    for graph_node in graph.nodes:
        if graph_node.id == node:
            cls = NodeClass.CURRENT
        elif graph_node.id in on_strip:
            cls = NodeClass.VISITED
        elif graph_node.id in frontier_targets:
            cls = NodeClass.FRONTIER
        else:
            cls = NodeClass.ELIDED
        node_styles[graph_node.id] = NodeStyle(node_class=cls, colour=node_colour_token(graph_node.category))

    blocks = []
    for index, step in enumerate(journey.steps):
        if step.chosen == NO_ACTION:
            blocks.append(JourneyBlock(step_index=index, title=NO_ACTION_LABEL, body=NO_ACTION_EXPLANATION))
        else:
            edge = graph.edges_by_id[step.chosen]
            blocks.append(JourneyBlock(step_index=index, title=edge.label, body=edge.explanation))

    return ViewModel(
        zoom=zoom,
        strip=strip,
        frontier=frontier,
        node_styles=node_styles,
        edge_styles=edge_styles,
        journey_blocks=tuple(blocks),
    )
