/**
 * SVG network map.
 *
 * Geometry comes from layout.ts and the graph document; every visual
 * class comes verbatim from the view model's style maps. Pathway zoom
 * drops Elided nodes and edges from the picture; Full zoom draws them
 * greyed. No enablement or styling decisions are made here.
 */
import { layoutGraph, NODE_H, NODE_W, type Point } from "./layout.js";
import { ui } from "./i18n.js";
import type { ZoomLevel } from "./state.js";
import type { GraphDoc, Lang, ViewModel } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const ARROW_CLEARANCE = 7;

export interface MapProps {
  doc: GraphDoc;
  view: ViewModel;
  lang: Lang;
  zoom: ZoomLevel;
}

export function renderMap(props: MapProps): SVGSVGElement {
  const { doc, view, lang, zoom } = props;
  const layout = layoutGraph(doc);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "network-map");
  svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
  svg.setAttribute("role", "img");
  svg.setAttribute("aria-label", ui(lang, "mapLabel"));
  svg.setAttribute("data-zoom", zoom);

  const defs = document.createElementNS(SVG_NS, "defs");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrow");
  marker.setAttribute("viewBox", "0 0 8 8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "4");
  marker.setAttribute("markerWidth", "7");
  marker.setAttribute("markerHeight", "7");
  marker.setAttribute("orient", "auto-start-reverse");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M 0 0 L 8 4 L 0 8 z");
  tip.setAttribute("fill", "context-stroke");
  marker.append(tip);
  defs.append(marker);
  svg.append(defs);

  const edgeLayer = document.createElementNS(SVG_NS, "g");
  const parallelSeen = new Map<string, number>();
  for (const edge of doc.edges) {
    const style = view.edgeStyles[edge.id];
    if (!style) continue;
    if (zoom === "Pathway" && style.class === "Elided") continue;
    const source = layout.positions.get(edge.from);
    const target = layout.positions.get(edge.to);
    if (!source || !target) continue;

    const pairKey = `${edge.from}->${edge.to}`;
    const lane = parallelSeen.get(pairKey) ?? 0;
    parallelSeen.set(pairKey, lane + 1);

    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", edgePath(edge.from === edge.to, source, target, lane));
    path.setAttribute("class", `edge ${style.class.toLowerCase()} legend-${style.legend}`);
    path.setAttribute("data-edge-id", edge.id);
    path.setAttribute("fill", "none");
    path.setAttribute("marker-end", "url(#arrow)");
    const tooltip = document.createElementNS(SVG_NS, "title");
    tooltip.textContent = edge.label[lang];
    path.append(tooltip);
    edgeLayer.append(path);
  }
  svg.append(edgeLayer);

  const nodeLayer = document.createElementNS(SVG_NS, "g");
  for (const node of doc.nodes) {
    const style = view.nodeStyles[node.id];
    if (!style) continue;
    if (zoom === "Pathway" && style.class === "Elided") continue;
    const centre = layout.positions.get(node.id);
    if (!centre) continue;

    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", `node ${style.class.toLowerCase()} ${style.colour}`);
    group.setAttribute("data-node-id", node.id);
    group.setAttribute("transform", `translate(${centre.x - NODE_W / 2} ${centre.y - NODE_H / 2})`);

    const box = document.createElementNS(SVG_NS, "rect");
    box.setAttribute("width", String(NODE_W));
    box.setAttribute("height", String(NODE_H));
    box.setAttribute("rx", "8");
    group.append(box);

    const lines = wrapTitle(node.title[lang]);
    lines.forEach((line, index) => {
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(NODE_W / 2));
      const offset = lines.length === 1 ? NODE_H / 2 + 4 : NODE_H / 2 - 6 + index * 16;
      text.setAttribute("y", String(offset));
      text.setAttribute("text-anchor", "middle");
      text.textContent = line;
      group.append(text);
    });

    const tooltip = document.createElementNS(SVG_NS, "title");
    tooltip.textContent = node.summary[lang];
    group.append(tooltip);
    nodeLayer.append(group);
  }
  svg.append(nodeLayer);

  return svg;
}

/** Cubic path between node borders; parallel edges fan out by lane. */
function edgePath(selfLoop: boolean, source: Point, target: Point, lane: number): string {
  if (selfLoop) {
    const x = source.x + NODE_W / 2;
    const y = source.y - NODE_H / 4;
    return `M ${x} ${y} C ${x + 46} ${y - 34}, ${x + 46} ${y + 34}, ${x + 2} ${source.y + NODE_H / 4}`;
  }
  const fan = lane * 14;
  if (Math.abs(target.x - source.x) < 1) {
    // Same column: bow out to the right.
    const direction = target.y > source.y ? 1 : -1;
    const startY = source.y + direction * (NODE_H / 2);
    const endY = target.y - direction * (NODE_H / 2 + ARROW_CLEARANCE);
    const bulge = NODE_W / 2 + 34 + fan;
    return `M ${source.x + NODE_W / 4} ${startY} C ${source.x + bulge} ${source.y}, ${target.x + bulge} ${target.y}, ${target.x + NODE_W / 4} ${endY}`;
  }
  const forward = target.x > source.x;
  const startX = source.x + (forward ? NODE_W / 2 : -NODE_W / 2);
  const endX = target.x + (forward ? -(NODE_W / 2 + ARROW_CLEARANCE) : NODE_W / 2 + ARROW_CLEARANCE);
  const startY = source.y + (forward ? fan : -fan);
  const endY = target.y + (forward ? fan : -fan);
  const reach = (endX - startX) / 2;
  const sag = forward ? 0 : 44 + fan;
  return `M ${startX} ${startY} C ${startX + reach} ${startY + sag}, ${endX - reach} ${endY + sag}, ${endX} ${endY}`;
}

/** Greedy two-line wrap; the map is a signpost, not a reading surface. */
function wrapTitle(title: string): string[] {
  const limit = 24;
  if (title.length <= limit) return [title];
  const words = title.split(" ");
  let first = "";
  let index = 0;
  while (index < words.length) {
    const candidate = first === "" ? (words[index] as string) : `${first} ${words[index]}`;
    if (candidate.length > limit && first !== "") break;
    first = candidate;
    index += 1;
  }
  let second = words.slice(index).join(" ");
  if (second.length > limit) second = `${second.slice(0, limit - 1)}…`;
  return second === "" ? [first] : [first, second];
}
