/**
 * Wire types for the artemus JSON API.
 *
 * Every shape here mirrors a server response field for field. The UI never
 * invents state of its own beyond presentation concerns; if a type is not
 * in this file it does not come from the server.
 */

export type Lang = "en" | "cy";

/** Bilingual text. Both variants are always present and non-empty. */
export interface TextDoc {
  en: string;
  cy: string;
}

export interface GraphListing {
  id: string;
  title: TextDoc;
  disclaimer: TextDoc;
}

export interface SearchMatch {
  entryPointId: string;
  score: number;
  matchedPhrases: string[];
}

export interface StepRec {
  atNode: string;
  chosen: string;
}

/** Client-held journey document; replayable, bound to a graph by hash. */
export interface JourneyDoc {
  schemaVersion: string;
  graphId: string;
  graphHash: string;
  language: Lang;
  entryPointId: string;
  steps: StepRec[];
  concluded: boolean;
}

export interface OptionReason {
  code: string;
  blockingIds: string[];
  explanation: TextDoc;
}

export interface OptionView {
  choice: string;
  enabled: boolean;
  reason: OptionReason | null;
  label: TextDoc;
  explanation: TextDoc;
  timeLimitDays: number | null;
  preActionProtocol: boolean;
  disclaimerRequired: boolean;
}

export type NodeClass = "Current" | "Visited" | "Frontier" | "Elided";
export type EdgeClass = "Traversed" | "Enabled" | "Disabled" | "Elided";

export interface NodeStyle {
  class: NodeClass;
  colour: string;
}

export interface EdgeStyle {
  class: EdgeClass;
  legend: string;
}

export interface JourneyBlock {
  stepIndex: number;
  title: TextDoc;
  body: TextDoc;
}

/** Render contract: classes and legends only, never geometry. */
export interface ViewModel {
  zoom: "Pathway" | "Full";
  strip: string[];
  frontier: OptionView[];
  nodeStyles: Record<string, NodeStyle>;
  edgeStyles: Record<string, EdgeStyle>;
  journeyBlocks: JourneyBlock[];
}

/** `options` is omitted once the journey has concluded. */
export interface JourneyResponse {
  journey: JourneyDoc;
  options?: OptionView[];
  view: ViewModel;
}

export interface ErrorBody {
  status: number;
  code: string;
  detail: string;
  reason?: OptionReason | null;
}

export interface AdviceLink {
  label: TextDoc;
  url: string;
}

export interface GraphNode {
  id: string;
  category: string;
  title: TextDoc;
  summary: TextDoc;
  detail: TextDoc;
  adviceLinks: AdviceLink[];
  disclaimerRequired: boolean;
}

export interface GraphEdge {
  id: string;
  from: string;
  to: string;
  kind: string;
  label: TextDoc;
  explanation: TextDoc;
  preActionProtocol: boolean;
  disclaimerRequired: boolean;
  timeLimitDays?: number;
}

export interface EntryPointDoc {
  id: string;
  node: string;
  description: TextDoc;
  keywords: Record<Lang, string[]>;
}

export interface ExclusionGroupDoc {
  id: string;
  members: string[];
  explanation: TextDoc;
}

export interface PrerequisiteRuleDoc {
  edge: string;
  requires: string[];
  explanation: TextDoc;
}

/** The canonical graph document, as served by GET /api/graphs/{id}. */
export interface GraphDoc {
  schemaVersion: string;
  id: string;
  title: TextDoc;
  disclaimer: TextDoc;
  nodes: GraphNode[];
  edges: GraphEdge[];
  entryPoints: EntryPointDoc[];
  exclusionGroups: ExclusionGroupDoc[];
  prerequisiteRules: PrerequisiteRuleDoc[];
}
