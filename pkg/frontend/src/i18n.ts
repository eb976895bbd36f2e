/**
 * Chrome strings in both delivery languages.
 *
 * Only interface furniture lives here: buttons, headings, legend labels.
 * All pathway content (node titles, option labels, explanations,
 * disclaimers) comes from the server in both languages at once and is
 * picked per render, so a language toggle swaps everything in one pass.
 */
import type { Lang, TextDoc } from "./types.js";

const STRINGS = {
  appTitle: { en: "Artemus", cy: "Artemus" },
  tagline: { en: "Explore routes of redress", cy: "Archwilio llwybrau unioni cam" },
  loading: { en: "Loading", cy: "Wrthi'n llwytho" },
  chooseArea: { en: "Choose an area", cy: "Dewiswch faes" },
  openArea: { en: "Open", cy: "Agor" },
  acceptDisclaimer: { en: "Accept and continue", cy: "Derbyn a pharhau" },
  declineDisclaimer: { en: "I do not accept", cy: "Nid wyf yn derbyn" },
  declinedNote: {
    en: "You cannot use the explorer without accepting the notice above.",
    cy: "Ni allwch ddefnyddio'r archwiliwr heb dderbyn yr hysbysiad uchod.",
  },
  searchLegend: { en: "Describe your situation", cy: "Disgrifiwch eich sefyllfa" },
  searchButton: { en: "Search", cy: "Chwilio" },
  browseAll: { en: "Browse all starting points", cy: "Pori pob man cychwyn" },
  noMatches: {
    en: "No matches found. You can browse every starting point instead.",
    cy: "Ni chafwyd dim canlyniadau. Gallwch bori pob man cychwyn yn lle hynny.",
  },
  startHere: { en: "Start here", cy: "Dechrau yma" },
  yourJourney: { en: "Your journey", cy: "Eich taith" },
  yourOptions: { en: "Your options", cy: "Eich dewisiadau" },
  whereYouAre: { en: "Where you are", cy: "Ble rydych chi" },
  concludedNote: { en: "This journey has concluded.", cy: "Mae'r daith hon wedi dod i ben." },
  startOver: { en: "Start over", cy: "Dechrau eto" },
  learnMore: { en: "Learn more", cy: "Dysgu mwy" },
  showLess: { en: "Show less", cy: "Dangos llai" },
  changeChoice: { en: "Change this choice", cy: "Newid y dewis hwn" },
  stepLabel: { en: "Step", cy: "Cam" },
  timeLimitDays: { en: "Time limit: {days} days", cy: "Terfyn amser: {days} diwrnod" },
  preAction: { en: "A pre-action protocol applies", cy: "Mae protocol cyn-achos yn gymwys" },
  adviceHeading: { en: "Where to get advice", cy: "Ble i gael cyngor" },
  notOpen: { en: "Not open to you right now", cy: "Ddim ar agor i chi ar hyn o bryd" },
  zoomLabel: { en: "Map view", cy: "Golwg y map" },
  zoomPathway: { en: "Pathway", cy: "Llwybr" },
  zoomFull: { en: "Full network", cy: "Y rhwydwaith llawn" },
  legendComplaint: { en: "Complaint", cy: "Cwyn" },
  legendAppeal: { en: "Appeal", cy: "Apêl" },
  legendJudicialReview: { en: "Judicial review", cy: "Adolygiad barnwrol" },
  legendNeutral: { en: "Other step", cy: "Cam arall" },
  mapLabel: { en: "Network map", cy: "Map o'r rhwydwaith" },
  staleSession: {
    en: "Your saved journey is no longer valid because the pathway data changed. Starting fresh.",
    cy: "Nid yw eich taith a gadwyd yn ddilys mwyach oherwydd bod data'r llwybrau wedi newid. Dechrau o'r newydd.",
  },
  // Shows the language you would switch to, as bilingual sites do.
  languageToggle: { en: "Cymraeg", cy: "English" },
} satisfies Record<string, TextDoc>;

export type UiKey = keyof typeof STRINGS;

export function ui(lang: Lang, key: UiKey): string {
  return STRINGS[key][lang];
}

export function uiFormat(lang: Lang, key: UiKey, vars: Record<string, string | number>): string {
  let text = STRINGS[key][lang];
  for (const [name, value] of Object.entries(vars)) {
    text = text.replaceAll(`{${name}}`, String(value));
  }
  return text;
}

/** Legend chrome label for an edge legend tag from the view model. */
export function legendLabel(lang: Lang, legend: string): string {
  switch (legend) {
    case "green":
      return ui(lang, "legendComplaint");
    case "red":
      return ui(lang, "legendAppeal");
    case "purple":
      return ui(lang, "legendJudicialReview");
    default:
      return ui(lang, "legendNeutral");
  }
}
