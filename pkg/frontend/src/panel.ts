/**
 * Journey panel: history blocks, the current node card, and the options.
 *
 * Rendering is pure: state in, elements out. Interactivity is declared
 * with data-action attributes and handled by the app's single delegated
 * listener; nothing here attaches handlers.
 */
import { ui, uiFormat } from "./i18n.js";
import type { AppState } from "./state.js";
import type { GraphDoc, GraphNode, Lang, OptionView, TextDoc } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const element = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) element.setAttribute(name, value);
  element.append(...children);
  return element;
}

export function renderPanel(state: AppState): HTMLElement {
  const { journey, graphDoc, lang } = state;
  if (!journey || !graphDoc) return el("div");

  const panel = el("section", { class: "journey-panel" });
  panel.append(renderHistory(state));

  const currentId = journey.view.strip[journey.view.strip.length - 1];
  const node = graphDoc.nodes.find((n) => n.id === currentId);
  if (node) panel.append(renderNodeCard(state, graphDoc, node));

  if (journey.journey.concluded) {
    panel.append(
      el("p", { class: "concluded-note", "data-concluded": "true" }, ui(lang, "concludedNote")),
    );
  } else if (journey.options) {
    panel.append(renderOptions(state, graphDoc, journey.options));
  }
  return panel;
}

function renderHistory(state: AppState): HTMLElement {
  const { journey, lang } = state;
  const section = el("section", { class: "history" });
  section.append(el("h2", {}, ui(lang, "yourJourney")));
  if (!journey) return section;

  for (const block of journey.view.journeyBlocks) {
    const open = state.unfolded[block.stepIndex] === true;
    const details = el("details", {
      class: "journey-block",
      "data-step-index": String(block.stepIndex),
    });
    if (open) details.setAttribute("open", "");
    const summary = el(
      "summary",
      { "data-action": "toggle-block", "data-step-index": String(block.stepIndex) },
      `${ui(lang, "stepLabel")} ${block.stepIndex + 1}: ${block.title[lang]}`,
    );
    const body = el("div", { class: "block-body" }, el("p", {}, block.body[lang]));
    body.append(
      el(
        "button",
        {
          type: "button",
          "data-action": "change-choice",
          "data-step-index": String(block.stepIndex),
        },
        ui(lang, "changeChoice"),
      ),
    );
    details.append(summary, body);
    section.append(details);
  }
  return section;
}

function renderNodeCard(state: AppState, doc: GraphDoc, node: GraphNode): HTMLElement {
  const { lang } = state;
  const card = el("section", { class: "node-card", "data-current-node": node.id });
  card.append(el("h2", {}, ui(lang, "whereYouAre")));
  card.append(el("h3", { class: "node-title" }, node.title[lang]));
  card.append(el("p", {}, node.summary[lang]));

  if (node.detail[lang] !== "") {
    const key = `node:${node.id}`;
    const expanded = state.expanded[key] === true;
    card.append(
      el(
        "button",
        { type: "button", "data-action": "toggle-detail", "data-detail-key": key },
        ui(lang, expanded ? "showLess" : "learnMore"),
      ),
    );
    const detail = el("p", { class: "node-detail" }, node.detail[lang]);
    if (!expanded) detail.setAttribute("hidden", "");
    card.append(detail);
  }

  if (node.disclaimerRequired) card.append(inlineDisclaimer(doc.disclaimer, lang));

  if (node.adviceLinks.length > 0) {
    card.append(el("h4", {}, ui(lang, "adviceHeading")));
    const list = el("ul", { class: "advice-links" });
    for (const link of node.adviceLinks) {
      list.append(
        el(
          "li",
          {},
          el("a", { href: link.url, target: "_blank", rel: "noopener" }, link.label[lang]),
        ),
      );
    }
    card.append(list);
  }
  return card;
}

function renderOptions(state: AppState, doc: GraphDoc, options: OptionView[]): HTMLElement {
  const { lang } = state;
  const section = el("section", { class: "options" });
  section.append(el("h2", {}, ui(lang, "yourOptions")));
  const list = el("ul", { class: "option-list" });
  for (const option of options) list.append(renderOption(state, doc, option));
  section.append(list);
  return section;
}

function renderOption(state: AppState, doc: GraphDoc, option: OptionView): HTMLElement {
  const { lang } = state;
  const item = el("li", {
    class: option.enabled ? "option enabled" : "option disabled",
    "data-option": option.choice,
  });

  const button = el(
    "button",
    { type: "button", "data-action": "choose", "data-choice": option.choice },
    option.label[lang],
  );
  if (!option.enabled) button.setAttribute("aria-disabled", "true");
  if (state.pending) button.setAttribute("disabled", "");
  item.append(button);

  const badges = el("div", { class: "badges" });
  if (option.timeLimitDays !== null) {
    badges.append(
      el("span", { class: "badge time-limit" }, uiFormat(lang, "timeLimitDays", { days: option.timeLimitDays })),
    );
  }
  if (option.preActionProtocol) {
    badges.append(el("span", { class: "badge pre-action" }, ui(lang, "preAction")));
  }
  if (badges.childNodes.length > 0) item.append(badges);

  const key = `option:${option.choice}`;
  const expanded = state.expanded[key] === true;
  item.append(
    el(
      "button",
      { type: "button", class: "link-button", "data-action": "toggle-detail", "data-detail-key": key },
      ui(lang, expanded ? "showLess" : "learnMore"),
    ),
  );
  const detail = el("p", { class: "option-detail" }, option.explanation[lang]);
  if (!expanded) detail.setAttribute("hidden", "");
  item.append(detail);

  if (option.disclaimerRequired) item.append(inlineDisclaimer(doc.disclaimer, lang));

  if (!option.enabled && option.reason) {
    item.append(
      el(
        "p",
        { class: "option-reason" },
        `${ui(lang, "notOpen")}: ${option.reason.explanation[lang]}`,
      ),
    );
  }

  const failure = state.failure;
  if (failure && failure.choice === option.choice) {
    const text = failure.reason ? failure.reason.explanation[lang] : failure.detail;
    item.append(el("p", { class: "option-failure", role: "alert" }, text));
  }
  return item;
}

function inlineDisclaimer(disclaimer: TextDoc, lang: Lang): HTMLElement {
  return el("aside", { class: "inline-disclaimer" }, disclaimer[lang]);
}
