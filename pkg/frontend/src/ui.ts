// DOM wiring for the editor page. Rendering is a pure function of the
// session store; every user action funnels through a store method, so the
// panel never shows a (node, pattern) pair that is not in the last report.

import { AdvisorClient, ApiRequestError } from "./api.js";
import { exportDfd, exportLayout, importDfd } from "./importExport.js";
import { EditError, SessionStore } from "./state.js";
import type { AnnotationEntry, ChainLink, PatternDetail } from "./types.js";
import { NODE_KINDS, NodeKind } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

export function describeChain(chain: ChainLink[]): string[] {
  if (chain.length === 0) {
    return ["no inspirations recorded"];
  }
  return chain.map(
    (link) => `${link.strength}ly inspired by ${localName(link.element)} [${link.level}]`,
  );
}

function localName(iri: string): string {
  const idx = Math.max(iri.lastIndexOf("#"), iri.lastIndexOf("/"));
  return idx >= 0 ? iri.slice(idx + 1) : iri;
}

export function renderPatternDrawer(detail: PatternDetail): HTMLElement {
  const drawer = el("aside", "drawer");
  drawer.append(el("h2", "", `${detail.number}. ${detail.name}`));
  const tags = el("p", "tags");
  for (const tag of detail.tags) {
    tags.append(el("span", "tag", tag));
  }
  drawer.append(tags);
  if (detail.comment) {
    drawer.append(el("p", "comment", detail.comment));
  }
  const chain = el("ul", "chain");
  for (const line of describeChain(detail.chain)) {
    chain.append(el("li", "", line));
  }
  drawer.append(chain);
  return drawer;
}

function renderEntries(entries: AnnotationEntry[], onInspect: (n: number) => void): HTMLElement {
  const list = el("ul", "entries");
  for (const entry of entries) {
    const item = el("li");
    const button = el("button", "pattern", `${entry.pattern.number}. ${entry.pattern.name}`);
    button.addEventListener("click", () => onInspect(entry.pattern.number));
    item.append(button);
    item.append(el("span", "tags", entry.tags.join(", ")));
    list.append(item);
  }
  return list;
}

export function mount(root: HTMLElement, baseUrl: string): SessionStore {
  const client = new AdvisorClient(baseUrl);
  const store = new SessionStore({ client });

  const toast = el("div", "toast");
  const canvas = el("div", "canvas");
  const panel = el("div", "panel");
  const drawerHost = el("div", "drawer-host");
  const controls = el("form", "controls");
  root.append(controls, canvas, panel, drawerHost, toast);

  const showToast = (message: string) => {
    toast.textContent = message;
    toast.classList.add("visible");
    setTimeout(() => toast.classList.remove("visible"), 4000);
  };

  const inspect = async (number: number) => {
    try {
      const detail = await client.pattern(number);
      drawerHost.replaceChildren(renderPatternDrawer(detail));
    } catch (err) {
      // 404s and network failures both end up as a retryable toast
      const message = err instanceof ApiRequestError ? err.message : "network failure";
      showToast(`could not load pattern ${number}: ${message}`);
    }
  };

  const idInput = el("input");
  idInput.placeholder = "node id";
  const kindSelect = el("select");
  for (const kind of NODE_KINDS) {
    const option = el("option", "", kind);
    option.value = kind;
    kindSelect.append(option);
  }
  const addButton = el("button", "", "Add node");
  addButton.type = "submit";
  controls.append(idInput, kindSelect, addButton);
  controls.addEventListener("submit", (event) => {
    event.preventDefault();
    try {
      store.addNode({ id: idInput.value, kind: kindSelect.value as NodeKind });
      idInput.value = "";
    } catch (err) {
      if (err instanceof EditError) {
        showToast(err.message);
      } else {
        throw err;
      }
    }
  });

  const exportButton = el("button", "", "Export");
  exportButton.type = "button";
  exportButton.addEventListener("click", () => {
    const blob = new Blob(
      [exportDfd(store.toDfd()), exportLayout(store.layoutSidecar())],
      { type: "application/json" },
    );
    const link = el("a");
    link.href = URL.createObjectURL(blob);
    link.download = `${store.name}.json`;
    link.click();
  });
  const importInput = el("input");
  importInput.type = "file";
  importInput.addEventListener("change", async () => {
    const file = importInput.files?.[0];
    if (!file) return;
    try {
      store.load(importDfd(await file.text()));
    } catch (err) {
      showToast((err as Error).message);
    }
  });
  controls.append(exportButton, importInput);

  store.subscribe(() => {
    canvas.replaceChildren();
    if (store.nodes.length === 0) {
      canvas.append(el("p", "empty", "Add a node to start a diagram."));
      return;
    }
    for (const node of store.nodes) {
      const card = el("div", `node kind-${node.kind}`);
      card.style.left = `${node.position.x}px`;
      card.style.top = `${node.position.y}px`;
      card.append(el("strong", "", node.label || node.id));
      card.addEventListener("click", () => store.select(node.id));
      canvas.append(card);
    }
    panel.replaceChildren();
    const selected = store.selectedNodeId;
    if (selected !== null) {
      const node = store.node(selected);
      panel.append(el("h2", "", node.label || node.id));
      switch (node.annotation.status) {
        case "loading":
          panel.append(el("p", "", "annotating…"));
          break;
        case "loaded":
          panel.append(renderEntries(node.annotation.entries, inspect));
          break;
        case "error":
          panel.append(el("p", "error", node.annotation.message));
          break;
        default:
          panel.append(el("p", "", "no annotations yet"));
      }
    }
  });

  return store;
}
