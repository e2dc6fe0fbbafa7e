// Import/export of diagram documents. Export emits exactly the JSON the
// backend accepts; import validates the document before it replaces the
// session, reporting the offending path so the message is actionable.

import type { Dfd, DfdEdge, DfdNode, LayoutSidecar } from "./types.js";
import { NODE_KINDS, NodeKind } from "./types.js";

export class ImportError extends Error {
  readonly path: string;

  constructor(message: string, path = "") {
    super(path ? `${path}: ${message}` : message);
    this.path = path;
  }
}

function check(cond: boolean, message: string, path: string): asserts cond {
  if (!cond) {
    throw new ImportError(message, path);
  }
}

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function parseAttributes(raw: unknown, path: string): Record<string, string> {
  check(isRecord(raw), "attributes must be an object", path);
  const out: Record<string, string> = {};
  for (const [key, value] of Object.entries(raw)) {
    check(typeof value === "string", "attribute values must be strings", path);
    out[key] = value;
  }
  return out;
}

export function parseDfdDocument(doc: unknown): Dfd {
  check(isRecord(doc), "document must be an object", "");
  check(typeof doc.name === "string" && doc.name !== "", "missing name", "name");
  check(Array.isArray(doc.nodes) && doc.nodes.length > 0,
    "a diagram needs at least one node", "nodes");
  const seen = new Set<string>();
  const nodes: DfdNode[] = doc.nodes.map((raw: unknown, i: number) => {
    const path = `nodes[${i}]`;
    check(isRecord(raw), "node must be an object", path);
    const id = raw.id;
    check(typeof id === "string" && id !== "", "missing id", path);
    check(!seen.has(id), `duplicate node id ${JSON.stringify(id)}`, path);
    seen.add(id);
    const kind = raw.kind;
    check(
      typeof kind === "string" && (NODE_KINDS as readonly string[]).includes(kind),
      `kind must be one of ${NODE_KINDS.join(", ")}`,
      path,
    );
    const label = raw.label ?? "";
    check(typeof label === "string", "label must be a string", path);
    return {
      id,
      kind: kind as NodeKind,
      label,
      attributes: parseAttributes(raw.attributes ?? {}, path),
    };
  });
  const rawEdges = doc.edges ?? [];
  check(Array.isArray(rawEdges), "edges must be a list", "edges");
  const edges: DfdEdge[] = rawEdges.map((raw: unknown, i: number) => {
    const path = `edges[${i}]`;
    check(isRecord(raw), "edge must be an object", path);
    for (const endpoint of [raw.from, raw.to]) {
      check(
        typeof endpoint === "string" && seen.has(endpoint),
        `edge endpoint ${JSON.stringify(endpoint)} is not a node id`,
        path,
      );
    }
    const label = raw.label ?? "";
    check(typeof label === "string", "label must be a string", path);
    return { from: raw.from as string, to: raw.to as string, label };
  });
  return { name: doc.name, nodes, edges };
}

export function importDfd(text: string): Dfd {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    throw new ImportError(`not valid JSON: ${(err as Error).message}`);
  }
  return parseDfdDocument(doc);
}

export function exportDfd(dfd: Dfd): string {
  return JSON.stringify(dfd, null, 2) + "\n";
}

export function exportLayout(layout: LayoutSidecar): string {
  return JSON.stringify(layout, null, 2) + "\n";
}

export function importLayout(text: string): LayoutSidecar {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    throw new ImportError(`not valid JSON: ${(err as Error).message}`);
  }
  check(isRecord(doc) && isRecord(doc.positions), "missing positions", "positions");
  const positions: LayoutSidecar["positions"] = {};
  for (const [id, raw] of Object.entries(doc.positions)) {
    check(
      isRecord(raw) &&
        typeof raw.x === "number" && Number.isFinite(raw.x) &&
        typeof raw.y === "number" && Number.isFinite(raw.y),
      "positions must be finite {x, y} pairs",
      `positions[${JSON.stringify(id)}]`,
    );
    positions[id] = { x: raw.x, y: raw.y };
  }
  return { positions };
}
