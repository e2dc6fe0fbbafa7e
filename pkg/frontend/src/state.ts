// Session state for the diagram editor. Edits mutate the canonical DFD,
// bump a revision counter, and schedule a debounced re-annotation; the
// revision guard drops any response that arrives for a superseded diagram.

import type { Dfd, Report } from "./types.js";
import {
  AnnotationState,
  CanvasNode,
  DfdEdge,
  LayoutSidecar,
  NodeKind,
  NODE_KINDS,
  Position,
} from "./types.js";

export class EditError extends Error {}

export interface AnnotateClient {
  annotate(dfd: Dfd): Promise<Report>;
}

export interface SessionOptions {
  client: AnnotateClient;
  /** Delay between the last edit and the annotate request. */
  debounceMs?: number;
}

export type Listener = (store: SessionStore) => void;

const DEFAULT_DEBOUNCE_MS = 500;

export class SessionStore {
  name = "Untitled diagram";
  nodes: CanvasNode[] = [];
  edges: DfdEdge[] = [];
  report: Report | null = null;
  selectedNodeId: string | null = null;
  dirty = false;

  private revision = 0;
  private reportRevision = -1;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private readonly client: AnnotateClient;
  private readonly debounceMs: number;
  private readonly listeners = new Set<Listener>();

  constructor(options: SessionOptions) {
    this.client = options.client;
    this.debounceMs = options.debounceMs ?? DEFAULT_DEBOUNCE_MS;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  /** Revision of the diagram the current report corresponds to, if any. */
  get currentRevision(): number {
    return this.revision;
  }

  get reportIsCurrent(): boolean {
    return this.report !== null && this.reportRevision === this.revision;
  }

  node(id: string): CanvasNode {
    const node = this.nodes.find((n) => n.id === id);
    if (!node) {
      throw new EditError(`no node with id ${JSON.stringify(id)}`);
    }
    return node;
  }

  // --- edit actions ---

  setName(name: string): void {
    if (!name) {
      throw new EditError("diagram name must not be empty");
    }
    this.name = name;
    this.touch();
  }

  addNode(spec: {
    id: string;
    kind: NodeKind;
    label?: string;
    attributes?: Record<string, string>;
    position?: Position;
  }): CanvasNode {
    if (!spec.id) {
      throw new EditError("node id must not be empty");
    }
    if (this.nodes.some((n) => n.id === spec.id)) {
      throw new EditError(`duplicate node id ${JSON.stringify(spec.id)}`);
    }
    if (!NODE_KINDS.includes(spec.kind)) {
      throw new EditError(`unknown node kind ${JSON.stringify(spec.kind)}`);
    }
    const node: CanvasNode = {
      id: spec.id,
      kind: spec.kind,
      label: spec.label ?? "",
      attributes: { ...(spec.attributes ?? {}) },
      position: spec.position ?? { x: 0, y: 0 },
      annotation: { status: "none" },
    };
    this.nodes.push(node);
    this.touch();
    return node;
  }

  removeNode(id: string): void {
    this.node(id); // throws for unknown ids
    this.nodes = this.nodes.filter((n) => n.id !== id);
    this.edges = this.edges.filter((e) => e.from !== id && e.to !== id);
    if (this.selectedNodeId === id) {
      this.selectedNodeId = null;
    }
    this.touch();
  }

  setAttribute(id: string, key: string, value: string): void {
    if (!key) {
      throw new EditError("attribute key must not be empty");
    }
    this.node(id).attributes[key] = value;
    this.touch();
  }

  removeAttribute(id: string, key: string): void {
    delete this.node(id).attributes[key];
    this.touch();
  }

  connect(from: string, to: string, label = ""): void {
    this.node(from);
    this.node(to); // dangling edges are prevented at the source
    if (this.edges.some((e) => e.from === from && e.to === to)) {
      throw new EditError(`edge ${from} -> ${to} already exists`);
    }
    this.edges.push({ from, to, label });
    this.touch();
  }

  disconnect(from: string, to: string): void {
    this.edges = this.edges.filter((e) => !(e.from === from && e.to === to));
    this.touch();
  }

  select(id: string | null): void {
    if (id !== null) {
      this.node(id);
    }
    this.selectedNodeId = id;
    this.notify();
  }

  moveNode(id: string, position: Position): void {
    if (!Number.isFinite(position.x) || !Number.isFinite(position.y)) {
      throw new EditError("position must be finite");
    }
    // layout-only change: no revision bump, no re-annotation
    this.node(id).position = position;
    this.notify();
  }

  /** Replace the whole session with an imported diagram. */
  load(dfd: Dfd, layout?: LayoutSidecar): void {
    this.name = dfd.name;
    this.nodes = dfd.nodes.map((n, i) => ({
      ...n,
      attributes: { ...n.attributes },
      position: layout?.positions[n.id] ?? { x: 40 + (i % 5) * 160, y: 40 + Math.floor(i / 5) * 120 },
      annotation: { status: "none" } as AnnotationState,
    }));
    this.edges = dfd.edges.map((e) => ({ ...e }));
    this.report = null;
    this.selectedNodeId = null;
    this.touch();
  }

  toDfd(): Dfd {
    return {
      name: this.name,
      nodes: this.nodes.map((n) => ({
        id: n.id,
        kind: n.kind,
        label: n.label,
        attributes: { ...n.attributes },
      })),
      edges: this.edges.map((e) => ({ ...e })),
    };
  }

  layoutSidecar(): LayoutSidecar {
    const positions: Record<string, Position> = {};
    for (const n of this.nodes) {
      positions[n.id] = n.position;
    }
    return { positions };
  }

  /** Skip the debounce and annotate now (the manual refresh button). */
  refresh(): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    return this.annotateNow();
  }

  // --- internals ---

  private touch(): void {
    this.revision += 1;
    this.dirty = true;
    this.schedule();
    this.notify();
  }

  private schedule(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.nodes.length === 0) {
      // empty-state: nothing to annotate, and no request goes out
      this.report = null;
      this.reportRevision = this.revision;
      this.dirty = false;
      return;
    }
    for (const n of this.nodes) {
      n.annotation = { status: "loading" };
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.annotateNow();
    }, this.debounceMs);
  }

  private async annotateNow(): Promise<void> {
    if (this.nodes.length === 0) {
      return;
    }
    const requestRevision = this.revision;
    let report: Report;
    try {
      report = await this.client.annotate(this.toDfd());
    } catch (err) {
      if (requestRevision !== this.revision) {
        return; // a newer edit owns the annotation state now
      }
      const message = err instanceof Error ? err.message : String(err);
      for (const n of this.nodes) {
        n.annotation = { status: "error", message };
      }
      this.notify();
      return;
    }
    if (requestRevision !== this.revision) {
      return; // stale response for a superseded diagram
    }
    this.report = report;
    this.reportRevision = requestRevision;
    this.dirty = false;
    const byNode = new Map(report.annotations.map((a) => [a.node_id, a.entries]));
    for (const n of this.nodes) {
      n.annotation = { status: "loaded", entries: byNode.get(n.id) ?? [] };
    }
    this.notify();
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener(this);
    }
  }
}
