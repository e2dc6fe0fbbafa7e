// Shared types. The Dfd shapes mirror the JSON accepted by POST /annotate;
// everything canvas-specific (positions, annotation state) lives beside the
// canonical structure, never inside it.

export const NODE_KINDS = [
  "device",
  "process",
  "data_store",
  "external_entity",
  "data_flow",
] as const;

export type NodeKind = (typeof NODE_KINDS)[number];

export interface DfdNode {
  id: string;
  kind: NodeKind;
  label: string;
  attributes: Record<string, string>;
}

export interface DfdEdge {
  from: string;
  to: string;
  label: string;
}

export interface Dfd {
  name: string;
  nodes: DfdNode[];
  edges: DfdEdge[];
}

// --- annotation report payload (the /annotate response body) ---

export interface PatternSummary {
  iri: string;
  number: number;
  name: string;
  tags: string[];
  provenance: string;
}

export interface ChainLink {
  element: string;
  level: string;
  strength: "full" | "partial";
}

export interface AnnotationEntry {
  pattern: PatternSummary;
  via: string;
  chain: ChainLink[];
  tags: string[];
}

export interface NodeAnnotation {
  node_id: string;
  entries: AnnotationEntry[];
}

export interface Report {
  dfd_name: string;
  annotations: NodeAnnotation[];
  global_patterns: PatternSummary[];
  unmatched_nodes: string[];
  tag_summary: Record<string, number>;
}

// --- pattern drawer payload (GET /patterns/{n}) ---

export interface PatternDetail extends PatternSummary {
  global: boolean;
  chain: ChainLink[];
  comment: string | null;
}

export interface ApiError {
  error: {
    code: string;
    message: string;
    detail?: unknown;
  };
}

// --- canvas-only state ---

export interface Position {
  x: number;
  y: number;
}

export type AnnotationState =
  | { status: "none" }
  | { status: "loading" }
  | { status: "loaded"; entries: AnnotationEntry[] }
  | { status: "error"; message: string };

export interface CanvasNode extends DfdNode {
  position: Position;
  annotation: AnnotationState;
}

// Positions are exported as a sidecar document so the canonical DFD stays
// byte-compatible with the backend schema.
export interface LayoutSidecar {
  positions: Record<string, Position>;
}
