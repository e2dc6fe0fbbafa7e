import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import {
  exportDfd,
  exportLayout,
  importDfd,
  importLayout,
  ImportError,
} from "../src/importExport.js";
import { SessionStore } from "../src/state.js";
import type { Dfd, Report } from "../src/types.js";

const FIXTURE_DIR = join(
  dirname(fileURLToPath(import.meta.url)),
  "..", "..", "src", "pbd_advisor", "data", "dfds",
);

const nullClient = {
  annotate: async (dfd: Dfd): Promise<Report> => ({
    dfd_name: dfd.name,
    annotations: [],
    global_patterns: [],
    unmatched_nodes: [],
    tag_summary: {},
  }),
};

describe("importDfd", () => {
  it("accepts every backend fixture", () => {
    for (const name of [
      "health_care", "fitness_watch", "rtls",
      "park_monitoring", "smart_home", "drone_delivery",
    ]) {
      const text = readFileSync(join(FIXTURE_DIR, `${name}.json`), "utf-8");
      const dfd = importDfd(text);
      expect(dfd.nodes.length).toBeGreaterThan(0);
      // export re-emits a document the importer accepts unchanged
      expect(importDfd(exportDfd(dfd))).toEqual(dfd);
    }
  });

  it("rejects malformed JSON with a message", () => {
    expect(() => importDfd("{nope")).toThrow(ImportError);
  });

  it.each([
    ['{"nodes": [], "edges": []}', "name"],
    ['{"name": "x", "nodes": []}', "nodes"],
    ['{"name": "x", "nodes": [{"id": "", "kind": "device"}]}', "nodes[0]"],
    ['{"name": "x", "nodes": [{"id": "a", "kind": "blob"}]}', "nodes[0]"],
    [
      '{"name": "x", "nodes": [{"id": "a", "kind": "device"}, {"id": "a", "kind": "device"}]}',
      "nodes[1]",
    ],
    [
      '{"name": "x", "nodes": [{"id": "a", "kind": "device"}], "edges": [{"from": "a", "to": "b"}]}',
      "edges[0]",
    ],
  ])("rejects %s at path %s", (doc, path) => {
    try {
      importDfd(doc);
      expect.unreachable("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(ImportError);
      expect((err as ImportError).path).toBe(path);
    }
  });
});

describe("round-trip through a session", () => {
  it("export then import restores the identical topology", () => {
    const text = readFileSync(join(FIXTURE_DIR, "health_care.json"), "utf-8");
    const store = new SessionStore({ client: nullClient, debounceMs: 10 });
    store.load(importDfd(text));
    store.moveNode("phone", { x: 300, y: 50 });

    const exported = exportDfd(store.toDfd());
    const layout = exportLayout(store.layoutSidecar());

    const restored = new SessionStore({ client: nullClient, debounceMs: 10 });
    restored.load(importDfd(exported), importLayout(layout));

    expect(restored.toDfd()).toEqual(store.toDfd());
    expect(restored.node("phone").position).toEqual({ x: 300, y: 50 });
  });

  it("layout sidecar validates positions", () => {
    expect(() => importLayout('{"positions": {"a": {"x": 1}}}')).toThrow(
      ImportError,
    );
    expect(() => importLayout("[]")).toThrow(ImportError);
  });
});
