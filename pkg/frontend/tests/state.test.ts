import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { EditError, SessionStore } from "../src/state.js";
import type { Dfd, Report } from "../src/types.js";

function emptyReport(dfd: Dfd): Report {
  return {
    dfd_name: dfd.name,
    annotations: dfd.nodes.map((n) => ({ node_id: n.id, entries: [] })),
    global_patterns: [],
    unmatched_nodes: [],
    tag_summary: {},
  };
}

class StubClient {
  calls: Dfd[] = [];
  respond: (dfd: Dfd) => Promise<Report> = async (dfd) => emptyReport(dfd);

  async annotate(dfd: Dfd): Promise<Report> {
    this.calls.push(structuredClone(dfd));
    return this.respond(dfd);
  }
}

describe("SessionStore", () => {
  let client: StubClient;
  let store: SessionStore;

  beforeEach(() => {
    vi.useFakeTimers();
    client = new StubClient();
    store = new SessionStore({ client, debounceMs: 500 });
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("debounces a burst of edits into one request", async () => {
    store.addNode({ id: "a", kind: "device" });
    store.setAttribute("a", "device-class", "camera");
    store.addNode({ id: "b", kind: "data_store" });
    expect(client.calls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(499);
    expect(client.calls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(1);
    expect(client.calls).toHaveLength(1);
    expect(client.calls[0].nodes.map((n) => n.id)).toEqual(["a", "b"]);
    expect(store.reportIsCurrent).toBe(true);
  });

  it("discards a stale response when a newer edit supersedes it", async () => {
    let release!: (r: Report) => void;
    client.respond = (dfd) =>
      new Promise<Report>((resolve) => {
        release = (r) => resolve(r);
        void dfd;
      });
    store.addNode({ id: "a", kind: "device" });
    await vi.advanceTimersByTimeAsync(500);
    expect(client.calls).toHaveLength(1);
    const stale = emptyReport(store.toDfd());
    stale.dfd_name = "stale";

    // edit while the first request is in flight
    store.addNode({ id: "b", kind: "process" });
    release(stale);
    await vi.advanceTimersByTimeAsync(0);
    expect(store.report).toBeNull();
    expect(store.reportIsCurrent).toBe(false);

    client.respond = async (dfd) => emptyReport(dfd);
    await vi.advanceTimersByTimeAsync(500);
    expect(store.report?.dfd_name).not.toBe("stale");
    expect(store.reportIsCurrent).toBe(true);
  });

  it("sends no request for an empty diagram", async () => {
    store.addNode({ id: "a", kind: "device" });
    store.removeNode("a");
    await vi.advanceTimersByTimeAsync(1000);
    expect(client.calls).toHaveLength(0);
    expect(store.report).toBeNull();
    expect(store.nodes).toHaveLength(0);
  });

  it("rejects duplicate ids and dangling edges at the source", () => {
    store.addNode({ id: "a", kind: "device" });
    expect(() => store.addNode({ id: "a", kind: "process" })).toThrow(EditError);
    expect(() => store.connect("a", "ghost")).toThrow(EditError);
    expect(() => store.addNode({ id: "x", kind: "cloud" as never })).toThrow(
      EditError,
    );
  });

  it("removing a node drops its incident edges", async () => {
    store.addNode({ id: "a", kind: "device" });
    store.addNode({ id: "b", kind: "data_store" });
    store.connect("a", "b", "sync");
    store.removeNode("b");
    expect(store.edges).toHaveLength(0);
  });

  it("annotation state per node follows the report", async () => {
    client.respond = async (dfd) => ({
      ...emptyReport(dfd),
      annotations: [
        {
          node_id: "cam",
          entries: [
            {
              pattern: {
                iri: "https://w3id.org/parrot#X",
                number: 14,
                name: "X",
                tags: ["Inform"],
                provenance: "reconstructed",
              },
              via: "https://w3id.org/parrot#Camera",
              chain: [],
              tags: ["Inform"],
            },
          ],
        },
      ],
      unmatched_nodes: ["misc"],
    });
    store.addNode({ id: "cam", kind: "device", attributes: { "device-class": "camera" } });
    store.addNode({ id: "misc", kind: "external_entity" });
    expect(store.node("cam").annotation.status).toBe("loading");
    await vi.advanceTimersByTimeAsync(500);
    const cam = store.node("cam").annotation;
    expect(cam.status).toBe("loaded");
    if (cam.status === "loaded") {
      expect(cam.entries.map((e) => e.pattern.number)).toEqual([14]);
    }
    expect(store.node("misc").annotation).toEqual({ status: "loaded", entries: [] });
  });

  it("marks nodes with an error state on request failure", async () => {
    client.respond = async () => {
      throw new Error("connection refused");
    };
    store.addNode({ id: "a", kind: "device" });
    await vi.advanceTimersByTimeAsync(500);
    expect(store.node("a").annotation).toEqual({
      status: "error",
      message: "connection refused",
    });
  });

  it("moveNode changes layout without a new annotation round", async () => {
    store.addNode({ id: "a", kind: "device" });
    await vi.advanceTimersByTimeAsync(500);
    expect(client.calls).toHaveLength(1);
    store.moveNode("a", { x: 120, y: 80 });
    await vi.advanceTimersByTimeAsync(1000);
    expect(client.calls).toHaveLength(1);
    expect(store.layoutSidecar().positions["a"]).toEqual({ x: 120, y: 80 });
    expect(() => store.moveNode("a", { x: Infinity, y: 0 })).toThrow(EditError);
  });

  it("refresh bypasses the debounce", async () => {
    store.addNode({ id: "a", kind: "device" });
    await store.refresh();
    expect(client.calls).toHaveLength(1);
    await vi.advanceTimersByTimeAsync(1000);
    expect(client.calls).toHaveLength(1);
  });
});
