"""Data-flow diagrams and the rules mapping their nodes to KB individuals.

A diagram is plain JSON: named nodes of five kinds (device, process,
data_store, external_entity, data_flow) with free-form string attributes,
plus edges between node ids.  Mapping rules translate node attributes into
knowledge-base individuals; the rule file is data so the judgment stays
editable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import namespaces as ns
from .rdf import Graph, Iri

NODE_KINDS = ("device", "process", "data_store", "external_entity", "data_flow")


class DfdSchemaError(ValueError):
    """Raised for malformed diagram documents; carries the offending path."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class DfdNode:
    id: str
    kind: str
    label: str = ""
    attributes: tuple[tuple[str, str], ...] = ()

    def attr_dict(self) -> dict[str, str]:
        return dict(self.attributes)


@dataclass(frozen=True)
class DfdEdge:
    source: str
    target: str
    label: str = ""


@dataclass(frozen=True)
class Dfd:
    name: str
    nodes: tuple[DfdNode, ...]
    edges: tuple[DfdEdge, ...] = ()

    def node(self, node_id: str) -> DfdNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)


@dataclass(frozen=True)
class MappingRule:
    kind: str | None
    attributes: tuple[tuple[str, str], ...]
    targets: tuple[Iri, ...]

    def matches(self, kind: str, attributes: dict[str, str]) -> bool:
        if self.kind is not None and self.kind != kind:
            return False
        return all(attributes.get(k) == v for k, v in self.attributes)


def _require(cond: bool, message: str, path: str = "") -> None:
    if not cond:
        raise DfdSchemaError(message, path)


def _parse_attributes(raw, path: str) -> tuple[tuple[str, str], ...]:
    _require(isinstance(raw, dict), "attributes must be an object", path)
    for k, v in raw.items():
        _require(isinstance(k, str) and isinstance(v, str),
                 "attribute keys and values must be strings", path)
    return tuple(sorted(raw.items()))


def dfd_from_dict(doc: dict) -> Dfd:
    _require(isinstance(doc, dict), "document must be an object")
    _require(isinstance(doc.get("name"), str) and doc["name"], "missing name", "name")
    raw_nodes = doc.get("nodes")
    _require(isinstance(raw_nodes, list) and raw_nodes,
             "a diagram needs at least one node", "nodes")
    nodes = []
    seen: set[str] = set()
    for i, raw in enumerate(raw_nodes):
        path = f"nodes[{i}]"
        _require(isinstance(raw, dict), "node must be an object", path)
        node_id = raw.get("id")
        _require(isinstance(node_id, str) and node_id != "", "missing id", path)
        _require(node_id not in seen, f"duplicate node id {node_id!r}", path)
        seen.add(node_id)
        kind = raw.get("kind")
        _require(kind in NODE_KINDS,
                 f"kind must be one of {', '.join(NODE_KINDS)}", path)
        label = raw.get("label", "")
        _require(isinstance(label, str), "label must be a string", path)
        nodes.append(DfdNode(node_id, kind, label,
                             _parse_attributes(raw.get("attributes", {}), path)))
    edges = []
    for i, raw in enumerate(doc.get("edges", [])):
        path = f"edges[{i}]"
        _require(isinstance(raw, dict), "edge must be an object", path)
        src, dst = raw.get("from"), raw.get("to")
        for endpoint in (src, dst):
            _require(isinstance(endpoint, str) and endpoint in seen,
                     f"edge endpoint {endpoint!r} is not a node id", path)
        label = raw.get("label", "")
        _require(isinstance(label, str), "label must be a string", path)
        edges.append(DfdEdge(src, dst, label))
    return Dfd(doc["name"], tuple(nodes), tuple(edges))


def parse_dfd(text: str) -> Dfd:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DfdSchemaError(f"not valid JSON: {e}") from e
    return dfd_from_dict(doc)


def dfd_to_dict(dfd: Dfd) -> dict:
    return {
        "name": dfd.name,
        "nodes": [
            {"id": n.id, "kind": n.kind, "label": n.label,
             "attributes": n.attr_dict()}
            for n in dfd.nodes
        ],
        "edges": [
            {"from": e.source, "to": e.target, "label": e.label}
            for e in dfd.edges
        ],
    }


def serialize_dfd(dfd: Dfd) -> str:
    return json.dumps(dfd_to_dict(dfd), indent=2) + "\n"


def effective_attributes(dfd: Dfd, node: DfdNode) -> dict[str, str]:
    """Attributes a node is matched on.

    Flows carry their endpoints' attributes (keys the endpoints disagree on
    are dropped) and default to activity=route, since routing is what a
    flow does.
    """
    if node.kind != "data_flow":
        return node.attr_dict()
    merged: dict[str, str] = {}
    conflicting: set[str] = set()
    for edge in dfd.edges:
        other = None
        if edge.source == node.id:
            other = dfd.node(edge.target)
        elif edge.target == node.id:
            other = dfd.node(edge.source)
        if other is None or other.kind == "data_flow":
            continue
        for k, v in other.attributes:
            if k in merged and merged[k] != v:
                conflicting.add(k)
            merged[k] = v
    for k in conflicting:
        del merged[k]
    merged.setdefault("activity", "route")
    return merged


def load_rules(text: str, graph: Graph) -> list[MappingRule]:
    """Parse a rule file and check each target exists in the KB."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise RuleError(f"rule file is not valid JSON: {e}") from e
    if not isinstance(doc, list):
        raise RuleError("rule file must be a JSON list")
    rules = []
    for i, raw in enumerate(doc):
        if not isinstance(raw, dict) or not isinstance(raw.get("when"), dict):
            raise RuleError(f"rule {i}: missing 'when' object")
        when = raw["when"]
        kind = when.get("kind")
        if kind is not None and kind not in NODE_KINDS:
            raise RuleError(f"rule {i}: unknown node kind {kind!r}")
        attributes = when.get("attributes", {})
        if not isinstance(attributes, dict):
            raise RuleError(f"rule {i}: 'attributes' must be an object")
        targets = raw.get("targets")
        if not isinstance(targets, list) or not targets:
            raise RuleError(f"rule {i}: 'targets' must be a non-empty list")
        iris = []
        for t in targets:
            iri = Iri(t)
            if not graph.match(iri, ns.RDF_TYPE, None):
                raise RuleError(
                    f"rule {i}: target {t} does not exist in the knowledge base"
                )
            iris.append(iri)
        rules.append(MappingRule(kind, tuple(sorted(attributes.items())),
                                 tuple(iris)))
    return rules


def map_node(node: DfdNode, rules: list[MappingRule],
             attributes: dict[str, str] | None = None) -> list[Iri]:
    """Union of the targets of every matching rule, in rule order."""
    attrs = node.attr_dict() if attributes is None else attributes
    out: list[Iri] = []
    for rule in rules:
        if rule.matches(node.kind, attrs):
            for target in rule.targets:
                if target not in out:
                    out.append(target)
    return out
