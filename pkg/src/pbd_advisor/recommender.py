"""Per-node privacy-pattern annotation of a data-flow diagram.

For every node: map it to knowledge-base individuals, follow their entails
links to privacy patterns, and attach each pattern's strategy tags and
inspiration chain.  Patterns marked as cross-cutting are reported once for
the whole diagram instead of repeating under every node.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kb
from .dfd import Dfd, MappingRule, effective_attributes, map_node
from .kb import ChainLink, HoepmanTag, PatternEntry, SchemeLevel
from .rdf import Graph, Iri


@dataclass(frozen=True)
class AnnotationEntry:
    pattern: PatternEntry
    via: Iri  # the mapped individual whose entails link produced the pattern
    chain: tuple[ChainLink, ...]
    tags: frozenset[HoepmanTag]


@dataclass(frozen=True)
class Annotation:
    node_id: str
    entries: tuple[AnnotationEntry, ...]


@dataclass(frozen=True)
class Report:
    dfd_name: str
    annotations: tuple[Annotation, ...]
    global_patterns: tuple[PatternEntry, ...]
    unmatched_nodes: tuple[str, ...]
    tag_summary: tuple[tuple[str, int], ...]  # tag name -> distinct patterns


def _tag_summary(annotations, global_patterns) -> tuple[tuple[str, int], ...]:
    patterns_by_tag: dict[str, set[int]] = {}
    entries = [e for a in annotations for e in a.entries]
    for pattern in [e.pattern for e in entries] + list(global_patterns):
        for tag in pattern.tags:
            patterns_by_tag.setdefault(tag.value, set()).add(pattern.number)
    return tuple(
        (tag.value, len(patterns_by_tag.get(tag.value, ())))
        for tag in HoepmanTag
        if patterns_by_tag.get(tag.value)
    )


def annotate(dfd: Dfd, graph: Graph, rules: list[MappingRule]) -> Report:
    global_entries = kb.global_patterns(graph)
    global_iris = {e.iri for e in global_entries}
    annotations: list[Annotation] = []
    unmatched: list[str] = []
    for node in dfd.nodes:
        attrs = effective_attributes(dfd, node)
        mapped = map_node(node, rules, attrs)
        if not mapped:
            unmatched.append(node.id)
            continue
        entries: list[AnnotationEntry] = []
        for via in mapped:
            for t in graph.match(via, kb.ENTAILS, None):
                pattern_iri = t.object
                if not isinstance(pattern_iri, Iri) or pattern_iri in global_iris:
                    continue
                entry = kb.pattern_entry(graph, pattern_iri)
                entries.append(
                    AnnotationEntry(
                        pattern=entry,
                        via=via,
                        chain=tuple(kb.explanation_chain(graph, pattern_iri)),
                        tags=entry.tags,
                    )
                )
        entries.sort(key=lambda e: (e.pattern.number, e.pattern.iri.value, e.via.value))
        annotations.append(Annotation(node.id, tuple(entries)))
    return Report(
        dfd_name=dfd.name,
        annotations=tuple(annotations),
        global_patterns=tuple(global_entries),
        unmatched_nodes=tuple(unmatched),
        tag_summary=_tag_summary(annotations, global_entries),
    )


# ---------------------------------------------------------------------------
# Rendering.  The JSON form is the API payload and round-trips to an equal
# Report; the markdown form is for humans.


def _chain_to_dict(link: ChainLink) -> dict:
    return {
        "element": link.element.value,
        "level": link.level.value,
        "strength": link.strength,
    }


def report_to_dict(report: Report) -> dict:
    return {
        "dfd_name": report.dfd_name,
        "annotations": [
            {
                "node_id": a.node_id,
                "entries": [
                    {
                        "pattern": e.pattern.to_dict(),
                        "via": e.via.value,
                        "chain": [_chain_to_dict(l) for l in e.chain],
                        "tags": sorted(t.value for t in e.tags),
                    }
                    for e in a.entries
                ],
            }
            for a in report.annotations
        ],
        "global_patterns": [p.to_dict() for p in report.global_patterns],
        "unmatched_nodes": list(report.unmatched_nodes),
        "tag_summary": {tag: count for tag, count in report.tag_summary},
    }


def _entry_from_dict(doc: dict) -> PatternEntry:
    return PatternEntry(
        iri=Iri(doc["iri"]),
        number=doc["number"],
        name=doc["name"],
        tags=frozenset(HoepmanTag.parse(t) for t in doc["tags"]),
        provenance=doc.get("provenance", "reconstructed"),
    )


def report_from_dict(doc: dict) -> Report:
    annotations = tuple(
        Annotation(
            node_id=a["node_id"],
            entries=tuple(
                AnnotationEntry(
                    pattern=_entry_from_dict(e["pattern"]),
                    via=Iri(e["via"]),
                    chain=tuple(
                        ChainLink(Iri(c["element"]), SchemeLevel(c["level"]),
                                  c["strength"])
                        for c in e["chain"]
                    ),
                    tags=frozenset(HoepmanTag.parse(t) for t in e["tags"]),
                )
                for e in a["entries"]
            ),
        )
        for a in doc["annotations"]
    )
    return Report(
        dfd_name=doc["dfd_name"],
        annotations=annotations,
        global_patterns=tuple(_entry_from_dict(p) for p in doc["global_patterns"]),
        unmatched_nodes=tuple(doc["unmatched_nodes"]),
        tag_summary=tuple(
            (tag, doc["tag_summary"][tag])
            for tag in [t.value for t in HoepmanTag]
            if tag in doc["tag_summary"]
        ),
    )


def to_json(payload) -> str:
    """Canonical JSON text shared by the CLI and the HTTP service."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_report(report: Report, fmt: str = "markdown") -> str:
    if fmt == "json":
        return to_json(report_to_dict(report))
    if fmt != "markdown":
        raise ValueError(f"unknown report format: {fmt}")
    lines = [f"# Privacy annotations for {report.dfd_name}", ""]
    for a in report.annotations:
        lines.append(f"## Node `{a.node_id}`")
        if not a.entries:
            lines.append("")
            lines.append("No patterns entailed by the mapped individuals.")
        for e in a.entries:
            tags = ", ".join(sorted(t.value for t in e.tags))
            lines.append("")
            lines.append(f"- **{e.pattern.number}. {e.pattern.name}** ({tags})")
            lines.append(f"  - via `{e.via.value}`")
            for link in e.chain:
                lines.append(
                    f"  - {link.strength}ly inspired by `{link.element.value}` "
                    f"[{link.level.value}]"
                )
        lines.append("")
    if report.global_patterns:
        lines.append("## Applies across all nodes")
        lines.append("")
        for p in report.global_patterns:
            tags = ", ".join(sorted(t.value for t in p.tags))
            lines.append(f"- **{p.number}. {p.name}** ({tags})")
        lines.append("")
    if report.unmatched_nodes:
        lines.append("## Unmatched nodes")
        lines.append("")
        for node_id in report.unmatched_nodes:
            lines.append(f"- `{node_id}`")
        lines.append("")
    if report.tag_summary:
        lines.append("## Strategy tag summary")
        lines.append("")
        lines.append("| Tag | Distinct patterns |")
        lines.append("| --- | --- |")
        for tag, count in report.tag_summary:
            lines.append(f"| {tag} | {count} |")
        lines.append("")
    return "\n".join(lines)
