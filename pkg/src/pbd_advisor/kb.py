"""Loading and querying the shipped privacy-by-design knowledge base.

The knowledge content lives in data files: a Turtle document with the class
hierarchy, properties, individuals, entailment and inspiration links, plus
a sidecar CSV with the pattern catalog (number, name, strategy tags,
provenance) that is compiled into triples at load time.  The subclass
closure is materialised as extra ``rdf:type`` triples so queries written
against superclasses (for example ``gdprtext:DataActivity``) answer without
a reasoner.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import namespaces as ns
from .rdf import Graph, Iri, Literal, Triple, parse_turtle


class KbLoadError(RuntimeError):
    pass


class UnknownPatternError(KeyError):
    pass


class HoepmanTag(enum.Enum):
    MINIMISE = "Minimise"
    HIDE = "Hide"
    SEPARATE = "Separate"
    AGGREGATE = "Aggregate"
    INFORM = "Inform"
    CONTROL = "Control"
    ENFORCE = "Enforce"
    DEMONSTRATE = "Demonstrate"

    @classmethod
    def parse(cls, text: str) -> "HoepmanTag":
        # tolerate the -ize spelling used inconsistently in the source tables
        normalised = text.strip().replace("ize", "ise")
        for tag in cls:
            if tag.value.lower() == normalised.lower():
                return tag
        raise ValueError(f"unknown strategy tag: {text!r}")


class SchemeLevel(enum.Enum):
    PRINCIPLE = "Principle"
    STRATEGY = "Strategy"
    GUIDELINE = "Guideline"
    GOAL = "Goal"
    PRIVACY_PATTERN = "PrivacyPattern"


@dataclass(frozen=True)
class PatternEntry:
    iri: Iri
    number: int
    name: str
    tags: frozenset[HoepmanTag]
    provenance: str = "reconstructed"

    def to_dict(self) -> dict:
        return {
            "iri": self.iri.value,
            "number": self.number,
            "name": self.name,
            "tags": sorted(t.value for t in self.tags),
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class ChainLink:
    element: Iri
    level: SchemeLevel
    strength: str  # "full" | "partial"


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    element: Iri | None
    message: str


# Schema IRIs the engine knows about; everything else is data.
ENTAILS = ns.parrot("entails")
FULLY_INSPIRED_BY = ns.parrot("fully_inspired_by")
PARTIALLY_INSPIRED_BY = ns.parrot("partially_inspired_by")
HAS_TAG = ns.parrot("has_tag")
CATALOG_NUMBER = ns.parrot("catalog_number")
APPLIES_TO_ALL_NODES = ns.parrot("applies_to_all_nodes")
PRIVACY_PATTERN = ns.parrot("Privacy_Pattern")
DEVICE = ns.parrot("Device")
SYSTEM_ELEMENT = ns.parrot("System_Element")
DATA_ACTIVITY = ns.gdprtext("DataActivity")

#: Elements that must carry documentation; load refuses a KB where any of
#: them lacks an rdfs:comment.
ANNOTATED_ELEMENTS = (
    ns.parrot("Sensor"),
    ns.parrot("Goal"),
    ns.parrot("Guideline"),
    DEVICE,
    ns.parrot("Strategy"),
    ENTAILS,
)

_LEVEL_CLASSES = {
    Iri(ns.GDPRTEXT + "Principle"): SchemeLevel.PRINCIPLE,
    ns.parrot("Strategy"): SchemeLevel.STRATEGY,
    ns.parrot("Guideline"): SchemeLevel.GUIDELINE,
    ns.parrot("Goal"): SchemeLevel.GOAL,
    PRIVACY_PATTERN: SchemeLevel.PRIVACY_PATTERN,
}

_LEVEL_ORDER = [
    SchemeLevel.PRINCIPLE,
    SchemeLevel.STRATEGY,
    SchemeLevel.GUIDELINE,
    SchemeLevel.GOAL,
    SchemeLevel.PRIVACY_PATTERN,
]


def data_dir():
    return resources.files("pbd_advisor") / "data"


def _read_text(name: str) -> str:
    return (data_dir() / name).read_text(encoding="utf-8")


def materialize_subclass_closure(graph: Graph) -> None:
    """Add an rdf:type triple for every superclass of an asserted type."""
    supers: dict[Iri, set[Iri]] = {}
    for t in graph.match(None, ns.RDFS_SUBCLASSOF, None):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            supers.setdefault(t.subject, set()).add(t.object)

    def ancestors(cls: Iri, seen: set[Iri]) -> set[Iri]:
        out: set[Iri] = set()
        for parent in supers.get(cls, ()):
            if parent not in seen:
                seen.add(parent)
                out.add(parent)
                out |= ancestors(parent, seen)
        return out

    for t in list(graph.match(None, ns.RDF_TYPE, None)):
        if isinstance(t.object, Iri):
            for anc in ancestors(t.object, {t.object}):
                graph.add(Triple(t.subject, ns.RDF_TYPE, anc))


def compile_catalog(graph: Graph, csv_text: str) -> None:
    """Turn the sidecar pattern catalog into triples on ``graph``."""
    seen_numbers: set[int] = set()
    for row in csv.DictReader(csv_text.splitlines()):
        number = int(row["number"])
        if number in seen_numbers:
            raise KbLoadError(f"duplicate catalog number {number}")
        seen_numbers.add(number)
        iri = ns.parrot(row["slug"])
        tags = [HoepmanTag.parse(t) for t in row["tags"].split("|") if t]
        if not tags:
            raise KbLoadError(f"pattern {number} has no strategy tags")
        graph.add(Triple(iri, ns.RDF_TYPE, PRIVACY_PATTERN))
        graph.add(Triple(iri, ns.RDFS_LABEL, Literal(row["name"])))
        graph.add(
            Triple(iri, CATALOG_NUMBER,
                   Literal(str(number), datatype=Iri(ns.XSD + "integer")))
        )
        for tag in tags:
            graph.add(Triple(iri, HAS_TAG, Literal(tag.value)))


@lru_cache(maxsize=None)
def _catalog_provenance() -> dict[int, str]:
    return {
        int(row["number"]): row["provenance"]
        for row in csv.DictReader(_read_text("patterns.csv").splitlines())
    }


def load_builtin(validate: bool = True) -> Graph:
    graph = parse_turtle(_read_text("parrot.ttl"))
    compile_catalog(graph, _read_text("patterns.csv"))
    materialize_subclass_closure(graph)
    if validate:
        issues = validate_kb(graph)
        if issues:
            lines = "; ".join(i.message for i in issues[:5])
            raise KbLoadError(f"shipped knowledge base failed validation: {lines}")
    return graph


@lru_cache(maxsize=1)
def default_graph() -> Graph:
    return load_builtin()


# ---------------------------------------------------------------------------
# Catalog access


def _pattern_iris(graph: Graph) -> list[Iri]:
    return [
        s for s in graph.subjects(ns.RDF_TYPE, PRIVACY_PATTERN)
        if isinstance(s, Iri)
    ]


def pattern_entry(graph: Graph, iri: Iri) -> PatternEntry:
    num = graph.value(iri, CATALOG_NUMBER)
    label = graph.value(iri, ns.RDFS_LABEL)
    number = int(num.lexical) if isinstance(num, Literal) else 0
    provenance = _catalog_provenance().get(number, "reconstructed")
    return PatternEntry(
        iri=iri,
        number=number,
        name=label.lexical if isinstance(label, Literal) else iri.value,
        tags=tags_of(graph, iri),
        provenance=provenance,
    )


def catalog(graph: Graph) -> list[PatternEntry]:
    return sorted((pattern_entry(graph, i) for i in _pattern_iris(graph)),
                  key=lambda e: e.number)


def pattern_by_number(graph: Graph, number: int) -> PatternEntry:
    for entry in catalog(graph):
        if entry.number == number:
            return entry
    raise UnknownPatternError(f"no pattern with catalog number {number}")


def _require_pattern(graph: Graph, pattern: Iri) -> None:
    if Triple(pattern, ns.RDF_TYPE, PRIVACY_PATTERN) not in graph:
        raise UnknownPatternError(f"not a privacy pattern in this graph: {pattern.value}")


def tags_of(graph: Graph, pattern: Iri) -> frozenset[HoepmanTag]:
    _require_pattern(graph, pattern)
    return frozenset(
        HoepmanTag.parse(o.lexical)
        for o in graph.objects(pattern, HAS_TAG)
        if isinstance(o, Literal)
    )


def level_of(graph: Graph, element: Iri) -> SchemeLevel | None:
    types = set(graph.objects(element, ns.RDF_TYPE))
    for cls, level in _LEVEL_CLASSES.items():
        if cls in types:
            return level
        # asserted under a subclass of the level class
        for t in types:
            if isinstance(t, Iri) and Triple(t, ns.RDFS_SUBCLASSOF, cls) in graph:
                return level
    return None


def explanation_chain(graph: Graph, pattern: Iri) -> list[ChainLink]:
    """All inspiration links of a pattern, grouped by scheme level."""
    _require_pattern(graph, pattern)
    links: list[ChainLink] = []
    for prop, strength in ((FULLY_INSPIRED_BY, "full"),
                           (PARTIALLY_INSPIRED_BY, "partial")):
        for obj in graph.objects(pattern, prop):
            if isinstance(obj, Iri):
                level = level_of(graph, obj) or SchemeLevel.PRINCIPLE
                links.append(ChainLink(obj, level, strength))
    links.sort(key=lambda l: (_LEVEL_ORDER.index(l.level), l.strength, l.element.value))
    return links


def global_patterns(graph: Graph) -> list[PatternEntry]:
    """Patterns flagged as applying across every node of a design."""
    out = []
    for t in graph.match(None, APPLIES_TO_ALL_NODES, Literal("true")):
        if isinstance(t.subject, Iri):
            out.append(pattern_entry(graph, t.subject))
    return sorted(out, key=lambda e: e.number)


def object_properties(graph: Graph) -> list[Iri]:
    return [
        s for s in graph.subjects(ns.RDF_TYPE, ns.OWL_OBJECT_PROPERTY)
        if isinstance(s, Iri)
    ]


# ---------------------------------------------------------------------------
# Validation


def validate_kb(graph: Graph) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []

    # every subject is declared with some type
    for t in graph:
        if isinstance(t.subject, Iri) and not graph.match(t.subject, ns.RDF_TYPE, None):
            issues.append(
                ValidationIssue("untyped", t.subject,
                                f"{t.subject.value} has no rdf:type")
            )

    # entailment links join system elements to privacy patterns
    for t in graph.match(None, ENTAILS, None):
        source_types = set(graph.objects(t.subject, ns.RDF_TYPE))
        if SYSTEM_ELEMENT not in source_types:
            issues.append(
                ValidationIssue("bad-entailment-source", t.subject,
                                f"entails source {t.subject} is not a device or data activity")
            )
        if not isinstance(t.object, Iri) or Triple(
            t.object, ns.RDF_TYPE, PRIVACY_PATTERN
        ) not in graph:
            issues.append(
                ValidationIssue("bad-entailment-target", t.subject,
                                f"entails target {t.object} is not a privacy pattern")
            )

    # every pattern carries at least one strategy tag
    for p in _pattern_iris(graph):
        if not graph.objects(p, HAS_TAG):
            issues.append(
                ValidationIssue("tagless-pattern", p,
                                f"pattern {p.value} has no strategy tag")
            )

    # inspiration strengths are exclusive per (pattern, element) pair
    full = {(t.subject, t.object) for t in graph.match(None, FULLY_INSPIRED_BY, None)}
    partial = {(t.subject, t.object) for t in graph.match(None, PARTIALLY_INSPIRED_BY, None)}
    for s, o in sorted(full & partial, key=lambda p: (p[0].value, str(p[1]))):
        issues.append(
            ValidationIssue("conflicting-inspiration", s,
                            f"{s.value} is both fully and partially inspired by {o}")
        )

    # the documented annotations must be present
    for el in ANNOTATED_ELEMENTS:
        if not graph.match(el, ns.RDFS_COMMENT, None):
            issues.append(
                ValidationIssue("missing-annotation", el,
                                f"{el.value} lacks the documented rdfs:comment")
            )

    return issues
