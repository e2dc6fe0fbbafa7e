"""Static pitfall scanner for the loaded ontology graph.

Implements the externally checkable subset of the common-pitfall catalog.
Each rule is a pure function over the graph; the scanner output is the
concatenation of the enabled rules, ordered by severity, pitfall id, and
first offending element.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import namespaces as ns
from .rdf import Graph, Iri

CRITICAL = "critical"
IMPORTANT = "important"
MINOR = "minor"

_SEVERITY_RANK = {CRITICAL: 0, IMPORTANT: 1, MINOR: 2}

SEVERITIES: dict[str, str] = {
    "P04": MINOR,
    "P07": MINOR,
    "P08": MINOR,
    "P10": IMPORTANT,
    "P11": IMPORTANT,
    "P13": MINOR,
    "P19": CRITICAL,
    "P22": MINOR,
    "P34": IMPORTANT,
    "P35": IMPORTANT,
    "P38": IMPORTANT,
    "P41": MINOR,
}

# Vocabulary namespaces whose members are never themselves lint subjects.
_BUILTIN_NS = (ns.RDF, ns.RDFS, ns.OWL, ns.XSD)

# Lowercase words that may stay uncapitalised inside a conventional name.
_CONNECTIVES = {"of", "and", "or", "for", "to", "by", "the", "a", "an", "in",
                "on", "with", "into", "against", "et", "al", "not", "as"}


@dataclass(frozen=True)
class PitfallFinding:
    pitfall: str
    severity: str
    elements: tuple[Iri, ...]
    message: str
    foreign: bool = False

    def to_dict(self) -> dict:
        return {
            "pitfall": self.pitfall,
            "severity": self.severity,
            "elements": [e.value for e in self.elements],
            "message": self.message,
            "foreign": self.foreign,
        }


@dataclass(frozen=True)
class LintConfig:
    enabled_rules: frozenset[str] = frozenset(SEVERITIES)
    conjunction_words: tuple[str, ...] = ("and",)
    conjunction_allowlist: frozenset[str] = frozenset()
    annotation_properties: tuple[Iri, ...] = (ns.RDFS_COMMENT, ns.RDFS_LABEL)
    examined_namespaces: tuple[str, ...] = (ns.PARROT,)

    def __post_init__(self):
        unknown = self.enabled_rules - set(SEVERITIES)
        if unknown:
            raise ValueError(f"unknown lint rules: {sorted(unknown)}")


#: Config matching the documented resolution of the known false positives:
#: the three conjunction-named scheme classes are kept on purpose.
SHIPPED_ALLOWLIST = frozenset(
    {"Principles_of_Wright_and_Raab", "Principles_of_Cavoukian_and_Jonas",
     "Goals_of_Rost_and_Bock"}
)

DEFAULT_CONFIG = LintConfig(conjunction_allowlist=SHIPPED_ALLOWLIST)
RAW_CONFIG = LintConfig()


def local_name(iri: Iri) -> str:
    for sep in ("#", "/"):
        idx = iri.value.rfind(sep)
        if idx >= 0:
            return iri.value[idx + 1 :]
    return iri.value


def _is_builtin(iri: Iri) -> bool:
    return any(iri.value.startswith(p) for p in _BUILTIN_NS)


def _classes(graph: Graph) -> set[Iri]:
    out = {
        t.subject
        for t in graph.match(None, ns.RDF_TYPE, ns.OWL_CLASS)
        if isinstance(t.subject, Iri)
    }
    return out


def _object_properties(graph: Graph) -> set[Iri]:
    return {
        t.subject
        for t in graph.match(None, ns.RDF_TYPE, ns.OWL_OBJECT_PROPERTY)
        if isinstance(t.subject, Iri)
    }


def _declared_properties(graph: Graph) -> set[Iri]:
    out = set()
    for kind in (ns.OWL_OBJECT_PROPERTY, ns.OWL_DATATYPE_PROPERTY,
                 ns.OWL_ANNOTATION_PROPERTY, Iri(ns.RDF + "Property")):
        for t in graph.match(None, ns.RDF_TYPE, kind):
            if isinstance(t.subject, Iri):
                out.add(t.subject)
    return out


def _elements(graph: Graph) -> set[Iri]:
    """Every declared non-builtin IRI: classes, properties, individuals."""
    out = set()
    for t in graph.match(None, ns.RDF_TYPE, None):
        if isinstance(t.subject, Iri) and not _is_builtin(t.subject):
            if t.object == ns.OWL_ONTOLOGY:
                continue
            out.add(t.subject)
    return out


def _ontology_headers(graph: Graph) -> list[Iri]:
    return [
        t.subject
        for t in graph.match(None, ns.RDF_TYPE, ns.OWL_ONTOLOGY)
        if isinstance(t.subject, Iri)
    ]


# ---------------------------------------------------------------------------
# Rules.  Each returns findings without the foreign flag resolved.


def _rule_p04(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    annotation = set(config.annotation_properties)
    findings = []
    for el in sorted(_elements(graph), key=lambda i: i.value):
        connected = bool(graph.match(None, None, el)) or bool(
            graph.match(None, el, None)
        )
        if not connected:
            for t in graph.match(el, None, None):
                if t.predicate != ns.RDF_TYPE and t.predicate not in annotation:
                    connected = True
                    break
        if not connected:
            findings.append(
                PitfallFinding(
                    "P04", SEVERITIES["P04"], (el,),
                    f"{local_name(el)} participates in no triple beyond its own declaration",
                )
            )
    return findings


def _rule_p07(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    findings = []
    for cls in sorted(_classes(graph), key=lambda i: i.value):
        name = local_name(cls)
        if name in config.conjunction_allowlist:
            continue
        words = {w.lower() for w in name.split("_")}
        hit = sorted(w for w in config.conjunction_words if w.lower() in words)
        if hit:
            findings.append(
                PitfallFinding(
                    "P07", SEVERITIES["P07"], (cls,),
                    f"class name {name!r} contains conjunction word(s) {', '.join(hit)}; "
                    "it may merge several concepts",
                )
            )
    return findings


def _rule_p08(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    findings = []
    targets = _classes(graph) | _declared_properties(graph)
    for el in sorted(targets, key=lambda i: i.value):
        if any(graph.match(el, p, None) for p in config.annotation_properties):
            continue
        findings.append(
            PitfallFinding(
                "P08", SEVERITIES["P08"], (el,),
                f"{local_name(el)} carries none of the configured annotation properties",
            )
        )
    return findings


def _leaf_sibling_groups(graph: Graph) -> dict[Iri, list[Iri]]:
    has_child = {
        t.object for t in graph.match(None, ns.RDFS_SUBCLASSOF, None)
    }
    groups: dict[Iri, list[Iri]] = {}
    for t in sorted(
        graph.match(None, ns.RDFS_SUBCLASSOF, None),
        key=lambda t: t.subject.value if isinstance(t.subject, Iri) else "",
    ):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            if t.subject not in has_child:
                groups.setdefault(t.object, []).append(t.subject)
    return {p: c for p, c in groups.items() if len(c) >= 2}


def _rule_p10(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    undisjoint_parents = []
    for parent, leaves in sorted(_leaf_sibling_groups(graph).items(),
                                 key=lambda kv: kv[0].value):
        leafset = set(leaves)
        declared = False
        for leaf in leaves:
            for t in graph.match(leaf, ns.OWL_DISJOINT_WITH, None):
                if t.object in leafset:
                    declared = True
            for t in graph.match(None, ns.OWL_DISJOINT_WITH, leaf):
                if t.subject in leafset:
                    declared = True
        if not declared:
            undisjoint_parents.append(parent)
    if not undisjoint_parents:
        return []
    names = ", ".join(local_name(p) for p in undisjoint_parents)
    return [
        PitfallFinding(
            "P10", SEVERITIES["P10"], (),
            f"no disjointness declared among sibling leaf classes under: {names}",
        )
    ]


def _rule_p11(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    findings = []
    for prop in sorted(_object_properties(graph), key=lambda i: i.value):
        missing = []
        if not graph.match(prop, ns.RDFS_DOMAIN, None):
            missing.append("domain")
        if not graph.match(prop, ns.RDFS_RANGE, None):
            missing.append("range")
        if missing:
            findings.append(
                PitfallFinding(
                    "P11", SEVERITIES["P11"], (prop,),
                    f"object property {local_name(prop)} has no {' or '.join(missing)}",
                )
            )
    return findings


def _rule_p13(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    findings = []
    for prop in sorted(_object_properties(graph), key=lambda i: i.value):
        if graph.match(prop, ns.OWL_INVERSE_OF, None) or graph.match(
            None, ns.OWL_INVERSE_OF, prop
        ):
            continue
        findings.append(
            PitfallFinding(
                "P13", SEVERITIES["P13"], (prop,),
                f"object property {local_name(prop)} declares no inverse relationship",
            )
        )
    return findings


def _rule_p19(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    findings = []
    for prop in sorted(_object_properties(graph), key=lambda i: i.value):
        n_dom = len(graph.objects(prop, ns.RDFS_DOMAIN))
        n_rng = len(graph.objects(prop, ns.RDFS_RANGE))
        if n_dom > 1 or n_rng > 1:
            findings.append(
                PitfallFinding(
                    "P19", SEVERITIES["P19"], (prop,),
                    f"object property {local_name(prop)} declares "
                    f"{n_dom} domain(s) and {n_rng} range(s); use a single "
                    "union/intersection class instead",
                )
            )
    return findings


def _conventional(name: str) -> bool:
    if not name:
        return False
    for word in name.split("_"):
        if not word:
            return False
        if word.lower() in _CONNECTIVES:
            continue
        if not (word[0].isupper() or word[0].isdigit()):
            return False
    return True


def _rule_p22(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    examined = [
        el
        for el in _elements(graph) | _classes(graph) | _declared_properties(graph)
        if any(el.value.startswith(p) for p in config.examined_namespaces)
    ]
    offenders = sorted(
        {local_name(el) for el in examined if not _conventional(local_name(el))}
    )
    if not offenders:
        return []
    return [
        PitfallFinding(
            "P22", SEVERITIES["P22"], (),
            "naming convention (Capitalised_Words_With_Underscores) not followed by: "
            + ", ".join(offenders),
        )
    ]


def _class_positions(graph: Graph) -> set[Iri]:
    out: set[Iri] = set()
    for t in graph.match(None, ns.RDF_TYPE, None):
        if isinstance(t.object, Iri):
            out.add(t.object)
    for pred in (ns.RDFS_SUBCLASSOF, ns.OWL_DISJOINT_WITH):
        for t in graph.match(None, pred, None):
            if isinstance(t.subject, Iri):
                out.add(t.subject)
            if isinstance(t.object, Iri):
                out.add(t.object)
    for pred in (ns.RDFS_DOMAIN, ns.RDFS_RANGE):
        for t in graph.match(None, pred, None):
            if isinstance(t.object, Iri):
                out.add(t.object)
    return {c for c in out if not _is_builtin(c)}


def _rule_p34(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    typed = _classes(graph) | {Iri(ns.RDFS + "Class")}
    findings = []
    for cls in sorted(_class_positions(graph), key=lambda i: i.value):
        if cls in typed:
            continue
        if graph.match(cls, ns.RDF_TYPE, None):
            # it is declared as something else (e.g. a property): P35's job
            continue
        findings.append(
            PitfallFinding(
                "P34", SEVERITIES["P34"], (cls,),
                f"{local_name(cls)} is used as a class but never declared",
            )
        )
    return findings


def _rule_p35(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    declared = _declared_properties(graph)
    used: set[Iri] = set()
    for t in graph:
        if not _is_builtin(t.predicate):
            used.add(t.predicate)
    for pred in (ns.RDFS_DOMAIN, ns.RDFS_RANGE, ns.OWL_INVERSE_OF):
        for t in graph.match(None, pred, None):
            if isinstance(t.subject, Iri) and not _is_builtin(t.subject):
                used.add(t.subject)
    findings = []
    for prop in sorted(used - declared, key=lambda i: i.value):
        findings.append(
            PitfallFinding(
                "P35", SEVERITIES["P35"], (prop,),
                f"{local_name(prop)} is used as a property but never declared",
            )
        )
    return findings


def _rule_p38(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    if _ontology_headers(graph):
        return []
    return [
        PitfallFinding(
            "P38", SEVERITIES["P38"], (),
            "document contains no ontology declaration",
        )
    ]


def _rule_p41(graph: Graph, config: LintConfig) -> list[PitfallFinding]:
    headers = _ontology_headers(graph)
    for header in headers:
        if graph.match(header, ns.DCTERMS_LICENSE, None):
            return []
    return [
        PitfallFinding(
            "P41", SEVERITIES["P41"], (),
            "ontology metadata declares no license",
        )
    ]


RULES = {
    "P04": _rule_p04,
    "P07": _rule_p07,
    "P08": _rule_p08,
    "P10": _rule_p10,
    "P11": _rule_p11,
    "P13": _rule_p13,
    "P19": _rule_p19,
    "P22": _rule_p22,
    "P34": _rule_p34,
    "P35": _rule_p35,
    "P38": _rule_p38,
    "P41": _rule_p41,
}


def _mark_foreign(finding: PitfallFinding, config: LintConfig) -> PitfallFinding:
    if not finding.elements:
        return finding
    foreign = not any(
        el.value.startswith(p)
        for el in finding.elements
        for p in config.examined_namespaces
    )
    return replace(finding, foreign=foreign)


def lint(graph: Graph, config: LintConfig = DEFAULT_CONFIG) -> list[PitfallFinding]:
    """Run every enabled rule; order by severity, pitfall id, first element."""
    findings: list[PitfallFinding] = []
    for rule_id in sorted(config.enabled_rules):
        findings.extend(
            _mark_foreign(f, config) for f in RULES[rule_id](graph, config)
        )
    findings.sort(
        key=lambda f: (
            _SEVERITY_RANK[f.severity],
            f.pitfall,
            f.elements[0].value if f.elements else "",
        )
    )
    return findings


def examined_only(findings: list[PitfallFinding]) -> list[PitfallFinding]:
    """Drop findings whose elements all live outside the examined namespaces."""
    return [f for f in findings if not f.foreign]
