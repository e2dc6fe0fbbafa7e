#!/usr/bin/env python3
"""Regenerate the shipped data files and verify their internal consistency.

Everything under ``src/pbd_advisor/data/`` is produced by this script:
the pattern catalog CSV, the knowledge-base Turtle document, the pre-fix
draft used by the linter tests, the competency-question corpus with its
query files, the default node-mapping rules, and the six example diagrams.

The script is the single source of truth for the counting identities the
test suite asserts (per-use-case, per-type, per-tag, and availability
totals).  It recomputes every total from the generated records and fails
loudly on any drift, so a green run means the data files agree with the
documented tables.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from collections import Counter
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from pbd_advisor import namespaces as ns  # noqa: E402

DATA = REPO / "src" / "pbd_advisor" / "data"

# ---------------------------------------------------------------------------
# Pattern catalog: number, display name, Hoepman strategy tags, provenance.
# "attested" rows carry a name or tag printed in the source material; the
# remainder reconstruct the publicly documented catalog numbering.

M, H, S, A, I, C, E, D = ("Minimise", "Hide", "Separate", "Aggregate",
                          "Inform", "Control", "Enforce", "Demonstrate")

CATALOG: list[tuple[int, str, tuple[str, ...], str]] = [
    (1, "Protection against Tracking", (M, H), "reconstructed"),
    (2, "Location Granularity", (M,), "attested"),
    (3, "Minimal Information Asymmetry", (I,), "reconstructed"),
    (4, "Informed Secure Passwords", (I, E), "reconstructed"),
    (5, "Awareness Feed", (I,), "reconstructed"),
    (6, "Encryption with User-Managed Keys", (H, C), "reconstructed"),
    (7, "Federated Privacy Impact Assessment", (D,), "reconstructed"),
    (8, "Use of Dummies", (H,), "attested"),
    (9, "Who Is Listening", (I,), "reconstructed"),
    (10, "Privacy Awareness Panel", (I,), "reconstructed"),
    (11, "Layered Policy", (I,), "reconstructed"),
    (12, "Privacy Policy Display", (I,), "reconstructed"),
    (13, "Abridged Terms and Conditions", (I,), "attested"),
    (14, "Asynchronous notice", (I,), "attested"),
    (15, "Policy Matching Display", (I,), "reconstructed"),
    (16, "Discouraging Blanket Strategies", (M, C), "reconstructed"),
    (17, "Decoupling Content and Location", (S, H), "reconstructed"),
    (18, "Platform for Privacy Preferences", (I, C), "reconstructed"),
    (19, "Appropriate Privacy Feedback", (I,), "reconstructed"),
    (20, "Impactful Information and Feedback", (I,), "reconstructed"),
    (21, "Privacy Aware Network Client", (I, H), "reconstructed"),
    (22, "Data Breach Notification Pattern", (I, D), "attested"),
    (23, "Pseudonymous Messaging", (H,), "reconstructed"),
    (24, "Onion Routing", (H,), "attested"),
    (25, "Strip Invisible Metadata", (M, H), "reconstructed"),
    (26, "Pseudonymous Identity", (H,), "reconstructed"),
    (27, "Personal Data Store", (S, C), "reconstructed"),
    (28, "User Data Confinement", (S, M), "reconstructed"),
    (29, "Anonymity Set", (A, H), "reconstructed"),
    (30, "Active Broadcast of Presence", (I, C), "reconstructed"),
    (31, "Privacy Color Coding", (I,), "reconstructed"),
    (32, "Icons for Privacy Policies", (I,), "reconstructed"),
    (33, "Privacy-Aware Wording", (I,), "reconstructed"),
    (34, "Privacy Labels", (I, D), "reconstructed"),
    (35, "Enable/Disable Function", (C,), "attested"),
    (36, "Dynamic Privacy Policy Display", (I,), "reconstructed"),
    (37, "Privacy Mirrors", (I, C), "reconstructed"),
    (38, "Appropriate Privacy Icons", (I,), "reconstructed"),
    (39, "Privacy Dashboard", (I, C), "reconstructed"),
    (40, "Preventing Mistakes or Reducing Their Impact", (C,), "reconstructed"),
    (41, "Obtaining Explicit Consent", (C, D), "reconstructed"),
    (42, "Lawful Consent", (C, D, E), "reconstructed"),
    (43, "Ambient Notice", (I,), "reconstructed"),
    (44, "Obligation Management", (E, D), "reconstructed"),
    (45, "Aggregation Gateway", (A, H), "reconstructed"),
    (46, "Privacy Proxy", (H, S), "reconstructed"),
    (47, "Sticky Policies", (E, D), "reconstructed"),
    (48, "Personal Data Table", (I, C), "reconstructed"),
    (49, "Trust Evaluation of Services Sides", (D,), "reconstructed"),
    (50, "Single Point of Contact", (C, D), "reconstructed"),
    (51, "Sign an Agreement to Solve Lack of Trust", (D, E), "reconstructed"),
    (52, "Reasonable Level of Control", (C,), "reconstructed"),
    (53, "Masquerade", (H,), "reconstructed"),
    (54, "Buddy List", (C, M), "reconstructed"),
    (55, "Private Link", (H, C), "reconstructed"),
    (56, "Support Selective Disclosure", (M, C), "reconstructed"),
    (57, "Selective Access Control", (C, S), "reconstructed"),
    (58, "Limited Access to Shared Data", (H, C), "reconstructed"),
    (59, "Negotiation of Privacy Policy", (C, I), "reconstructed"),
    (60, "Hidden Metadata", (H, M), "reconstructed"),
    (61, "Unusual Activities", (I,), "reconstructed"),
    (62, "Increasing Awareness of Information Aggregation", (I, A), "reconstructed"),
    (63, "Added-noise measurement obfuscation", (A, H), "attested"),
    (64, "Trustworthy Privacy Plugin", (A, D), "reconstructed"),
    (65, "Attribute Based Credentials", (M, H), "attested"),
    (66, "Whitelisting with Mixed Anonymity", (H, C), "reconstructed"),
    (67, "Pay Back", (C,), "reconstructed"),
    (68, "Incentivized Participation", (C,), "reconstructed"),
    (69, "Partial Identification", (M,), "reconstructed"),
    (70, "Fair Information Practices", (D, E), "reconstructed"),
    (71, "Time-Limited Retention", (M, E), "reconstructed"),
    (72, "Anonymous Usage Statistics", (A, M), "reconstructed"),
    (73, "Access Log Transparency", (I, D), "reconstructed"),
    (74, "Secure Data Deletion", (C, E), "reconstructed"),
]

_LOWER = {"of", "and", "or", "for", "to", "by", "the", "a", "an", "in", "on",
          "with", "into", "against", "et", "al", "not", "as"}


def slug(name: str) -> str:
    words = name.replace("/", " ").replace("-", " ").split()
    out = []
    for w in words:
        if w.lower() in _LOWER:
            out.append(w.lower())
        elif w[0].islower():
            out.append(w[0].upper() + w[1:])
        else:
            out.append(w)
    return "_".join(out)


PATTERN_SLUG = {num: slug(name) for num, name, _, _ in CATALOG}
PATTERN_TAGS = {num: set(tags) for num, _, tags, _ in CATALOG}

# Pattern 24 is the one recommendation that applies across every node of a
# diagram rather than to a single component.
GLOBAL_PATTERNS = [24]

# ---------------------------------------------------------------------------
# Individuals: devices, data activities, and the scheme elements that feed
# the explanation chains.

DEVICES = {
    # name -> class local name
    "Mobile_Phone": "Device",
    "Camera": "Device",
    "Microphone": "Device",
    "Glucose_Sensor": "Sensor",
}

ACTIVITIES = {
    # name -> class (parrot: unless stated)
    "Store_Data": "gdprtext:DataActivity",
    "Store_Data_Locally": "gdprtext:DataActivity",
    "Share_Data": "gdprtext:DataActivity",
    "Access_Data": "gdprtext:DataActivity",
    "Route_Data": "gdprtext:DataActivity",
    # spelling kept exactly as printed in the published query table
    "Report_for_Adminstration": "gdprtext:SystematicMonitoring",
    "Tracking": "gdprtext:CollectionOfPersonalData",
    "Collect_Personal_Data": "gdprtext:CollectionOfPersonalData",
    "Collect_Location": "gdprtext:CollectionOfPersonalData",
    "Collect_Routine_Data": "gdprtext:CollectionOfPersonalData",
    "Store_Photo": "gdprtext:DataActivity",
    "Notify_System_Attack": "parrot:Notification_Activity",
    "Notify_Data_Breach": "parrot:Notification_Activity",
    "Notify_Data_Collection": "parrot:Notification_Activity",
    "Obtain_Consent": "gdprtext:DataActivity",
    "Control_Own_Data": "gdprtext:DataActivity",
    "Login_Profile": "gdprtext:DataActivity",
}

# Which privacy patterns each device or activity entails.
ENTAILS: dict[str, list[int]] = {
    "Mobile_Phone": [11, 12, 13, 32, 36],
    "Camera": [14, 35, 30],
    "Microphone": [14, 35, 9],
    "Glucose_Sensor": [14, 35, 63],
    "Store_Data": [8, 63, 6, 27, 71],
    "Store_Data_Locally": [27, 74, 6],
    "Share_Data": [58, 55, 41, 19],
    "Access_Data": [57, 73, 52],
    "Route_Data": [46, 23, 21],
    "Report_for_Adminstration": [73, 44, 37],
    "Tracking": [1, 2, 43],
    "Notify_System_Attack": [22, 61, 5],
    "Notify_Data_Breach": [22, 61],
    "Notify_Data_Collection": [43, 14, 30],
    "Collect_Personal_Data": [56, 29, 72, 16],
    "Collect_Location": [2, 17, 69],
    "Collect_Routine_Data": [72, 43],
    "Store_Photo": [48, 39],
    "Obtain_Consent": [41, 42, 18],
    "Control_Own_Data": [39, 48, 41, 50],
    "Login_Profile": [4, 26],
}

STRATEGY_INDIVIDUALS = [M, H, S, A, I, C, E, D]

SCHEME_INDIVIDUALS: dict[str, list[str]] = {
    "Strategies_of_Hoepman": STRATEGY_INDIVIDUALS,
    "Principles_of_Cavoukian": [
        "Proactive_not_Reactive", "Privacy_as_the_Default",
        "Privacy_Embedded_into_Design", "Full_Functionality",
        "End_to_End_Security", "Visibility_and_Transparency",
        "Respect_for_User_Privacy",
    ],
    "Principles_of_FIPPs": [
        "FIPPs_Notice", "FIPPs_Choice_and_Consent", "FIPPs_Access",
        "FIPPs_Integrity_and_Security", "FIPPs_Enforcement",
    ],
    "Principles_of_Fisk_et_al": ["Least_Surprise", "Graceful_Degradation"],
    "Principles_of_ISO_29100": [
        "ISO_Consent_and_Choice", "ISO_Purpose_Legitimacy",
        "ISO_Collection_Limitation", "ISO_Data_Minimization",
        "ISO_Accountability", "ISO_Openness_and_Transparency",
    ],
    "Principles_of_Wright_and_Raab": [
        "Right_to_Dignity", "Right_to_Autonomy", "Right_to_Individuality",
    ],
    "Principles_of_Cavoukian_and_Jonas": [
        "Full_Attribution", "Data_Tethering", "Tamper_Resistant_Audit_Logs",
    ],
    "Guidelines_of_OECD": [
        "OECD_Collection_Limitation", "OECD_Data_Quality",
        "OECD_Purpose_Specification", "OECD_Use_Limitation",
        "OECD_Security_Safeguards", "OECD_Openness",
        "OECD_Individual_Participation", "OECD_Accountability",
    ],
    "Guidelines_of_Perera_et_al": [
        "Minimise_Data_Acquisition", "Minimise_Data_Storage",
        "Minimise_Data_Retention_Period", "Encrypted_Data_Communication",
        "Encrypted_Data_Storage", "Data_Anonymisation",
        "Hidden_Data_Routing", "Reduce_Data_Granularity",
    ],
    "Goals_of_Rost_and_Bock": [
        "Availability", "Integrity", "Confidentiality", "Transparency",
        "Unlinkability", "Intervenability",
    ],
}

# Hand-picked inspiration links beyond the tag-derived strategy links.
# (pattern number, scheme element, strength)
CURATED_LINKS: list[tuple[int, str, str]] = [
    (13, "Visibility_and_Transparency", "full"),
    (13, "OECD_Openness", "partial"),
    (13, "Transparency", "partial"),
    (2, "Reduce_Data_Granularity", "partial"),
    (2, "ISO_Data_Minimization", "partial"),
    (8, "Data_Anonymisation", "partial"),
    (8, "Unlinkability", "partial"),
    (14, "FIPPs_Notice", "partial"),
    (22, "FIPPs_Notice", "partial"),
    (22, "Transparency", "partial"),
    (24, "Hidden_Data_Routing", "partial"),
    (24, "Confidentiality", "partial"),
    (35, "Respect_for_User_Privacy", "partial"),
    (63, "Data_Anonymisation", "partial"),
    (63, "Unlinkability", "partial"),
    (6, "Encrypted_Data_Storage", "partial"),
    (41, "ISO_Consent_and_Choice", "full"),
    (42, "FIPPs_Choice_and_Consent", "partial"),
    (71, "Minimise_Data_Retention_Period", "full"),
]

TAG_TO_GOAL = {I: "Transparency", D: "Transparency", H: "Confidentiality",
               M: "Unlinkability", A: "Unlinkability", C: "Intervenability",
               E: "Integrity", S: "Confidentiality"}


def build_inspiration_links() -> list[tuple[str, str, str]]:
    """(pattern slug, scheme element, strength), every scheme element linked."""
    links: set[tuple[str, str, str]] = set()
    for num, _, tags, _ in CATALOG:
        p = PATTERN_SLUG[num]
        for tag in tags:
            links.add((p, tag, "partial"))
    for num, element, strength in CURATED_LINKS:
        p = PATTERN_SLUG[num]
        links.discard((p, element, "partial" if strength == "full" else "full"))
        links.add((p, element, strength))
    # spread the remaining scheme elements over the catalog so each one
    # appears in at least one explanation chain
    linked = {el for _, el, _ in links}
    todo = [
        el
        for cls, members in SCHEME_INDIVIDUALS.items()
        for el in members
        if el not in linked
    ]
    for i, el in enumerate(sorted(todo)):
        num = CATALOG[(i * 7) % len(CATALOG)][0]
        links.add((PATTERN_SLUG[num], el, "partial"))
    # exclusive strengths per (pattern, element)
    by_pair: dict[tuple[str, str], set[str]] = {}
    for p, el, st in links:
        by_pair.setdefault((p, el), set()).add(st)
    assert all(len(v) == 1 for v in by_pair.values()), "conflicting strengths"
    return sorted(links)


# ---------------------------------------------------------------------------
# Turtle rendering helpers (plain text; the parser round-trips it in tests)

PREFIX_BLOCK = """\
@prefix parrot: <https://w3id.org/parrot#> .
@prefix gdprtext: <https://w3id.org/GDPRtEXT#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
@prefix sosa: <http://www.w3.org/ns/sosa/> .
@prefix ssn: <http://www.w3.org/ns/ssn/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix dcterms: <http://purl.org/dc/terms/> .
"""

CLASS_COMMENTS = {
    "parrot:Privacy_by_Design_Schemes":
        "The collection of published Privacy by Design prescriptions at every abstraction level.",
    "gdprtext:Principle": "A set of Privacy by Design principles.",
    "parrot:Principles_of_Cavoukian": "The seven foundational principles of Cavoukian.",
    "parrot:Principles_of_FIPPs": "The Fair Information Practice Principles.",
    "parrot:Principles_of_Fisk_et_al": "The operational privacy principles of Fisk et al.",
    "parrot:Principles_of_ISO_29100": "The privacy principles of the ISO/IEC 29100 framework.",
    "parrot:Principles_of_Wright_and_Raab":
        "The privacy principles of Wright and Raab. The name refers to a single PbD scheme.",
    "parrot:Principles_of_Cavoukian_and_Jonas":
        "The big-data privacy principles of Cavoukian and Jonas. The name refers to a single PbD scheme.",
    "parrot:Strategy": "A set of Privacy by Design strategies.",
    "parrot:Strategies_of_Hoepman": "The eight privacy design strategies of Hoepman.",
    "parrot:Guideline": "A set of Privacy by Design guidelines.",
    "parrot:Guidelines_of_OECD": "The privacy guidelines of the OECD.",
    "parrot:Guidelines_of_Perera_et_al": "The privacy-by-design guidelines of Perera et al.",
    "parrot:Goal": "A set of Privacy by Design goals.",
    "parrot:Goals_of_Rost_and_Bock":
        "The protection goals of Rost and Bock. The name refers to a single PbD scheme.",
    "parrot:Privacy_Pattern":
        "A reusable design solution to a recurring privacy problem.",
    "parrot:System_Element":
        "A component or data activity of an IoT system design that can entail privacy patterns.",
    "parrot:Device": "A hardware component of the IoT system that operates on some type of information.",
    "parrot:Sensor":
        "An equivalent class to sosa:Sensor; a device observing a property of the data subject or the environment.",
    "gdprtext:DataActivity": "An operation a system performs on a data subject's information.",
    "gdprtext:SystematicMonitoring": "A data activity that observes data subjects in a systematic way.",
    "gdprtext:CollectionOfPersonalData": "A data activity that gathers personal data.",
    "parrot:Notification_Activity": "A data activity that informs the data subject about an event.",
    "gdprtext:PrivacybyDesign": "The Privacy by Design concept.",
    "skos:Concept": "A unit of thought from the simple knowledge organization vocabulary.",
    "sosa:Sensor": "A device that implements observation procedures.",
    "ssn:System": "A system of the sensor-network vocabulary.",
}

PROPERTY_COMMENTS = {
    "parrot:entails":
        "The relationship between system components or activities with the privacy patterns.",
    "parrot:fully_inspired_by":
        "Links a privacy pattern to a scheme element that motivates it in full.",
    "parrot:partially_inspired_by":
        "Links a privacy pattern to a scheme element that motivates part of it.",
    "parrot:has_tag": "The Hoepman strategy tag classifying a privacy pattern.",
    "parrot:catalog_number": "The number of a privacy pattern in the public catalog.",
    "parrot:applies_to_all_nodes":
        "Marks a privacy pattern that should be applied across every node of a design.",
    "dcterms:license": "A legal document giving official permission to do something with the resource.",
}

SUBCLASS_EDGES = [
    ("gdprtext:PrivacybyDesign", "skos:Concept"),
    ("parrot:Privacy_by_Design_Schemes", "gdprtext:PrivacybyDesign"),
    ("gdprtext:Principle", "parrot:Privacy_by_Design_Schemes"),
    ("parrot:Strategy", "parrot:Privacy_by_Design_Schemes"),
    ("parrot:Guideline", "parrot:Privacy_by_Design_Schemes"),
    ("parrot:Goal", "parrot:Privacy_by_Design_Schemes"),
    ("parrot:Privacy_Pattern", "parrot:Privacy_by_Design_Schemes"),
    ("parrot:Principles_of_Cavoukian", "gdprtext:Principle"),
    ("parrot:Principles_of_FIPPs", "gdprtext:Principle"),
    ("parrot:Principles_of_Fisk_et_al", "gdprtext:Principle"),
    ("parrot:Principles_of_ISO_29100", "gdprtext:Principle"),
    ("parrot:Principles_of_Wright_and_Raab", "gdprtext:Principle"),
    ("parrot:Principles_of_Cavoukian_and_Jonas", "gdprtext:Principle"),
    ("parrot:Strategies_of_Hoepman", "parrot:Strategy"),
    ("parrot:Guidelines_of_OECD", "parrot:Guideline"),
    ("parrot:Guidelines_of_Perera_et_al", "parrot:Guideline"),
    ("parrot:Goals_of_Rost_and_Bock", "parrot:Goal"),
    ("parrot:System_Element", "skos:Concept"),
    ("parrot:Device", "parrot:System_Element"),
    ("parrot:Device", "ssn:System"),
    ("parrot:Sensor", "parrot:Device"),
    ("parrot:Sensor", "sosa:Sensor"),
    ("gdprtext:DataActivity", "parrot:System_Element"),
    ("gdprtext:SystematicMonitoring", "gdprtext:DataActivity"),
    ("gdprtext:CollectionOfPersonalData", "gdprtext:DataActivity"),
    ("parrot:Notification_Activity", "gdprtext:DataActivity"),
]

PRINCIPLE_SUBCLASSES = [
    "parrot:Principles_of_Cavoukian", "parrot:Principles_of_FIPPs",
    "parrot:Principles_of_Fisk_et_al", "parrot:Principles_of_ISO_29100",
    "parrot:Principles_of_Wright_and_Raab",
    "parrot:Principles_of_Cavoukian_and_Jonas",
]
ACTIVITY_SUBCLASSES = [
    "gdprtext:SystematicMonitoring", "gdprtext:CollectionOfPersonalData",
    "parrot:Notification_Activity",
]
GUIDELINE_SUBCLASSES = ["parrot:Guidelines_of_OECD", "parrot:Guidelines_of_Perera_et_al"]


def disjointness_triples() -> list[str]:
    lines = []
    for group in (PRINCIPLE_SUBCLASSES, ACTIVITY_SUBCLASSES, GUIDELINE_SUBCLASSES):
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                lines.append(f"{a} owl:disjointWith {b} .")
    return lines


def esc(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def render_kb() -> str:
    out = [PREFIX_BLOCK]
    out.append("""
<https://w3id.org/parrot> a owl:Ontology ;
    rdfs:comment "Knowledge base linking IoT system elements to the privacy patterns they entail and to the design schemes that inspired those patterns." ;
    dcterms:license <https://creativecommons.org/licenses/by/4.0/> .
""")
    # classes
    for cls, comment in CLASS_COMMENTS.items():
        out.append(f'{cls} a owl:Class ;\n    rdfs:comment "{esc(comment)}" .')
    out.append("")
    for sub, sup in SUBCLASS_EDGES:
        out.append(f"{sub} rdfs:subClassOf {sup} .")
    out.append("")
    out.extend(disjointness_triples())
    out.append("")
    # properties
    out.append("""\
parrot:entails a owl:ObjectProperty ;
    rdfs:domain parrot:System_Element ;
    rdfs:range parrot:Privacy_Pattern .
parrot:fully_inspired_by a owl:ObjectProperty ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range parrot:Privacy_by_Design_Schemes .
parrot:partially_inspired_by a owl:ObjectProperty ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range parrot:Privacy_by_Design_Schemes .
parrot:has_tag a owl:DatatypeProperty ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range xsd:string .
parrot:catalog_number a owl:DatatypeProperty ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range xsd:integer .
parrot:applies_to_all_nodes a owl:DatatypeProperty ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range xsd:string .
dcterms:license a owl:AnnotationProperty .
""")
    for prop, comment in PROPERTY_COMMENTS.items():
        out.append(f'{prop} rdfs:comment "{esc(comment)}" .')
    out.append("")
    # devices and activities
    for name, cls in DEVICES.items():
        label = name.replace("_", " ")
        out.append(f'parrot:{name} a parrot:{cls} ;\n    rdfs:label "{label}" .')
    for name, cls in ACTIVITIES.items():
        label = name.replace("_", " ")
        out.append(f'parrot:{name} a {cls} ;\n    rdfs:label "{label}" .')
    out.append("")
    # scheme individuals
    for cls, members in SCHEME_INDIVIDUALS.items():
        for m in members:
            label = m.replace("_", " ")
            out.append(f'parrot:{m} a parrot:{cls} ;\n    rdfs:label "{label}" .')
    out.append("")
    # entailment links
    for source, numbers in ENTAILS.items():
        for n in numbers:
            out.append(f"parrot:{source} parrot:entails parrot:{PATTERN_SLUG[n]} .")
    out.append("")
    # cross-node markers
    for n in GLOBAL_PATTERNS:
        out.append(f'parrot:{PATTERN_SLUG[n]} parrot:applies_to_all_nodes "true" .')
    out.append("")
    # inspiration links
    for p, el, strength in build_inspiration_links():
        prop = "parrot:fully_inspired_by" if strength == "full" else "parrot:partially_inspired_by"
        out.append(f"parrot:{p} {prop} parrot:{el} .")
    out.append("")
    return "\n".join(out)


def render_draft() -> str:
    """The pre-fix ontology snapshot the linter fixtures are counted on.

    Reproduces the documented defect profile: three conjunction-named
    classes, properties without inverses, two domains / two ranges on the
    object properties, no disjointness anywhere, six elements without
    annotations, lowercase property names, and a header without a license.
    """
    commented = {
        cls: c for cls, c in CLASS_COMMENTS.items()
        if cls not in ("parrot:Sensor", "parrot:Goal", "parrot:Guideline",
                       "parrot:Device", "parrot:Strategy")
    }
    out = [PREFIX_BLOCK]
    out.append("\n<https://w3id.org/parrot> a owl:Ontology .\n")
    for cls in CLASS_COMMENTS:
        if cls in commented:
            out.append(f'{cls} a owl:Class ;\n    rdfs:comment "{esc(commented[cls])}" .')
        else:
            out.append(f"{cls} a owl:Class .")
    out.append("")
    for sub, sup in SUBCLASS_EDGES:
        out.append(f"{sub} rdfs:subClassOf {sup} .")
    out.append("")
    out.append("""\
parrot:entails a owl:ObjectProperty ;
    rdfs:domain parrot:Device ;
    rdfs:domain gdprtext:DataActivity ;
    rdfs:range parrot:Privacy_Pattern .
parrot:fully_inspired_by a owl:ObjectProperty ;
    rdfs:comment "Links a privacy pattern to a scheme element that motivates it in full." ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range gdprtext:Principle ;
    rdfs:range parrot:Strategy .
parrot:partially_inspired_by a owl:ObjectProperty ;
    rdfs:comment "Links a privacy pattern to a scheme element that motivates part of it." ;
    rdfs:domain parrot:Privacy_Pattern ;
    rdfs:range gdprtext:Principle ;
    rdfs:range parrot:Strategy .
""")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# Competency-question corpus.
#
# Each row: (number, use case, type, sub-type, availability, source
# individual or None, status, text).  Two questions were asked twice within
# their own workshop and are kept verbatim, so per-use-case totals count
# distinct question texts.  One question was never classified in the
# user-study replay (availability None), which is why the availability
# categories sum to 80 over an 81-record corpus.

HC, FIT, RTLS, PARK, SH_UC, DRONE = ("health-care", "fitness-watch", "rtls",
                                     "park-monitoring", "smart-home",
                                     "drone-delivery")
DC_T, DEV_T, PROC_T, STO_T, DIG_T, REG_T = ("DataCollection", "Device",
                                            "Process", "Storage", "Dignity",
                                            "Regulations")
ANS, MIS, NA = "answered", "missing", "not-available"

_P = "What are the PbD patterns I should apply if my system"

CQ_ROWS: list[tuple[int, str, str, str, str | None, str | None, str, str]] = [
    (1, HC, DEV_T, "Mobile Phone", ANS, "Mobile_Phone", "Valid",
     f"{_P} includes a mobile phone?"),
    (2, HC, STO_T, "Cloud", ANS, "Store_Data", "Valid",
     f"{_P} stores data subject information in a cloud-based database?"),
    (3, HC, PROC_T, "Access", ANS, "Report_for_Adminstration", "Valid",
     f"{_P} reports data subject information to an Administrator/Controller?"),
    (4, HC, PROC_T, "Third-Party", ANS, "Share_Data", "Valid",
     f"{_P} shares data subject information with a third party/another organisation?"),
    (5, HC, DC_T, "Personal Information", ANS, "Collect_Personal_Data", "Valid",
     f"{_P} requires the collection of personal data?"),
    (6, HC, DEV_T, "Reading Sensor", ANS, "Glucose_Sensor", "Valid",
     f"{_P} gathers readings from a continuous glucose monitor sensor?"),
    (7, HC, PROC_T, "Route", MIS, None, "Valid",
     f"{_P} routes the readings through a home gateway?"),
    (8, HC, PROC_T, "Profile", NA, None, "Valid",
     f"{_P} keeps a login profile for each patient?"),
    (9, HC, DIG_T, "Control", ANS, "Control_Own_Data", "Valid",
     f"{_P} lets patients manage the data stored about them?"),
    (10, HC, DIG_T, "Agreement", MIS, None, "Valid",
     "How do I make sure the patient agreed before their treatment data is used for research?"),
    (11, HC, DC_T, "Location", ANS, "Collect_Location", "Valid",
     f"{_P} records where the patient was when a reading was taken?"),
    (12, DRONE, DC_T, "Location", ANS, "Tracking", "Valid",
     f"{_P} provides a tracking service for the delivery?"),
    (13, DRONE, DIG_T, "Notify", ANS, "Notify_System_Attack", "Valid",
     f"{_P} needs to notify the data subjects in case of a system attack?"),
    (14, DRONE, STO_T, "Local", ANS, "Store_Data_Locally", "Valid",
     f"{_P} retains historical delivery data in a local archive?"),
    (15, DRONE, DIG_T, "Notify", ANS, "Notify_Data_Breach", "Valid",
     f"{_P} must notify customers when their data is infiltrated?"),
    (16, DRONE, DIG_T, "Agreement", ANS, "Control_Own_Data", "Valid",
     "How can customers dispose of the data the drone service holds about them?"),
    (17, DRONE, PROC_T, "Access", NA, None, "Valid",
     f"{_P} gives the service provider access to the delivery records?"),
    (18, DRONE, PROC_T, "Third-Party", ANS, "Share_Data", "Duplicated",
     f"{_P} shares the delivery address with a logistics partner?"),
    (19, DRONE, DC_T, "Routine", NA, None, "Valid",
     f"{_P} monitors the drone fleet around the clock?"),
    (20, DRONE, DIG_T, "Notify", ANS, "Notify_Data_Breach", "Duplicated",
     f"{_P} must notify customers when their data is infiltrated?"),
    (21, DRONE, DC_T, "Personal Information", MIS, None, "Valid",
     "Can I get the date of birth of the driver to check if he has a license?"),
    (22, FIT, DIG_T, "Advantage", NA, None, "Valid",
     "If more than one person is using the watch, how do we protect the privacy of all of them equally?"),
    (23, FIT, DIG_T, "Agreement", ANS, "Obtain_Consent", "Valid",
     "How do I make the privacy policy obligations of the watch clear to the user?"),
    (24, FIT, DC_T, "Personal Information", NA, None, "Valid",
     f"{_P} keeps collecting data the whole time the watch is worn?"),
    (25, FIT, PROC_T, "Third-Party", ANS, "Share_Data", "Duplicated",
     f"{_P} shares workout data with the manufacturer?"),
    (26, FIT, PROC_T, "Access", MIS, None, "Valid",
     f"{_P} lets a coach access the athlete's training history?"),
    (27, FIT, DC_T, "Personal Information", ANS, "Collect_Personal_Data", "Valid",
     f"{_P} collects personal data anonymously?"),
    (28, FIT, DIG_T, "Notify", NA, None, "Valid",
     f"{_P} should tell the user each time data collection starts?"),
    (29, FIT, DIG_T, "Control", ANS, "Control_Own_Data", "Valid",
     f"{_P} lets the user decide what the watch keeps about them?"),
    (30, FIT, DIG_T, "Notify", NA, None, "Valid",
     f"{_P} warns the user when an unknown device pairs with the watch?"),
    (31, FIT, PROC_T, "Share", MIS, None, "Valid",
     f"{_P} posts running routes to a social feed?"),
    (32, FIT, STO_T, "Cloud", ANS, "Store_Data", "Duplicated",
     f"{_P} syncs all measurements to the vendor cloud?"),
    (33, FIT, STO_T, "Cloud", NA, None, "Valid",
     f"{_P} backs up the full activity history off the device?"),
    (34, FIT, DC_T, "Location", ANS, "Collect_Location", "Duplicated",
     f"{_P} records the real-time location of the runner?"),
    (35, FIT, DC_T, "Location", NA, None, "Valid",
     f"{_P} stores the places where workouts happened?"),
    (36, FIT, DIG_T, "Agreement", MIS, None, "Valid",
     "For how long is the watch allowed to keep my measurements, and under which agreement?"),
    (37, FIT, DIG_T, "Agreement", MIS, None, "Valid",
     "Is the user asked again for consent when the privacy policy changes?"),
    (38, FIT, PROC_T, "Third-Party", NA, None, "Duplicated",
     f"{_P} sells aggregated fitness data to insurers?"),
    (39, FIT, DC_T, "Personal Information", ANS, "Collect_Personal_Data", "Duplicated",
     f"{_P} collects personal data anonymously?"),
    (40, FIT, DC_T, "Routine", ANS, "Collect_Routine_Data", "Valid",
     f"{_P} stores a user's food intake information?"),
    (41, FIT, DC_T, "Personal Information", MIS, None, "Valid",
     f"{_P} keeps the gym equipment usage of each member?"),
    (42, FIT, DC_T, "Personal Information", NA, None, "Valid",
     f"{_P} links heart-rate data to the user's account name?"),
    (43, FIT, PROC_T, "Route", ANS, "Route_Data", "Valid",
     f"{_P} relays the watch data through the user's phone?"),
    (44, FIT, DC_T, "Personal Information", MIS, None, "Valid",
     f"{_P} asks for the user's home city during setup?"),
    (45, FIT, DIG_T, "Control", ANS, "Control_Own_Data", "Duplicated",
     f"{_P} lets the user delete their own measurements?"),
    (46, FIT, DC_T, "Personal Information", NA, None, "Valid",
     f"{_P} asks for the user's street address for deliveries?"),
    (47, FIT, PROC_T, "Third-Party", NA, None, "Duplicated",
     f"{_P} lets advertising partners query workout summaries?"),
    (48, FIT, DC_T, "Location", NA, None, "Valid",
     f"{_P} tracks the user's position inside the gym building?"),
    (49, FIT, DIG_T, "Notify", MIS, None, "Duplicated",
     f"{_P} must notify users when their account is attacked?"),
    (50, FIT, DC_T, "Routine", ANS, "Collect_Routine_Data", "Valid",
     f"{_P} stores a user's daily routines?"),
    (51, FIT, DC_T, "Personal Information", NA, None, "Valid",
     f"{_P} reads the model and serial number of the paired phone?"),
    (52, FIT, PROC_T, "Share", ANS, "Share_Data", "Modified",
     f"{_P} shares live vitals with an emergency contact?"),
    (53, PARK, DC_T, "Photo", ANS, "Store_Photo", "Valid",
     f"{_P} stores people's faces/photos (identifiable info)?"),
    (54, PARK, PROC_T, "Access", NA, None, "Duplicated",
     f"{_P} gives the park administration access to visitor counts?"),
    (55, PARK, DIG_T, "Agreement", NA, None, "Valid",
     "How do we stay compliant when non-authorized visitors walk into the monitored area?"),
    (56, PARK, DC_T, "Personal Information", NA, None, "Valid",
     f"{_P} keeps the raw data captured by the park sensors?"),
    (57, PARK, DC_T, "Personal Information", MIS, None, "Valid",
     f"{_P} estimates the age and gender of visitors?"),
    (58, PARK, PROC_T, "Route", ANS, "Route_Data", "Duplicated",
     f"{_P} routes the recordings from the gateway to the cloud?"),
    (59, PARK, DIG_T, "Control", ANS, "Control_Own_Data", "Duplicated",
     f"{_P} lets visitors request the removal of their recordings?"),
    (60, PARK, DIG_T, "Agreement", MIS, None, "Duplicated",
     "For how long may the park keep the recorded material?"),
    (61, PARK, DEV_T, "Camera", ANS, "Camera", "Modified",
     "What PbD patterns should I apply to make people aware that the camera is recording them?"),
    (62, RTLS, STO_T, "Cloud", ANS, "Store_Data", "Duplicated",
     f"{_P} stores the tags' position history in the cloud?"),
    (63, RTLS, PROC_T, "Third-Party", ANS, "Share_Data", "Duplicated",
     f"{_P} hands location data to the building operator?"),
    (64, RTLS, DIG_T, "Agreement", NA, None, "Valid",
     "Which privacy policy applies when the tags travel between countries with different laws?"),
    (65, RTLS, DIG_T, "Notify", ANS, "Notify_Data_Collection", "Valid",
     f"{_P} informs staff that their badge is being located?"),
    (66, RTLS, DIG_T, "Agreement", MIS, None, "Valid",
     "Do employees have to agree before the locating system is switched on?"),
    (67, RTLS, PROC_T, "Route", ANS, "Route_Data", "Duplicated",
     f"{_P} forwards tag positions from the anchors to the server?"),
    (68, RTLS, PROC_T, "Route", NA, None, "Valid",
     "If we keep an external copy or backup of the position data, how can I keep this private?"),
    (69, RTLS, DIG_T, "Control", ANS, "Control_Own_Data", "Duplicated",
     f"{_P} lets a worker turn off being located after hours?"),
    (70, RTLS, PROC_T, "Share", ANS, "Share_Data", "Duplicated",
     f"{_P} exposes who is in which room to all colleagues?"),
    (71, RTLS, PROC_T, "Route", ANS, "Route_Data", "Duplicated",
     f"{_P} passes positions between the locating devices?"),
    (72, SH_UC, DIG_T, "Agreement", ANS, "Obtain_Consent", "Duplicated",
     "How do I collect the household members' consent for the smart-home data use?"),
    (73, SH_UC, REG_T, "Control", ANS, "Control_Own_Data", "Modified",
     "What are the PbD privacy patterns I should apply to allow data subjects to choose which of their data is collected?"),
    (74, SH_UC, DEV_T, "Camera", ANS, "Camera", "Valid",
     f"{_P} includes an indoor camera watching the living room?"),
    (75, SH_UC, DIG_T, "Notify", ANS, "Notify_Data_Breach", "Duplicated",
     f"{_P} alerts the family when the home network is breached?"),
    (76, SH_UC, DIG_T, "Control", ANS, "Control_Own_Data", "Duplicated",
     f"{_P} lets residents erase yesterday's recordings?"),
    (77, SH_UC, DEV_T, "Microphone", ANS, "Microphone", "Valid",
     f"{_P} includes a voice assistant with an always-on microphone?"),
    (78, SH_UC, DEV_T, "Microphone", MIS, None, "Duplicated",
     f"{_P} records conversations to improve voice recognition?"),
    (79, SH_UC, DEV_T, "Camera", ANS, "Camera", "Duplicated",
     f"{_P} has an outdoor camera pointing at the street?"),
    (80, SH_UC, DC_T, "Photo", NA, None, "Valid",
     f"{_P} captures photos of passers-by who never agreed to anything?"),
    (81, SH_UC, DEV_T, "Camera", None, None, "Valid",
     f"{_P} lets guests review the footage the doorbell camera took of them?"),
]

# Documented table totals the generated corpus must reproduce.
EXPECTED_USE_CASE = {HC: 11, FIT: 30, RTLS: 10, PARK: 9, SH_UC: 10, DRONE: 9}
EXPECTED_TYPE = {DC_T: 22, DEV_T: 8, PROC_T: 20, STO_T: 5, DIG_T: 25, REG_T: 1}
EXPECTED_SUB_TYPE = {
    (DC_T, "Location"): 5, (DC_T, "Personal Information"): 12,
    (DC_T, "Routine"): 3, (DC_T, "Photo"): 2,
    (DEV_T, "Mobile Phone"): 1, (DEV_T, "Camera"): 4,
    (DEV_T, "Microphone"): 2, (DEV_T, "Reading Sensor"): 1,
    (PROC_T, "Share"): 3, (PROC_T, "Access"): 4, (PROC_T, "Third-Party"): 6,
    (PROC_T, "Route"): 6, (PROC_T, "Profile"): 1,
    (STO_T, "Cloud"): 4, (STO_T, "Local"): 1,
    (DIG_T, "Advantage"): 1, (DIG_T, "Agreement"): 10,
    (DIG_T, "Notify"): 8, (DIG_T, "Control"): 6,
    (REG_T, "Control"): 1,
}
EXPECTED_TAGS = {M: 22, H: 21, S: 16, A: 23, I: 65, C: 52, E: 10, D: 36}
EXPECTED_AVAILABILITY = {ANS: 45, MIS: 14, NA: 21}

SOURCE_QUERY_CLASS = {
    "Report_for_Adminstration": "gdprtext:SystematicMonitoring",
    "Tracking": "gdprtext:CollectionOfPersonalData",
    "Notify_System_Attack": "PARROT:Notification_Activity",
}


def query_text(source: str) -> str:
    if source in DEVICES:
        return (
            "SELECT ?Device ?PrivacyPattern\n"
            "WHERE {\n"
            "  ?Device rdf:type PARROT:Device.\n"
            "  ?Device PARROT:entails ?PrivacyPattern.\n"
            f"  filter (?Device = PARROT:{source} )\n"
            "}\n"
        )
    cls = SOURCE_QUERY_CLASS.get(source, "gdprtext:DataActivity")
    return (
        "SELECT ?DataActivity ?PrivacyPattern\n"
        "WHERE {\n"
        f"  ?DataActivity a {cls}.\n"
        "  ?DataActivity PARROT:entails ?PrivacyPattern.\n"
        f"  FILTER (?DataActivity = PARROT:{source})\n"
        "}\n"
    )


def source_tag_union(source: str) -> set[str]:
    tags: set[str] = set()
    for n in ENTAILS[source]:
        tags |= PATTERN_TAGS[n]
    return tags


def distribute_free_tags(rows) -> dict[int, set[str]]:
    """Expected tags for the non-answered records.

    The answered records' tags are fixed by the knowledge base, so the
    remaining records absorb whatever each tag column still needs to reach
    its documented total.  Deterministic: tags are assigned largest-deficit
    first to the records currently carrying the fewest tags.
    """
    answered_counts: Counter[str] = Counter()
    free_ids = []
    for num, _, _, sub_type, availability, source, _, _ in rows:
        if availability == ANS:
            for tag in source_tag_union(source):
                answered_counts[tag] += 1
        else:
            free_ids.append(num)

    deficits = {tag: EXPECTED_TAGS[tag] - answered_counts[tag]
                for tag in EXPECTED_TAGS}
    for tag, deficit in deficits.items():
        assert deficit >= 0, (
            f"answered records alone exceed the {tag} column total "
            f"({answered_counts[tag]} > {EXPECTED_TAGS[tag]})"
        )
        assert deficit <= len(free_ids), f"{tag} deficit larger than free record count"

    assigned: dict[int, set[str]] = {num: set() for num in free_ids}
    for tag, deficit in sorted(deficits.items(), key=lambda kv: (-kv[1], kv[0])):
        order = sorted(free_ids, key=lambda num: (len(assigned[num]), num))
        picked = [num for num in order if tag not in assigned[num]][:deficit]
        assert len(picked) == deficit
        for num in picked:
            assigned[num].add(tag)
    assert all(assigned[num] for num in free_ids), "a free record ended up tagless"
    return assigned


def build_corpus():
    free_tags = distribute_free_tags(CQ_ROWS)
    records = []
    queries: dict[str, str] = {}
    for num, use_case, type_, sub_type, availability, source, status, text in CQ_ROWS:
        if availability == ANS:
            expected = sorted(source_tag_union(source))
            query_file = f"queries/cq{num:02d}.rq"
            queries[query_file] = query_text(source)
        else:
            expected = sorted(free_tags[num])
            query_file = None
        if sub_type == "Control":
            assert expected == sorted({I, C, D}), f"CQ{num} Control tag drift"
        records.append({
            "id": f"CQ{num}",
            "use_case": use_case,
            "text": text,
            "type": type_,
            "sub_type": sub_type,
            "status": status,
            "availability": availability,
            "expected_tags": expected,
            "query_file": query_file,
        })
    return records, queries


def check_corpus(records) -> None:
    by_uc_texts: dict[str, set[str]] = {}
    type_counts: Counter[str] = Counter()
    sub_type_counts: Counter[tuple[str, str]] = Counter()
    tag_counts: Counter[str] = Counter()
    availability_counts: Counter[str] = Counter()
    for r in records:
        by_uc_texts.setdefault(r["use_case"], set()).add(r["text"])
        type_counts[r["type"]] += 1
        sub_type_counts[(r["type"], r["sub_type"])] += 1
        for tag in r["expected_tags"]:
            tag_counts[tag] += 1
        if r["availability"] is not None:
            availability_counts[r["availability"]] += 1

    assert len(records) == 81, f"corpus has {len(records)} records"
    per_uc = {uc: len(texts) for uc, texts in by_uc_texts.items()}
    assert per_uc == EXPECTED_USE_CASE, f"use-case totals drifted: {per_uc}"
    assert dict(type_counts) == EXPECTED_TYPE, f"type totals drifted: {type_counts}"
    assert dict(sub_type_counts) == EXPECTED_SUB_TYPE, (
        f"sub-type totals drifted: {sub_type_counts}"
    )
    assert dict(tag_counts) == EXPECTED_TAGS, f"tag totals drifted: {tag_counts}"
    assert dict(availability_counts) == EXPECTED_AVAILABILITY, (
        f"availability totals drifted: {availability_counts}"
    )


# ---------------------------------------------------------------------------
# Default node-mapping rules and the six example diagrams.


def default_rules() -> list[dict]:
    p = "https://w3id.org/parrot#"
    rules = [
        ({"kind": "device", "attributes": {"device-class": "mobile-phone"}}, ["Mobile_Phone"]),
        ({"kind": "device", "attributes": {"device-class": "camera"}}, ["Camera"]),
        ({"kind": "device", "attributes": {"device-class": "microphone"}}, ["Microphone"]),
        ({"kind": "device", "attributes": {"device-class": "reading-sensor"}}, ["Glucose_Sensor"]),
        ({"attributes": {"storage": "cloud"}}, ["Store_Data"]),
        ({"attributes": {"storage": "local"}}, ["Store_Data_Locally"]),
        ({"attributes": {"activity": "share"}}, ["Share_Data"]),
        ({"attributes": {"activity": "third-party"}}, ["Share_Data"]),
        ({"attributes": {"activity": "access"}}, ["Access_Data"]),
        ({"attributes": {"activity": "route"}}, ["Route_Data"]),
        ({"attributes": {"activity": "profile"}}, ["Login_Profile"]),
        ({"attributes": {"activity": "report"}}, ["Report_for_Adminstration"]),
        ({"attributes": {"activity": "tracking"}}, ["Tracking"]),
        ({"attributes": {"activity": "notify"}}, ["Notify_Data_Collection"]),
        ({"attributes": {"activity": "notify-attack"}}, ["Notify_System_Attack"]),
        ({"attributes": {"activity": "notify-breach"}}, ["Notify_Data_Breach"]),
        ({"attributes": {"activity": "consent"}}, ["Obtain_Consent"]),
        ({"attributes": {"activity": "advantage"}}, ["Obtain_Consent"]),
        ({"attributes": {"activity": "control"}}, ["Control_Own_Data"]),
        ({"attributes": {"data-category": "personal-information"}}, ["Collect_Personal_Data"]),
        ({"attributes": {"data-category": "location"}}, ["Collect_Location"]),
        ({"attributes": {"data-category": "routine"}}, ["Collect_Routine_Data"]),
        ({"attributes": {"data-category": "photo"}}, ["Store_Photo"]),
    ]
    return [{"when": when, "targets": [p + t for t in targets]}
            for when, targets in rules]


def node(id_, kind, label, **attributes):
    return {"id": id_, "kind": kind, "label": label, "attributes": attributes}


def edge(a, b, label=""):
    return {"from": a, "to": b, "label": label}


DFDS = {
    "health_care": {
        "name": "Diabetes treatment and monitoring",
        "nodes": [
            node("patient", "external_entity", "Patient"),
            node("cgm_sensor", "device", "CGM sensor", **{"device-class": "reading-sensor"}),
            node("phone", "device", "Patient's phone", **{"device-class": "mobile-phone"}),
            node("readings_flow", "data_flow", "Sensor readings"),
            node("cloud_store", "data_store", "Treatment database", storage="cloud"),
            node("professionals", "external_entity", "Health professionals", activity="access"),
            node("researchers", "external_entity", "Researchers", activity="third-party"),
        ],
        "edges": [
            edge("patient", "cgm_sensor", "wears"),
            edge("cgm_sensor", "readings_flow"),
            edge("readings_flow", "phone"),
            edge("phone", "cloud_store", "sync"),
            edge("cloud_store", "professionals", "review"),
            edge("cloud_store", "researchers", "export"),
        ],
    },
    "fitness_watch": {
        "name": "Fitness watch",
        "nodes": [
            node("watch", "device", "Fitness watch", **{"device-class": "reading-sensor"}),
            node("phone", "device", "Companion phone", **{"device-class": "mobile-phone"}),
            node("sync_flow", "data_flow", "Measurement sync"),
            node("vendor_cloud", "data_store", "Vendor cloud", storage="cloud"),
            node("consent", "process", "Consent manager", activity="consent"),
            node("friends", "external_entity", "Friends feed", activity="share"),
        ],
        "edges": [
            edge("watch", "sync_flow"),
            edge("sync_flow", "phone"),
            edge("phone", "vendor_cloud"),
            edge("vendor_cloud", "friends"),
            edge("consent", "vendor_cloud"),
        ],
    },
    "rtls": {
        "name": "Real-time locating system",
        "nodes": [
            node("badge", "device", "Staff badge", **{"data-category": "location"}),
            node("anchors", "process", "Anchor network", activity="tracking"),
            node("position_flow", "data_flow", "Position updates"),
            node("server", "data_store", "Position history", storage="cloud"),
            node("operator", "external_entity", "Building operator", activity="third-party"),
        ],
        "edges": [
            edge("badge", "anchors"),
            edge("anchors", "position_flow"),
            edge("position_flow", "server"),
            edge("server", "operator"),
        ],
    },
    "park_monitoring": {
        "name": "Park monitoring",
        "nodes": [
            node("camera", "device", "Park camera", **{"device-class": "camera"}),
            node("faces", "process", "Face capture", **{"data-category": "photo"}),
            node("recordings_flow", "data_flow", "Recordings"),
            node("archive", "data_store", "Recording archive", storage="cloud"),
            node("administration", "external_entity", "Park administration", activity="report"),
        ],
        "edges": [
            edge("camera", "faces"),
            edge("faces", "recordings_flow"),
            edge("recordings_flow", "archive"),
            edge("archive", "administration"),
        ],
    },
    "smart_home": {
        "name": "Smart home",
        "nodes": [
            node("indoor_camera", "device", "Indoor camera", **{"device-class": "camera"}),
            node("assistant", "device", "Voice assistant", **{"device-class": "microphone"}),
            node("hub", "process", "Home hub", activity="control"),
            node("footage_flow", "data_flow", "Footage"),
            node("local_store", "data_store", "Home recorder", storage="local"),
            node("alerts", "process", "Breach alerts", **{"activity": "notify-breach"}),
        ],
        "edges": [
            edge("indoor_camera", "footage_flow"),
            edge("footage_flow", "local_store"),
            edge("assistant", "hub"),
            edge("hub", "local_store"),
            edge("local_store", "alerts"),
        ],
    },
    "drone_delivery": {
        "name": "Drone delivery",
        "nodes": [
            node("drone", "device", "Delivery drone", **{"device-class": "camera"}),
            node("gps", "process", "Route tracker", **{"data-category": "location"}),
            node("telemetry_flow", "data_flow", "Telemetry"),
            node("archive", "data_store", "Delivery archive", storage="local"),
            node("dispatcher", "external_entity", "Dispatcher", activity="access"),
        ],
        "edges": [
            edge("drone", "gps"),
            edge("gps", "telemetry_flow"),
            edge("telemetry_flow", "archive"),
            edge("archive", "dispatcher"),
        ],
    },
}


# ---------------------------------------------------------------------------


def write_files() -> None:
    (DATA / "corpus" / "queries").mkdir(parents=True, exist_ok=True)
    (DATA / "rules").mkdir(parents=True, exist_ok=True)
    (DATA / "dfds").mkdir(parents=True, exist_ok=True)

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["number", "slug", "name", "tags", "provenance"])
    for num, name, tags, provenance in CATALOG:
        writer.writerow([num, PATTERN_SLUG[num], name, "|".join(tags), provenance])
    (DATA / "patterns.csv").write_text(buf.getvalue(), encoding="utf-8")

    (DATA / "parrot.ttl").write_text(render_kb(), encoding="utf-8")
    (DATA / "parrot_draft.ttl").write_text(render_draft(), encoding="utf-8")

    records, queries = build_corpus()
    check_corpus(records)
    with (DATA / "corpus" / "cqs.jsonl").open("w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r) + "\n")
    for rel, text in queries.items():
        (DATA / "corpus" / rel).write_text(text, encoding="utf-8")

    (DATA / "rules" / "default_rules.json").write_text(
        json.dumps(default_rules(), indent=2) + "\n", encoding="utf-8"
    )
    for name, dfd in DFDS.items():
        (DATA / "dfds" / f"{name}.json").write_text(
            json.dumps(dfd, indent=2) + "\n", encoding="utf-8"
        )


def verify() -> None:
    """Load the written files through the engine and re-check the numbers."""
    from pbd_advisor import kb, linter
    from pbd_advisor.query import evaluate, parse_query
    from pbd_advisor.rdf import parse_turtle

    graph = kb.load_builtin()
    assert len(kb.object_properties(graph)) == 3
    assert len(kb.catalog(graph)) == 74
    assert [e.number for e in kb.global_patterns(graph)] == GLOBAL_PATTERNS

    # every answered record's query is non-empty and its answer patterns'
    # tag union equals the stored expected tags
    records, queries = build_corpus()
    for r in records:
        if r["availability"] != ANS:
            continue
        query = parse_query(queries[r["query_file"]])
        result = evaluate(query, graph)
        assert result.rows, f"{r['id']} returned no rows"
        tags: set[str] = set()
        for row in result.rows:
            for term in row:
                try:
                    tags |= {t.value for t in kb.tags_of(graph, term)}
                except kb.UnknownPatternError:
                    pass
        assert sorted(tags) == r["expected_tags"], (
            f"{r['id']}: answer tags {sorted(tags)} != recorded {r['expected_tags']}"
        )

    # pattern-level anchors
    for source, want in (("Store_Data", {8, 63}), ("Camera", {14, 35}),
                         ("Microphone", {14, 35})):
        got = {e.number for e in kb.catalog(graph)
               if ns.parrot(source) in {t.subject for t in graph.match(None, kb.ENTAILS, e.iri)}}
        assert want <= got, f"{source} entails {got}, wanted ⊇ {want}"

    # linter profile of the pre-fix draft
    draft = parse_turtle((DATA / "parrot_draft.ttl").read_text(encoding="utf-8"))
    findings = linter.examined_only(linter.lint(draft, linter.RAW_CONFIG))
    profile = Counter(f.pitfall for f in findings)
    expected_profile = {"P07": 3, "P13": 3, "P19": 3, "P10": 1, "P08": 6,
                       "P22": 1, "P41": 1}
    assert dict(profile) == expected_profile, f"draft lint profile: {dict(profile)}"

    # shipped knowledge base lints clean at important and above
    shipped = linter.examined_only(linter.lint(graph, linter.DEFAULT_CONFIG))
    bad = [f for f in shipped if f.severity in (linter.CRITICAL, linter.IMPORTANT)]
    assert not bad, f"shipped KB has severe findings: {[f.to_dict() for f in bad]}"

    print("all data files written and verified")
    print(f"  patterns: {len(CATALOG)}")
    print(f"  corpus records: {len(records)} "
          f"({EXPECTED_AVAILABILITY[ANS]} answered, "
          f"{EXPECTED_AVAILABILITY[MIS]} missing, "
          f"{EXPECTED_AVAILABILITY[NA]} not available, 1 unclassified)")
    print(f"  draft lint profile: {expected_profile}")


if __name__ == "__main__":
    write_files()
    verify()
