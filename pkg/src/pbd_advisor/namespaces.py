"""Namespace IRIs shared by the knowledge base, queries, and linter."""

from .rdf import Iri

PARROT = "https://w3id.org/parrot#"
GDPRTEXT = "https://w3id.org/GDPRtEXT#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
SOSA = "http://www.w3.org/ns/sosa/"
SSN = "http://www.w3.org/ns/ssn/"
XSD = "http://www.w3.org/2001/XMLSchema#"
DCTERMS = "http://purl.org/dc/terms/"

# The source material writes the project prefix in both cases, so both
# labels resolve to the same namespace.
DEFAULT_PREFIXES: dict[str, str] = {
    "parrot": PARROT,
    "PARROT": PARROT,
    "gdprtext": GDPRTEXT,
    "GDPRtEXT": GDPRTEXT,
    "rdf": RDF,
    "rdfs": RDFS,
    "owl": OWL,
    "skos": SKOS,
    "sosa": SOSA,
    "ssn": SSN,
    "xsd": XSD,
    "dcterms": DCTERMS,
}


def parrot(local: str) -> Iri:
    return Iri(PARROT + local)


def gdprtext(local: str) -> Iri:
    return Iri(GDPRTEXT + local)


RDF_TYPE = Iri(RDF + "type")
RDFS_SUBCLASSOF = Iri(RDFS + "subClassOf")
RDFS_COMMENT = Iri(RDFS + "comment")
RDFS_LABEL = Iri(RDFS + "label")
RDFS_DOMAIN = Iri(RDFS + "domain")
RDFS_RANGE = Iri(RDFS + "range")
OWL_CLASS = Iri(OWL + "Class")
OWL_ONTOLOGY = Iri(OWL + "Ontology")
OWL_OBJECT_PROPERTY = Iri(OWL + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL + "DatatypeProperty")
OWL_ANNOTATION_PROPERTY = Iri(OWL + "AnnotationProperty")
OWL_DISJOINT_WITH = Iri(OWL + "disjointWith")
OWL_INVERSE_OF = Iri(OWL + "inverseOf")
DCTERMS_LICENSE = Iri(DCTERMS + "license")
