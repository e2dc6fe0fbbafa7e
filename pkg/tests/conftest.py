import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from pbd_advisor import kb
from pbd_advisor.dfd import load_rules, parse_dfd
from pbd_advisor.rdf import BlankNode, Graph, Iri, Literal, Triple

DATA = Path(__file__).resolve().parent.parent / "src" / "pbd_advisor" / "data"

EX = "http://example.org/"

# Small pools keep the brute-force query oracle tractable.
IRIS = [Iri(EX + name) for name in
        ("a", "b", "c", "d", "e", "f", "g", "h")]
PREDICATES = IRIS[:4]
LITERALS = [Literal("v1"), Literal("v2", language="en"),
            Literal("3", datatype=Iri("http://www.w3.org/2001/XMLSchema#integer"))]
BNODES = [BlankNode("b0"), BlankNode("b1")]


@pytest.fixture(scope="session")
def graph():
    return kb.load_builtin()


@pytest.fixture(scope="session")
def rules(graph):
    text = (DATA / "rules" / "default_rules.json").read_text(encoding="utf-8")
    return load_rules(text, graph)


@pytest.fixture(scope="session")
def fixture_dfds():
    out = {}
    for path in sorted((DATA / "dfds").glob("*.json")):
        out[path.stem] = parse_dfd(path.read_text(encoding="utf-8"))
    return out


def subjects():
    return st.sampled_from(IRIS + BNODES)


def objects():
    return st.sampled_from(IRIS + BNODES + LITERALS)


def triples():
    return st.builds(Triple, subjects(), st.sampled_from(PREDICATES), objects())


def graphs(max_size: int = 20):
    def build(ts):
        g = Graph()
        for t in ts:
            g.add(t)
        return g

    return st.lists(triples(), max_size=max_size).map(build)


def load_fixture_json(name: str) -> dict:
    return json.loads((DATA / "dfds" / f"{name}.json").read_text(encoding="utf-8"))
