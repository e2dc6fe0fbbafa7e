import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DATA, IRIS, LITERALS, PREDICATES, graphs
from pbd_advisor import kb
from pbd_advisor.query import (
    Filter, Query, QuerySyntaxError, TriplePattern, UnsupportedFeatureError,
    Var, evaluate, evaluate_oracle, parse_query,
)
from pbd_advisor.rdf import Graph, Iri, Triple


def test_parse_select_where_filter():
    q = parse_query("""
        PREFIX ex: <http://example.org/>
        SELECT ?s ?o WHERE {
            ?s ex:p ?o .
            FILTER (?s = ex:a)
        }
    """)
    assert q.select_vars == (Var("s"), Var("o"))
    assert q.patterns == (TriplePattern(Var("s"), Iri("http://example.org/p"), Var("o")),)
    assert q.filters == (Filter(Var("s"), "=", Iri("http://example.org/a")),)


def test_keywords_case_insensitive_and_a_shorthand():
    q = parse_query("select ?x where { ?x a parrot:Device }")
    assert q.patterns[0].predicate.value.endswith("#type")


def test_default_prefixes_cover_both_cases():
    q = parse_query(
        "SELECT ?x WHERE { ?x PARROT:entails ?y . ?y a gdprtext:DataActivity }"
    )
    assert q.patterns[0].predicate == Iri("https://w3id.org/parrot#entails")


@pytest.mark.parametrize("text,keyword", [
    ("SELECT DISTINCT ?x WHERE { ?x a parrot:Device }", "DISTINCT"),
    ("SELECT ?x WHERE { ?x a parrot:Device } ORDER BY ?x", "ORDER"),
    ("SELECT ?x WHERE { ?x a parrot:Device . OPTIONAL { ?x rdfs:label ?l } }",
     "OPTIONAL"),
    ("SELECT ?x WHERE { ?x a parrot:Device } GROUP BY ?x", "GROUP"),
])
def test_unsupported_features_named(text, keyword):
    with pytest.raises(UnsupportedFeatureError) as e:
        parse_query(text)
    assert e.value.keyword == keyword


@pytest.mark.parametrize("text", [
    "WHERE { ?x a parrot:Device }",
    "SELECT WHERE { ?x a parrot:Device }",
    "SELECT ?x { ?x a parrot:Device }",
    "SELECT ?x WHERE { ?x a parrot:Device",
    "SELECT ?y WHERE { ?x a parrot:Device }",       # unused select var
    "SELECT ?x WHERE { ?x a parrot:Device . FILTER(?z = parrot:Camera) }",
])
def test_syntax_errors(text):
    with pytest.raises(QuerySyntaxError):
        parse_query(text)


def test_evaluate_deterministic_ordering():
    g = Graph()
    p = Iri("http://e/p")
    for name in ("c", "a", "b"):
        g.add(Triple(Iri(f"http://e/{name}"), p, Iri("http://e/o")))
    q = parse_query("SELECT ?s WHERE { ?s <http://e/p> <http://e/o> }")
    rows = evaluate(q, g).rows
    assert [r[0].value for r in rows] == ["http://e/a", "http://e/b", "http://e/c"]
    assert evaluate(q, g) == evaluate(q, g)


def test_projection_set_semantics():
    g = Graph()
    s = Iri("http://e/s")
    for i in range(3):
        g.add(Triple(s, Iri("http://e/p"), Iri(f"http://e/o{i}")))
    q = parse_query("SELECT ?s WHERE { ?s <http://e/p> ?o }")
    assert len(evaluate(q, g).rows) == 1


def test_empty_graph_empty_result():
    q = parse_query("SELECT ?x WHERE { ?x a parrot:Device }")
    assert evaluate(q, Graph()).rows == ()
    assert evaluate_oracle(q, Graph()).rows == ()


# ---------------------------------------------------------------------------
# Property suites


def _slot(var_pool, const_pool):
    return st.sampled_from(var_pool) | st.sampled_from(const_pool)


def queries():
    var_pool = [Var("x"), Var("y"), Var("z")]
    pattern = st.builds(
        TriplePattern,
        _slot(var_pool, IRIS),
        _slot(var_pool, PREDICATES),
        _slot(var_pool, IRIS + LITERALS),
    )
    def build(patterns, filter_iri, use_filter, op):
        pvars = sorted(
            {s for p in patterns for s in (p.subject, p.predicate, p.object)
             if isinstance(s, Var)},
            key=lambda v: v.name,
        )
        if not pvars:
            patterns = patterns + (TriplePattern(Var("x"), PREDICATES[0], Var("y")),)
            pvars = [Var("x"), Var("y")]
        filters = (Filter(pvars[0], op, filter_iri),) if use_filter else ()
        return Query(tuple(pvars), tuple(patterns), filters)

    return st.builds(
        build,
        st.lists(pattern, min_size=1, max_size=3).map(tuple),
        st.sampled_from(IRIS),
        st.booleans(),
        st.sampled_from(["=", "!="]),
    )


@given(graphs(max_size=20), queries())
@settings(max_examples=600, deadline=None)
def test_evaluate_equals_oracle(g, q):
    assert evaluate(q, g) == evaluate_oracle(q, g)


@given(graphs(max_size=20), queries())
@settings(max_examples=100, deadline=None)
def test_filters_hold_on_every_row(g, q):
    result = evaluate(q, g)
    index = {v: i for i, v in enumerate(result.variables)}
    for row in result.rows:
        for f in q.filters:
            if f.variable in index:
                assert f.holds(row[index[f.variable]])


@given(graphs(max_size=15), queries(), st.data())
@settings(max_examples=100, deadline=None)
def test_monotonicity_without_filters(g, q, data):
    q = Query(q.select_vars, q.patterns, ())
    before = set(evaluate(q, g).rows)
    from conftest import triples
    g2 = g.copy()
    g2.add(data.draw(triples()))
    after = set(evaluate(q, g2).rows)
    assert before <= after


@given(
    graphs(max_size=25),
    st.sampled_from(IRIS) | st.none(),
    st.sampled_from(PREDICATES) | st.none(),
    st.sampled_from(IRIS + LITERALS) | st.none(),
)
@settings(max_examples=1100, deadline=None)
def test_match_equals_linear_scan(g, s, p, o):
    expected = {
        t for t in g.triples
        if (s is None or t.subject == s)
        and (p is None or t.predicate == p)
        and (o is None or t.object == o)
    }
    assert set(g.match(s, p, o)) == expected


def test_shipped_query_oracle_equivalence_on_kb():
    graph = kb.load_builtin()
    text = (DATA / "corpus" / "queries" / "cq02.rq").read_text(encoding="utf-8")
    q = parse_query(text)
    result = evaluate(q, graph)
    assert result.rows
    assert result == evaluate_oracle(q, graph)
