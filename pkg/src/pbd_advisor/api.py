"""HTTP surface over the engine: annotate diagrams, run queries, browse the
pattern catalog, lint uploaded ontology documents.

The knowledge base and rule set are loaded once at startup and shared
read-only; /lint parses a request-scoped graph, so no request mutates
server state.  Response bodies are produced by the same serializers the
CLI uses, so both emit byte-identical JSON for identical inputs.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import kb, linter
from .dfd import DfdSchemaError, dfd_from_dict, load_rules
from .query import QuerySyntaxError, UnsupportedFeatureError, evaluate, parse_query
from .rdf import Graph, TurtleSyntaxError, parse_turtle
from .recommender import annotate, report_to_dict, to_json


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(content=to_json(payload), status_code=status_code,
                    media_type="application/json")


def _error(code: str, message: str, status: int, detail=None) -> Response:
    body = {"code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return _json_response({"error": body}, status)


def annotate_payload(doc: dict, graph: Graph, rules) -> dict:
    report = annotate(dfd_from_dict(doc), graph, rules)
    return report_to_dict(report)


def query_payload(text: str, graph: Graph) -> dict:
    result = evaluate(parse_query(text), graph)
    return {
        "vars": [v.name for v in result.variables],
        "rows": [[_term_to_json(t) for t in row] for row in result.rows],
    }


def _term_to_json(term) -> dict:
    kind = type(term).__name__.lower()
    if kind == "iri":
        return {"type": "iri", "value": term.value}
    if kind == "blanknode":
        return {"type": "bnode", "value": term.label}
    out = {"type": "literal", "value": term.lexical}
    if term.language:
        out["language"] = term.language
    if term.datatype:
        out["datatype"] = term.datatype.value
    return out


def lint_payload(text: str, config=linter.DEFAULT_CONFIG,
                 include_foreign: bool = False) -> dict:
    graph = parse_turtle(text)
    findings = linter.lint(graph, config)
    if not include_foreign:
        findings = linter.examined_only(findings)
    return {"findings": [f.to_dict() for f in findings]}


def patterns_payload(graph: Graph) -> list[dict]:
    return [_pattern_detail(graph, entry) for entry in kb.catalog(graph)]


def _pattern_detail(graph: Graph, entry: kb.PatternEntry) -> dict:
    doc = entry.to_dict()
    doc["global"] = entry.iri in {p.iri for p in kb.global_patterns(graph)}
    doc["chain"] = [
        {"element": link.element.value, "level": link.level.value,
         "strength": link.strength}
        for link in kb.explanation_chain(graph, entry.iri)
    ]
    comment = graph.value(entry.iri, kb.ns.RDFS_COMMENT)
    doc["comment"] = comment.lexical if comment is not None else None
    return doc


def create_app(graph: Graph | None = None, rules=None,
               cors_origin: str | None = None) -> FastAPI:
    graph = graph if graph is not None else kb.default_graph()
    if rules is None:
        rules_text = (kb.data_dir() / "rules" / "default_rules.json").read_text(
            encoding="utf-8"
        )
        rules = load_rules(rules_text, graph)

    app = FastAPI(title="pbd-advisor", docs_url=None, redoc_url=None)
    if cors_origin:
        app.add_middleware(
            CORSMiddleware, allow_origins=[cors_origin],
            allow_methods=["*"], allow_headers=["*"],
        )

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        return _error("internal", str(exc), 500)

    @app.post("/annotate")
    async def post_annotate(request: Request):
        try:
            doc = await request.json()
        except Exception:
            return _error("parse_error", "request body is not valid JSON", 400)
        try:
            return _json_response(annotate_payload(doc, graph, rules))
        except DfdSchemaError as e:
            return _error("schema_error", str(e), 400, detail={"path": e.path})

    @app.post("/query")
    async def post_query(request: Request):
        try:
            doc = await request.json()
        except Exception:
            return _error("parse_error", "request body is not valid JSON", 400)
        text = doc.get("query") if isinstance(doc, dict) else None
        if not isinstance(text, str):
            return _error("schema_error", "body must be {\"query\": \"...\"}", 400)
        try:
            return _json_response(query_payload(text, graph))
        except UnsupportedFeatureError as e:
            return _error("unsupported_feature", str(e), 400,
                          detail={"keyword": e.keyword})
        except QuerySyntaxError as e:
            return _error("parse_error", str(e), 400)

    @app.get("/patterns")
    async def get_patterns():
        return _json_response(patterns_payload(graph))

    @app.get("/patterns/{number}")
    async def get_pattern(number: int):
        try:
            entry = kb.pattern_by_number(graph, number)
        except kb.UnknownPatternError:
            return _error("unknown_entity", f"no pattern numbered {number}", 404)
        return _json_response(_pattern_detail(graph, entry))

    @app.post("/lint")
    async def post_lint(request: Request):
        text = (await request.body()).decode("utf-8", errors="replace")
        if not text.strip():
            return _error("parse_error", "empty document", 400)
        try:
            return _json_response(lint_payload(text))
        except TurtleSyntaxError as e:
            return _error("parse_error", str(e), 400,
                          detail={"line": e.line, "column": e.column})

    return app
