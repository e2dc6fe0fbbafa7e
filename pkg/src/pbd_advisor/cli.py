"""Command-line entry points mirroring the HTTP service.

Every JSON-emitting command goes through the same payload builders as the
API, so piping a file through the CLI gives byte-identical output to
POSTing it at the service.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import api, corpus, kb
from .dfd import DfdSchemaError, RuleError, load_rules, parse_dfd
from .query import QuerySyntaxError, UnsupportedFeatureError
from .rdf import TurtleSyntaxError, parse_turtle
from .recommender import annotate as annotate_dfd
from .recommender import render_report, to_json


def _load_graph(kb_path: str | None):
    if kb_path is None:
        return kb.default_graph()
    graph = parse_turtle(Path(kb_path).read_text(encoding="utf-8"))
    kb.materialize_subclass_closure(graph)
    return graph


def _load_rules(rule_path: str | None, graph):
    if rule_path is None:
        text = (kb.data_dir() / "rules" / "default_rules.json").read_text(
            encoding="utf-8"
        )
    else:
        text = Path(rule_path).read_text(encoding="utf-8")
    return load_rules(text, graph)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Privacy-by-design advisor for IoT data-flow diagrams."""


@main.command()
@click.argument("dfd_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--kb-path", default=None, help="Alternative knowledge base (Turtle).")
@click.option("--rules-path", default=None, help="Alternative mapping rule file.")
@click.option("--format", "fmt", type=click.Choice(["json", "markdown"]),
              default="json", show_default=True)
def annotate(dfd_file, kb_path, rules_path, fmt):
    """Annotate a diagram with the privacy patterns each node entails."""
    graph = _load_graph(kb_path)
    try:
        rules = _load_rules(rules_path, graph)
        dfd = parse_dfd(Path(dfd_file).read_text(encoding="utf-8"))
    except (DfdSchemaError, RuleError) as e:
        _fail(str(e))
    report = annotate_dfd(dfd, graph, rules)
    click.echo(render_report(report, fmt), nl=False)


@main.command()
@click.argument("query_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--kb-path", default=None, help="Alternative knowledge base (Turtle).")
def query(query_file, kb_path):
    """Run a query file against the knowledge base."""
    graph = _load_graph(kb_path)
    try:
        payload = api.query_payload(
            Path(query_file).read_text(encoding="utf-8"), graph
        )
    except (QuerySyntaxError, UnsupportedFeatureError) as e:
        _fail(str(e))
    click.echo(to_json(payload), nl=False)


@main.command()
@click.argument("ttl_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--include-foreign", is_flag=True,
              help="Also show findings on elements outside the examined namespaces.")
@click.option("--fail-on", type=click.Choice(["critical", "important", "minor"]),
              default=None, help="Exit nonzero if any finding is at or above this severity.")
def lint(ttl_file, include_foreign, fail_on):
    """Scan an ontology document for common pitfalls."""
    try:
        payload = api.lint_payload(
            Path(ttl_file).read_text(encoding="utf-8"),
            include_foreign=include_foreign,
        )
    except TurtleSyntaxError as e:
        _fail(str(e))
    click.echo(to_json(payload), nl=False)
    if fail_on:
        threshold = {"critical": 0, "important": 1, "minor": 2}[fail_on]
        ranks = {"critical": 0, "important": 1, "minor": 2}
        if any(ranks[f["severity"]] <= threshold for f in payload["findings"]):
            sys.exit(2)


@main.group()
def cq():
    """Competency-question corpus commands."""


@cq.command("run")
@click.option("--format", "fmt", type=click.Choice(["json", "markdown"]),
              default="markdown", show_default=True)
def cq_run(fmt):
    """Replay the corpus against the shipped knowledge base."""
    graph = kb.default_graph()
    records = corpus.load_corpus()
    stats, outcomes = corpus.run_corpus(records, graph)
    regressions = [o for o in outcomes if o.regression]
    if fmt == "json":
        click.echo(to_json({
            "stats": stats.to_dict(),
            "regressions": [
                {"id": o.record_id, "message": o.regression} for o in regressions
            ],
        }), nl=False)
    else:
        click.echo(corpus.render_stats(stats, "markdown"))
        if regressions:
            click.echo("## Regressions\n")
            for o in regressions:
                click.echo(f"- {o.record_id}: {o.regression}")
    if regressions:
        sys.exit(2)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--kb-path", default=None, envvar="ADVISOR_KB_PATH",
              help="Alternative knowledge base (Turtle).")
@click.option("--rules-path", default=None, envvar="ADVISOR_RULES_PATH",
              help="Alternative mapping rule file.")
@click.option("--cors-origin", default=None, envvar="ADVISOR_CORS_ORIGIN",
              help="Origin allowed to call the API from a browser.")
def serve(host, port, kb_path, rules_path, cors_origin):
    """Serve the HTTP API."""
    import uvicorn

    graph = _load_graph(kb_path)
    rules = _load_rules(rules_path, graph)
    app = api.create_app(graph=graph, rules=rules, cors_origin=cors_origin)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
