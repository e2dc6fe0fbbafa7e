"""Conjunctive triple-pattern queries with equality filters.

The grammar is the small slice of SPARQL the validation queries use:
``PREFIX`` declarations, ``SELECT`` with an explicit variable list, one
``WHERE`` block of triple patterns, the ``a`` keyword, and ``FILTER`` with
``=`` / ``!=`` against a ground IRI.  Anything else is rejected with an
error naming the unsupported keyword.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .namespaces import DEFAULT_PREFIXES, RDF_TYPE
from .rdf import Graph, Iri, Term, Triple, term_sort_key


class QuerySyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnsupportedFeatureError(ValueError):
    def __init__(self, keyword: str):
        super().__init__(f"unsupported query feature: {keyword}")
        self.keyword = keyword


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class TriplePattern:
    subject: Var | Iri
    predicate: Var | Iri
    object: Var | Term


@dataclass(frozen=True, slots=True)
class Filter:
    variable: Var
    comparator: str  # "=" or "!="
    value: Iri

    def holds(self, term: Term) -> bool:
        return (term == self.value) if self.comparator == "=" else (term != self.value)


@dataclass(frozen=True)
class Query:
    select_vars: tuple[Var, ...]
    patterns: tuple[TriplePattern, ...]
    filters: tuple[Filter, ...] = ()

    def pattern_vars(self) -> set[Var]:
        out: set[Var] = set()
        for p in self.patterns:
            for slot in (p.subject, p.predicate, p.object):
                if isinstance(slot, Var):
                    out.add(slot)
        return out


@dataclass(frozen=True)
class BindingSet:
    variables: tuple[Var, ...]
    rows: tuple[tuple[Term, ...], ...]

    def __len__(self):
        return len(self.rows)

    def as_dicts(self) -> list[dict[str, Term]]:
        return [
            {v.name: t for v, t in zip(self.variables, row)} for row in self.rows
        ]


_UNSUPPORTED = {
    "ASK", "CONSTRUCT", "DESCRIBE", "OPTIONAL", "UNION", "ORDER", "GROUP",
    "LIMIT", "OFFSET", "DISTINCT", "REDUCED", "MINUS", "BIND", "VALUES",
    "SERVICE", "GRAPH", "HAVING", "EXISTS", "INSERT", "DELETE", "FROM",
}

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<comment>\#[^\n]*) |
        (?P<iriref><[^<>\s]*>) |
        (?P<var>\?[A-Za-z_][A-Za-z0-9_]*) |
        (?P<punct>[{}().;,]|!=|=|\^\^) |
        (?P<word>[A-Za-z_][A-Za-z0-9_\-]*(?::[A-Za-z0-9_\-]*)?|:[A-Za-z0-9_\-]+)
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise QuerySyntaxError(f"unexpected character {text[pos]!r}", pos)
        pos = m.end()
        kind = m.lastgroup
        if kind == "comment":
            continue
        tokens.append((kind, m.group(kind), m.start(kind)))
    return tokens


class _TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", -1)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message):
        kind, value, pos = self.peek()
        raise QuerySyntaxError(message, pos if pos >= 0 else 0)


def parse_query(text: str, prefixes: dict[str, str] | None = None) -> Query:
    """Parse the supported SELECT grammar into a :class:`Query`."""
    prefixes = dict(DEFAULT_PREFIXES if prefixes is None else prefixes)
    ts = _TokenStream(_tokenize(text))

    def is_kw(tok, word):
        return tok[0] == "word" and tok[1].upper() == word

    def check_supported(tok):
        if tok[0] == "word" and ":" not in tok[1] and tok[1].upper() in _UNSUPPORTED:
            raise UnsupportedFeatureError(tok[1].upper())

    def take_iri() -> Iri:
        kind, value, pos = ts.next()
        if kind == "iriref":
            return Iri(value[1:-1])
        if kind == "word" and ":" in value:
            label, _, local = value.partition(":")
            if label not in prefixes:
                raise QuerySyntaxError(f"unknown prefix {label!r}", pos)
            return Iri(prefixes[label] + local)
        raise QuerySyntaxError("expected IRI", pos)

    # PREFIX declarations
    while is_kw(ts.peek(), "PREFIX"):
        ts.next()
        kind, value, pos = ts.next()
        if kind != "word" or not value.endswith(":"):
            raise QuerySyntaxError("expected prefix label", pos)
        kind2, value2, pos2 = ts.next()
        if kind2 != "iriref":
            raise QuerySyntaxError("expected namespace IRI", pos2)
        prefixes[value[:-1]] = value2[1:-1]

    check_supported(ts.peek())
    if not is_kw(ts.peek(), "SELECT"):
        ts.error("expected SELECT")
    ts.next()

    select_vars: list[Var] = []
    while ts.peek()[0] == "var":
        select_vars.append(Var(ts.next()[1][1:]))
    if not select_vars:
        check_supported(ts.peek())
        ts.error("expected at least one select variable")

    check_supported(ts.peek())
    if not is_kw(ts.peek(), "WHERE"):
        ts.error("expected WHERE")
    ts.next()
    if ts.next()[1] != "{":
        ts.error("expected '{'")

    patterns: list[TriplePattern] = []
    filters: list[Filter] = []

    def take_slot(*, predicate=False):
        tok = ts.peek()
        if tok[0] == "var":
            ts.next()
            return Var(tok[1][1:])
        if tok[0] == "word" and tok[1] == "a" and predicate:
            ts.next()
            return RDF_TYPE
        check_supported(tok)
        return take_iri()

    while True:
        tok = ts.peek()
        if tok[1] == "}":
            ts.next()
            break
        if tok[0] == "eof":
            ts.error("unterminated WHERE block")
        if is_kw(tok, "FILTER"):
            ts.next()
            if ts.next()[1] != "(":
                ts.error("expected '(' after FILTER")
            vtok = ts.next()
            if vtok[0] != "var":
                raise QuerySyntaxError("FILTER must compare a variable", vtok[2])
            op = ts.next()
            if op[1] not in ("=", "!="):
                raise QuerySyntaxError("FILTER supports only = and !=", op[2])
            value = take_iri()
            if ts.next()[1] != ")":
                ts.error("expected ')'")
            filters.append(Filter(Var(vtok[1][1:]), op[1], value))
        else:
            s = take_slot()
            p = take_slot(predicate=True)
            o = take_slot()
            patterns.append(TriplePattern(s, p, o))
        if ts.peek()[1] in (".", ";"):
            ts.next()

    tok = ts.peek()
    if tok[0] != "eof":
        check_supported(tok)
        ts.error(f"unexpected trailing input {tok[1]!r}")

    query = Query(tuple(select_vars), tuple(patterns), tuple(filters))
    in_patterns = query.pattern_vars()
    for v in query.select_vars:
        if v not in in_patterns:
            raise QuerySyntaxError(f"select variable ?{v.name} not used in any pattern", 0)
    for f in query.filters:
        if f.variable not in in_patterns:
            raise QuerySyntaxError(f"filter variable ?{f.variable.name} not used in any pattern", 0)
    return query


# ---------------------------------------------------------------------------
# Evaluation


def _project(query: Query, solutions, graph_order=True) -> BindingSet:
    rows = {tuple(sol[v] for v in query.select_vars) for sol in solutions}
    ordered = sorted(rows, key=lambda row: tuple(term_sort_key(t) for t in row))
    return BindingSet(query.select_vars, tuple(ordered))


def _passes_filters(query: Query, sol: dict[Var, Term]) -> bool:
    return all(f.holds(sol[f.variable]) for f in query.filters)


def evaluate(query: Query, graph: Graph) -> BindingSet:
    """Index-backed join over the patterns, left to right as written."""
    solutions: list[dict[Var, Term]] = [{}]
    for pattern in query.patterns:
        next_solutions = []
        for sol in solutions:
            def bound(slot):
                if isinstance(slot, Var):
                    return sol.get(slot)
                return slot

            s, p, o = bound(pattern.subject), bound(pattern.predicate), bound(pattern.object)
            for t in graph.match(s, p, o):
                ext = dict(sol)
                ok = True
                for slot, value in (
                    (pattern.subject, t.subject),
                    (pattern.predicate, t.predicate),
                    (pattern.object, t.object),
                ):
                    if isinstance(slot, Var):
                        if slot in ext and ext[slot] != value:
                            ok = False
                            break
                        ext[slot] = value
                if ok:
                    next_solutions.append(ext)
        solutions = next_solutions
        if not solutions:
            break
    solutions = [s for s in solutions if _passes_filters(query, s)]
    return _project(query, solutions)


def evaluate_oracle(query: Query, graph: Graph) -> BindingSet:
    """Brute-force enumeration over all term assignments.

    Deliberately independent of :func:`evaluate`: every variable ranges over
    every term of the graph, and each candidate assignment is checked
    against every pattern and filter by set membership.
    """
    variables = sorted(query.pattern_vars(), key=lambda v: v.name)
    universe = graph.terms()
    triples = graph.triples
    solutions = []
    for combo in itertools.product(universe, repeat=len(variables)):
        sol = dict(zip(variables, combo))

        def ground(slot):
            return sol[slot] if isinstance(slot, Var) else slot

        ok = True
        for p in query.patterns:
            s, pr, o = ground(p.subject), ground(p.predicate), ground(p.object)
            if not isinstance(s, (Iri,)) and not hasattr(s, "label"):
                ok = False
                break
            if not isinstance(pr, Iri):
                ok = False
                break
            try:
                t = Triple(s, pr, o)
            except ValueError:
                ok = False
                break
            if t not in triples:
                ok = False
                break
        if ok and _passes_filters(query, sol):
            solutions.append(sol)
    if not query.patterns:
        solutions = []
    return _project(query, solutions)
