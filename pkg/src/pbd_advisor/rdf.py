"""In-memory RDF triples with a small Turtle reader/writer.

The graph keeps subject-, predicate-, and object-keyed indexes so pattern
matching can start from the most selective bound position.  The Turtle
grammar covered here is deliberately small: prefix declarations, prefixed
names, absolute IRIs, ``a``, predicate lists, object lists, plain/typed/
language-tagged string literals, comments, and labelled blank nodes.
"""

from __future__ import annotations

from dataclasses import dataclass


class TurtleSyntaxError(ValueError):
    """Raised on malformed Turtle input, with 1-based line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __post_init__(self):
        if not self.value:
            raise ValueError("IRI must be non-empty")
        if any(c.isspace() for c in self.value):
            raise ValueError(f"IRI contains whitespace: {self.value!r}")

    def __str__(self):
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    language: str | None = None
    datatype: Iri | None = None

    def __post_init__(self):
        if self.language is not None and self.datatype is not None:
            raise ValueError("literal cannot carry both language tag and datatype")


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str


Term = Iri | Literal | BlankNode


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Iri | BlankNode
    predicate: Iri
    object: Term

    def __post_init__(self):
        if not isinstance(self.predicate, Iri):
            raise ValueError("triple predicate must be an IRI")
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise ValueError("triple subject must be an IRI or blank node")


def term_sort_key(term: Term) -> tuple:
    """Total order over terms: IRIs, then blank nodes, then literals."""
    if isinstance(term, Iri):
        return (0, term.value)
    if isinstance(term, BlankNode):
        return (1, term.label)
    return (
        2,
        term.lexical,
        term.language or "",
        term.datatype.value if term.datatype else "",
    )


def triple_sort_key(t: Triple) -> tuple:
    return (term_sort_key(t.subject), term_sort_key(t.predicate), term_sort_key(t.object))


class Graph:
    """A set of triples with prefix table and per-position indexes."""

    def __init__(self, prefixes: dict[str, str] | None = None):
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self.warnings: list[str] = []
        self._triples: set[Triple] = set()
        self._by_subject: dict[Term, set[Triple]] = {}
        self._by_predicate: dict[Term, set[Triple]] = {}
        self._by_object: dict[Term, set[Triple]] = {}

    # -- container protocol

    def __len__(self):
        return len(self._triples)

    def __iter__(self):
        return iter(self._triples)

    def __contains__(self, triple: Triple):
        return triple in self._triples

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    @property
    def triples(self) -> frozenset[Triple]:
        return frozenset(self._triples)

    # -- mutation

    def add(self, triple: Triple) -> None:
        if triple in self._triples:
            return
        self._triples.add(triple)
        self._by_subject.setdefault(triple.subject, set()).add(triple)
        self._by_predicate.setdefault(triple.predicate, set()).add(triple)
        self._by_object.setdefault(triple.object, set()).add(triple)

    def update(self, triples) -> None:
        for t in triples:
            self.add(t)

    def copy(self) -> "Graph":
        g = Graph(self.prefixes)
        g.update(self._triples)
        return g

    # -- lookup

    def match(
        self,
        s: Iri | BlankNode | None = None,
        p: Iri | None = None,
        o: Term | None = None,
    ) -> list[Triple]:
        """Triples agreeing with every bound position; None is a wildcard."""
        candidates: set[Triple] | None = None
        if s is not None:
            candidates = self._by_subject.get(s, set())
        if p is not None:
            bucket = self._by_predicate.get(p, set())
            candidates = bucket if candidates is None else min(
                (candidates, bucket), key=len
            )
        if o is not None:
            bucket = self._by_object.get(o, set())
            candidates = bucket if candidates is None else min(
                (candidates, bucket), key=len
            )
        if candidates is None:
            candidates = self._triples
        out = [
            t
            for t in candidates
            if (s is None or t.subject == s)
            and (p is None or t.predicate == p)
            and (o is None or t.object == o)
        ]
        out.sort(key=triple_sort_key)
        return out

    def subjects(self, p: Iri | None = None, o: Term | None = None) -> list[Iri | BlankNode]:
        seen = []
        for t in self.match(None, p, o):
            if t.subject not in seen:
                seen.append(t.subject)
        return seen

    def objects(self, s: Iri | BlankNode | None = None, p: Iri | None = None) -> list[Term]:
        seen = []
        for t in self.match(s, p, None):
            if t.object not in seen:
                seen.append(t.object)
        return seen

    def value(self, s: Iri | BlankNode, p: Iri) -> Term | None:
        objs = self.objects(s, p)
        return objs[0] if objs else None

    def terms(self) -> list[Term]:
        """All distinct terms appearing in any position, sorted."""
        pool: set[Term] = set()
        for t in self._triples:
            pool.add(t.subject)
            pool.add(t.predicate)
            pool.add(t.object)
        return sorted(pool, key=term_sort_key)


def insert(graph: Graph, triple: Triple) -> Graph:
    graph.add(triple)
    return graph


# ---------------------------------------------------------------------------
# Turtle parsing


_LOCAL_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-")
_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", '"': '"', "\\": "\\"}
_UNESCAPES = {"\n": "\\n", "\t": "\\t", "\r": "\\r", '"': '\\"', "\\": "\\\\"}

RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _linecol(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None):
        line, col = self._linecol(pos)
        raise TurtleSyntaxError(message, line, col)

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == "#":
                nl = self.text.find("\n", self.pos)
                self.pos = len(self.text) if nl < 0 else nl + 1
            elif c.isspace():
                self.pos += 1
            else:
                break

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def take_iriref(self) -> str:
        # caller has verified '<'
        end = self.text.find(">", self.pos)
        if end < 0:
            self.error("unclosed IRI")
        raw = self.text[self.pos + 1 : end]
        if not raw or any(c.isspace() for c in raw):
            self.error("bad IRI")
        self.pos = end + 1
        return raw

    def take_name(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _LOCAL_CHARS:
            self.pos += 1
        return self.text[start : self.pos]

    def take_string(self) -> str:
        # caller has verified '"'
        self.pos += 1
        out = []
        while True:
            if self.pos >= len(self.text) or self.text[self.pos] == "\n":
                self.error("unclosed string literal")
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                return "".join(out)
            if c == "\\":
                esc = self.text[self.pos + 1 : self.pos + 2]
                if esc not in _ESCAPES:
                    self.error(f"unknown escape \\{esc}")
                out.append(_ESCAPES[esc])
                self.pos += 2
            else:
                out.append(c)
                self.pos += 1


def parse_turtle(text: str) -> Graph:
    """Parse a Turtle document into a fresh :class:`Graph`."""
    graph = Graph()
    sc = _Scanner(text)

    def resolve_prefixed(pos: int) -> Iri:
        label = sc.take_name()
        if sc.peek() != ":":
            sc.error("expected ':' in prefixed name", pos)
        sc.pos += 1
        local = sc.take_name()
        if label not in graph.prefixes:
            sc.error(f"unknown prefix {label!r}", pos)
        return Iri(graph.prefixes[label] + local)

    def parse_term(*, as_subject=False, as_predicate=False) -> Term:
        sc.skip_ws()
        pos = sc.pos
        c = sc.peek()
        if c == "":
            sc.error("unexpected end of input")
        if c == "<":
            return Iri(sc.take_iriref())
        if c == '"':
            if as_subject or as_predicate:
                sc.error("literal not allowed here", pos)
            lex = sc.take_string()
            if sc.peek() == "@":
                sc.pos += 1
                tag = sc.take_name()
                if not tag:
                    sc.error("empty language tag", pos)
                return Literal(lex, language=tag)
            if self_startswith("^^"):
                sc.pos += 2
                sc.skip_ws()
                if sc.peek() == "<":
                    return Literal(lex, datatype=Iri(sc.take_iriref()))
                return Literal(lex, datatype=resolve_prefixed(sc.pos))
            return Literal(lex)
        if c == "_":
            if as_predicate:
                sc.error("blank node not allowed as predicate", pos)
            sc.pos += 1
            if sc.peek() != ":":
                sc.error("expected ':' after '_'", pos)
            sc.pos += 1
            label = sc.take_name()
            if not label:
                sc.error("empty blank node label", pos)
            return BlankNode(label)
        name_start = sc.pos
        word = sc.take_name()
        if as_predicate and word == "a" and sc.peek() != ":":
            return RDF_TYPE
        sc.pos = name_start
        if word and sc.text[sc.pos + len(word) : sc.pos + len(word) + 1] == ":":
            return resolve_prefixed(pos)
        sc.error("expected term")

    def self_startswith(s: str) -> bool:
        return sc.text.startswith(s, sc.pos)

    while not sc.at_end():
        if self_startswith("@prefix"):
            sc.pos += len("@prefix")
            sc.skip_ws()
            label = sc.take_name()
            sc.expect(":")
            sc.skip_ws()
            if sc.peek() != "<":
                sc.error("expected namespace IRI")
            ns = sc.take_iriref()
            sc.expect(".")
            if label in graph.prefixes and graph.prefixes[label] != ns:
                graph.warnings.append(
                    f"prefix {label!r} redeclared from <{graph.prefixes[label]}> to <{ns}>"
                )
            graph.prefixes[label] = ns
            continue

        subject = parse_term(as_subject=True)
        while True:
            predicate = parse_term(as_predicate=True)
            while True:
                obj = parse_term()
                graph.add(Triple(subject, predicate, obj))
                sc.skip_ws()
                if sc.peek() == ",":
                    sc.pos += 1
                    continue
                break
            sc.skip_ws()
            if sc.peek() == ";":
                sc.pos += 1
                sc.skip_ws()
                if sc.peek() in ".;":
                    continue
                if sc.peek() == "" :
                    sc.error("unterminated statement")
                continue
            break
        sc.skip_ws()
        if sc.peek() != ".":
            sc.error("unterminated statement (missing '.')")
        sc.pos += 1

    return graph


# ---------------------------------------------------------------------------
# Turtle serialization


def _escape(lexical: str) -> str:
    return "".join(_UNESCAPES.get(c, c) for c in lexical)


def _compact(iri: Iri, prefixes: dict[str, str]) -> str:
    best = None
    for label, ns in prefixes.items():
        if iri.value.startswith(ns):
            local = iri.value[len(ns) :]
            if local and all(c in _LOCAL_CHARS for c in local):
                if best is None or len(ns) > len(prefixes[best[0]]):
                    best = (label, local)
    if best:
        return f"{best[0]}:{best[1]}"
    return f"<{iri.value}>"


def _term_text(term: Term, prefixes: dict[str, str]) -> str:
    if isinstance(term, Iri):
        return _compact(term, prefixes)
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    out = f'"{_escape(term.lexical)}"'
    if term.language:
        out += f"@{term.language}"
    elif term.datatype:
        out += f"^^{_compact(term.datatype, prefixes)}"
    return out


def serialize_turtle(graph: Graph) -> str:
    """Deterministic one-statement-per-triple Turtle rendering."""
    lines = [
        f"@prefix {label}: <{ns}> ."
        for label, ns in sorted(graph.prefixes.items())
    ]
    if lines:
        lines.append("")
    for t in sorted(graph.triples, key=triple_sort_key):
        lines.append(
            f"{_term_text(t.subject, graph.prefixes)} "
            f"{_term_text(t.predicate, graph.prefixes)} "
            f"{_term_text(t.object, graph.prefixes)} ."
        )
    return "\n".join(lines) + "\n"
