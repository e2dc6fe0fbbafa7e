"""The competency-question corpus and its replay against the knowledge base.

81 stakeholder questions from six IoT use-case workshops, each classified
by type/sub-type and Hoepman strategy tags.  Answered questions carry a
query file; replaying the corpus recomputes every aggregate table from the
records (counts are never stored) and flags regressions where the live KB
no longer reproduces a recorded answer.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from . import kb
from .kb import HoepmanTag
from .query import evaluate, parse_query
from .rdf import Graph, Iri

USE_CASES = ("health-care", "fitness-watch", "rtls", "park-monitoring",
             "smart-home", "drone-delivery")

#: Legal sub-types per type.  "Regulations" is the extra type one answer
#: list was re-classified into; it admits only the Control sub-type.
TAXONOMY: dict[str, tuple[str, ...]] = {
    "DataCollection": ("Location", "Personal Information", "Routine", "Photo"),
    "Device": ("Mobile Phone", "Camera", "Microphone", "Reading Sensor"),
    "Process": ("Share", "Access", "Third-Party", "Route", "Profile"),
    "Storage": ("Cloud", "Local"),
    "Dignity": ("Advantage", "Agreement", "Notify", "Control"),
    "Regulations": ("Control",),
}

VALID_STATUSES = ("Valid", "Duplicated", "Modified")
AVAILABILITIES = ("answered", "missing", "not-available")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CqRecord:
    id: str
    use_case: str
    text: str
    type: str
    sub_type: str
    status: str
    availability: str | None  # None: never classified in the replay
    expected_tags: frozenset[HoepmanTag]
    query_file: str | None

    @classmethod
    def from_dict(cls, doc: dict) -> "CqRecord":
        rid = doc.get("id", "<missing id>")
        if doc.get("use_case") not in USE_CASES:
            raise CorpusError(f"{rid}: unknown use case {doc.get('use_case')!r}")
        type_ = doc.get("type")
        if type_ not in TAXONOMY:
            raise CorpusError(f"{rid}: unknown type {type_!r}")
        sub_type = doc.get("sub_type")
        if sub_type not in TAXONOMY[type_]:
            raise CorpusError(
                f"{rid}: sub-type {sub_type!r} is not legal for type {type_}"
            )
        status = doc.get("status")
        if status not in VALID_STATUSES and not (
            isinstance(status, str) and status.startswith("Discarded")
        ):
            raise CorpusError(f"{rid}: unknown status {status!r}")
        availability = doc.get("availability")
        if availability is not None and availability not in AVAILABILITIES:
            raise CorpusError(f"{rid}: unknown availability {availability!r}")
        query_file = doc.get("query_file")
        if (availability == "answered") != (query_file is not None):
            raise CorpusError(
                f"{rid}: a query file is required exactly when availability is answered"
            )
        if not isinstance(doc.get("text"), str) or not doc["text"]:
            raise CorpusError(f"{rid}: missing question text")
        try:
            tags = frozenset(HoepmanTag.parse(t) for t in doc.get("expected_tags", []))
        except ValueError as e:
            raise CorpusError(f"{rid}: {e}") from e
        return cls(rid, doc["use_case"], doc["text"], type_, sub_type, status,
                   availability, tags, query_file)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "use_case": self.use_case,
            "text": self.text,
            "type": self.type,
            "sub_type": self.sub_type,
            "status": self.status,
            "availability": self.availability,
            "expected_tags": sorted(t.value for t in self.expected_tags),
            "query_file": self.query_file,
        }


@dataclass(frozen=True)
class CqOutcome:
    record_id: str
    availability: str | None
    rows: int
    answer_patterns: tuple[int, ...]  # catalog numbers
    regression: str | None = None


@dataclass(frozen=True)
class CorpusStats:
    per_use_case: dict[str, int]     # distinct question texts per use case
    per_type: dict[str, int]
    per_sub_type: dict[tuple[str, str], int]
    per_tag: dict[str, int]
    availability: dict[str, int]     # classified records only

    def to_dict(self) -> dict:
        return {
            "per_use_case": dict(sorted(self.per_use_case.items())),
            "per_type": dict(sorted(self.per_type.items())),
            "per_sub_type": {
                f"{t}/{s}": n for (t, s), n in sorted(self.per_sub_type.items())
            },
            "per_tag": {t.value: self.per_tag.get(t.value, 0) for t in HoepmanTag},
            "availability": dict(sorted(self.availability.items())),
        }


def default_corpus_dir() -> Path:
    return Path(str(kb.data_dir())) / "corpus"


def load_corpus(path: str | Path | None = None) -> list[CqRecord]:
    path = Path(path) if path else default_corpus_dir() / "cqs.jsonl"
    records = []
    seen: set[str] = set()
    for i, line in enumerate(path.read_text(encoding="utf-8").splitlines()):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as e:
            raise CorpusError(f"line {i + 1}: not valid JSON: {e}") from e
        record = CqRecord.from_dict(doc)
        if record.id in seen:
            raise CorpusError(f"duplicate record id {record.id}")
        seen.add(record.id)
        records.append(record)
    return records


def compute_stats(records: list[CqRecord]) -> CorpusStats:
    """A pure fold over the records; record order never matters.

    Per-use-case counts are over distinct question texts (two questions
    were asked twice in their own workshop); type, sub-type, and tag counts
    are over all records; availability counts cover classified records.
    """
    texts: dict[str, set[str]] = {}
    per_type: Counter[str] = Counter()
    per_sub_type: Counter[tuple[str, str]] = Counter()
    per_tag: Counter[str] = Counter()
    availability: Counter[str] = Counter()
    for r in records:
        texts.setdefault(r.use_case, set()).add(r.text)
        per_type[r.type] += 1
        per_sub_type[(r.type, r.sub_type)] += 1
        for tag in r.expected_tags:
            per_tag[tag.value] += 1
        if r.availability is not None:
            availability[r.availability] += 1
    return CorpusStats(
        per_use_case={uc: len(t) for uc, t in texts.items()},
        per_type=dict(per_type),
        per_sub_type=dict(per_sub_type),
        per_tag=dict(per_tag),
        availability=dict(availability),
    )


def _answer_patterns(record: CqRecord, graph: Graph,
                     query_dir: Path) -> tuple[list[int], int]:
    query = parse_query((query_dir / record.query_file).read_text(encoding="utf-8"))
    result = evaluate(query, graph)
    numbers: set[int] = set()
    for row in result.rows:
        for term in row:
            if isinstance(term, Iri):
                try:
                    numbers.add(kb.pattern_entry(graph, term).number)
                except kb.UnknownPatternError:
                    pass
    return sorted(numbers), len(result.rows)


def diff_tags(record: CqRecord, graph: Graph,
              query_dir: Path | None = None) -> set[HoepmanTag]:
    """Symmetric difference between the live answer's tags and the record's."""
    if record.availability != "answered":
        raise CorpusError(f"{record.id} is not an answered record")
    query_dir = query_dir or default_corpus_dir()
    numbers, _ = _answer_patterns(record, graph, query_dir)
    live: set[HoepmanTag] = set()
    for n in numbers:
        live |= kb.pattern_by_number(graph, n).tags
    return live ^ set(record.expected_tags)


def run_corpus(records: list[CqRecord], graph: Graph,
               query_dir: Path | None = None) -> tuple[CorpusStats, list[CqOutcome]]:
    query_dir = query_dir or default_corpus_dir()
    outcomes = []
    for r in records:
        if r.availability != "answered":
            outcomes.append(CqOutcome(r.id, r.availability, 0, ()))
            continue
        numbers, rows = _answer_patterns(r, graph, query_dir)
        regression = None
        if rows == 0:
            regression = "answered record returned no rows"
        else:
            mismatched = diff_tags(r, graph, query_dir)
            if mismatched:
                regression = (
                    "answer tags drifted: "
                    + ", ".join(sorted(t.value for t in mismatched))
                )
        outcomes.append(CqOutcome(r.id, r.availability, rows, tuple(numbers),
                                  regression))
    return compute_stats(records), outcomes


def render_stats(stats: CorpusStats, fmt: str = "markdown") -> str:
    if fmt == "json":
        from .recommender import to_json
        return to_json(stats.to_dict())
    if fmt != "markdown":
        raise ValueError(f"unknown stats format: {fmt}")
    doc = stats.to_dict()
    lines = ["# Corpus statistics", ""]
    for title, table in (
        ("Questions per use case (distinct texts)", doc["per_use_case"]),
        ("Records per type", doc["per_type"]),
        ("Records per sub-type", doc["per_sub_type"]),
        ("Records per strategy tag", doc["per_tag"]),
        ("Availability (classified records)", doc["availability"]),
    ):
        lines.append(f"## {title}")
        lines.append("")
        lines.append("| | Count |")
        lines.append("| --- | --- |")
        for key, count in table.items():
            lines.append(f"| {key} | {count} |")
        lines.append("")
    return "\n".join(lines)
