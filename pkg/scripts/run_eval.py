#!/usr/bin/env python3
"""Replay the whole evaluation: corpus statistics, query regressions, and
the before/after pitfall profile of the knowledge base.

Run from anywhere after installing the package:

    python3 scripts/run_eval.py
"""

import sys
from collections import Counter

from pbd_advisor import corpus, kb, linter
from pbd_advisor.rdf import parse_turtle


def main() -> int:
    graph = kb.default_graph()
    records = corpus.load_corpus()
    stats, outcomes = corpus.run_corpus(records, graph)

    print(corpus.render_stats(stats, "markdown"))

    regressions = [o for o in outcomes if o.regression]
    print("## Query replay\n")
    answered = [o for o in outcomes if o.availability == "answered"]
    print(f"- answered queries replayed: {len(answered)}")
    print(f"- regressions: {len(regressions)}")
    for o in regressions:
        print(f"  - {o.record_id}: {o.regression}")
    print()

    print("## Pitfall profile\n")
    draft_text = (kb.data_dir() / "parrot_draft.ttl").read_text(encoding="utf-8")
    draft = parse_turtle(draft_text)
    for title, g, config in (
        ("draft", draft, linter.RAW_CONFIG),
        ("shipped", graph, linter.DEFAULT_CONFIG),
    ):
        findings = linter.examined_only(linter.lint(g, config))
        counts = Counter(f.pitfall for f in findings)
        summary = ", ".join(f"{p}={n}" for p, n in sorted(counts.items()))
        print(f"- {title}: {summary or 'no findings'}")
    print()

    return 2 if regressions else 0


if __name__ == "__main__":
    sys.exit(main())
