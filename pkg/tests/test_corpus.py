import random

import pytest

from pbd_advisor import corpus


@pytest.fixture(scope="module")
def records():
    return corpus.load_corpus()


@pytest.fixture(scope="module")
def stats(records):
    return corpus.compute_stats(records)


def test_corpus_size_and_unique_ids(records):
    assert len(records) == 81
    assert len({r.id for r in records}) == 81


def test_per_use_case_distinct_texts(stats):
    assert stats.per_use_case == {
        "health-care": 11, "fitness-watch": 30, "rtls": 10,
        "park-monitoring": 9, "smart-home": 10, "drone-delivery": 9,
    }


def test_per_type_counts(stats):
    assert stats.per_type == {
        "DataCollection": 22, "Device": 8, "Process": 20,
        "Storage": 5, "Dignity": 25, "Regulations": 1,
    }


def test_sub_type_counts_sum_to_type_counts(stats):
    for type_, total in stats.per_type.items():
        assert sum(
            n for (t, _), n in stats.per_sub_type.items() if t == type_
        ) == total
    assert stats.per_sub_type[("Storage", "Cloud")] == 4
    assert stats.per_sub_type[("Storage", "Local")] == 1


def test_per_tag_counts(stats):
    assert stats.per_tag == {
        "Minimise": 22, "Hide": 21, "Separate": 16, "Aggregate": 23,
        "Inform": 65, "Control": 52, "Enforce": 10, "Demonstrate": 36,
    }


def test_availability_counts_skip_unclassified(stats, records):
    assert stats.availability == {"answered": 45, "missing": 14,
                                  "not-available": 21}
    assert sum(1 for r in records if r.availability is None) == 1


def test_stats_are_order_invariant(records, stats):
    shuffled = records[:]
    random.Random(7).shuffle(shuffled)
    assert corpus.compute_stats(shuffled) == stats


def test_empty_corpus_gives_empty_stats():
    empty = corpus.compute_stats([])
    assert empty.per_use_case == {}
    assert empty.per_type == {}
    assert empty.availability == {}


def _base_doc():
    return {
        "id": "cq99", "use_case": "smart-home",
        "text": "Who can see my data?", "type": "Dignity",
        "sub_type": "Control", "status": "Valid",
        "availability": "missing", "expected_tags": ["Inform"],
        "query_file": None,
    }


@pytest.mark.parametrize("patch", [
    {"use_case": "factory"},
    {"type": "Cloud"},
    {"type": "Device", "sub_type": "Cloud"},
    {"type": "Regulations", "sub_type": "Notify"},
    {"status": "Pending"},
    {"availability": "unknown"},
    {"availability": "answered"},            # answered without a query file
    {"query_file": "cq99.rq"},               # query file without answered
    {"text": ""},
    {"expected_tags": ["Obfuscate"]},
])
def test_record_validation_errors(patch):
    doc = {**_base_doc(), **patch}
    with pytest.raises(corpus.CorpusError):
        corpus.CqRecord.from_dict(doc)


def test_record_roundtrip():
    record = corpus.CqRecord.from_dict(_base_doc())
    assert corpus.CqRecord.from_dict(record.to_dict()) == record


def test_regulations_admits_only_control():
    assert corpus.TAXONOMY["Regulations"] == ("Control",)


def test_replay_has_zero_regressions(records, graph):
    stats, outcomes = corpus.run_corpus(records, graph)
    assert [o for o in outcomes if o.regression] == []
    answered = [o for o in outcomes if o.availability == "answered"]
    assert len(answered) == 45
    assert all(o.rows > 0 and o.answer_patterns for o in answered)


def test_diff_tags_empty_on_shipped_answers(records, graph):
    answered = [r for r in records if r.availability == "answered"]
    for r in answered[:5]:
        assert corpus.diff_tags(r, graph) == set()
    with pytest.raises(corpus.CorpusError):
        corpus.diff_tags(next(r for r in records if r.availability == "missing"),
                         graph)


def test_render_stats_formats(stats):
    text = corpus.render_stats(stats)
    assert "| fitness-watch | 30 |" in text
    assert corpus.render_stats(stats, "json").endswith("\n")
    with pytest.raises(ValueError):
        corpus.render_stats(stats, "csv")
