"""Null-element Parseval: mention extraction, alignment, corpus scoring."""

import json

import pytest

from nulltree import (
    NullMention,
    extract_mentions,
    score_corpus,
    strip_all,
)
from nulltree.evaluate import REPORT_SCHEMA, align_terminals
from nulltree.linearize import MalformedReport
from nulltree.tree import NullKind

from fixtures import FIG_EN_GOLD, FIG_ZH_GOLD, tree


def test_mention_for_english_sentence():
    mentions = extract_mentions(tree(FIG_EN_GOLD))
    assert mentions == [NullMention(NullKind.STAR, 3, "NP", ("SBJ",))]


def test_mention_for_chinese_sentence():
    mentions = extract_mentions(tree(FIG_ZH_GOLD))
    assert mentions == [NullMention(NullKind.BIG_PRO, 3, "NP", ("SBJ",))]


def test_mention_anchor_counts_overt_terminals_only():
    t = tree("(S (NP (-NONE- *T*-1)) (NP (NN a)) (VP (VB b) (NP (-NONE- *))))")
    mentions = extract_mentions(t)
    assert [(m.kind, m.anchor) for m in mentions] == [
        (NullKind.TRACE, 0),
        (NullKind.STAR, 2),
    ]


def test_mention_category_is_parent_of_null_preterminal():
    t = tree("(SBAR (-NONE- 0) (S (NP (NN a)) (VP (VB b))))")
    m, = extract_mentions(t)
    assert m.category == "SBAR"
    root_null, = extract_mentions(tree("(-NONE- *pro*)"))
    assert root_null.category == "-NONE-"


def test_unlabeled_key_ignores_category_labeled_does_not():
    a = NullMention(NullKind.STAR, 3, "NP", ("SBJ",))
    b = NullMention(NullKind.STAR, 3, "NP", ())
    assert a.key(False) == b.key(False)
    assert a.key(True) != b.key(True)


def test_align_terminals_by_count_not_text():
    gold = tree("(S (NP (NN dog)) (VP (VB ran)))")
    dummy = tree("(S (NP (NN w_1)) (VP (VB w_2)))")
    assert align_terminals(gold, dummy) == [(0, 0), (1, 1)]
    longer = tree("(S (NP (NN a)) (VP (VB b) (NP (NN c))))")
    assert align_terminals(gold, longer) is None


def test_identity_scores_100():
    for text in (FIG_EN_GOLD, FIG_ZH_GOLD):
        t = tree(text)
        report = score_corpus([t], [t])
        assert report.overall.f1 == 100.0
        report = score_corpus([t], [t], labeled=True)
        assert report.overall.f1 == 100.0


def test_coindex_differences_are_ignored():
    gold = tree("(S (NP (NN a)) (VP (VB b) (NP (-NONE- *T*-1))))")
    pred = tree("(S (NP (NN a)) (VP (VB b) (NP (-NONE- *T*-9))))")
    assert score_corpus([gold], [pred]).overall.f1 == 100.0


def test_anchor_shift_zeroes_the_kind():
    gold = tree("(S (NP (NN a)) (VP (VB b) (NP (NN c)) (NP (-NONE- *))))")
    pred = tree("(S (NP (NN a)) (VP (VB b) (NP (-NONE- *)) (NP (NN c))))")
    report = score_corpus([gold], [pred])
    assert report.per_kind["*"].f1 == 0.0
    assert report.overall.tp == 0


# The ten-sentence confusion corpus, scored by hand.  Unlabeled, skips not
# penalized: tp 3 (trace x2, star), fp 3 (star, small pro, unit),
# fn 4 (star, big pro, zero, trace); 8 scored, 2 skipped.
_GOLD = [
    "(S (NP (NN a)) (VP (VB b) (NP (-NONE- *T*-1))))",
    "(S (NP (NN a)) (VP (VB b) (NP (NN c)) (NP (-NONE- *))))",
    "(IP (NP (NR x)) (IP (NP (-NONE- *PRO*)) (VP (VV c))))",
    "(SBAR (-NONE- 0) (S (NP (NN a)) (VP (VB b))))",
    "(NP (QP ($ $) (CD 5)))",
    "(S (NP (-NONE- *T*-1)) (VP (VB b)))",
    "(IP (NP (-NONE- *pro*)) (VP (VV a) (NP (NN b))))",
    "(S (NP (NN a)) (VP (VB b)))",
    "(VP (NP (-NONE- *T*-1)) (NP (-NONE- *T*-2)) (VB a))",
    "(S (NP-SBJ (-NONE- *)) (VP (TO to) (VB go)))",
]

_PRED = [
    "(S (NP (NN a)) (VP (VB b) (NP (-NONE- *T*-9))))",
    "(S (NP (NN a)) (VP (VB b) (NP (-NONE- *)) (NP (NN c))))",
    "(IP (NP (NR x)) (IP (NP (-NONE- *pro*)) (VP (VV c))))",
    "(SBAR (S (NP (NN a)) (VP (VB b))))",
    "(NP (QP ($ $) (CD 5)) (-NONE- *U*))",
    MalformedReport("unbalanced-open", 4, "(VP never closed"),
    "(IP (VP (VV a) (NP (NN b)) (NP (NN c))))",
    "(S (NP (NN a)) (VP (VB b)))",
    "(VP (NP (-NONE- *T*-1)) (VB a))",
    "(S (NP (-NONE- *)) (VP (TO to) (VB go)))",
]


def _corpus():
    gold = [tree(t) for t in _GOLD]
    pred = [tree(p) if isinstance(p, str) else p for p in _PRED]
    return gold, pred


def test_confusion_corpus_unlabeled():
    gold, pred = _corpus()
    report = score_corpus(gold, pred)
    assert (report.overall.tp, report.overall.fp, report.overall.fn) == (3, 3, 4)
    assert report.overall.precision == pytest.approx(50.0)
    assert report.overall.recall == pytest.approx(300 / 7)
    assert report.overall.f1 == pytest.approx(30000 / 650)
    assert report.sentences_total == 10
    assert report.sentences_scored == 8
    assert report.sentences_skipped == 2
    assert report.skip_reasons == {"unbalanced-open": 1, "terminal-count": 1}
    trace = report.per_kind["*T*"]
    assert (trace.tp, trace.fp, trace.fn) == (2, 0, 1)
    assert trace.f1 == pytest.approx(80.0)
    star = report.per_kind["*"]
    assert (star.tp, star.fp, star.fn) == (1, 1, 1)
    assert report.per_kind["*PRO*"].f1 == 0.0
    assert report.per_kind["0"].f1 == 0.0


def test_confusion_corpus_penalize_skips():
    gold, pred = _corpus()
    report = score_corpus(gold, pred, penalize_skips=True)
    assert (report.overall.tp, report.overall.fp, report.overall.fn) == (3, 3, 6)
    assert report.overall.f1 == pytest.approx(40.0)
    # Skip accounting itself is unchanged.
    assert report.sentences_skipped == 2


def test_confusion_corpus_labeled():
    gold, pred = _corpus()
    report = score_corpus(gold, pred, labeled=True)
    assert (report.overall.tp, report.overall.fp, report.overall.fn) == (2, 4, 5)


def test_labeled_never_beats_unlabeled():
    gold, pred = _corpus()
    for g, p in zip(gold, pred):
        unlabeled = score_corpus([g], [p]).overall.f1
        labeled = score_corpus([g], [p], labeled=True).overall.f1
        assert labeled <= unlabeled


def test_exclude_kinds():
    gold, pred = _corpus()
    report = score_corpus(gold, pred, exclude_kinds=["*T*"])
    assert "*T*" not in report.per_kind
    assert (report.overall.tp, report.overall.fp, report.overall.fn) == (1, 3, 3)
    assert report.excluded_kinds == ("*T*",)


def test_vacuous_corpus_is_perfect():
    t = tree("(S (NP (NN a)) (VP (VB b)))")
    report = score_corpus([t], [t])
    assert (report.overall.tp, report.overall.fp, report.overall.fn) == (0, 0, 0)
    assert report.overall.precision == 100.0
    assert report.overall.recall == 100.0


def test_length_mismatch_raises():
    t = tree("(S (NP (NN a)) (VP (VB b)))")
    with pytest.raises(ValueError):
        score_corpus([t, t], [t])


def test_restoration_scores_against_stripped_gold():
    gold = tree(FIG_EN_GOLD)
    report = score_corpus([gold], [strip_all(gold)])
    assert report.overall.f1 == 0.0
    assert report.overall.fn == 1


def test_json_report_schema_and_determinism():
    gold, pred = _corpus()
    report = score_corpus(gold, pred)
    doc = json.loads(report.to_json())
    assert doc["schema"] == REPORT_SCHEMA
    assert doc["sentences"]["scored"] == 8
    assert doc["overall"]["tp"] == 3
    assert doc["per_kind"]["*T*"]["f1"] == 80.0
    assert report.to_json() == score_corpus(gold, pred).to_json()


def test_tsv_report_has_overall_row():
    gold, pred = _corpus()
    lines = score_corpus(gold, pred).to_tsv().splitlines()
    assert lines[0].startswith("kind\t")
    assert lines[-1].startswith("overall\t")
    assert any(line.startswith("*T*\t") for line in lines)
