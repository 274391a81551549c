"""Corpus statistics: per-kind counts and per-sentence ratios."""

import json

import pytest

from nulltree import StatsReport, corpus_stats, format_ratio, get_profile
from nulltree.profiles import CHINESE, ENGLISH, KOREAN

from fixtures import FIG_ZH_GOLD, tree

_EN_CORPUS = [
    "(S (NP (NN a)) (VP (VB b) (NP (-NONE- *T*-1))))",
    "(S (SBAR (-NONE- 0) (S (NP (NN a)) (VP (VB b)))) (VP (VB c) (NP (-NONE- *T*-2))))",
    "(S (NP (-NONE- *)) (VP (TO to) (VB go)))",
    "(NP (QP ($ $) (CD 5)) (-NONE- *U*))",
    "(S (NP (NN a)) (VP (VB sees) (NP (-NONE- *T*-3))))",
]


def _en_report():
    return corpus_stats([tree(t) for t in _EN_CORPUS], ENGLISH)


def test_hand_tally():
    report = _en_report()
    assert report.sentence_count == 5
    assert report.counts == {"*T*": 3, "0": 1, "*": 1, "*U*": 1, "*RNR*": 0}
    assert report.unexpected == {}


def test_ratios():
    report = _en_report()
    assert report.ratio("*T*") == pytest.approx(0.6)
    assert report.ratio("0") == pytest.approx(0.2)
    assert report.ratio("*RNR*") == 0.0


def test_profile_kinds_always_present():
    report = corpus_stats([], ENGLISH)
    assert set(report.counts) == {"*T*", "*", "*U*", "0", "*RNR*"}
    assert report.sentence_count == 0
    assert report.ratio("*T*") == 0.0


def test_figure_sentence_singleton():
    report = corpus_stats([tree(FIG_ZH_GOLD)], CHINESE)
    assert report.counts["*PRO*"] == 1
    assert sum(report.counts.values()) == 1
    assert report.ratio("*PRO*") == 1.0


def test_unexpected_kinds_tracked_separately():
    t = tree("(S (NP (-NONE- *pro*)) (VP (VB go)))")
    report = corpus_stats([t], ENGLISH)
    assert "*pro*" not in report.counts
    assert report.unexpected == {"*pro*": 1}
    assert report.ratio("*pro*") == 1.0


def test_korean_profile_accepts_unknown_predicate():
    t = tree("(S (NP (NPN a)) (VP (-NONE- *?*)))")
    report = corpus_stats([t], KOREAN)
    assert report.counts["*?*"] == 1
    assert report.unexpected == {}


def test_format_ratio_two_significant_figures():
    assert format_ratio(0.6) == "0.6"
    assert format_ratio(1 / 3) == "0.33"
    assert format_ratio(1.0) == "1"
    assert format_ratio(0.0248) == "0.025"


def test_json_report():
    doc = json.loads(_en_report().to_json())
    assert doc["language"] == "english"
    assert doc["sentences"] == 5
    assert doc["kinds"]["*T*"] == {
        "count": 3,
        "ratio": 0.6,
        "ratio_display": "0.6",
    }
    assert doc["unexpected"] == {}


def test_tsv_report():
    lines = _en_report().to_tsv().splitlines()
    assert lines[0] == "kind\tcount\tper_sentence"
    assert "*T*\t3\t0.6" in lines
    assert lines[-1] == "sentences\t5\t"
    mixed = corpus_stats([tree("(S (NP (-NONE- *pro*)) (VP (VB go)))")], ENGLISH)
    assert "*pro* (unexpected)\t1\t1" in mixed.to_tsv().splitlines()


def test_get_profile_aliases_and_errors():
    assert get_profile("en") is ENGLISH
    assert get_profile("CHINESE") is CHINESE
    with pytest.raises(ValueError):
        get_profile("fr")
