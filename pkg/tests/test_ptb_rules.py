"""English restoration rules, pass by pass and end to end."""

from nulltree import (
    overt_terminals,
    print_tree,
    restore_ptb,
    score_corpus,
    strip_all,
)
from nulltree.profiles import ENGLISH
from nulltree.ptb_rules import (
    insert_empty_unit,
    insert_np_star,
    insert_null_complementizer,
    insert_wh_phrase,
    insert_wh_trace,
)
from nulltree.tree import null_leaves

from fixtures import FIG_EN_BARE, FIG_EN_GOLD, tree


def _p(t):
    return print_tree(t)


# ------------------------------------------------------------------ *U*


def test_unit_after_dollar_qp():
    t = tree("(NP (QP ($ $) (CD 1) (CD million)))")
    assert _p(insert_empty_unit(t)) == (
        "(NP (QP ($ $) (CD 1) (CD million)) (-NONE- *U*))"
    )


def test_unit_requires_dollar_then_cd():
    for text in ("(NP (QP (CD 1) (CD million)))",     # no $
                 "(NP (QP (CD 1) ($ $)))",            # $ after CD
                 "(NP (QP ($ $) (JJ much)))"):        # no CD after $
        t = tree(text)
        assert insert_empty_unit(t) == t


def test_unit_two_sites_two_insertions():
    t = tree("(NP (NP (QP ($ $) (CD 3))) (CC and) (NP (QP ($ $) (CD 5))))")
    out = insert_empty_unit(t)
    assert _p(out) == ("(NP (NP (QP ($ $) (CD 3)) (-NONE- *U*)) (CC and) "
                       "(NP (QP ($ $) (CD 5)) (-NONE- *U*)))")


def test_unit_idempotent():
    t = tree("(NP (QP ($ $) (CD 1) (CD million)))")
    once = insert_empty_unit(t)
    assert insert_empty_unit(once) == once


# ------------------------------------------------------------ WH phrase


def test_wh_phrase_reason_head_gets_whadvp():
    t = tree("(NP (NP (DT the) (NN reason)) (SBAR (S (NP (PRP I)) (VP (VBD left)))))")
    out = insert_wh_phrase(t)
    sbar = out.children[1]
    assert sbar.children[0].category == "WHADVP"
    assert _p(sbar.children[0]) == "(WHADVP (-NONE- 0))"


def test_wh_phrase_plural_head_folds():
    t = tree("(NP (NP (DT the) (NNS ways)) (SBAR (S (NP (PRP I)) (VP (VBD left)))))")
    assert insert_wh_phrase(t).children[1].children[0].category == "WHADVP"


def test_wh_phrase_other_head_gets_whnp():
    t = tree("(NP (NP (DT the) (NN man)) (SBAR (S (NP (PRP I)) (VP (VBD saw)))))")
    out = insert_wh_phrase(t)
    assert out.children[1].children[0].category == "WHNP"


def test_wh_phrase_needs_np_relative_context():
    # SBAR under VP: the null-complementizer rule's territory, not this one.
    t = tree("(VP (VBP know) (SBAR (S (NP (PRP he)) (VP (VBD ran)))))")
    assert insert_wh_phrase(t) == t


def test_wh_phrase_skips_complementized_sbar():
    t = tree("(NP (NP (DT the) (NN fact)) (SBAR (IN that) (S (NP (PRP he)) "
             "(VP (VBD ran)))))")
    assert insert_wh_phrase(t) == t


# ------------------------------------------------- null complementizer


def test_null_complementizer_under_vp():
    t = tree("(VP (VBP know) (SBAR (S (NP (PRP he)) (VP (VBD ran)))))")
    out = insert_null_complementizer(t)
    assert _p(out.children[1]) == "(SBAR (-NONE- 0) (S (NP (PRP he)) (VP (VBD ran))))"


def test_null_complementizer_skips_overt_that():
    t = tree("(VP (VBP know) (SBAR (IN that) (S (NP (PRP he)) (VP (VBD ran)))))")
    assert insert_null_complementizer(t) == t


def test_null_complementizer_leaves_relatives_alone():
    t = tree("(NP (NP (NN man)) (SBAR (S (NP (PRP I)) (VP (VBD saw)))))")
    assert insert_null_complementizer(t) == t


# ------------------------------------------------------------ WH trace


def test_trace_subject_relative():
    t = tree("(NP (NP (DT the) (NN man)) (SBAR (WHNP (WP who)) (S (VP (VBD ran)))))")
    out = insert_wh_trace(t)
    sbar = out.children[1]
    assert sbar.children[0].label.identity == 1
    assert _p(sbar.children[1]) == "(S (NP (-NONE- *T*-1)) (VP (VBD ran)))"


def test_trace_object_relative():
    t = tree("(SBAR (WHNP (WP whom)) (S (NP (PRP I)) (VP (VBD saw))))")
    out = insert_wh_trace(t)
    assert _p(out.children[1].children[1]) == "(VP (VBD saw) (NP (-NONE- *T*-1)))"


def test_trace_stranded_preposition():
    t = tree("(SBAR (WHNP (WDT which)) (S (NP (PRP I)) "
             "(VP (VBD looked) (PP (IN at)))))")
    out = insert_wh_trace(t)
    pp = out.children[1].children[1].children[1]
    assert _p(pp) == "(PP (IN at) (NP (-NONE- *T*-1)))"


def test_trace_last_conjunct():
    t = tree("(SBAR (WHNP (WP what)) (S (NP (PRP I)) "
             "(VP (VP (VBD bought)) (CC and) (VP (VBD kept)))))")
    out = insert_wh_trace(t)
    last = out.children[1].children[1].children[2]
    assert _p(last) == "(VP (VBD kept) (NP (-NONE- *T*-1)))"


def test_trace_descends_adjp():
    t = tree("(SBAR (WHNP (WP what)) (S (NP (PRP he)) "
             "(VP (VBZ is) (ADJP (JJ worth)))))")
    out = insert_wh_trace(t)
    adjp = out.children[1].children[1].children[1]
    assert adjp.category == "ADJP"
    assert _p(adjp.children[-1]) == "(NP (-NONE- *T*-1))"


def test_trace_infinitival_relative_replaces_empty_subject():
    # The null * subject was placed by an earlier restoration stage; with an
    # object present the trace belongs in subject position instead.
    t = tree("(NP (NP (DT a) (NN man)) (SBAR (WHNP (-NONE- 0)) "
             "(S (NP (-NONE- *)) (VP (TO to) (VP (VB do) (NP (DT the) (NN job)))))))")
    out = insert_wh_trace(t)
    s = out.children[1].children[1]
    assert _p(s) == ("(S (NP (-NONE- *T*-1)) (VP (TO to) "
                     "(VP (VB do) (NP (DT the) (NN job)))))")
    assert out.children[1].children[0].label.identity == 1


def test_trace_modal_relative_lands_in_subject():
    t = tree("(NP (NP (DT the) (NN plan)) (SBAR (WHNP (WDT which)) "
             "(S (VP (MD could) (VP (VB work))))))")
    out = insert_wh_trace(t)
    s = out.children[1].children[1]
    assert _p(s.children[0]) == "(NP (-NONE- *T*-1))"


def test_trace_whadvp_appends_advp_at_end():
    t = tree("(NP (NP (DT the) (NN reason)) (SBAR (WHADVP (WRB why)) "
             "(S (NP (PRP I)) (VP (VBD left)))))")
    out = insert_wh_trace(t)
    vp = out.children[1].children[1].children[1]
    assert _p(vp) == "(VP (VBD left) (ADVP (-NONE- *T*-1)))"


def test_trace_skips_sbar_without_wh():
    t = tree("(SBAR (IN that) (S (NP (PRP he)) (VP (VBD ran))))")
    assert insert_wh_trace(t) == t


def test_trace_skips_already_coindexed_filler():
    t = tree("(SBAR (WHNP-1 (WP who)) (S (NP (-NONE- *T*-1)) (VP (VBD ran))))")
    assert insert_wh_trace(t) == t


def test_trace_fresh_index_avoids_existing():
    t = tree("(S (NP-2 (NN deal)) (SBAR (WHNP (WP who)) (S (VP (VBD ran)))))")
    out = insert_wh_trace(t)
    assert out.children[1].children[0].label.identity == 3


# ------------------------------------------------------------------ NP *


def test_star_passive_after_be():
    t = tree("(S (NP (DT the) (NN car)) (VP (VBD was) (VP (VBN sold))))")
    out = insert_np_star(t)
    assert _p(out.children[1].children[1]) == "(VP (VBN sold) (NP (-NONE- *)))"


def test_star_passive_before_by_phrase():
    t = tree("(S (NP (DT the) (NN car)) (VP (VBD was) "
             "(VP (VBN sold) (PP (IN by) (NP (NNS dealers))))))")
    out = insert_np_star(t)
    assert _p(out.children[1].children[1]) == (
        "(VP (VBN sold) (NP (-NONE- *)) (PP (IN by) (NP (NNS dealers))))"
    )


def test_star_passive_reduced_relative_without_governor():
    t = tree("(NP (NP (DT the) (NN car)) (VP (VBN sold) (PP (IN by) "
             "(NP (NN dealer)))))")
    out = insert_np_star(t)
    assert _p(out.children[1]) == (
        "(VP (VBN sold) (NP (-NONE- *)) (PP (IN by) (NP (NN dealer))))"
    )


def test_star_perfect_tense_is_not_passive():
    t = tree("(S (NP (PRP he)) (VP (VBD had) (VP (VBN eaten))))")
    assert insert_np_star(t) == t


def test_star_passive_with_complement_blocked():
    t = tree("(S (NP (PRP he)) (VP (VBD was) (VP (VBN given) (NP (DT a) (NN book)))))")
    assert insert_np_star(t) == t


def test_star_nonfinite_subject():
    t = tree("(S (VP (TO to) (VP (VB see))))")
    assert _p(insert_np_star(t)) == "(S (NP (-NONE- *)) (VP (TO to) (VP (VB see))))"


def test_star_gerund_subject():
    t = tree("(S (VP (VBG running) (NP (NNS miles))))")
    out = insert_np_star(t)
    assert _p(out.children[0]) == "(NP (-NONE- *))"


def test_star_overt_subject_blocked():
    t = tree("(S (NP (PRP I)) (VP (TO to) (VP (VB see))))")
    assert insert_np_star(t) == t


def test_star_finite_clause_blocked():
    t = tree("(S (VP (VBD ran)))")
    assert insert_np_star(t) == t


def test_star_labeled_mode_emits_sbj_tag():
    t = tree("(S (VP (TO to) (VP (VB see))))")
    out = insert_np_star(t, labeled=True)
    assert out.children[0].label.tags == ("SBJ",)


# ---------------------------------------------------------- end to end


def test_sentence_restores_to_gold_f1_100():
    restored, log = restore_ptb(tree(FIG_EN_BARE))
    assert [f.rule for f in log] == ["np-star:subject"]
    report = score_corpus([tree(FIG_EN_GOLD)], [restored])
    assert report.overall.f1 == 100.0


def test_trace_log_covers_every_insertion():
    t = tree("(NP (NP (DT the) (NN man)) (SBAR (S (VP (MD could) (VP (VB win))))))")
    restored, log = restore_ptb(t)
    assert len(null_leaves(restored)) == len(log)


def test_dangling_pp_is_flagged_in_log():
    t = tree("(NP (NP (DT the) (NN car)) (VP (VBN sold) (PP (IN by))))")
    restored, log = restore_ptb(t)
    assert any(f.rule == "np-star:passive,dangling-pp" for f in log)


_CORPUS = [
    FIG_EN_GOLD,
    "(S (NP (DT the) (NN deal)) (VP (VBD was) (VP (VBN signed))))",
    "(NP (NP (DT the) (NN reason)) (SBAR (S (NP (PRP I)) (VP (VBD left)))))",
    "(NP (NP (DT the) (NN man)) (SBAR (S (VP (MD could) (VP (VB win))))))",
    "(VP (VBP know) (SBAR (S (NP (PRP he)) (VP (VBD ran)))))",
    "(NP (QP ($ $) (CD 2) (CD billion)))",
    "(SBAR (WHNP (WP what)) (S (NP (PRP I)) (VP (VBD saw))))",
]


def test_restore_idempotent_on_corpus():
    for text in _CORPUS:
        once, _ = restore_ptb(strip_all(tree(text)))
        twice, log = restore_ptb(once)
        assert twice == once
        assert log == []


def test_restore_preserves_overt_terminals():
    for text in _CORPUS:
        stripped = strip_all(tree(text))
        restored, _ = restore_ptb(stripped)
        assert overt_terminals(restored) == overt_terminals(stripped)


def test_restore_inserts_only_english_kinds():
    for text in _CORPUS:
        restored, _ = restore_ptb(strip_all(tree(text)))
        for sym, _path in null_leaves(restored):
            assert sym.kind in ENGLISH.allowed_kinds
