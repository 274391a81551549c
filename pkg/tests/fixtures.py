"""Shared test corpora: the two walkthrough sentences and small helpers.

FIG_EN_* is the PTB sentence "We 're about to see if advertising works ."
whose embedded non-finite clause carries a controlled null subject.
FIG_ZH_* is the CTB headline "法 正 研究 从 波黑 撤军 计划" whose appositive
IP carries an arbitrary *PRO* subject.  The *_GOLD strings hold the original
annotation, the *_BARE strings the fully stripped form, matching column for
column.
"""

from nulltree import parse_trees

FIG_EN_GOLD = (
    "(S (NP-SBJ-1 (PRP We)) (VP (VBP 're) (VP (IN about) "
    "(S (NP-SBJ (-NONE- *-1)) (VP (TO to) (VP (VB see) "
    "(SBAR (IN if) (S (NP-SBJ (NN advertising)) (VP (VBZ works))))))))) (. .))"
)

FIG_EN_BARE = (
    "(S (NP (PRP We)) (VP (VBP 're) (VP (IN about) "
    "(S (VP (TO to) (VP (VB see) "
    "(SBAR (IN if) (S (NP (NN advertising)) (VP (VBZ works))))))))) (. .))"
)

FIG_ZH_GOLD = (
    "(IP-HLN (NP-PN-SBJ (NR 法)) (VP (ADVP (AD 正)) (VP (VV 研究) "
    "(NP-OBJ (IP-APP (NP-SBJ (-NONE- *PRO*)) (VP (PP (P 从) (NP (NR 波黑))) "
    "(VP (VV 撤军)))) (NP (NN 计划))))))"
)

FIG_ZH_BARE = (
    "(IP (NP (NR 法)) (VP (ADVP (AD 正)) (VP (VV 研究) "
    "(NP (IP (VP (PP (P 从) (NP (NR 波黑))) "
    "(VP (VV 撤军)))) (NP (NN 计划))))))"
)


def tree(text):
    """Parse exactly one tree."""
    trees = parse_trees(text)
    assert len(trees) == 1, f"expected one tree, got {len(trees)}"
    return trees[0]
