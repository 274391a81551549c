"""Rule-based restoration of English null elements on trees in "without
traces" form.

Five rewriting passes run in a fixed order over the whole tree:

  1. empty units        *U* after a dollar QP
  2. WH phrase          (WHNP (-NONE- 0)) / (WHADVP (-NONE- 0)) for relatives
  3. null complementizer  bare (-NONE- 0) at the front of an SBAR
  4. WH trace           *T* placed by an eight-case search, coindexed filler
  5. NP *               passive objects and non-finite null subjects

The order matters: trace search needs the WH phrases from pass 2, and the
null-subject half of pass 5 must see subjects already filled by *T* so it
does not double-fill them.  Each rule falsifies its own trigger, so running
the whole restoration twice changes nothing.
"""

from __future__ import annotations

from importlib import resources

from .heads import HeadRuleTable, head_child, head_terminal, load_head_rules
from .rules_common import RuleContext, insert_child, max_identity
from .tree import (
    NodeLabel,
    NullKind,
    Tree,
    is_preterminal,
    null_preterminal,
    null_symbol,
    overt_terminals,
)

__all__ = [
    "restore_ptb",
    "insert_empty_unit",
    "insert_wh_phrase",
    "insert_null_complementizer",
    "insert_wh_trace",
    "insert_np_star",
    "load_word_list",
    "DEFAULT_AUX_VERBS",
    "DEFAULT_WH_NOUNS",
]

VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"})
CLAUSE_CATS = frozenset({"S", "SINV", "SQ", "FRAG"})
COMPLEMENT_CATS = frozenset({"NP", "S", "SBAR"})


def load_word_list(source) -> frozenset:
    """Read a word list: one word per line, # comments, case folded."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return frozenset(words)


def _bundled_list(name: str) -> frozenset:
    text = resources.files("nulltree.data").joinpath(name).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return frozenset(words)


DEFAULT_AUX_VERBS = _bundled_list("aux_verbs_en.txt")
DEFAULT_WH_NOUNS = _bundled_list("wh_nouns_en.txt")


class _PtbContext(RuleContext):
    def __init__(self, labeled, head_table, aux_verbs, wh_nouns):
        super().__init__()
        self.labeled = labeled
        self.head_table = head_table
        self.aux_verbs = aux_verbs
        self.wh_nouns = wh_nouns


def restore_ptb(
    tree: Tree,
    labeled: bool = False,
    head_table: HeadRuleTable | None = None,
    aux_verbs: frozenset | None = None,
    wh_nouns: frozenset | None = None,
) -> tuple[Tree, list]:
    """Apply all five English passes; return the new tree and the firing log.

    Intended for stripped trees but total on any tree; every rule is guarded
    so an already-restored tree passes through unchanged.
    """
    ctx = _PtbContext(
        labeled,
        head_table if head_table is not None else load_head_rules("en"),
        aux_verbs if aux_verbs is not None else DEFAULT_AUX_VERBS,
        wh_nouns if wh_nouns is not None else DEFAULT_WH_NOUNS,
    )
    ctx.next_index = max_identity(tree) + 1
    out = _unit_pass(tree, (), ctx)
    out = _wh_phrase_pass(out, (), ctx, None, None)
    out = _null_comp_pass(out, (), ctx, None, None)
    out = _wh_trace_pass(out, (), ctx)
    out = _np_star_pass(out, (), ctx, None)
    return out, ctx.log


def _single_pass(tree, pass_fn, **kwargs):
    ctx = _PtbContext(
        kwargs.get("labeled", False),
        kwargs.get("head_table") or load_head_rules("en"),
        kwargs.get("aux_verbs") or DEFAULT_AUX_VERBS,
        kwargs.get("wh_nouns") or DEFAULT_WH_NOUNS,
    )
    ctx.next_index = max_identity(tree) + 1
    return pass_fn(tree, ctx)


def insert_empty_unit(tree: Tree, **kwargs) -> Tree:
    return _single_pass(tree, lambda t, ctx: _unit_pass(t, (), ctx), **kwargs)


def insert_wh_phrase(tree: Tree, **kwargs) -> Tree:
    return _single_pass(tree, lambda t, ctx: _wh_phrase_pass(t, (), ctx, None, None), **kwargs)


def insert_null_complementizer(tree: Tree, **kwargs) -> Tree:
    return _single_pass(tree, lambda t, ctx: _null_comp_pass(t, (), ctx, None, None), **kwargs)


def insert_wh_trace(tree: Tree, **kwargs) -> Tree:
    return _single_pass(tree, lambda t, ctx: _wh_trace_pass(t, (), ctx), **kwargs)


def insert_np_star(tree: Tree, **kwargs) -> Tree:
    return _single_pass(tree, lambda t, ctx: _np_star_pass(t, (), ctx, None), **kwargs)


def _cat(child) -> str | None:
    return child.category if isinstance(child, Tree) else None


def _first_child(node, pred):
    for i, c in enumerate(node.children):
        if isinstance(c, Tree) and pred(c):
            return i
    return None


# ---------------------------------------------------------------- pass 1: *U*


def _unit_pass(node: Tree, path, ctx) -> Tree:
    if is_preterminal(node):
        return node
    out: list = []
    orig = node.children
    for i, child in enumerate(orig):
        assert isinstance(child, Tree)
        out.append(_unit_pass(child, path + (len(out),), ctx))
        if _dollar_qp(child):
            nxt = orig[i + 1] if i + 1 < len(orig) else None
            if not (nxt is not None and _null_kind(nxt) is NullKind.UNIT):
                u = null_preterminal(NullKind.UNIT)
                ctx.fire("empty-unit", path + (len(out),), u)
                out.append(u)
    return node.with_children(tuple(out))


def _null_kind(node) -> NullKind | None:
    sym = null_symbol(node)
    return sym.kind if sym is not None else None


def _dollar_qp(child) -> bool:
    # QP with a $ child followed by at least one CD child.
    if not (isinstance(child, Tree) and child.category == "QP"):
        return False
    dollar = _first_child(child, lambda c: c.category == "$")
    if dollar is None:
        return False
    return any(_cat(c) == "CD" for c in child.children[dollar + 1:])


# -------------------------------------------------- pass 2: WHNP / WHADVP


def _wh_phrase_pass(node: Tree, path, ctx, parent, self_idx) -> Tree:
    if is_preterminal(node):
        return node
    if node.category == "SBAR" and _first_child_clause(node) and _np_relative_context(parent, self_idx):
        cat = "WHADVP" if _parent_head_in(parent, ctx) else "WHNP"
        filler = Tree(NodeLabel(cat), (null_preterminal(NullKind.ZERO),))
        ctx.fire("wh-phrase", path + (0,), filler)
        node = node.with_children((filler,) + node.children)
    children = tuple(
        _wh_phrase_pass(c, path + (i,), ctx, node, i) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


def _first_child_clause(sbar: Tree) -> bool:
    # An SBAR whose first child is a bare clause has neither an overt
    # complementizer (IN/DT preterminal) nor a WH phrase in front.
    first = sbar.children[0]
    return isinstance(first, Tree) and first.category in CLAUSE_CATS


def _np_relative_context(parent, self_idx) -> bool:
    if parent is None or parent.category != "NP":
        return False
    return any(
        j != self_idx and _cat(c) == "NP" for j, c in enumerate(parent.children)
    )


def _parent_head_in(parent: Tree, ctx) -> bool:
    _, word = head_terminal(parent, ctx.head_table)
    word = word.lower()
    if word in ctx.wh_nouns:
        return True
    return word.endswith("s") and word[:-1] in ctx.wh_nouns


# ------------------------------------------------ pass 3: null complementizer


def _null_comp_pass(node: Tree, path, ctx, parent, self_idx) -> Tree:
    if is_preterminal(node):
        return node
    if node.category == "SBAR" and _first_child_clause(node) and not _np_relative_context(parent, self_idx):
        zero = null_preterminal(NullKind.ZERO)
        ctx.fire("null-complementizer", path + (0,), zero)
        node = node.with_children((zero,) + node.children)
    children = tuple(
        _null_comp_pass(c, path + (i,), ctx, node, i) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


# ------------------------------------------------------- pass 4: WH trace


_TRACE_CAT = (("WHADVP", "ADVP"), ("WHADJP", "ADJP"), ("WHPP", "PP"), ("WHNP", "NP"))


def _wh_trace_pass(node: Tree, path, ctx) -> Tree:
    if is_preterminal(node):
        return node
    if node.category == "SBAR":
        node = _apply_trace(node, path, ctx)
    children = tuple(
        _wh_trace_pass(c, path + (i,), ctx) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


def _apply_trace(sbar: Tree, path, ctx) -> Tree:
    w_idx = _first_child(sbar, lambda c: c.category.startswith("WH"))
    if w_idx is None:
        return sbar
    filler = sbar.children[w_idx]
    assert isinstance(filler, Tree)
    if filler.label.identity is not None:
        return sbar  # already coindexed by an earlier run
    y_idx = None
    for i in range(w_idx + 1, len(sbar.children)):
        if _cat(sbar.children[i]) in CLAUSE_CATS:
            y_idx = i
            break
    if y_idx is None:
        return sbar
    clause = sbar.children[y_idx]
    assert isinstance(clause, Tree)
    wh_np = filler.category.startswith("WHNP")
    site = _find_trace_site(clause, (), wh_np, clause, ctx)
    k = ctx.take_index()
    trace_cat = "NP"
    for prefix, cat in _TRACE_CAT:
        if filler.category.startswith(prefix):
            trace_cat = cat
            break
    trace = Tree(NodeLabel(trace_cat), (null_preterminal(NullKind.TRACE, k),))
    if site.delete_index is not None:
        # Case 6 rewrites the clause itself: drop the empty subject, put the
        # trace where the subject was.
        kids = list(clause.children)
        del kids[site.delete_index]
        kids.insert(site.index, trace)
        new_clause = clause.with_children(tuple(kids))
        trace_path = path + (y_idx, site.index)
    else:
        new_clause = insert_child(clause, site.parent_path, site.index, trace)
        trace_path = path + (y_idx,) + site.parent_path + (site.index,)
    ctx.fire(f"wh-trace:{site.case}", trace_path, trace)
    new_filler = filler.with_label(filler.label.with_identity(k))
    children = list(sbar.children)
    children[w_idx] = new_filler
    children[y_idx] = new_clause
    return sbar.with_children(tuple(children))


class _TraceSite:
    def __init__(self, case, parent_path, index, delete_index=None):
        self.case = case
        self.parent_path = parent_path
        self.index = index
        self.delete_index = delete_index


def _find_trace_site(x: Tree, rel, wh_np, clause, ctx) -> _TraceSite:
    """The eight ordered trace-placement cases.

    x is the node under inspection, rel its path inside the original clause,
    and clause the whole clause (needed by the infinitival-relative case).
    The search always terminates: the final case never recurses.
    """
    ch = x.children
    # (1) coordination: look in the last conjunct
    if any(_cat(c) == "CC" for c in ch):
        same = [i for i, c in enumerate(ch) if _cat(c) == x.category]
        if len(same) >= 2:
            i = same[-1]
            return _find_trace_site(ch[i], rel + (i,), wh_np, clause, ctx)
    # (2) a PP with a preposition but no object
    if wh_np:
        for i, c in enumerate(ch):
            if isinstance(c, Tree) and c.category == "PP":
                p = _last_preposition(c)
                if p is not None and not any(_cat(g) == "NP" for g in c.children):
                    return _TraceSite("case-2", rel + (i,), p + 1)
    # (3) subject position of a clause
    if x.category == "S" and wh_np:
        vp = _first_child(x, lambda c: c.category == "VP")
        if vp is not None and not any(_cat(c) == "NP" for c in ch[:vp]):
            return _TraceSite("case-3", rel, vp)
    # (4) descend into the VP
    vp = _first_child(x, lambda c: c.category == "VP")
    if vp is not None:
        return _find_trace_site(ch[vp], rel + (vp,), wh_np, clause, ctx)
    # (5) descend into an ADJP or clausal complement
    if wh_np:
        adjp = _first_child(x, lambda c: c.category == "ADJP")
        if adjp is not None:
            return _find_trace_site(ch[adjp], rel + (adjp,), wh_np, clause, ctx)
        cl = _first_child(x, lambda c: c.category in ("S", "SBAR"))
        if cl is not None:
            return _find_trace_site(ch[cl], rel + (cl,), wh_np, clause, ctx)
    # (6) infinitival relative with an object: the trace is the subject
    if wh_np and x.category == "VP" and _has_object_np(x) and _chain_start_tag(clause) == "TO":
        e = _empty_subject_index(clause)
        if e is not None:
            # The empty subject sits before the clause's VP; after deleting
            # it the VP shifts left by one and the trace takes its place.
            vp_r = _first_child(clause, lambda c: c.category == "VP")
            assert vp_r is not None and e < vp_r
            return _TraceSite("case-6", (), vp_r - 1, delete_index=e)
    # (7) first post-modifier
    if wh_np:
        h = _head_index(x, ctx)
        return _TraceSite("case-7", rel, h + 1)
    # (8) last post-modifier
    return _TraceSite("case-8", rel, len(ch))


def _last_preposition(pp: Tree):
    p = None
    for i, c in enumerate(pp.children):
        if is_preterminal(c) and c.category in ("IN", "TO", "RP"):
            p = i
    return p


def _has_object_np(vp: Tree) -> bool:
    hv = _first_child(vp, lambda c: is_preterminal(c) and c.category in VERB_TAGS)
    if hv is None:
        return False
    return any(_cat(c) == "NP" for c in vp.children[hv + 1:])


def _empty_subject_index(clause: Tree):
    vp = _first_child(clause, lambda c: c.category == "VP")
    stop = vp if vp is not None else len(clause.children)
    for i, c in enumerate(clause.children[:stop]):
        if isinstance(c, Tree) and c.category == "NP" and not overt_terminals(c):
            return i
    return None


def _head_index(x: Tree, ctx) -> int:
    if x.category == "VP":
        hv = _first_child(
            x, lambda c: is_preterminal(c) and c.category in VERB_TAGS | {"TO"}
        )
        if hv is not None:
            return hv
    try:
        return head_child(x, ctx.head_table)
    except ValueError:
        return 0


# ----------------------------------------------------------- pass 5: NP *


def _np_star_pass(node: Tree, path, ctx, governor) -> Tree:
    if is_preterminal(node):
        return node
    if node.category == "VP":
        node = _passive_object(node, path, ctx, governor)
    elif node.category == "S":
        node = _nonfinite_subject(node, path, ctx)
    # Verbs govern the VPs stacked under them; any non-VP layer breaks the
    # chain.
    if node.category == "VP":
        hv = _first_child(
            node, lambda c: is_preterminal(c) and c.category in VERB_TAGS
        )
        child_gov = node.children[hv].children[0].lower() if hv is not None else governor  # type: ignore[union-attr]
    else:
        child_gov = None
    children = tuple(
        _np_star_pass(c, path + (i,), ctx, child_gov) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


def _passive_object(vp: Tree, path, ctx, governor) -> Tree:
    hv = _first_child(vp, lambda c: is_preterminal(c) and c.category in VERB_TAGS)
    if hv is None or vp.children[hv].category != "VBN":  # type: ignore[union-attr]
        return vp
    # Passive: a VBN head governed by a form of be/get, or by no verb at all
    # (reduced relatives like "the car sold by ...").
    if governor is not None and governor not in ctx.aux_verbs:
        return vp
    if any(_cat(c) in COMPLEMENT_CATS for c in vp.children[hv + 1:]):
        return vp
    dangling = any(
        isinstance(c, Tree)
        and c.category == "PP"
        and _last_preposition(c) is not None
        and not any(_cat(g) == "NP" for g in c.children)
        for c in vp.children[hv + 1:]
    )
    star = Tree(NodeLabel("NP"), (null_preterminal(NullKind.STAR),))
    rule = "np-star:passive,dangling-pp" if dangling else "np-star:passive"
    ctx.fire(rule, path + (hv + 1,), star)
    children = vp.children[: hv + 1] + (star,) + vp.children[hv + 1:]
    return vp.with_children(children)


def _nonfinite_subject(s: Tree, path, ctx) -> Tree:
    vp = _first_child(s, lambda c: c.category == "VP")
    if vp is None:
        return s
    if any(_cat(c) == "NP" for c in s.children[:vp]):
        return s
    tag = _chain_start_tag(s)
    if tag != "TO" and tag not in ("VBG", "VBN"):
        return s
    label = NodeLabel("NP", ("SBJ",)) if ctx.labeled else NodeLabel("NP")
    star = Tree(label, (null_preterminal(NullKind.STAR),))
    ctx.fire("np-star:subject", path + (vp,), star)
    children = s.children[:vp] + (star,) + s.children[vp:]
    return s.with_children(children)


def _chain_start_tag(clause: Tree):
    """Tag of the first verbal element of the clause's VP chain."""
    vp = _first_child(clause, lambda c: c.category == "VP")
    if vp is None:
        return None
    cur = clause.children[vp]
    while isinstance(cur, Tree):
        v = _first_child(
            cur, lambda c: is_preterminal(c) and c.category in VERB_TAGS | {"TO"}
        )
        if v is not None:
            return cur.children[v].category  # type: ignore[union-attr]
        nxt = _first_child(cur, lambda c: c.category == "VP")
        if nxt is None:
            return None
        cur = cur.children[nxt]
    return None
