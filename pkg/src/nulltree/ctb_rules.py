"""Rule-based restoration of Chinese null elements on stripped trees.

Four passes in fixed order: relative-clause *OP*/*T* pairs, control *PRO*,
dropped-pronoun *pro*, and right-node-raising *RNR*.  The *PRO* and *pro*
rows share three context patterns; *PRO* runs first and wins them, and no IP
ever receives a second null subject because every subject rule requires the
IP to have no NP daughter.

Pattern matching is prefix-anchored on immediate-child category sequences
with ADVP adjuncts (and, except where a pattern names PU, punctuation)
skipped, since gold trees freely interleave adverbials.
"""

from __future__ import annotations

from .rules_common import RuleContext, insert_child, max_identity
from .tree import NodeLabel, NullKind, Tree, is_preterminal, null_preterminal

__all__ = [
    "restore_ctb",
    "insert_op_trace",
    "insert_big_pro",
    "insert_small_pro",
    "insert_rnr",
]


def restore_ctb(tree: Tree, op_site: str = "sister") -> tuple[Tree, list]:
    """Apply all four Chinese passes; return the new tree and the firing log.

    op_site picks where the *OP* filler goes: "sister" (the CTB geometry,
    WHNP and the relative CP as co-daughters) or "parent" (the filler node
    dominates the relative CP).

    The (TOP (IP VP PU)) *pro* pattern also matches a root IP directly, so
    unwrapped single-sentence trees behave the same as TOP-wrapped ones.
    """
    if op_site not in ("sister", "parent"):
        raise ValueError(f"op_site must be 'sister' or 'parent', not {op_site!r}")
    ctx = RuleContext()
    ctx.next_index = max_identity(tree) + 1
    out = _op_pass(tree, (), ctx, op_site)
    out = _pro_pass(out, (), ctx, NullKind.BIG_PRO)
    out = _small_pro_root(out, ctx)
    out = _rnr_pass(out, (), ctx)
    return out, ctx.log


def _single(tree, fn):
    ctx = RuleContext()
    ctx.next_index = max_identity(tree) + 1
    return fn(tree, ctx)


def insert_op_trace(tree: Tree, op_site: str = "sister") -> Tree:
    return _single(tree, lambda t, ctx: _op_pass(t, (), ctx, op_site))


def insert_big_pro(tree: Tree) -> Tree:
    return _single(tree, lambda t, ctx: _pro_pass(t, (), ctx, NullKind.BIG_PRO))


def insert_small_pro(tree: Tree) -> Tree:
    return _single(tree, _small_pro_root)


def insert_rnr(tree: Tree) -> Tree:
    return _single(tree, lambda t, ctx: _rnr_pass(t, (), ctx))


def _cat(child) -> str | None:
    return child.category if isinstance(child, Tree) else None


def _filtered(node: Tree, skip=("ADVP", "PU")) -> list:
    """(index, child) pairs with adjunct categories skipped."""
    return [
        (i, c)
        for i, c in enumerate(node.children)
        if isinstance(c, Tree) and c.category not in skip
    ]


def _subjectless_ip(node) -> bool:
    return (
        isinstance(node, Tree)
        and node.category == "IP"
        and any(_cat(c) == "VP" for c in node.children)
        and not any(_cat(c) == "NP" for c in node.children)
    )


def _null_np(kind: NullKind, coindex: int | None = None) -> Tree:
    return Tree(NodeLabel("NP"), (null_preterminal(kind, coindex),))


# ------------------------------------------------- pass 1: *OP* and *T*


def _op_pass(node: Tree, path, ctx, op_site) -> Tree:
    if is_preterminal(node):
        return node
    if node.category == "CP":
        node = _op_rewrite(node, path, ctx, op_site)
    children = tuple(
        _op_pass(c, path + (i,), ctx, op_site) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


def _op_rewrite(w: Tree, path, ctx, op_site) -> Tree:
    out: list = []
    for child in w.children:
        # A WH phrase immediately to the left means this CP already has its
        # filler; skipping it keeps the pass idempotent.
        prev = out[-1] if out else None
        has_filler = isinstance(prev, Tree) and prev.category.startswith("WH")
        if isinstance(child, Tree) and child.category == "CP" and not has_filler:
            placed = _relativize(child, path, len(out), ctx, op_site)
            if placed is not None:
                out.extend(placed)
                continue
        out.append(child)
    return w.with_children(tuple(out))


def _relativize(x: Tree, w_path, out_idx, ctx, op_site):
    """Try the three relative-clause cases on CP x; return replacement
    children for x's slot, or None when no case applies."""
    y_idx = None
    for i, c in enumerate(x.children):
        if _cat(c) == "IP":
            y_idx = i
            break
    if y_idx is None:
        return None
    y = x.children[y_idx]
    assert isinstance(y, Tree)
    if not any(_cat(c) == "NP" for c in y.children):
        # (a) no subject: trace in subject position
        k = ctx.take_index()
        trace = _null_np(NullKind.TRACE, k)
        new_y = y.with_children((trace,) + y.children)
        filler_cat = "WHNP"
        trace_path = w_path + (out_idx + 1, y_idx, 0)
        case = "op-trace:subject"
    else:
        z_idx = None
        for i, c in enumerate(y.children):
            if _cat(c) == "VP":
                z_idx = i
                break
        if z_idx is None:
            return None
        z = y.children[z_idx]
        assert isinstance(z, Tree)
        if any(_cat(c) == "VP" for c in z.children):
            # (b) layered VP: adjunct trace, PP filler and PP trace
            k = ctx.take_index()
            trace = Tree(NodeLabel("PP"), (null_preterminal(NullKind.TRACE, k),))
            new_z = z.with_children((trace,) + z.children)
            filler_cat = "WHPP"
            trace_path = w_path + (out_idx + 1, y_idx, z_idx, 0)
            case = "op-trace:adjunct"
        elif not any(_cat(c) == "NP" for c in z.children):
            # (c) transitive without object: trace in object position
            k = ctx.take_index()
            trace = _null_np(NullKind.TRACE, k)
            new_z = z.with_children(z.children + (trace,))
            filler_cat = "WHNP"
            trace_path = w_path + (out_idx + 1, y_idx, z_idx, len(z.children))
            case = "op-trace:object"
        else:
            return None
        new_y = y.with_children(
            y.children[:z_idx] + (new_z,) + y.children[z_idx + 1:]
        )
    new_x = x.with_children(x.children[:y_idx] + (new_y,) + x.children[y_idx + 1:])
    op = null_preterminal(NullKind.OPERATOR)
    filler_label = NodeLabel(filler_cat, (), k)
    if op_site == "parent":
        wrapper = Tree(filler_label, (op, new_x))
        ctx.fire(case, w_path + (out_idx, 1) + trace_path[len(w_path) + 1:], trace)
        ctx.fire("op-filler", w_path + (out_idx,), wrapper)
        return [wrapper]
    filler = Tree(filler_label, (op,))
    ctx.fire(case, trace_path, trace)
    ctx.fire("op-filler", w_path + (out_idx,), filler)
    return [filler, new_x]


# ------------------------------------------------------ pass 2: *PRO*


def _pro_pass(node: Tree, path, ctx, kind) -> Tree:
    if is_preterminal(node):
        return node
    target = _pro_target(node, kind)
    if target is not None:
        rel_path, rule = target
        ip = node
        for i in rel_path:
            ip = ip.children[i]  # type: ignore[assignment]
        if _subjectless_ip(ip):
            null = _null_np(kind)
            ctx.fire(rule, path + rel_path + (0,), null)
            node = insert_child(node, rel_path, 0, null)
    children = tuple(
        _pro_pass(c, path + (i,), ctx, kind) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


def _pro_target(node: Tree, kind):
    """Match the context patterns; return (path to target IP, rule name)."""
    seq = _filtered(node)
    big = kind is NullKind.BIG_PRO
    name = "big-pro" if big else "small-pro"
    if node.category == "VP" and seq and seq[0][1].category == "VV":
        if big and len(seq) >= 3 and seq[1][1].category == "NP" and seq[2][1].category == "IP":
            return (seq[2][0],), f"{name}:vp-vv-np-ip"
        if big and len(seq) >= 2 and seq[1][1].category == "NP":
            # The clause may sit one level down, as an appositive IP inside
            # the object NP, sister to the head NP.
            np = seq[1][1]
            for j, c in enumerate(np.children):
                if _cat(c) == "IP":
                    return (seq[1][0], j), f"{name}:vp-vv-np-ip"
        if len(seq) >= 2 and seq[1][1].category == "IP":
            return (seq[1][0],), f"{name}:vp-vv-ip"
    if node.category == "CP" and len(seq) >= 2 and seq[0][1].category == "IP" and seq[1][1].category == "DEC":
        return (seq[0][0],), f"{name}:cp-ip-dec"
    if big and node.category == "PP" and len(seq) >= 2 and seq[0][1].category == "P" and seq[1][1].category == "IP":
        return (seq[1][0],), f"{name}:pp-p-ip"
    if node.category == "LCP" and len(seq) >= 2 and seq[0][1].category == "IP" and seq[1][1].category == "LC":
        return (seq[0][0],), f"{name}:lcp-ip-lc"
    if not big:
        if node.category == "IP":
            seq_pu = _filtered(node, skip=("ADVP",))
            if (
                len(seq_pu) >= 3
                and seq_pu[0][1].category == "IP"
                and seq_pu[1][1].category == "PU"
            ):
                later = [
                    i
                    for i, c in enumerate(node.children)
                    if _cat(c) == "IP" and i > seq_pu[1][0]
                ]
                if later:
                    return (later[-1],), f"{name}:ip-conjuncts"
        if node.category == "TOP":
            for i, c in enumerate(node.children):
                if _cat(c) == "IP" and _vp_pu_prefix(c):
                    return (i,), f"{name}:top-ip"
    return None


def _vp_pu_prefix(ip: Tree) -> bool:
    seq = _filtered(ip, skip=("ADVP",))
    return len(seq) >= 2 and seq[0][1].category == "VP" and seq[1][1].category == "PU"


# ------------------------------------------------------ pass 3: *pro*


def _small_pro_root(tree: Tree, ctx) -> Tree:
    # A root IP counts as the TOP context of the (TOP (IP VP PU)) pattern.
    if tree.category == "IP" and _vp_pu_prefix(tree) and _subjectless_ip(tree):
        null = _null_np(NullKind.SMALL_PRO)
        ctx.fire("small-pro:top-ip", (0,), null)
        tree = tree.with_children((null,) + tree.children)
    return _pro_pass(tree, (), ctx, NullKind.SMALL_PRO)


# ------------------------------------------------------ pass 4: *RNR*


def _rnr_pass(node: Tree, path, ctx) -> Tree:
    if is_preterminal(node):
        return node
    if node.category == "QP":
        node = _rnr_qp(node, path, ctx)
    elif node.category == "VP":
        node = _rnr_vp(node, path, ctx)
    children = tuple(
        _rnr_pass(c, path + (i,), ctx) if isinstance(c, Tree) else c
        for i, c in enumerate(node.children)
    )
    return node.with_children(children)


def _rnr_qp(x: Tree, path, ctx) -> Tree:
    qps = [i for i, c in enumerate(x.children) if _cat(c) == "QP"]
    if len(qps) < 2:
        return x
    y_idx, z_idx = qps[0], qps[-1]
    y = x.children[y_idx]
    z = x.children[z_idx]
    assert isinstance(y, Tree) and isinstance(z, Tree)
    first = y.children[0]
    if not (isinstance(first, Tree) and first.category in ("CD", "OD")):
        return x
    if any(_cat(c) == "CLP" for c in y.children):
        return x
    if not (
        any(_cat(c) in ("CD", "OD") for c in z.children)
        and any(_cat(c) == "CLP" for c in z.children)
    ):
        return x
    k = ctx.take_index()
    shared = Tree(NodeLabel("CLP"), (null_preterminal(NullKind.RNR, k),))
    new_y = y.with_children(y.children + (shared,))
    new_z = _coindex_first(z, "CLP", k)
    ctx.fire("rnr:qp", path + (y_idx, len(y.children)), shared)
    children = list(x.children)
    children[y_idx] = new_y
    children[z_idx] = new_z
    return x.with_children(tuple(children))


def _rnr_vp(x: Tree, path, ctx) -> Tree:
    vps = [i for i, c in enumerate(x.children) if _cat(c) == "VP"]
    if len(vps) < 2:
        return x
    y_idx, z_idx = vps[0], vps[-1]
    y = x.children[y_idx]
    z = x.children[z_idx]
    assert isinstance(y, Tree) and isinstance(z, Tree)
    if any(_cat(c) == "NP" for c in y.children):
        return x
    if not any(_cat(c) == "NP" for c in z.children):
        return x
    k = ctx.take_index()
    shared = Tree(NodeLabel("NP"), (null_preterminal(NullKind.RNR, k),))
    new_y = y.with_children(y.children + (shared,))
    new_z = _coindex_first(z, "NP", k)
    ctx.fire("rnr:vp", path + (y_idx, len(y.children)), shared)
    children = list(x.children)
    children[y_idx] = new_y
    children[z_idx] = new_z
    return x.with_children(tuple(children))


def _coindex_first(node: Tree, category: str, k: int) -> Tree:
    out = []
    done = False
    for c in node.children:
        if not done and _cat(c) == category:
            assert isinstance(c, Tree)
            out.append(c.with_label(c.label.with_identity(k)))
            done = True
        else:
            out.append(c)
    return node.with_children(tuple(out))
