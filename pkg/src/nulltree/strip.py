"""Null-element removal and annotation erasure, the "without traces" form.

strip_nulls deletes every null leaf and recursively prunes ancestors that
end up with no children, so a chain like (WHNP (-NONE- *OP*)) disappears
entirely.  Constituents left with a single child are kept as single-branching
nodes, not collapsed.  strip_annotations erases function tags and coindices;
strip_all does both.
"""

from __future__ import annotations

from .tree import EmptyTreeError, NodeLabel, Tree, is_null_leaf, is_preterminal, null_symbol

__all__ = ["strip_nulls", "strip_annotations", "strip_all"]


def strip_nulls(tree: Tree) -> Tree:
    """Remove null leaves and any constituents emptied by their removal.

    Raises EmptyTreeError when nothing overt remains.
    """
    stripped = _strip(tree)
    if stripped is None:
        raise EmptyTreeError("tree contains no overt terminals")
    return stripped


def _strip(tree: Tree) -> Tree | None:
    if is_null_leaf(tree):
        return None
    if is_preterminal(tree):
        return tree
    kept = tuple(c for c in (_strip(child) for child in tree.children  # type: ignore[arg-type]
                             if isinstance(child, Tree)) if c is not None)
    if not kept:
        return None
    return tree.with_children(kept)


def strip_annotations(tree: Tree) -> Tree:
    """Erase function tags, identity indices, and gap indices everywhere.

    Coindices on surviving null symbols are dropped too, since the labels
    they referred to no longer carry indices.
    """
    sym = null_symbol(tree)
    if sym is not None:
        return Tree(tree.label.bare(), (sym.bare().format(),))
    if is_preterminal(tree):
        return tree.with_label(tree.label.bare())
    children = tuple(
        strip_annotations(c) if isinstance(c, Tree) else c for c in tree.children
    )
    return Tree(tree.label.bare(), children)


def strip_all(tree: Tree) -> Tree:
    """strip_nulls followed by strip_annotations."""
    return strip_annotations(strip_nulls(tree))
