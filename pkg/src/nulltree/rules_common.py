"""Shared plumbing for the deterministic restoration rule engines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .tree import Tree, iter_nodes

__all__ = ["RuleFiring", "RuleContext", "max_identity", "insert_child"]


@dataclass(frozen=True)
class RuleFiring:
    """One rule application: which rule, where, and what it inserted.

    The path locates the inserted subtree at the moment of insertion within
    its pass; later passes may shift sibling indices.
    """

    rule: str
    path: tuple[int, ...]
    subtree: Tree


@dataclass
class RuleContext:
    log: list = field(default_factory=list)
    next_index: int = 1

    def take_index(self) -> int:
        k = self.next_index
        self.next_index += 1
        return k

    def fire(self, rule: str, path: tuple[int, ...], subtree: Tree) -> None:
        self.log.append(RuleFiring(rule, path, subtree))


def max_identity(tree: Tree) -> int:
    """Largest identity index anywhere in the tree (labels and null symbols).

    Fresh coindices start above this so a partially annotated input never
    collides with rule-assigned indices.
    """
    from .tree import null_symbol

    best = 0
    for _, node in iter_nodes(tree):
        if node.label.identity is not None:
            best = max(best, node.label.identity)
        sym = null_symbol(node)
        if sym is not None and sym.coindex is not None:
            best = max(best, sym.coindex)
    return best


def insert_child(tree: Tree, parent_path: tuple[int, ...], index: int, child: Tree) -> Tree:
    """Functional insertion of a child at parent_path[index]."""
    if not parent_path:
        children = tree.children[:index] + (child,) + tree.children[index:]
        return tree.with_children(children)
    i = parent_path[0]
    sub = tree.children[i]
    assert isinstance(sub, Tree)
    new_sub = insert_child(sub, parent_path[1:], index, child)
    return tree.with_children(tree.children[:i] + (new_sub,) + tree.children[i + 1:])
