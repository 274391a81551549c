"""Bracketed constituency trees with Penn-style labels and null-element leaves.

A tree is either an internal node (label plus a non-empty child tuple) or a
bare token string.  Token strings may only appear as the sole child of their
parent, so every word and every null symbol sits under a preterminal.  Null
elements are preterminals whose category is ``-NONE-`` and whose token parses
as one of the known null symbols (``*T*``, ``*``, ``0``, ``*pro*``, ...).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace

__all__ = [
    "NullKind",
    "NullSymbol",
    "NodeLabel",
    "Tree",
    "TreeParseError",
    "TreeValidationError",
    "EmptyTreeError",
    "parse_label",
    "parse_null_symbol",
    "parse_trees",
    "print_tree",
    "validate_tree",
    "is_preterminal",
    "null_symbol",
    "is_null_leaf",
    "overt_terminals",
    "null_leaves",
    "iter_nodes",
    "node_at",
    "ensure_top",
    "null_preterminal",
]


class NullKind(enum.Enum):
    """The inventory of null-element symbols this toolkit understands."""

    TRACE = "*T*"
    STAR = "*"
    UNIT = "*U*"
    ZERO = "0"
    BIG_PRO = "*PRO*"
    SMALL_PRO = "*pro*"
    OPERATOR = "*OP*"
    RNR = "*RNR*"
    UNKNOWN_PRED = "*?*"
    ICH = "*ICH*"
    EXPLETIVE = "*EXP*"

    def __str__(self) -> str:
        return self.value


# Longer symbols first so the bare "*" does not shadow "*T*" etc.
_NULL_SYMBOL_RE = re.compile(
    r"^(\*T\*|\*U\*|\*PRO\*|\*pro\*|\*OP\*|\*RNR\*|\*\?\*|\*ICH\*|\*EXP\*|\*|0)"
    r"(?:-(\d+))?$"
)


@dataclass(frozen=True)
class NullSymbol:
    """A null-element token, e.g. ``*T*-2`` (kind TRACE, coindex 2)."""

    kind: NullKind
    coindex: int | None = None

    def __post_init__(self) -> None:
        if self.kind is NullKind.ZERO and self.coindex is not None:
            raise ValueError("the zero complementizer never carries a coindex")

    def format(self) -> str:
        if self.coindex is None:
            return self.kind.value
        return f"{self.kind.value}-{self.coindex}"

    def bare(self) -> "NullSymbol":
        return NullSymbol(self.kind)


def parse_null_symbol(text: str) -> NullSymbol | None:
    """Parse a token as a null symbol, or return None if it is an overt word.

    The zero complementizer never carries a coindex, so ``0-1`` is not a null
    symbol (it would be an overt token, which in practice never occurs).
    """
    m = _NULL_SYMBOL_RE.match(text)
    if m is None:
        return None
    kind = NullKind(m.group(1))
    coindex = int(m.group(2)) if m.group(2) is not None else None
    if kind is NullKind.ZERO and coindex is not None:
        return None
    return NullSymbol(kind, coindex)


_GAP_RE = re.compile(r"^(.*)=(\d+)$")


@dataclass(frozen=True)
class NodeLabel:
    """A decomposed node label: category, function tags, and coindices.

    ``NP-SBJ-1=2`` decomposes into category ``NP``, tags ``("SBJ",)``,
    identity index 1, and gap index 2.  A trailing numeric dash segment is
    always an identity index, never a function tag; numeric segments in the
    middle stay as tags.  Labels whose category itself starts with a dash
    (``-NONE-``, ``-LRB-``, ``-RRB-``) are kept whole.
    """

    category: str
    tags: tuple[str, ...] = ()
    identity: int | None = None
    gap: int | None = None

    def format(self) -> str:
        parts = [self.category]
        parts.extend(f"-{t}" for t in self.tags)
        if self.identity is not None:
            parts.append(f"-{self.identity}")
        if self.gap is not None:
            parts.append(f"={self.gap}")
        return "".join(parts)

    def bare(self) -> "NodeLabel":
        return NodeLabel(self.category)

    def with_identity(self, identity: int | None) -> "NodeLabel":
        return replace(self, identity=identity)


def parse_label(raw: str) -> NodeLabel:
    """Decompose a raw label string.  Never raises; odd labels parse as a
    bare category."""
    if not raw:
        return NodeLabel("")
    gap = None
    m = _GAP_RE.match(raw)
    if m is not None:
        raw, gap = m.group(1), int(m.group(2))
    # Dash-initial categories (-NONE-, -LRB-, ...) take the whole string.
    if raw.startswith("-"):
        return NodeLabel(raw, (), None, gap)
    segments = raw.split("-")
    category = segments[0]
    rest = segments[1:]
    identity = None
    if rest and rest[-1].isdigit():
        identity = int(rest[-1])
        rest = rest[:-1]
    return NodeLabel(category, tuple(rest), identity, gap)


@dataclass(frozen=True)
class Tree:
    """An internal tree node.  Children are Tree nodes or token strings."""

    label: NodeLabel
    children: tuple["Tree | str", ...]

    @property
    def category(self) -> str:
        return self.label.category

    def with_children(self, children: tuple["Tree | str", ...]) -> "Tree":
        return Tree(self.label, children)

    def with_label(self, label: NodeLabel) -> "Tree":
        return Tree(label, self.children)


class TreeParseError(ValueError):
    """Raised on malformed bracketed input.

    Carries the byte offset into the input text and the 1-based ordinal of
    the tree being read when the problem was found.
    """

    def __init__(self, message: str, offset: int, ordinal: int) -> None:
        super().__init__(f"tree {ordinal}, byte {offset}: {message}")
        self.offset = offset
        self.ordinal = ordinal


class TreeValidationError(ValueError):
    """Raised when a programmatically built tree violates shape constraints."""


class EmptyTreeError(ValueError):
    """Raised when an operation would leave a tree with no nodes at all."""


_TOKEN_RE = re.compile(r"[()]|[^()\s]+")


def parse_trees(text: str) -> list[Tree]:
    """Parse every tree in a string of bracketed notation.

    A top-level extra bracket pair with no label, as written by several
    treebank distributions, is normalized to a TOP node:
    ``( (S ...) )`` and ``(TOP (S ...))`` parse to the same tree.
    """
    tokens = [(m.group(0), m.start()) for m in _TOKEN_RE.finditer(text)]
    trees: list[Tree] = []
    pos = 0
    ordinal = 1
    while pos < len(tokens):
        tok, off = tokens[pos]
        if tok != "(":
            raise TreeParseError(f"expected '(', found {tok!r}", off, ordinal)
        node, pos = _parse_node(tokens, pos, ordinal, top_level=True)
        trees.append(node)
        ordinal += 1
    return trees


def _parse_node(
    tokens: list[tuple[str, int]], pos: int, ordinal: int, top_level: bool = False
) -> tuple[Tree, int]:
    open_off = tokens[pos][1]
    pos += 1  # past "("
    if pos >= len(tokens):
        raise TreeParseError("unbalanced '('", open_off, ordinal)
    tok, off = tokens[pos]
    if tok == "(":
        # Label-less node: only tolerated as the outermost wrapper.
        if not top_level:
            raise TreeParseError("node without a label", off, ordinal)
        label = NodeLabel("TOP")
    elif tok == ")":
        raise TreeParseError("empty node '()'", off, ordinal)
    else:
        label = parse_label(tok)
        pos += 1
    children: list[Tree | str] = []
    saw_subtree = False
    while True:
        if pos >= len(tokens):
            raise TreeParseError("unbalanced '('", open_off, ordinal)
        tok, off = tokens[pos]
        if tok == ")":
            pos += 1
            break
        if tok == "(":
            node, pos = _parse_node(tokens, pos, ordinal)
            children.append(node)
            saw_subtree = True
        else:
            children.append(tok)
            pos += 1
    if not children:
        raise TreeParseError("node with no children", open_off, ordinal)
    leaf_count = sum(1 for c in children if isinstance(c, str))
    if leaf_count and (saw_subtree or leaf_count > 1):
        raise TreeParseError(
            "token where a subtree was expected (a token must be the sole "
            "child of its preterminal)",
            open_off,
            ordinal,
        )
    return Tree(label, tuple(children)), pos


def validate_tree(tree: Tree) -> None:
    """Check shape constraints on a built tree; raise TreeValidationError."""
    if not isinstance(tree, Tree):
        raise TreeValidationError(f"not a tree node: {tree!r}")
    label = tree.label.format()
    if not label or re.search(r"[\s()]", label):
        raise TreeValidationError(f"bad label {label!r}")
    if not tree.children:
        raise TreeValidationError(f"node {label} has no children")
    leaf_count = sum(1 for c in tree.children if isinstance(c, str))
    if leaf_count and len(tree.children) > 1:
        raise TreeValidationError(
            f"node {label} mixes tokens and subtrees (or has several tokens)"
        )
    for child in tree.children:
        if isinstance(child, str):
            if not child or re.search(r"[\s()]", child):
                raise TreeValidationError(f"bad token {child!r}")
        else:
            validate_tree(child)


def print_tree(tree: Tree, style: str = "one_line") -> str:
    """Render a tree back to bracketed text.

    ``one_line`` uses single spaces throughout; ``indented`` puts each
    non-preterminal constituent on its own line.  Both round-trip through
    parse_trees.
    """
    validate_tree(tree)
    if style == "one_line":
        return _print_one_line(tree)
    if style == "indented":
        return _print_indented(tree, 0)
    raise ValueError(f"unknown style {style!r}")


def _print_one_line(tree: Tree) -> str:
    parts = [f"({tree.label.format()}"]
    for child in tree.children:
        parts.append(child if isinstance(child, str) else _print_one_line(child))
    return " ".join(parts) + ")"


def _print_indented(tree: Tree, depth: int) -> str:
    if is_preterminal(tree):
        return f"({tree.label.format()} {tree.children[0]})"
    pad = "  " * (depth + 1)
    lines = [f"({tree.label.format()}"]
    for child in tree.children:
        assert isinstance(child, Tree)
        lines.append(pad + _print_indented(child, depth + 1))
    return "\n".join(lines) + ")"


def is_preterminal(tree: Tree | str) -> bool:
    return (
        isinstance(tree, Tree)
        and len(tree.children) == 1
        and isinstance(tree.children[0], str)
    )


def null_symbol(tree: Tree | str) -> NullSymbol | None:
    """The null symbol of a null-element preterminal, else None."""
    if not is_preterminal(tree) or tree.category != "-NONE-":
        return None
    return parse_null_symbol(tree.children[0])  # type: ignore[arg-type]


def is_null_leaf(tree: Tree | str) -> bool:
    return null_symbol(tree) is not None


def overt_terminals(tree: Tree) -> list[tuple[str, str]]:
    """All (part-of-speech category, token) pairs, left to right, with null
    elements excluded."""
    out: list[tuple[str, str]] = []
    _collect_overt(tree, out)
    return out


def _collect_overt(tree: Tree, out: list[tuple[str, str]]) -> None:
    if is_preterminal(tree):
        if not is_null_leaf(tree):
            out.append((tree.category, tree.children[0]))  # type: ignore[arg-type]
        return
    for child in tree.children:
        if isinstance(child, Tree):
            _collect_overt(child, out)


def null_leaves(tree: Tree) -> list[tuple[NullSymbol, tuple[int, ...]]]:
    """All null symbols with the child-index path to their preterminal."""
    out: list[tuple[NullSymbol, tuple[int, ...]]] = []
    _collect_nulls(tree, (), out)
    return out


def _collect_nulls(
    tree: Tree, path: tuple[int, ...], out: list[tuple[NullSymbol, tuple[int, ...]]]
) -> None:
    sym = null_symbol(tree)
    if sym is not None:
        out.append((sym, path))
        return
    for i, child in enumerate(tree.children):
        if isinstance(child, Tree):
            _collect_nulls(child, path + (i,), out)


def iter_nodes(tree: Tree):
    """Pre-order iteration over (path, node) pairs."""
    stack: list[tuple[tuple[int, ...], Tree]] = [((), tree)]
    while stack:
        path, node = stack.pop()
        yield path, node
        for i in range(len(node.children) - 1, -1, -1):
            child = node.children[i]
            if isinstance(child, Tree):
                stack.append((path + (i,), child))


def node_at(tree: Tree, path: tuple[int, ...]) -> Tree:
    node = tree
    for i in path:
        child = node.children[i]
        if isinstance(child, str):
            raise IndexError(f"path {path} descends into a token")
        node = child
    return node


def ensure_top(tree: Tree) -> Tree:
    """Wrap in a TOP node unless the root already is one."""
    if tree.category == "TOP":
        return tree
    return Tree(NodeLabel("TOP"), (tree,))


def null_preterminal(kind: NullKind, coindex: int | None = None) -> Tree:
    """Build a (-NONE- symbol) preterminal."""
    return Tree(NodeLabel("-NONE-"), (NullSymbol(kind, coindex).format(),))
