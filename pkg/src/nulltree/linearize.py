"""Tree linearization for sequence-to-sequence datasets, and the way back.

A sequence is a flat token list from a depth-first walk: internal node X
emits `(X` and `)X`, a preterminal emits only its POS category (the word is
dropped), and a null element emits its bare symbol (the -NONE- layer is
elided and re-synthesized on the way back).  Example:

    (TOP (S (NP PRP )NP (VP VBD (NP *T* )NP )VP )S )TOP

Delinearization rebuilds the tree with dummy words w_1 ... w_n standing in
for the dropped terminals.  Model output is untrusted, so validate_sequence
is total and returns a MalformedReport instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass

from .strip import strip_nulls
from .tree import (
    NodeLabel,
    NullSymbol,
    Tree,
    ensure_top,
    is_preterminal,
    null_symbol,
    parse_label,
    parse_null_symbol,
)

__all__ = [
    "LinearSequence",
    "MalformedReport",
    "MalformedSequenceError",
    "DatasetPair",
    "classify_token",
    "linearize",
    "delinearize",
    "validate_sequence",
    "erase_nulls",
    "build_pair",
    "sequence_to_tree",
]


@dataclass(frozen=True)
class LinearSequence:
    tokens: tuple

    def text(self) -> str:
        return " ".join(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class MalformedReport:
    reason: str
    token_index: int | None = None
    detail: str = ""


class MalformedSequenceError(ValueError):
    def __init__(self, reason: str, token_index: int | None = None, detail: str = ""):
        super().__init__(f"{reason} at token {token_index}: {detail}" if detail else f"{reason} at token {token_index}")
        self.report = MalformedReport(reason, token_index, detail)


def classify_token(token: str):
    """('open', label) | ('close', label) | ('null', NullSymbol) | ('pos', token).

    Null symbols are checked first; a stray coindex on one (the dataset never
    writes them, but a model might) is tolerated.
    """
    sym = parse_null_symbol(token)
    if sym is not None:
        return ("null", sym)
    if token.startswith("("):
        return ("open", token[1:])
    if token.startswith(")"):
        return ("close", token[1:])
    return ("pos", token)


def _node_label(label: NodeLabel, with_function_labels: bool) -> str:
    if with_function_labels:
        return NodeLabel(label.category, label.tags).format()
    return label.category


def linearize(tree: Tree, with_function_labels: bool = False) -> LinearSequence:
    """Depth-first emission; indices are dropped in both label modes."""
    tokens: list = []
    _emit(tree, with_function_labels, tokens)
    return LinearSequence(tuple(tokens))


def _emit(node: Tree, wfl: bool, out: list) -> None:
    sym = null_symbol(node)
    if sym is not None:
        out.append(sym.bare().format())
        return
    if is_preterminal(node):
        out.append(_node_label(node.label, wfl))
        return
    label = _node_label(node.label, wfl)
    out.append("(" + label)
    for child in node.children:
        assert isinstance(child, Tree)
        _emit(child, wfl, out)
    out.append(")" + label)


def validate_sequence(raw: str):
    """Classify and balance-check one line; LinearSequence or MalformedReport."""
    tokens = raw.split()
    stack: list = []
    roots = 0
    for idx, token in enumerate(tokens):
        kind, value = classify_token(token)
        if kind == "open":
            if not value:
                return MalformedReport("empty-label", idx, token)
            if not stack and roots:
                return MalformedReport("multiple-roots", idx, token)
            stack.append(value)
        elif kind == "close":
            if not stack:
                return MalformedReport("unbalanced-close", idx, token)
            opened = stack.pop()
            if opened != value:
                return MalformedReport(
                    "label-mismatch", idx, f"({opened} closed by {token}"
                )
            if not stack:
                roots += 1
        else:
            if not stack:
                return MalformedReport("token-outside-root", idx, token)
    if stack:
        return MalformedReport("unbalanced-open", len(tokens), f"({stack[-1]} never closed")
    if roots == 0:
        return MalformedReport("empty", None, "no root bracket")
    return LinearSequence(tuple(tokens))


def delinearize(seq: LinearSequence) -> Tree:
    """Rebuild a tree from a validated sequence.

    POS token i becomes a preterminal over dummy word w_i.  Bracket pairs
    that end up with no children are pruned; if that leaves no root at all,
    the sequence is malformed after all (raises MalformedSequenceError).
    """
    stack: list = [(None, [])]
    word = 0
    for idx, token in enumerate(seq.tokens):
        kind, value = classify_token(token)
        if kind == "open":
            stack.append((value, []))
        elif kind == "close":
            label, children = stack.pop()
            if label is None or label != value:
                raise MalformedSequenceError("label-mismatch", idx, token)
            if children:
                stack[-1][1].append(Tree(parse_label(label), tuple(children)))
        elif kind == "null":
            stack[-1][1].append(Tree(NodeLabel("-NONE-"), (value.format(),)))
        else:
            word += 1
            stack[-1][1].append(Tree(parse_label(value), (f"w_{word}",)))
    if len(stack) != 1:
        raise MalformedSequenceError("unbalanced-open", len(seq.tokens))
    roots = stack[0][1]
    if len(roots) != 1:
        reason = "empty" if not roots else "multiple-roots"
        raise MalformedSequenceError(reason, None)
    return roots[0]


def sequence_to_tree(raw: str):
    """One-stop conversion for untrusted lines: Tree or MalformedReport."""
    checked = validate_sequence(raw)
    if isinstance(checked, MalformedReport):
        return checked
    try:
        return delinearize(checked)
    except MalformedSequenceError as err:
        return err.report


def erase_nulls(seq: LinearSequence) -> LinearSequence:
    """Drop null symbols, then collapse bracket pairs emptied by the drop.

    Mirrors strip_nulls at the token level, so for any gold tree
    erase_nulls(linearize(gold)) == linearize(strip_nulls(gold)).
    """
    tokens = [t for t in seq.tokens if classify_token(t)[0] != "null"]
    changed = True
    while changed:
        changed = False
        out = []
        i = 0
        while i < len(tokens):
            if (
                i + 1 < len(tokens)
                and tokens[i].startswith("(")
                and tokens[i + 1] == ")" + tokens[i][1:]
            ):
                i += 2
                changed = True
            else:
                out.append(tokens[i])
                i += 1
        tokens = out
    return LinearSequence(tuple(tokens))


@dataclass(frozen=True)
class DatasetPair:
    source: LinearSequence
    target: LinearSequence
    sentence_id: str


def build_pair(
    gold: Tree, with_function_labels: bool = False, sentence_id: str = ""
) -> DatasetPair:
    """Source is the gold tree minus nulls, target is the gold tree; both
    linearized under a TOP root.

    Raises EmptyTreeError for a gold tree with no overt terminals; dataset
    emission skips those with a warning record.
    """
    top = ensure_top(gold)
    source = linearize(strip_nulls(top), with_function_labels)
    target = linearize(top, with_function_labels)
    return DatasetPair(source, target, sentence_id)
