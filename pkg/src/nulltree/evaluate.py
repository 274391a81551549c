"""Parseval restricted to null elements, with terminal alignment first.

A null element is scored as a (kind, anchor) item, where the anchor is the
number of overt terminals strictly before it; labeled mode extends the key
with the parent bracket's category and function tags.  Coindices are never
compared.  Sentences whose predictions are malformed or whose overt terminal
counts disagree with gold are skipped and accounted for, or counted as pure
misses under penalize_skips.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .linearize import MalformedReport
from .tree import NullKind, Tree, is_preterminal, null_symbol, overt_terminals

__all__ = [
    "NullMention",
    "Counts",
    "EvalReport",
    "extract_mentions",
    "align_terminals",
    "score_corpus",
    "REPORT_SCHEMA",
]

REPORT_SCHEMA = "nulltree-eval-report/1"


@dataclass(frozen=True)
class NullMention:
    kind: NullKind
    anchor: int
    category: str
    tags: tuple

    def key(self, labeled: bool):
        if labeled:
            return (self.kind, self.anchor, self.category, self.tags)
        return (self.kind, self.anchor)


def extract_mentions(tree: Tree) -> list:
    """One mention per null leaf, in document order."""
    out: list = []
    _walk(tree, None, out, [0])
    return out


def _walk(node: Tree, parent, out: list, count: list) -> None:
    sym = null_symbol(node)
    if sym is not None:
        if parent is None:
            cat, tags = "-NONE-", ()
        else:
            cat, tags = parent.category, parent.label.tags
        out.append(NullMention(sym.kind, count[0], cat, tags))
        return
    if is_preterminal(node):
        count[0] += 1
        return
    for child in node.children:
        if isinstance(child, Tree):
            _walk(child, node, out, count)


def align_terminals(gold: Tree, pred: Tree):
    """Positional alignment of overt terminals; None when counts differ.

    Texts are never compared, so dummy-word trees align with real ones.
    """
    n_gold = len(overt_terminals(gold))
    n_pred = len(overt_terminals(pred))
    if n_gold != n_pred:
        return None
    return [(i, i) for i in range(n_gold)]


@dataclass
class Counts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def add(self, other: "Counts") -> None:
        self.tp += other.tp
        self.fp += other.fp
        self.fn += other.fn

    @property
    def precision(self) -> float:
        if self.tp + self.fp == 0:
            return 100.0 if self.fn == 0 else 0.0
        return 100.0 * self.tp / (self.tp + self.fp)

    @property
    def recall(self) -> float:
        if self.tp + self.fn == 0:
            return 100.0 if self.fp == 0 else 0.0
        return 100.0 * self.tp / (self.tp + self.fn)

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        if p + r == 0:
            return 0.0
        return 2 * p * r / (p + r)

    def as_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "precision": round(self.precision, 2),
            "recall": round(self.recall, 2),
            "f1": round(self.f1, 2),
        }


@dataclass
class EvalReport:
    overall: Counts
    per_kind: dict
    sentences_total: int
    sentences_scored: int
    sentences_skipped: int
    skip_reasons: dict
    labeled: bool
    penalize_skips: bool
    excluded_kinds: tuple = ()

    def to_json(self) -> str:
        doc = {
            "schema": REPORT_SCHEMA,
            "labeled": self.labeled,
            "penalize_skips": self.penalize_skips,
            "excluded_kinds": sorted(self.excluded_kinds),
            "sentences": {
                "total": self.sentences_total,
                "scored": self.sentences_scored,
                "skipped": self.sentences_skipped,
                "skip_reasons": dict(sorted(self.skip_reasons.items())),
            },
            "overall": self.overall.as_dict(),
            "per_kind": {
                kind: counts.as_dict()
                for kind, counts in sorted(self.per_kind.items())
            },
        }
        return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)

    def to_tsv(self) -> str:
        lines = ["kind\tprecision\trecall\tf1\ttp\tfp\tfn"]
        for kind, c in sorted(self.per_kind.items()):
            lines.append(
                f"{kind}\t{c.precision:.2f}\t{c.recall:.2f}\t{c.f1:.2f}\t{c.tp}\t{c.fp}\t{c.fn}"
            )
        c = self.overall
        lines.append(
            f"overall\t{c.precision:.2f}\t{c.recall:.2f}\t{c.f1:.2f}\t{c.tp}\t{c.fp}\t{c.fn}"
        )
        return "\n".join(lines)


def score_corpus(
    gold_trees,
    pred_results,
    labeled: bool = False,
    penalize_skips: bool = False,
    exclude_kinds=frozenset(),
) -> EvalReport:
    """Score index-aligned predictions against gold trees.

    pred_results entries are Tree on success or MalformedReport (anything
    that is not a Tree counts as malformed) for undecodable model output.
    """
    gold_trees = list(gold_trees)
    pred_results = list(pred_results)
    if len(gold_trees) != len(pred_results):
        raise ValueError(
            f"gold has {len(gold_trees)} sentences, predictions {len(pred_results)}"
        )
    exclude = {_as_kind(k) for k in exclude_kinds}
    per_kind: dict = {}
    overall = Counts()
    skip_reasons: Counter = Counter()
    scored = 0
    for gold, pred in zip(gold_trees, pred_results):
        gold_mentions = [m for m in extract_mentions(gold) if m.kind not in exclude]
        if not isinstance(pred, Tree):
            reason = pred.reason if isinstance(pred, MalformedReport) else "malformed"
            _skip(gold_mentions, reason, skip_reasons, per_kind, overall, penalize_skips)
            continue
        if align_terminals(gold, pred) is None:
            _skip(gold_mentions, "terminal-count", skip_reasons, per_kind, overall, penalize_skips)
            continue
        scored += 1
        pred_mentions = [m for m in extract_mentions(pred) if m.kind not in exclude]
        _score_sentence(gold_mentions, pred_mentions, labeled, per_kind, overall)
    total = len(gold_trees)
    return EvalReport(
        overall=overall,
        per_kind=per_kind,
        sentences_total=total,
        sentences_scored=scored,
        sentences_skipped=total - scored,
        skip_reasons=dict(skip_reasons),
        labeled=labeled,
        penalize_skips=penalize_skips,
        excluded_kinds=tuple(sorted(k.value for k in exclude)),
    )


def _as_kind(k) -> NullKind:
    return k if isinstance(k, NullKind) else NullKind(k)


def _kind_counts(per_kind: dict, kind: NullKind) -> Counts:
    c = per_kind.get(kind.value)
    if c is None:
        c = Counts()
        per_kind[kind.value] = c
    return c


def _skip(gold_mentions, reason, skip_reasons, per_kind, overall, penalize) -> None:
    skip_reasons[reason] += 1
    if penalize:
        for m in gold_mentions:
            _kind_counts(per_kind, m.kind).fn += 1
            overall.fn += 1


def _score_sentence(gold_mentions, pred_mentions, labeled, per_kind, overall) -> None:
    gold_keys = Counter(m.key(labeled) for m in gold_mentions)
    pred_keys = Counter(m.key(labeled) for m in pred_mentions)
    for key, n in (gold_keys & pred_keys).items():
        _kind_counts(per_kind, key[0]).tp += n
        overall.tp += n
    for key, n in (gold_keys - pred_keys).items():
        _kind_counts(per_kind, key[0]).fn += n
        overall.fn += n
    for key, n in (pred_keys - gold_keys).items():
        _kind_counts(per_kind, key[0]).fp += n
        overall.fp += n
