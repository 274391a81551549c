"""Corpus counts of null elements by kind, with per-sentence ratios."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .profiles import LanguageProfile
from .tree import null_leaves

__all__ = ["StatsReport", "corpus_stats", "format_ratio"]


def format_ratio(value: float) -> str:
    """Two significant figures, the display precision of per-sentence rates."""
    return f"{value:.2g}"


@dataclass
class StatsReport:
    language: str
    sentence_count: int
    counts: dict  # kind symbol -> int, profile kinds always present
    unexpected: dict  # kind symbol -> int, kinds outside the profile

    def ratio(self, kind: str) -> float:
        if self.sentence_count == 0:
            return 0.0
        return self.counts.get(kind, self.unexpected.get(kind, 0)) / self.sentence_count

    def to_json(self) -> str:
        doc = {
            "language": self.language,
            "sentences": self.sentence_count,
            "kinds": {
                kind: {
                    "count": count,
                    "ratio": self.ratio(kind),
                    "ratio_display": format_ratio(self.ratio(kind)),
                }
                for kind, count in sorted(self.counts.items())
            },
            "unexpected": {
                kind: {
                    "count": count,
                    "ratio": self.ratio(kind),
                    "ratio_display": format_ratio(self.ratio(kind)),
                }
                for kind, count in sorted(self.unexpected.items())
            },
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)

    def to_tsv(self) -> str:
        lines = ["kind\tcount\tper_sentence"]
        for kind, count in sorted(self.counts.items()):
            lines.append(f"{kind}\t{count}\t{format_ratio(self.ratio(kind))}")
        for kind, count in sorted(self.unexpected.items()):
            lines.append(
                f"{kind} (unexpected)\t{count}\t{format_ratio(self.ratio(kind))}"
            )
        lines.append(f"sentences\t{self.sentence_count}\t")
        return "\n".join(lines)


def corpus_stats(trees, profile: LanguageProfile) -> StatsReport:
    counts = {kind.value: 0 for kind in profile.allowed_kinds}
    unexpected: dict = {}
    n = 0
    for tree in trees:
        n += 1
        for sym, _ in null_leaves(tree):
            if sym.kind in profile.allowed_kinds:
                counts[sym.kind.value] += 1
            else:
                unexpected[sym.kind.value] = unexpected.get(sym.kind.value, 0) + 1
    return StatsReport(profile.language, n, counts, unexpected)
