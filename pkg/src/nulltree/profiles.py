"""Per-language settings: which null kinds a treebank uses, and which POS
categories are punctuation."""

from __future__ import annotations

from dataclasses import dataclass

from .tree import NullKind

__all__ = ["LanguageProfile", "ENGLISH", "CHINESE", "KOREAN", "PROFILES", "get_profile"]


@dataclass(frozen=True)
class LanguageProfile:
    language: str
    allowed_kinds: frozenset
    punctuation_pos: frozenset


ENGLISH = LanguageProfile(
    "english",
    frozenset(
        {NullKind.TRACE, NullKind.STAR, NullKind.UNIT, NullKind.ZERO, NullKind.RNR}
    ),
    frozenset({".", ",", ":", "``", "''", "-LRB-", "-RRB-"}),
)

CHINESE = LanguageProfile(
    "chinese",
    frozenset(
        {
            NullKind.TRACE,
            NullKind.BIG_PRO,
            NullKind.SMALL_PRO,
            NullKind.OPERATOR,
            NullKind.RNR,
        }
    ),
    frozenset({"PU"}),
)

KOREAN = LanguageProfile(
    "korean",
    frozenset(
        {NullKind.TRACE, NullKind.SMALL_PRO, NullKind.OPERATOR, NullKind.UNKNOWN_PRED}
    ),
    frozenset({"SFN", "SCM", "SLQ", "SRQ", "SSY"}),
)

PROFILES = {
    "en": ENGLISH,
    "zh": CHINESE,
    "ko": KOREAN,
    "english": ENGLISH,
    "chinese": CHINESE,
    "korean": KOREAN,
}


def get_profile(name: str) -> LanguageProfile:
    try:
        return PROFILES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown language {name!r} (use en, zh, or ko)") from None
