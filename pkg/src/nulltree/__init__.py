"""Treebank null-element toolkit.

Parsing and printing of Penn-style bracketed trees, removal and rule-based
restoration of null elements (English PTB and Chinese CTB conventions),
linearization to seq2seq token streams, and a null-element-only bracket
scorer.
"""

from .ctb_rules import restore_ctb
from .evaluate import EvalReport, NullMention, extract_mentions, score_corpus
from .heads import HeadRuleTable, head_child, head_terminal, load_head_rules
from .linearize import (
    DatasetPair,
    LinearSequence,
    MalformedReport,
    MalformedSequenceError,
    build_pair,
    delinearize,
    erase_nulls,
    linearize,
    sequence_to_tree,
    validate_sequence,
)
from .profiles import CHINESE, ENGLISH, KOREAN, LanguageProfile, get_profile
from .ptb_rules import restore_ptb
from .rules_common import RuleFiring
from .stats import StatsReport, corpus_stats, format_ratio
from .strip import strip_all, strip_annotations, strip_nulls
from .tree import (
    EmptyTreeError,
    NodeLabel,
    NullKind,
    NullSymbol,
    Tree,
    TreeParseError,
    TreeValidationError,
    ensure_top,
    null_leaves,
    overt_terminals,
    parse_trees,
    print_tree,
)

__version__ = "0.1.0"

__all__ = [
    "CHINESE",
    "DatasetPair",
    "ENGLISH",
    "EmptyTreeError",
    "EvalReport",
    "HeadRuleTable",
    "KOREAN",
    "LanguageProfile",
    "LinearSequence",
    "MalformedReport",
    "MalformedSequenceError",
    "NodeLabel",
    "NullKind",
    "NullMention",
    "NullSymbol",
    "RuleFiring",
    "StatsReport",
    "Tree",
    "TreeParseError",
    "TreeValidationError",
    "build_pair",
    "corpus_stats",
    "format_ratio",
    "delinearize",
    "ensure_top",
    "erase_nulls",
    "extract_mentions",
    "get_profile",
    "head_child",
    "head_terminal",
    "linearize",
    "load_head_rules",
    "null_leaves",
    "overt_terminals",
    "parse_trees",
    "print_tree",
    "restore_ctb",
    "restore_ptb",
    "score_corpus",
    "sequence_to_tree",
    "strip_all",
    "strip_annotations",
    "strip_nulls",
    "validate_sequence",
]
