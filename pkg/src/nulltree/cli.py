"""Command-line entry point: batch pipelines over treebank files.

Subcommands: parse, strip, restore, linearize, delinearize, make-dataset,
eval, stats.  Option values resolve as flags > NULLTREE_* environment
variables > config file (key = value lines) > defaults.  All pipelines are
sequential and deterministic: identical inputs and flags give byte-identical
outputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .ctb_rules import restore_ctb
from .evaluate import score_corpus
from .heads import load_head_rules
from .linearize import (
    MalformedReport,
    build_pair,
    linearize,
    sequence_to_tree,
)
from .profiles import get_profile
from .ptb_rules import load_word_list, restore_ptb
from .stats import corpus_stats
from .strip import strip_all, strip_annotations, strip_nulls
from .tree import (
    EmptyTreeError,
    Tree,
    TreeParseError,
    ensure_top,
    parse_trees,
    print_tree,
)

LANG_RULES = {"en": "ptb", "zh": "ctb", "ko": None}

CONFIG_KEYS = (
    "lang",
    "rules",
    "report",
    "op_site",
    "with_labels",
    "labeled",
    "penalize_skips",
    "lenient",
)


def _load_config(path: str | None) -> dict:
    """Read `key = value` lines; unknown keys are rejected to catch typos."""
    if path is None:
        if os.path.exists("nulltree.toml"):
            path = "nulltree.toml"
        else:
            return {}
    config: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SystemExit(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if key not in CONFIG_KEYS:
                raise SystemExit(f"{path}:{lineno}: unknown key {key!r}")
            config[key] = value.strip().strip("'\"")
    return config


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _resolve(name: str, flag_value, config: dict, default=None):
    """flags > environment > config file > default."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get("NULLTREE_" + name.upper())
    if env is not None:
        return env
    if name in config:
        return config[name]
    return default


def _resolve_bool(name: str, flag_value, config: dict, default=False) -> bool:
    value = _resolve(name, flag_value, config, default)
    if isinstance(value, bool):
        return value
    value = str(value).lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise SystemExit(f"option {name}: cannot read {value!r} as a boolean")


class _Io:
    """Shared input reading and output writing with strict/lenient modes."""

    def __init__(self, lenient: bool):
        self.lenient = lenient
        self.warnings = 0

    def warn(self, message: str) -> None:
        self.warnings += 1
        print(f"warning: {message}", file=sys.stderr)

    def fail(self, message: str) -> None:
        if self.lenient:
            self.warn(message)
        else:
            raise SystemExit(f"error: {message}")

    def read_corpus(self, paths) -> list:
        """[(sentence_id, tree)] over all input files, in input order."""
        out = []
        for path in paths:
            try:
                text = Path(path).read_text("utf-8")
            except OSError as err:
                raise SystemExit(f"error: cannot read {path}: {err}") from None
            try:
                trees = parse_trees(text)
            except TreeParseError as err:
                self.fail(f"{path}: {err}")
                continue
            stem = Path(path).stem
            out.extend((f"{stem}:{i}", tree) for i, tree in enumerate(trees, 1))
        return out

    def write(self, target: str | None, text: str) -> None:
        if target is None:
            sys.stdout.write(text)
            if text and not text.endswith("\n"):
                sys.stdout.write("\n")
        else:
            Path(target).write_text(
                text if text.endswith("\n") or not text else text + "\n", "utf-8"
            )


def _write_trace_log(path: str, log) -> None:
    lines = []
    for firing in log:
        where = ".".join(str(i) for i in firing.path)
        lines.append(f"{firing.rule}\t{where}\t{print_tree(firing.subtree)}")
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), "utf-8")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="nulltree",
        description="Remove, restore, linearize, and score null elements in "
        "Penn-style treebank trees.",
    )
    parser.add_argument("--config", help="key = value option file")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("inputs", nargs="+", help="input files")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.add_argument("--lenient", action="store_true", default=None,
                       help="warn on malformed input instead of failing")

    p = sub.add_parser("parse", help="parse, normalize, and reprint trees")
    common(p)
    p.add_argument("--validate", action="store_true",
                   help="only check well-formedness, write nothing")

    p = sub.add_parser("strip", help="remove nulls and/or annotations")
    common(p)
    p.add_argument("--mode", choices=("all", "nulls", "annotations"), default="all")

    p = sub.add_parser("restore", help="insert null elements by rule")
    common(p)
    p.add_argument("--rules", choices=("ptb", "ctb"))
    p.add_argument("--lang", choices=("en", "zh", "ko"))
    p.add_argument("--with-labels", dest="with_labels", action="store_true",
                   default=None, help="emit function tags on inserted subjects")
    p.add_argument("--op-site", dest="op_site", choices=("sister", "parent"))
    p.add_argument("--aux-verbs", help="word list file overriding the passive auxiliaries")
    p.add_argument("--wh-nouns", help="word list file overriding the WHADVP head nouns")
    p.add_argument("--trace-log", help="write a rule-firing audit file")

    p = sub.add_parser("linearize", help="trees to sequences, one per line")
    common(p)
    p.add_argument("--with-labels", dest="with_labels", action="store_true", default=None)
    p.add_argument("--without-labels", dest="with_labels", action="store_false")

    p = sub.add_parser("delinearize", help="sequences to trees with dummy words")
    common(p)

    p = sub.add_parser("make-dataset", help="emit .src/.tgt seq2seq files")
    p.add_argument("inputs", nargs="+", help="gold tree files")
    p.add_argument("-o", "--output", required=True, help="output path prefix")
    p.add_argument("--lang", choices=("en", "zh", "ko"))
    p.add_argument("--with-labels", dest="with_labels", action="store_true", default=None)
    p.add_argument("--without-labels", dest="with_labels", action="store_false")
    p.add_argument("--lenient", action="store_true", default=None)

    p = sub.add_parser("eval", help="score predictions against gold")
    p.add_argument("--gold", required=True)
    p.add_argument("--pred", required=True)
    p.add_argument("--gold-format", choices=("trees", "sequences"), default="trees")
    p.add_argument("--pred-format", choices=("trees", "sequences"), default="trees")
    p.add_argument("--labeled", action="store_true", default=None)
    p.add_argument("--penalize-skips", dest="penalize_skips", action="store_true",
                   default=None)
    p.add_argument("--exclude-kinds", help="comma-separated null symbols to ignore")
    p.add_argument("--report", choices=("json", "tsv"))
    p.add_argument("-o", "--output")
    p.add_argument("--lenient", action="store_true", default=None)

    p = sub.add_parser("stats", help="count null elements by kind")
    common(p)
    p.add_argument("--profile", choices=("en", "zh", "ko"))
    p.add_argument("--report", choices=("json", "tsv"))

    args = parser.parse_args(argv)
    config = _load_config(args.config)
    io = _Io(_resolve_bool("lenient", getattr(args, "lenient", None), config))

    handler = {
        "parse": _cmd_parse,
        "strip": _cmd_strip,
        "restore": _cmd_restore,
        "linearize": _cmd_linearize,
        "delinearize": _cmd_delinearize,
        "make-dataset": _cmd_make_dataset,
        "eval": _cmd_eval,
        "stats": _cmd_stats,
    }[args.command]
    return handler(args, config, io)


def _print_corpus(trees) -> str:
    return "\n".join(print_tree(t) for t in trees)


def _cmd_parse(args, config, io) -> int:
    corpus = io.read_corpus(args.inputs)
    if args.validate:
        print(f"{len(corpus)} trees parsed, {io.warnings} warnings", file=sys.stderr)
        return 0 if io.warnings == 0 else (0 if io.lenient else 1)
    io.write(args.output, _print_corpus(t for _, t in corpus))
    return 0


def _cmd_strip(args, config, io) -> int:
    op = {"all": strip_all, "nulls": strip_nulls, "annotations": strip_annotations}[
        args.mode
    ]
    out = []
    for sid, tree in io.read_corpus(args.inputs):
        try:
            out.append(op(tree))
        except EmptyTreeError:
            io.fail(f"{sid}: tree has no overt terminals")
    io.write(args.output, _print_corpus(out))
    return 0


def _pick_rules(args, config) -> str:
    rules = _resolve("rules", args.rules, config)
    if rules is None:
        lang = _resolve("lang", args.lang, config)
        if lang is not None:
            rules = LANG_RULES.get(lang)
            if rules is None:
                raise SystemExit(f"error: no rule set exists for --lang {lang}")
    if rules is None:
        raise SystemExit("error: restore needs --rules ptb|ctb (or --lang en|zh)")
    if rules not in ("ptb", "ctb"):
        raise SystemExit(f"error: unknown rule set {rules!r}")
    return rules


def _cmd_restore(args, config, io) -> int:
    rules = _pick_rules(args, config)
    labeled = _resolve_bool("with_labels", args.with_labels, config)
    op_site = _resolve("op_site", args.op_site, config, "sister")
    aux = load_word_list(args.aux_verbs) if args.aux_verbs else None
    nouns = load_word_list(args.wh_nouns) if args.wh_nouns else None
    head_table = load_head_rules("en") if rules == "ptb" else None
    out = []
    full_log = []
    for sid, tree in io.read_corpus(args.inputs):
        if rules == "ptb":
            restored, log = restore_ptb(
                tree, labeled=labeled, head_table=head_table,
                aux_verbs=aux, wh_nouns=nouns,
            )
        else:
            restored, log = restore_ctb(tree, op_site=op_site)
        out.append(restored)
        full_log.extend(log)
    io.write(args.output, _print_corpus(out))
    if args.trace_log:
        _write_trace_log(args.trace_log, full_log)
    return 0


def _cmd_linearize(args, config, io) -> int:
    wfl = _resolve_bool("with_labels", args.with_labels, config)
    lines = [
        linearize(ensure_top(tree), wfl).text()
        for _, tree in io.read_corpus(args.inputs)
    ]
    io.write(args.output, "\n".join(lines))
    return 0


def _cmd_delinearize(args, config, io) -> int:
    out = []
    for path in args.inputs:
        for lineno, raw in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            if not raw.strip():
                continue
            result = sequence_to_tree(raw)
            if isinstance(result, MalformedReport):
                io.fail(f"{path}:{lineno}: {result.reason} ({result.detail})")
                continue
            out.append(result)
    io.write(args.output, _print_corpus(out))
    return 0


def _cmd_make_dataset(args, config, io) -> int:
    wfl = _resolve_bool("with_labels", args.with_labels, config)
    lang = _resolve("lang", args.lang, config, "en")
    src_lines, tgt_lines, ids, skipped = [], [], [], []
    for sid, tree in io.read_corpus(args.inputs):
        try:
            pair = build_pair(tree, wfl, sid)
        except EmptyTreeError:
            io.warn(f"{sid}: skipped, no overt terminals")
            skipped.append(sid)
            continue
        src_lines.append(pair.source.text())
        tgt_lines.append(pair.target.text())
        ids.append(sid)
    prefix = args.output
    Path(prefix + ".src").write_text("\n".join(src_lines) + "\n", "utf-8")
    Path(prefix + ".tgt").write_text("\n".join(tgt_lines) + "\n", "utf-8")
    manifest = {
        "language": lang,
        "with_function_labels": wfl,
        "pairs": len(ids),
        "sentence_ids": ids,
        "skipped": skipped,
    }
    Path(prefix + ".manifest.json").write_text(
        json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", "utf-8"
    )
    print(f"{len(ids)} pairs written to {prefix}.src/.tgt", file=sys.stderr)
    return 0


def _read_eval_side(path: str, fmt: str, io) -> list:
    """Trees for scoring: Tree entries, or MalformedReport for bad sequences."""
    if fmt == "trees":
        return [t for _, t in io.read_corpus([path])]
    # every line is a sentence slot; blank lines surface as empty-sequence
    # reports so a sparse prediction file cannot shift the alignment
    return [sequence_to_tree(raw)
            for raw in Path(path).read_text("utf-8").splitlines()]


def _cmd_eval(args, config, io) -> int:
    gold = _read_eval_side(args.gold, args.gold_format, io)
    pred = _read_eval_side(args.pred, args.pred_format, io)
    bad_gold = [g for g in gold if not isinstance(g, Tree)]
    if bad_gold:
        raise SystemExit(
            f"error: {len(bad_gold)} gold sentences are malformed; "
            "gold input must be clean"
        )
    if len(gold) != len(pred):
        raise SystemExit(
            f"error: gold has {len(gold)} sentences, predictions {len(pred)}"
        )
    exclude = []
    raw_exclude = _resolve("exclude_kinds", args.exclude_kinds, config)
    if raw_exclude:
        exclude = [k.strip() for k in str(raw_exclude).split(",") if k.strip()]
    report = score_corpus(
        gold,
        pred,
        labeled=_resolve_bool("labeled", args.labeled, config),
        penalize_skips=_resolve_bool("penalize_skips", args.penalize_skips, config),
        exclude_kinds=exclude,
    )
    fmt = _resolve("report", args.report, config, "json")
    io.write(args.output, report.to_json() if fmt == "json" else report.to_tsv())
    return 0


def _cmd_stats(args, config, io) -> int:
    profile = get_profile(_resolve("lang", args.profile, config, "en"))
    report = corpus_stats((t for _, t in io.read_corpus(args.inputs)), profile)
    fmt = _resolve("report", args.report, config, "json")
    io.write(args.output, report.to_json() if fmt == "json" else report.to_tsv())
    return 0


if __name__ == "__main__":
    sys.exit(main())
