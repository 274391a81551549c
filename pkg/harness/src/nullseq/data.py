"""Aligned .src/.tgt split loading."""

from pathlib import Path


def read_lines(path) -> list:
    return Path(path).read_text(encoding="utf-8").splitlines()


def read_split(dataset_dir, split: str = "train"):
    """Load the aligned pair files `<split>.src` / `<split>.tgt`.

    Splits are never invented here: the files must exist. As a
    convenience, when the requested split is absent but the directory
    holds exactly one .src file, that file's prefix is used instead
    (dataset writers pick their own prefixes).
    """
    root = Path(dataset_dir)
    if not root.is_dir():
        raise FileNotFoundError(f"dataset directory not found: {root}")
    src = root / f"{split}.src"
    if not src.exists():
        candidates = sorted(root.glob("*.src"))
        if len(candidates) != 1:
            raise FileNotFoundError(
                f"no {split}.src in {root} and no unique .src fallback")
        src = candidates[0]
    tgt = src.with_suffix(".tgt")
    if not tgt.exists():
        raise FileNotFoundError(f"missing target file: {tgt}")
    sources = read_lines(src)
    targets = read_lines(tgt)
    if len(sources) != len(targets):
        raise ValueError(
            f"misaligned split {src.stem}: {len(sources)} source lines "
            f"vs {len(targets)} target lines")
    if not sources:
        raise ValueError(f"empty dataset: {src}")
    return sources, targets


def with_prefix(line: str, prefix: str) -> str:
    return f"{prefix} {line}" if prefix else line
