"""Batched greedy/beam generation over a source file."""

import json
import logging
from pathlib import Path

import torch
from transformers import T5ForConditionalGeneration

from .config import DEFAULTS
from .data import read_lines, with_prefix
from .train import pad_block
from .vocab import PAD, Vocab

log = logging.getLogger("nullseq")


def load_checkpoint(checkpoint_dir):
    root = Path(checkpoint_dir)
    model_dir = root / "model"
    vocab_path = root / "vocab.json"
    config_path = root / "config.json"
    if not (model_dir.is_dir() and vocab_path.exists() and config_path.exists()):
        raise FileNotFoundError(f"not a harness checkpoint: {root}")
    cfg = dict(DEFAULTS)
    cfg.update(json.loads(config_path.read_text(encoding="utf-8")))
    vocab = Vocab.load(vocab_path)
    model = T5ForConditionalGeneration.from_pretrained(model_dir)
    model.eval()
    return model, vocab, cfg


def predict(checkpoint_dir, src_file, batch_size=None) -> list:
    """One raw output line per source line, in order, no filtering.

    Whether a generated sequence is a well-formed tree is the scorer's
    concern, not the harness's; malformed lines pass through untouched.
    """
    model, vocab, cfg = load_checkpoint(checkpoint_dir)
    path = Path(src_file)
    if not path.exists():
        raise FileNotFoundError(f"source file not found: {path}")
    lines = read_lines(path)
    size = batch_size or cfg["batch_size"]
    clipped = 0
    outputs = []
    with torch.no_grad():
        for start in range(0, len(lines), size):
            encoded = []
            for line in lines[start:start + size]:
                ids, was_clipped = vocab.encode(
                    with_prefix(line, cfg["task_prefix"]),
                    cfg["max_input_length"])
                encoded.append(ids)
                clipped += was_clipped
            x = pad_block(encoded, PAD)
            generated = model.generate(
                input_ids=x,
                attention_mask=(x != PAD).long(),
                max_new_tokens=cfg["max_new_tokens"],
                num_beams=cfg["num_beams"],
                do_sample=False,
            )
            outputs.extend(vocab.decode(row.tolist()) for row in generated)
    if clipped:
        log.warning("truncated %d over-length source sequences", clipped)
    if len(outputs) != len(lines):
        raise RuntimeError(
            f"line count broke: {len(lines)} sources, {len(outputs)} outputs")
    return outputs


def write_predictions(lines, path) -> None:
    Path(path).write_text("".join(line + "\n" for line in lines),
                          encoding="utf-8")
