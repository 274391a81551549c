"""Fine-tune a small text-to-text transformer on aligned token files."""

import json
import logging
import random
from dataclasses import dataclass
from pathlib import Path

import torch
from transformers import T5Config, T5ForConditionalGeneration
from transformers.utils import logging as hf_logging

from .config import load_config
from .data import read_split, with_prefix
from .vocab import EOS, PAD, Vocab

log = logging.getLogger("nullseq")

# checkpoint shard read/write bars are noise on a model this size
hf_logging.disable_progress_bar()


@dataclass
class TrainResult:
    checkpoint_dir: str
    epoch_losses: list
    pairs: int
    truncated_sources: int
    truncated_targets: int


def pad_block(seqs, fill) -> torch.Tensor:
    width = max(len(s) for s in seqs)
    return torch.tensor([s + [fill] * (width - len(s)) for s in seqs],
                        dtype=torch.long)


def build_model(cfg: dict, vocab_size: int):
    """A randomly initialized encoder-decoder, or local pretrained weights.

    With no reachable pretrained checkpoint the harness trains from
    scratch at the configured dims; point model_dir at a local
    save_pretrained directory to fine-tune real weights instead.
    """
    if cfg["model_dir"]:
        return T5ForConditionalGeneration.from_pretrained(cfg["model_dir"])
    arch = T5Config(
        vocab_size=vocab_size,
        d_model=cfg["d_model"],
        d_kv=cfg["d_kv"],
        d_ff=cfg["d_ff"],
        num_layers=cfg["num_layers"],
        num_heads=cfg["num_heads"],
        dropout_rate=cfg["dropout"],
        decoder_start_token_id=PAD,
        pad_token_id=PAD,
        eos_token_id=EOS,
    )
    return T5ForConditionalGeneration(arch)


def _encode_corpus(lines, vocab, budget):
    encoded, clipped = [], 0
    for line in lines:
        ids, was_clipped = vocab.encode(line, budget)
        encoded.append(ids)
        clipped += was_clipped
    return encoded, clipped


def train(dataset_dir, config=None, checkpoint_dir="checkpoint") -> TrainResult:
    """Train on `<split>.src`/`<split>.tgt` and save a checkpoint directory.

    The checkpoint holds the model weights (save_pretrained layout), the
    vocabulary, the resolved config, and the per-epoch loss log.
    """
    cfg = load_config(config)
    torch.manual_seed(cfg["seed"])
    random.seed(cfg["seed"])

    sources, targets = read_split(dataset_dir, cfg["split"])
    sources = [with_prefix(s, cfg["task_prefix"]) for s in sources]
    vocab = Vocab.from_lines(sources + targets)
    enc_src, src_clipped = _encode_corpus(sources, vocab, cfg["max_input_length"])
    enc_tgt, tgt_clipped = _encode_corpus(targets, vocab, cfg["max_new_tokens"])
    if src_clipped or tgt_clipped:
        log.warning("truncated %d over-length source and %d target sequences",
                    src_clipped, tgt_clipped)

    model = build_model(cfg, len(vocab))
    model.train()
    optimizer = torch.optim.AdamW(model.parameters(), lr=cfg["learning_rate"],
                                  weight_decay=cfg["weight_decay"])
    batch_size = cfg["batch_size"]
    steps_per_epoch = (len(sources) + batch_size - 1) // batch_size
    total_steps = steps_per_epoch * cfg["epochs"]
    if cfg["lr_schedule"] == "linear":
        factor = lambda step: max(0.05, 1.0 - step / total_steps)
    else:
        factor = lambda step: 1.0
    scheduler = torch.optim.lr_scheduler.LambdaLR(optimizer, factor)

    order = list(range(len(sources)))
    shuffler = random.Random(cfg["seed"])
    losses = []
    for epoch in range(cfg["epochs"]):
        shuffler.shuffle(order)
        running, batches = 0.0, 0
        for start in range(0, len(order), batch_size):
            chunk = order[start:start + batch_size]
            x = pad_block([enc_src[i] for i in chunk], PAD)
            # -100 marks positions the loss ignores
            y = pad_block([enc_tgt[i] for i in chunk], -100)
            optimizer.zero_grad()
            loss = model(input_ids=x, attention_mask=(x != PAD).long(),
                         labels=y).loss
            loss.backward()
            optimizer.step()
            scheduler.step()
            running += loss.item()
            batches += 1
        losses.append(running / batches)
        log.info("epoch %d/%d loss %.4f", epoch + 1, cfg["epochs"], losses[-1])

    out = Path(checkpoint_dir)
    out.mkdir(parents=True, exist_ok=True)
    model.save_pretrained(out / "model")
    vocab.save(out / "vocab.json")
    (out / "config.json").write_text(
        json.dumps(cfg, indent=2) + "\n", encoding="utf-8")
    (out / "training_log.json").write_text(
        json.dumps({"epoch_losses": losses,
                    "pairs": len(sources),
                    "truncated_sources": src_clipped,
                    "truncated_targets": tgt_clipped}, indent=2) + "\n",
        encoding="utf-8")
    return TrainResult(str(out), losses, len(sources), src_clipped, tgt_clipped)
