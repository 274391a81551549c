"""Seq2seq harness for null-element restoration as sequence transduction.

Trains a small encoder-decoder transformer on aligned .src/.tgt token
files (stripped tree in, tree with nulls out) and writes raw prediction
files, one sequence per line, for downstream scoring. The harness knows
nothing about trees; it moves whitespace tokens.
"""

from .config import DEFAULTS, load_config
from .data import read_split
from .predict import load_checkpoint, predict
from .train import TrainResult, train
from .vocab import Vocab

__version__ = "0.1.0"

__all__ = [
    "DEFAULTS",
    "TrainResult",
    "Vocab",
    "load_checkpoint",
    "load_config",
    "predict",
    "read_split",
    "train",
]
