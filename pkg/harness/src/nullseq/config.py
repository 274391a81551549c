"""Training and decoding configuration.

A config is a flat dict loaded from JSON. Missing keys take the defaults
below; unknown keys are rejected so typos fail loudly instead of being
silently ignored.
"""

import json
from pathlib import Path

DEFAULTS = {
    # optimization
    "learning_rate": 1e-4,
    "batch_size": 16,
    "epochs": 10,
    "lr_schedule": "constant",  # "constant" or "linear" (decay to a 5% floor)
    "weight_decay": 0.0,
    "seed": 13,
    # sequence budgets
    "max_input_length": 512,
    "max_new_tokens": 3500,
    # decoding
    "num_beams": 1,  # 1 = greedy
    # data
    "split": "train",
    "task_prefix": "",  # prepended to sources inside the harness only
    # model; model_dir loads local pretrained weights and overrides the dims
    "model_dir": None,
    "d_model": 64,
    "d_kv": 16,
    "d_ff": 256,
    "num_layers": 2,
    "num_heads": 4,
    "dropout": 0.1,
}

_SCHEDULES = ("constant", "linear")


def load_config(source=None) -> dict:
    """Resolve a config from a JSON file path, a dict, or None (defaults)."""
    cfg = dict(DEFAULTS)
    if source is None:
        return cfg
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as handle:
            overrides = json.load(handle)
    else:
        overrides = dict(source)
    unknown = sorted(set(overrides) - set(DEFAULTS))
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(unknown)}")
    cfg.update(overrides)
    if cfg["lr_schedule"] not in _SCHEDULES:
        raise ValueError(f"lr_schedule must be one of {_SCHEDULES}")
    for key in ("batch_size", "epochs", "max_input_length", "max_new_tokens",
                "num_beams"):
        if int(cfg[key]) < 1:
            raise ValueError(f"{key} must be a positive integer")
        cfg[key] = int(cfg[key])
    return cfg
