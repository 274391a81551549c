"""Whitespace-token vocabulary with pad/eos/unk specials.

Dataset tokens form a small closed inventory (bracket tokens, POS tags,
null symbols), so plain str.split tokenization is lossless; no subword
model is involved and the dataset files carry no special tokens.
"""

import json

PAD, EOS, UNK = 0, 1, 2
SPECIALS = ("<pad>", "</s>", "<unk>")


class Vocab:
    def __init__(self, itos):
        self.itos = list(itos)
        self.stoi = {tok: i for i, tok in enumerate(self.itos)}

    def __len__(self):
        return len(self.itos)

    @classmethod
    def from_lines(cls, lines) -> "Vocab":
        tokens = sorted({tok for line in lines for tok in line.split()}
                        - set(SPECIALS))
        return cls(list(SPECIALS) + tokens)

    def encode(self, line: str, max_length: int):
        """Token ids plus EOS, clipped to max_length. Returns (ids, clipped)."""
        ids = [self.stoi.get(tok, UNK) for tok in line.split()]
        clipped = len(ids) > max_length - 1
        return ids[: max_length - 1] + [EOS], clipped

    def decode(self, ids) -> str:
        """Ids back to a token line: stop at EOS, drop pads."""
        out = []
        for i in ids:
            if i == EOS:
                break
            if i == PAD:
                continue
            out.append(self.itos[i] if 0 <= i < len(self.itos) else SPECIALS[UNK])
        return " ".join(out)

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(self.itos, handle, ensure_ascii=False, indent=0)

    @classmethod
    def load(cls, path) -> "Vocab":
        with open(path, encoding="utf-8") as handle:
            return cls(json.load(handle))
