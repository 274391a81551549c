"""CLI entry points: train on a dataset directory, predict over a file."""

import argparse
import logging
import sys

from .predict import predict, write_predictions
from .train import train


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="nullseq",
        description="Train and run a seq2seq model over aligned .src/.tgt "
                    "token files.")
    sub = parser.add_subparsers(dest="command", required=True)

    tr = sub.add_parser("train", help="fine-tune on <split>.src/.tgt pairs")
    tr.add_argument("--data", required=True, help="dataset directory")
    tr.add_argument("--config", help="JSON hyperparameter file")
    tr.add_argument("-o", "--checkpoint", default="checkpoint",
                    help="checkpoint output directory")

    pr = sub.add_parser("predict", help="generate one line per source line")
    pr.add_argument("--checkpoint", required=True)
    pr.add_argument("--src", required=True, help="source sequence file")
    pr.add_argument("-o", "--output", required=True, help="predictions file")
    pr.add_argument("--batch-size", type=int, help="inference batch override")

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    if args.command == "train":
        result = train(args.data, args.config, args.checkpoint)
        print(f"{result.pairs} pairs, final epoch loss "
              f"{result.epoch_losses[-1]:.4f}, checkpoint at "
              f"{result.checkpoint_dir}", file=sys.stderr)
    else:
        lines = predict(args.checkpoint, args.src, args.batch_size)
        write_predictions(lines, args.output)
        print(f"{len(lines)} predictions written to {args.output}",
              file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
