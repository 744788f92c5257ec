"""Command-line interface.

    dreamtext stats FILE...
    dreamtext derive --defaults FILE... [--stopwords PATH] [--output PATH] [--jobs N]
    dreamtext derive --config CONFIG.json [--stopwords PATH] [--output PATH] [--jobs N]
    dreamtext resources stopwords

Exit status is 0 on success, 1 on a usage error and 2 on a data or
validation error (missing file, undecodable input, bad config).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import DEFAULT_SPECS, parse_config
from .corpus import concat_corpora, corpus_stats, load_corpus
from .derive import run_all
from .errors import DreamTextError
from .lexicon import default_stopwords, load_stopwords
from .render import StatsReport, render_document, render_stats

log = logging.getLogger("dreamtext")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dreamtext", description="Mine dream descriptions into derived texts.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    stats = sub.add_parser("stats", help="print character/token/sentence/paragraph counts")
    stats.add_argument("files", nargs="+", type=Path)

    derive = sub.add_parser("derive", help="run derivations and print the document")
    group = derive.add_mutually_exclusive_group(required=True)
    group.add_argument("--config", type=Path, help="JSON run configuration")
    group.add_argument("--defaults", nargs="+", type=Path, metavar="FILE",
                       help="run the built-in derivation set on these corpora")
    derive.add_argument("--stopwords", type=Path, help="stopword file, one word per line")
    derive.add_argument("--output", "-o", type=Path, help="write the document here instead of stdout")
    derive.add_argument("--jobs", "-j", type=int, default=1, help="derivation threads")

    res = sub.add_parser("resources", help="print embedded resources")
    res.add_argument("resource", choices=["stopwords"])
    return parser


def _write(text: str, path: Optional[Path] = None) -> None:
    data = text.encode("utf-8")
    if path is not None:
        path.write_bytes(data)
        return
    sys.stdout.flush()
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _cmd_stats(args) -> int:
    rows = []
    for path in args.files:
        corpus = load_corpus(path)
        rows.append((path.name, corpus_stats(corpus)))
    _write(render_stats(StatsReport(tuple(rows))))
    return EXIT_OK


def _cmd_derive(args) -> int:
    stopword_path = args.stopwords
    output = args.output
    if args.config is not None:
        config = parse_config(args.config.read_text("utf-8"))
        base = args.config.parent
        paths = [base / p for p in config.corpus_paths]
        if stopword_path is None and config.stopword_path:
            stopword_path = base / config.stopword_path
        if output is None and config.output_path:
            output = base / config.output_path
        specs = config.specs
    else:
        paths = list(args.defaults)
        specs = DEFAULT_SPECS
    stopwords = load_stopwords(stopword_path)
    corpus = concat_corpora([load_corpus(p) for p in paths])
    log.info("corpus %s: %d paragraphs", corpus.source_name, len(corpus.paragraphs))
    texts = run_all(corpus, stopwords, specs, jobs=args.jobs)
    _write(render_document(texts), output)
    return EXIT_OK


def _cmd_resources(args) -> int:
    stopwords = default_stopwords()
    _write("".join(w + "\n" for w in stopwords.words))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    commands = {"stats": _cmd_stats, "derive": _cmd_derive, "resources": _cmd_resources}
    try:
        return commands[args.command](args)
    except OSError as exc:
        name = exc.filename if exc.filename is not None else ""
        print(f"dreamtext: error: {name}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_DATA
    except DreamTextError as exc:
        print(f"dreamtext: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
