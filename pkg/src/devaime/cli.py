"""Command-line interface: lexicon building, queries, transliteration,
scheme evaluation, and the HTTP service."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import evaluate
from .chartable import load_default_table, load_table_file
from .engine import EngineConfig, FALLBACK, direct_map, suggest, transliterate_sentence
from .errors import DevaError
from .lexicon import build_lexicon, ingest_corpus, load_lexicon, save_lexicon
from .server import ServiceState, make_server

LEXICON_ENV = "DEVA_LEXICON"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deva",
        description="Phonetic roman-to-Devanagari input method tools.",
    )
    parser.add_argument(
        "--table",
        metavar="TSV",
        help="character table override (default: built-in table)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lexicon", help="count corpus words into a lexicon file")
    p.add_argument("--corpus", action="append", required=True, metavar="FILE",
                   help="UTF-8 corpus file (repeatable)")
    p.add_argument("--out", required=True, metavar="FILE", help="lexicon TSV to write")

    p = sub.add_parser("suggest", help="ranked candidates for one roman token")
    p.add_argument("query")
    p.add_argument("--lexicon", metavar="FILE", help="lexicon TSV (or $%s)" % LEXICON_ENV)
    p.add_argument("--limit", type=int, default=5, help="max suggestions (default 5)")
    p.add_argument("--direct", action="store_true", help="bypass the lexicon")

    p = sub.add_parser("translit", help="transliterate a whole sentence")
    p.add_argument("text")
    p.add_argument("--lexicon", metavar="FILE", help="lexicon TSV (or $%s)" % LEXICON_ENV)
    p.add_argument("--limit", type=int, default=5, help="max suggestions per token")
    p.add_argument("--direct", action="store_true", help="bypass the lexicon")

    p = sub.add_parser("eval", help="score encoding schemes against subject responses")
    p.add_argument("--responses", required=True, metavar="TSV",
                   help="rows: charId, subjectId, spelling")
    p.add_argument("--scheme", action="append", required=True, metavar="[NAME=]TSV",
                   help="scheme file, rows: charId, proposed (repeatable)")
    p.add_argument("--freqs", required=True, metavar="TSV",
                   help="rows: charId, weight (weights sum to 1)")
    p.add_argument("--out", metavar="TSV", help="also write machine-readable summary")

    p = sub.add_parser("serve", help="run the HTTP suggestion service")
    p.add_argument("--lexicon", metavar="FILE", help="lexicon TSV (or $%s)" % LEXICON_ENV)
    p.add_argument("--port", type=int, default=8775)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--limit", type=int, default=5, help="default suggestion limit")
    p.add_argument("--cors", default="*", help="Access-Control-Allow-Origin value")
    return parser


def _load_table(args):
    if args.table:
        return load_table_file(args.table)
    return load_default_table()


def _load_lexicon(args, table):
    path = getattr(args, "lexicon", None) or os.environ.get(LEXICON_ENV)
    if getattr(args, "direct", False) or not path:
        return build_lexicon({}, table)[0]
    return load_lexicon(path, table)


def _cmd_build_lexicon(args) -> int:
    table = _load_table(args)
    counts: dict[str, int] = {}
    for corpus_path in args.corpus:
        try:
            raw = Path(corpus_path).read_bytes()
        except OSError as exc:
            print("deva: cannot read corpus %s: %s" % (corpus_path, exc), file=sys.stderr)
            return 1
        for word, freq in ingest_corpus(raw).items():
            counts[word] = counts.get(word, 0) + freq
    lex, skipped = build_lexicon(counts, table)
    if skipped:
        print(
            "deva: skipped %d word(s) outside the character table" % len(skipped),
            file=sys.stderr,
        )
    save_lexicon(lex, args.out)
    print("%d words, %d tokens -> %s" % (len(lex), lex.total_tokens, args.out))
    return 0


def _cmd_suggest(args) -> int:
    table = _load_table(args)
    cfg = EngineConfig(max_suggestions=args.limit)
    if args.direct:
        print("1\t%s\t0\t%s" % (direct_map(table, args.query), FALLBACK))
        return 0
    lex = _load_lexicon(args, table)
    for rank, s in enumerate(suggest(lex, table, cfg, args.query), 1):
        print("%d\t%s\t%d\t%s" % (rank, s.word, s.frequency, s.source))
    return 0


def _cmd_translit(args) -> int:
    table = _load_table(args)
    lex = _load_lexicon(args, table)
    cfg = EngineConfig(max_suggestions=args.limit)
    print(transliterate_sentence(lex, table, cfg, args.text))
    return 0


def _cmd_eval(args) -> int:
    responses = evaluate.read_responses(args.responses)
    freqs = evaluate.read_frequencies(args.freqs)
    schemes = []
    for spec_arg in args.scheme:
        name, sep, path = spec_arg.partition("=")
        if not sep:
            name, path = Path(spec_arg).stem, spec_arg
        schemes.append(evaluate.read_scheme(path, name))
    reports = evaluate.compare_schemes(responses, schemes, freqs)
    sys.stdout.write(evaluate.report_table(reports))
    if args.out:
        Path(args.out).write_text(evaluate.report_tsv(reports), encoding="utf-8")
    return 0


def _cmd_serve(args) -> int:
    table = _load_table(args)
    lex = _load_lexicon(args, table)
    state = ServiceState(
        table=table,
        lexicon=lex,
        config=EngineConfig(max_suggestions=args.limit),
        cors_origin=args.cors,
    )
    server = make_server(state, host=args.host, port=args.port)
    host, port = server.server_address[:2]
    # flush so wrappers watching the pipe see the bound port immediately
    print(
        "serving %d lexicon entries on http://%s:%d" % (len(lex), host, port),
        flush=True,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


_COMMANDS = {
    "build-lexicon": _cmd_build_lexicon,
    "suggest": _cmd_suggest,
    "translit": _cmd_translit,
    "eval": _cmd_eval,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DevaError as exc:
        print("deva: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("deva: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
