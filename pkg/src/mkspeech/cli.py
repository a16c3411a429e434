"""Command-line entry point.

Exit codes: 0 success, 1 validation or usage problem, 2 I/O failure.
"""

import argparse
import sys
from pathlib import Path

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _render_word(analysis) -> str:
    if analysis.phones is None:
        return f"<{analysis.token.text}>"
    out = []
    for p in analysis.phones.phones:
        mark = "'" if p.stressed else ""
        syl = "=" if p.syllabic else ""
        out.append(f"{mark}{p.id}{syl}")
    return " ".join(out)


def _cmd_g2p(args) -> int:
    from .phonology import StressLexicon, front_end, validate_lexicon

    lexicon = None
    if args.lexicon:
        lexicon = StressLexicon.load(args.lexicon)
        validate_lexicon(lexicon)
    if args.text is not None:
        text = args.text
    else:
        text = Path(args.file).read_text("utf-8")
    result = front_end(text, lexicon)
    for phrase in result.phrases:
        if args.format == "phones":
            print(" | ".join(_render_word(w) for w in phrase.words))
        else:
            for w in phrase.words:
                status = w.error or "ok"
                print(f"{w.token.text}\t{_render_word(w)}\t{status}")
            print("#")
    for err in result.errors:
        print(f"warning: {err}", file=sys.stderr)
    return EXIT_OK


def _cmd_select_corpus(args) -> int:
    from .corpus import (
        coverage_report,
        greedy_select,
        load_candidates,
        render_coverage_report,
        write_selection,
    )

    candidates = load_candidates(args.input)
    selection, state = greedy_select(
        candidates, args.count, min_len=args.min_words, max_len=args.max_words
    )
    universe = set()
    for c in candidates:
        universe |= set(c.diphones)
    report = coverage_report(state, universe)
    if args.output:
        write_selection(args.output, selection)
    else:
        for rank, cand in enumerate(selection, 1):
            print(f"{rank}\t{cand.id}\t{cand.text}")
    sys.stderr.write(render_coverage_report(report))
    return EXIT_OK


def _cmd_invert(args) -> int:
    from .dsp import (
        MelSpectrogram,
        griffin_lim,
        load_any_spectrogram,
        mel_to_linear,
        write_wav,
    )

    spec = load_any_spectrogram(args.mel)
    mag = mel_to_linear(spec) if isinstance(spec, MelSpectrogram) else spec
    signal = griffin_lim(mag, iters=args.iters, seed=args.seed)
    write_wav(args.out, signal, mag.params.sample_rate)
    print(f"wrote {args.out}: {len(signal)} samples at {mag.params.sample_rate} Hz")
    return EXIT_OK


def _cmd_anchor(args) -> int:
    from .dsp import lowpass_anchor, read_wav, write_wav

    signal, rate = read_wav(args.infile)
    filtered = lowpass_anchor(signal, args.cutoff, rate)
    write_wav(args.out, filtered, rate)
    print(f"wrote {args.out}: {args.cutoff} Hz low-pass at {rate} Hz")
    return EXIT_OK


def _cmd_stft_distance(args) -> int:
    from .dsp import mr_stft_distance, read_wav, resample

    x, rate_x = read_wav(args.a)
    y, rate_y = read_wav(args.b)
    if rate_y != rate_x:
        y = resample(y, rate_y, rate_x)
    result = mr_stft_distance(x, y)
    print(f"distance: {result.total:.6f}")
    for term in result.terms:
        p = term.params
        print(
            f"  fft={p.fft_size} win={p.win_size} hop={p.hop}: "
            f"sc={term.spectral_convergence:.6f} log_l1={term.log_magnitude_l1:.6f}"
        )
    return EXIT_OK


def _cmd_stats(args) -> int:
    from .stats import (
        apply_screen,
        boxplot_csv,
        mos_table,
        mushra_aggregate,
        mushra_post_screen,
        read_records,
        render_mos_table,
        render_mushra_report,
    )

    # exports mix both scales; each subcommand works on its own slice
    records = [r for r in read_records(args.infile) if r.scale == args.which]
    if not records:
        print(f"error: no {args.which} records in {args.infile}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.which == "mos":
        table = mos_table(records, natural_condition=args.natural)
        print(render_mos_table(table, natural_condition=args.natural), end="")
    else:
        screen = None
        if not args.no_screen:
            screen = mushra_post_screen(records)
            records = apply_screen(records, screen)
        summaries = mushra_aggregate(records)
        print(render_mushra_report(summaries, screen), end="")
        if args.boxplot:
            Path(args.boxplot).write_text(boxplot_csv(summaries), "utf-8")
            print(f"boxplot stats written to {args.boxplot}", file=sys.stderr)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import TestStore, create_app, load_definition_dir

    test_dir = Path(args.test_dir)
    store = TestStore(test_dir / "state")
    app = create_app(store, definition_dir=test_dir)
    loaded = load_definition_dir(store, test_dir)
    print(f"loaded {len(loaded)} test definition(s) from {test_dir}: {', '.join(loaded)}")
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mkspeech", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("g2p", help="text to phones")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text", help="literal text")
    group.add_argument("--file", help="UTF-8 text file")
    p.add_argument("--lexicon", help="stress lexicon TSV")
    p.add_argument("--format", choices=("phones", "annotated"), default="phones")
    p.set_defaults(func=_cmd_g2p)

    p = sub.add_parser("select-corpus", help="greedy diphone-coverage selection")
    p.add_argument("--input", required=True, help="utterances: text or id<TAB>text lines")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--min-words", type=int, default=3)
    p.add_argument("--max-words", type=int, default=20)
    p.add_argument("--output", help="selection TSV (default: stdout)")
    p.set_defaults(func=_cmd_select_corpus)

    p = sub.add_parser("invert", help="spectrogram to waveform via Griffin-Lim")
    p.add_argument("--mel", required=True, help="spectrogram container (binary or CSV)")
    p.add_argument("--iters", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output WAV")
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("anchor", help="low-pass anchor for MUSHRA")
    p.add_argument("--cutoff", type=float, choices=(3500.0, 7000.0), required=True)
    p.add_argument("--in", dest="infile", required=True, help="input WAV")
    p.add_argument("--out", required=True, help="output WAV")
    p.set_defaults(func=_cmd_anchor)

    p = sub.add_parser("stft-distance", help="multi-resolution STFT distance")
    p.add_argument("--a", required=True, help="first WAV")
    p.add_argument("--b", required=True, help="second WAV")
    p.set_defaults(func=_cmd_stft_distance)

    p = sub.add_parser("stats", help="listening-test statistics")
    stats_sub = p.add_subparsers(dest="which", required=True)
    pm = stats_sub.add_parser("mos", help="MOS table")
    pm.add_argument("--in", dest="infile", required=True, help="ratings JSONL or CSV")
    pm.add_argument("--natural", help="condition id to list last as natural speech")
    pm.set_defaults(func=_cmd_stats)
    pu = stats_sub.add_parser("mushra", help="MUSHRA summary")
    pu.add_argument("--in", dest="infile", required=True, help="ratings JSONL or CSV")
    pu.add_argument("--no-screen", action="store_true", help="skip post-screening")
    pu.add_argument("--boxplot", help="write boxplot CSV here")
    pu.set_defaults(func=_cmd_stats)

    p = sub.add_parser("serve", help="run the listening-test service")
    p.add_argument("--test-dir", required=True, help="directory of definition JSON files")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
