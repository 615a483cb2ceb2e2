"""Command-line interface.

Usage:
    corpuscontrast ingest --input raw.jsonl --query lonely,solitude \
        --output kept.jsonl --stats stats.json
    corpuscontrast assoc --target solitude.jsonl --reference general.jsonl \
        --output table.tsv
    corpuscontrast report --target solitude.jsonl --reference general.jsonl \
        --emotion-lexicon emolex.txt --vad-lexicon vad.txt --output report.json

Exit codes: 0 success, 1 usage error, 2 input/schema error, 3 internal
error. Identical inputs produce byte-identical outputs regardless of
--threads.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .association import AssocConfig, build_association_table, top_frequent_strong
from .corpus import Corpus, build_corpus, merge_corpora
from .ingest import PipelineConfig, filter_documents, sample_for_annotation
from .lexicons import (
    build_name_gender_table,
    load_age_lexicon,
    load_emotion_lexicon,
    load_vad_lexicon,
)
from .profiles import (
    age_profile,
    emotion_profile,
    profile_diff,
    split_by_gender,
    vad_extremes,
    vad_trend,
)
from .stats import proportion_test

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

# args dests holding input paths, validated before any work starts
_INPUT_PATH_DESTS = (
    "input",
    "target",
    "reference",
    "corpus",
    "table",
    "emotion_lexicon",
    "vad_lexicon",
    "age_lexicon",
    "name_table",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _split_terms(values) -> frozenset[str]:
    terms: set[str] = set()
    for value in values or ():
        terms.update(t.strip().lower() for t in value.split(",") if t.strip())
    return frozenset(terms)


def _corpus_name(path) -> str:
    return Path(path).stem


def _load_corpus(path, threads: int = 1) -> tuple[Corpus, list, io.ReadReport]:
    docs, report = io.read_documents(path)
    return build_corpus(_corpus_name(path), docs, workers=threads), docs, report


def _assoc_config(args) -> AssocConfig:
    return AssocConfig(
        min_total_freq=args.min_count,
        strong_threshold=args.threshold,
        zero_count_substitute=args.substitute,
    )


def _build_table(args):
    target, _, _ = _load_corpus(args.target, args.threads)
    references = [_load_corpus(p, args.threads)[0] for p in args.reference]
    reference = (
        references[0]
        if len(references) == 1
        else merge_corpora("+".join(c.name for c in references), references)
    )
    return build_association_table(target, reference, _assoc_config(args)), target, reference


def _pairwise_tests(profiles, categories, counts_of, denominator_of) -> list[dict]:
    tests = []
    for i, first in enumerate(profiles):
        for second in profiles[i + 1 :]:
            for category in categories:
                record = {
                    "category": category,
                    "corpus_a": first.corpus_name,
                    "corpus_b": second.corpus_name,
                }
                try:
                    result = proportion_test(
                        counts_of(first, category),
                        denominator_of(first),
                        counts_of(second, category),
                        denominator_of(second),
                    )
                    record.update(io.chi2_to_dict(result))
                except ValueError as exc:
                    record["undefined"] = str(exc)
                tests.append(record)
    return tests


def cmd_ingest(args) -> None:
    docs, report = io.read_documents(args.input)
    cfg = PipelineConfig(
        min_tokens=args.min_tokens,
        per_user_cap=args.cap,
        query_terms=_split_terms(args.query) or None,
        drop_urls=not args.keep_urls,
    )
    survivors, stats = filter_documents(docs, cfg)
    io.write_documents(args.output, survivors)
    payload = {
        "input_documents": stats.input_count,
        "malformed_input_lines": report.malformed,
        "kept": stats.kept,
        "dropped": stats.dropped,
    }
    if args.stats:
        io.write_json(args.stats, payload)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    print(f"kept {stats.kept} of {stats.input_count} documents", file=sys.stderr)


def cmd_sample(args) -> None:
    docs, _ = io.read_documents(args.input)
    sample = sample_for_annotation(docs, args.n, args.seed)
    io.write_annotation_tsv(args.output, sample)
    print(f"sampled {len(sample)} documents", file=sys.stderr)


def cmd_assoc(args) -> None:
    table, _, _ = _build_table(args)
    io.write_association_table(args.output, table)
    print(f"scored {len(table)} words", file=sys.stderr)


def cmd_strong(args) -> None:
    table, target, reference = _build_table(args)
    # Positive words lean toward the target, so rank them by target
    # frequency; negative words are ranked in the reference corpus.
    rank_in = target if args.direction == "positive" else reference
    words = top_frequent_strong(
        table, rank_in, args.direction, args.k, _assoc_config(args)
    )
    with io.atomic_write(args.output) as handle:
        handle.write("word\tscore\tfreq_target\tfreq_reference\n")
        for word in words:
            entry = table.entries[word]
            handle.write(
                f"{word}\t{entry.score!r}\t{entry.freq_target}\t{entry.freq_reference}\n"
            )
    print(f"{len(words)} strong words ({args.direction})", file=sys.stderr)


def cmd_emotions(args) -> None:
    lexicon = load_emotion_lexicon(args.emotion_lexicon)
    exclude = _split_terms(args.exclude)
    profiles = [
        emotion_profile(_load_corpus(path, args.threads)[0], lexicon, exclude)
        for path in args.corpus
    ]
    if args.format == "csv":
        io.write_profile_csv(args.output, profiles, kind="emotion")
        return
    tests = _pairwise_tests(
        profiles,
        sorted(profiles[0].percentages),
        lambda p, label: p.label_counts.get(label, 0),
        lambda p: p.lexicon_token_count,
    )
    io.write_json(
        args.output,
        {"profiles": [io.emotion_profile_to_dict(p) for p in profiles], "tests": tests},
    )


def cmd_vad(args) -> None:
    lexicon = load_vad_lexicon(args.vad_lexicon)
    exclude = _split_terms(args.exclude)
    profiles = [
        vad_extremes(
            _load_corpus(path, args.threads)[0],
            lexicon,
            low_max=args.low,
            high_min=args.high,
            exclude=exclude,
        )
        for path in args.corpus
    ]
    if args.format == "csv":
        io.write_profile_csv(args.output, profiles, kind="vad")
        return
    classes = [f"{dim}_{cls}" for dim in ("valence", "arousal", "dominance") for cls in ("low", "high")]
    tests = _pairwise_tests(
        profiles,
        classes,
        lambda p, key: p.counts[key.rsplit("_", 1)[0]][key.rsplit("_", 1)[1]],
        lambda p: p.lexicon_token_count,
    )
    io.write_json(
        args.output,
        {"profiles": [io.vad_profile_to_dict(p) for p in profiles], "tests": tests},
    )


def cmd_vad_trend(args) -> None:
    table = io.read_association_table(args.table)
    lexicon = load_vad_lexicon(args.vad_lexicon)
    curve = vad_trend(table, lexicon, step=args.step, min_words=args.min_words)
    io.write_trend_csv(args.output, curve)
    print(f"{len(curve.bins)} bins", file=sys.stderr)


def cmd_gender(args) -> None:
    docs, _ = io.read_documents(args.corpus)
    table = io.read_name_table(args.name_table)
    female, male, unknown = split_by_gender(docs, table)
    payload: dict = {
        "corpus": _corpus_name(args.corpus),
        "documents": {
            "female": female.doc_count,
            "male": male.doc_count,
            "unknown": unknown,
            "total": len(docs),
        },
    }
    if args.emotion_lexicon:
        lexicon = load_emotion_lexicon(args.emotion_lexicon)
        exclude = _split_terms(args.exclude)
        profile_f = emotion_profile(female, lexicon, exclude)
        profile_m = emotion_profile(male, lexicon, exclude)
        payload["emotion_profiles"] = {
            "female": io.emotion_profile_to_dict(profile_f),
            "male": io.emotion_profile_to_dict(profile_m),
        }
        payload["emotion_diff_female_minus_male"] = profile_diff(profile_f, profile_m)
        payload["tests"] = _pairwise_tests(
            [profile_f, profile_m],
            sorted(profile_f.percentages),
            lambda p, label: p.label_counts.get(label, 0),
            lambda p: p.lexicon_token_count,
        )
    io.write_json(args.output, payload)


def cmd_age(args) -> None:
    lexicon = load_age_lexicon(args.age_lexicon, alpha=args.alpha)
    profiles = [
        age_profile(_load_corpus(path, args.threads)[0], lexicon)
        for path in args.corpus
    ]
    if args.format == "csv":
        io.write_profile_csv(args.output, profiles, kind="age")
        return
    tests = _pairwise_tests(
        profiles,
        sorted(profiles[0].percentages),
        lambda p, group: p.group_counts.get(group, 0),
        lambda p: p.lexicon_token_count,
    )
    io.write_json(
        args.output,
        {"profiles": [io.age_profile_to_dict(p) for p in profiles], "tests": tests},
    )


def cmd_names(args) -> None:
    files = sorted(Path(args.ssa_dir).glob("yob*.txt"))
    if not files:
        raise ValueError(f"no yob*.txt files under {args.ssa_dir}")
    table = build_name_gender_table(
        files,
        year_from=args.year_from,
        year_to=args.year_to,
        min_count=args.min_count,
        purity=args.purity,
    )
    io.write_name_table(args.output, table)
    print(f"{len(table.female)} female, {len(table.male)} male names", file=sys.stderr)


def cmd_report(args) -> None:
    exclude = _split_terms(args.exclude)
    cfg = PipelineConfig(
        min_tokens=args.min_tokens,
        per_user_cap=args.cap,
        query_terms=_split_terms(args.query) or None,
        drop_urls=not args.keep_urls,
    )
    reference_cfg = PipelineConfig(
        min_tokens=args.min_tokens, per_user_cap=args.cap, drop_urls=not args.keep_urls
    )

    target_docs, target_report = io.read_documents(args.target)
    reference_docs, reference_report = io.read_documents(args.reference)
    target_survivors, target_stats = filter_documents(target_docs, cfg)
    reference_survivors, reference_stats = filter_documents(reference_docs, reference_cfg)
    target = build_corpus(_corpus_name(args.target), target_survivors, workers=args.threads)
    reference = build_corpus(
        _corpus_name(args.reference), reference_survivors, workers=args.threads
    )

    assoc_cfg = _assoc_config(args)
    table = build_association_table(target, reference, assoc_cfg)

    def stats_dict(stats, report):
        return {
            "input_documents": stats.input_count,
            "malformed_input_lines": report.malformed,
            "kept": stats.kept,
            "dropped": stats.dropped,
        }

    report: dict = {
        "config": {
            "query_terms": sorted(cfg.query_terms) if cfg.query_terms else [],
            "min_tokens": cfg.min_tokens,
            "per_user_cap": cfg.per_user_cap,
            "drop_urls": cfg.drop_urls,
            "min_total_freq": assoc_cfg.min_total_freq,
            "strong_threshold": assoc_cfg.strong_threshold,
            "exclude": sorted(exclude),
        },
        "pipeline": {
            "target": stats_dict(target_stats, target_report),
            "reference": stats_dict(reference_stats, reference_report),
        },
        "corpora": {
            corpus.name: {"documents": corpus.doc_count, "tokens": corpus.total_tokens}
            for corpus in (target, reference)
        },
        "association": {
            "target": table.target_name,
            "reference": table.reference_name,
            "words_scored": len(table),
            "entries": {
                word: {
                    "score": entry.score,
                    "freq_target": entry.freq_target,
                    "freq_reference": entry.freq_reference,
                    "smoothed": entry.smoothed,
                }
                for word, entry in table.entries.items()
            },
            "top_positive": top_frequent_strong(table, target, "positive", args.k, assoc_cfg),
            "top_negative": top_frequent_strong(table, reference, "negative", args.k, assoc_cfg),
        },
    }

    if args.emotion_lexicon:
        lexicon = load_emotion_lexicon(args.emotion_lexicon)
        profiles = [emotion_profile(c, lexicon, exclude) for c in (target, reference)]
        report["emotions"] = {
            "profiles": [io.emotion_profile_to_dict(p) for p in profiles],
            "tests": _pairwise_tests(
                profiles,
                sorted(profiles[0].percentages),
                lambda p, label: p.label_counts.get(label, 0),
                lambda p: p.lexicon_token_count,
            ),
        }
        if args.name_table:
            name_table = io.read_name_table(args.name_table)
            gender_section = {}
            for corpus_name, docs in (
                (target.name, target_survivors),
                (reference.name, reference_survivors),
            ):
                female, male, unknown = split_by_gender(docs, name_table)
                profile_f = emotion_profile(female, lexicon, exclude)
                profile_m = emotion_profile(male, lexicon, exclude)
                gender_section[corpus_name] = {
                    "documents": {
                        "female": female.doc_count,
                        "male": male.doc_count,
                        "unknown": unknown,
                    },
                    "emotion_profiles": {
                        "female": io.emotion_profile_to_dict(profile_f),
                        "male": io.emotion_profile_to_dict(profile_m),
                    },
                    "emotion_diff_female_minus_male": profile_diff(profile_f, profile_m),
                }
            report["gender"] = gender_section

    if args.vad_lexicon:
        vad_lexicon = load_vad_lexicon(args.vad_lexicon)
        profiles = [
            vad_extremes(c, vad_lexicon, low_max=args.low, high_min=args.high, exclude=exclude)
            for c in (target, reference)
        ]
        report["vad"] = {
            "profiles": [io.vad_profile_to_dict(p) for p in profiles],
            "tests": _pairwise_tests(
                profiles,
                [f"{dim}_{cls}" for dim in ("valence", "arousal", "dominance") for cls in ("low", "high")],
                lambda p, key: p.counts[key.rsplit("_", 1)[0]][key.rsplit("_", 1)[1]],
                lambda p: p.lexicon_token_count,
            ),
        }
        report["vad_trend"] = io.trend_to_dict(
            vad_trend(table, vad_lexicon, step=args.step, min_words=args.min_words)
        )

    if args.age_lexicon:
        age_lexicon = load_age_lexicon(args.age_lexicon, alpha=args.alpha)
        profiles = [age_profile(c, age_lexicon) for c in (target, reference)]
        report["age"] = {
            "profiles": [io.age_profile_to_dict(p) for p in profiles],
            "tests": _pairwise_tests(
                profiles,
                sorted(profiles[0].percentages),
                lambda p, group: p.group_counts.get(group, 0),
                lambda p: p.lexicon_token_count,
            ),
        }

    io.write_json(args.output, report)
    print(f"report written to {args.output}", file=sys.stderr)


def _add_assoc_options(parser) -> None:
    parser.add_argument("--min-count", type=int, default=25,
                        help="minimum combined frequency for a word to be scored")
    parser.add_argument("--threshold", type=float, default=1.5,
                        help="strong-association score threshold")
    parser.add_argument("--substitute", type=float, default=0.5,
                        help="stand-in count for a word absent from one corpus")


def _add_threads_option(parser) -> None:
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for counting (output is identical)")


def build_parser() -> tuple[_Parser, dict[str, _Parser]]:
    parser = _Parser(prog="corpuscontrast", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    command_parsers: dict[str, _Parser] = {}

    def command(name, func, help_text):
        sub = subparsers.add_parser(name, help=help_text)
        sub.set_defaults(func=func)
        sub.add_argument("--config", help="JSON file of flag defaults (flags override)")
        sub.add_argument("-o", "--output", required=True, help="output file path")
        command_parsers[name] = sub
        return sub

    sub = command("ingest", cmd_ingest, "filter a raw document stream into a corpus")
    sub.add_argument("--input", required=True, help="line-JSON documents")
    sub.add_argument("--query", action="append",
                     help="query term(s), repeatable or comma-separated; omit to keep all")
    sub.add_argument("--min-tokens", type=int, default=3)
    sub.add_argument("--cap", type=int, default=3, help="max documents kept per author")
    sub.add_argument("--keep-urls", action="store_true")
    sub.add_argument("--stats", help="write drop statistics JSON here (default: stdout)")

    sub = command("sample", cmd_sample, "export a random annotation sample as TSV")
    sub.add_argument("--input", required=True)
    sub.add_argument("-n", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)

    sub = command("assoc", cmd_assoc, "score word associations target vs reference")
    sub.add_argument("--target", required=True)
    sub.add_argument("--reference", action="append", required=True,
                     help="reference corpus; repeat to union several files")
    _add_assoc_options(sub)
    _add_threads_option(sub)

    sub = command("strong", cmd_strong, "most frequent strongly associated words")
    sub.add_argument("--target", required=True)
    sub.add_argument("--reference", action="append", required=True)
    sub.add_argument("--direction", choices=("positive", "negative"), default="positive")
    sub.add_argument("-k", type=int, default=25)
    _add_assoc_options(sub)
    _add_threads_option(sub)

    sub = command("emotions", cmd_emotions, "emotion-label profile per corpus")
    sub.add_argument("--corpus", action="append", required=True)
    sub.add_argument("--emotion-lexicon", required=True)
    sub.add_argument("--exclude", action="append", help="words excluded from the analysis")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    _add_threads_option(sub)

    sub = command("vad", cmd_vad, "VAD extreme-score profile per corpus")
    sub.add_argument("--corpus", action="append", required=True)
    sub.add_argument("--vad-lexicon", required=True)
    sub.add_argument("--exclude", action="append")
    sub.add_argument("--low", type=float, default=0.25)
    sub.add_argument("--high", type=float, default=0.75)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    _add_threads_option(sub)

    sub = command("vad-trend", cmd_vad_trend, "binned VAD means along the score axis")
    sub.add_argument("--table", required=True, help="association table TSV")
    sub.add_argument("--vad-lexicon", required=True)
    sub.add_argument("--step", type=float, default=0.5)
    sub.add_argument("--min-words", type=int, default=100)

    sub = command("gender", cmd_gender, "split a corpus by inferred author gender")
    sub.add_argument("--corpus", required=True)
    sub.add_argument("--name-table", required=True, help="names JSON from the names command")
    sub.add_argument("--emotion-lexicon")
    sub.add_argument("--exclude", action="append")

    sub = command("age", cmd_age, "age-group profile per corpus")
    sub.add_argument("--corpus", action="append", required=True)
    sub.add_argument("--age-lexicon", required=True)
    sub.add_argument("--alpha", type=float, default=0.05)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    _add_threads_option(sub)

    sub = command("names", cmd_names, "build the name-gender table from SSA files")
    sub.add_argument("--ssa-dir", required=True)
    sub.add_argument("--year-from", type=int, default=1940)
    sub.add_argument("--year-to", type=int, default=2017)
    sub.add_argument("--min-count", type=int, default=100)
    sub.add_argument("--purity", type=float, default=0.95)

    sub = command("report", cmd_report, "run every analysis into one JSON bundle")
    sub.add_argument("--target", required=True)
    sub.add_argument("--reference", required=True)
    sub.add_argument("--query", action="append")
    sub.add_argument("--min-tokens", type=int, default=3)
    sub.add_argument("--cap", type=int, default=3)
    sub.add_argument("--keep-urls", action="store_true")
    sub.add_argument("--emotion-lexicon")
    sub.add_argument("--vad-lexicon")
    sub.add_argument("--age-lexicon")
    sub.add_argument("--name-table")
    sub.add_argument("--exclude", action="append")
    sub.add_argument("-k", type=int, default=25)
    sub.add_argument("--low", type=float, default=0.25)
    sub.add_argument("--high", type=float, default=0.75)
    sub.add_argument("--step", type=float, default=0.5)
    sub.add_argument("--min-words", type=int, default=100)
    sub.add_argument("--alpha", type=float, default=0.05)
    _add_assoc_options(sub)
    _add_threads_option(sub)

    return parser, command_parsers


def _check_input_paths(args) -> str | None:
    for dest in _INPUT_PATH_DESTS:
        value = getattr(args, dest, None)
        if value is None:
            continue
        paths = value if isinstance(value, list) else [value]
        for path in paths:
            if not Path(path).is_file():
                return f"file not found: {path}"
    ssa_dir = getattr(args, "ssa_dir", None)
    if ssa_dir is not None and not Path(ssa_dir).is_dir():
        return f"directory not found: {ssa_dir}"
    config = getattr(args, "config", None)
    if config is not None and not Path(config).is_file():
        return f"file not found: {config}"
    return None


def main(argv=None) -> int:
    parser, command_parsers = build_parser()
    args = parser.parse_args(argv)

    if args.config:
        if not Path(args.config).is_file():
            print(f"corpuscontrast: error: file not found: {args.config}", file=sys.stderr)
            return EXIT_INPUT
        try:
            with open(args.config, encoding="utf-8") as handle:
                overrides = json.load(handle)
        except ValueError as exc:
            print(f"corpuscontrast: error: bad config: {exc}", file=sys.stderr)
            return EXIT_INPUT
        sub = command_parsers[args.command]
        known = {action.dest for action in sub._actions}
        unknown = sorted(set(overrides) - known)
        if unknown:
            print(f"corpuscontrast: error: unknown config keys: {', '.join(unknown)}",
                  file=sys.stderr)
            return EXIT_INPUT
        sub.set_defaults(**overrides)
        args = parser.parse_args(argv)

    problem = _check_input_paths(args)
    if problem:
        print(f"corpuscontrast: error: {problem}", file=sys.stderr)
        return EXIT_INPUT

    try:
        args.func(args)
    except (OSError, ValueError) as exc:
        print(f"corpuscontrast: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"corpuscontrast: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
