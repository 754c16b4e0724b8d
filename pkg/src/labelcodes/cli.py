"""Command-line surface: labeling utilities, encode/decode pipelines,
bound tables, existence searches, verification runs, channel simulation.

Everything is line-oriented (one word per line) so exhaustive corpora pipe
through standard tools: DNA words as uppercase ACGT, labeling words as
single-character digits ('0'-'9', then 'a' = 10 and so on).  Exit codes:
0 success, 1 decode or verification failure, 2 invalid flags or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import redundancy_gap_table
from .constructions import (
    NotDecodable,
    AmbiguousDecoding,
    build_all_labels_deletion_code,
    decode_all_labels_deletion,
    e1_decode,
    e1_encode,
    e2_decode,
    e2_encode,
    search_hamming_coset,
    search_tenengolts_labeling_code,
)
from .formats import (
    labeling_from_text,
    labeling_to_text,
    word_from_text,
    word_to_text,
)
from .labeling import (
    Alphabet,
    AmbiguousLabeling,
    FlankConvention,
    InvalidLabeling,
    all_labels_set,
    invert_labeling,
    label_framed,
    label_word,
    minimal_dna_set,
)
from .oracle import (
    ErrorSpec,
    exhaustive_decoder_check,
    simulate_channel,
)

DECODE_FAIL = "!DECODE_FAIL"


class CliError(Exception):
    """Invalid flags or malformed input; maps to exit code 2."""


def _open_streams(args):
    instream = open(args.infile, "r") if args.infile else sys.stdin
    outstream = open(args.outfile, "w") if args.outfile else sys.stdout
    return instream, outstream


def _close_streams(args, instream, outstream):
    if args.infile:
        instream.close()
    if args.outfile:
        outstream.close()


def _lines(stream):
    for line in stream:
        line = line.strip()
        if line:
            yield line


def _label_set(args):
    if args.set == "minimal":
        if args.q != 4:
            raise CliError("the minimal label set is defined for q = 4")
        return minimal_dna_set()
    return all_labels_set(args.q)


def _alphabet(q):
    return Alphabet(q)


def _flanks(args, alphabet):
    text = args.flank
    if len(text) == 1:
        text = text * 2
    if len(text) != 2:
        raise CliError("--flank takes one or two alphabet characters")
    pair = word_from_text(text, alphabet)
    return FlankConvention(pair[0], pair[1])


def _add_io_flags(p):
    p.add_argument("--in", dest="infile", default=None, metavar="PATH")
    p.add_argument("--out", dest="outfile", default=None, metavar="PATH")


def _add_labeling_flags(p):
    p.add_argument("--set", choices=["minimal", "all"], default="minimal")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--flank", default="A")


def cmd_label(args) -> int:
    labels = _label_set(args)
    alphabet = _alphabet(labels.q)
    flanks = _flanks(args, alphabet)
    instream, outstream = _open_streams(args)
    try:
        for line in _lines(instream):
            x = word_from_text(line, alphabet)
            if args.standalone:
                u = label_word(x, labels)
            else:
                u = label_framed(x, labels, flanks)
            print(labeling_to_text(u), file=outstream)
    finally:
        _close_streams(args, instream, outstream)
    return 0


def cmd_unlabel(args) -> int:
    labels = _label_set(args)
    alphabet = _alphabet(labels.q)
    flanks = _flanks(args, alphabet)
    instream, outstream = _open_streams(args)
    failed = False
    try:
        for line in _lines(instream):
            u = labeling_from_text(line)
            try:
                x = invert_labeling(u, labels, flanks)
            except (InvalidLabeling, AmbiguousLabeling) as e:
                if args.strict:
                    print(f"unlabel: {e}", file=sys.stderr)
                    return 1
                failed = True
                print(DECODE_FAIL, file=outstream)
                continue
            print(word_to_text(x, alphabet), file=outstream)
    finally:
        _close_streams(args, instream, outstream)
    return 1 if failed else 0


def cmd_encode(args) -> int:
    alphabet = _alphabet(4)
    flanks = _flanks(args, alphabet)
    encoder = e1_encode if args.scheme == "e1" else e2_encode
    instream, outstream = _open_streams(args)
    try:
        for line in _lines(instream):
            x = word_from_text(line, alphabet)
            print(word_to_text(encoder(x, flanks), alphabet), file=outstream)
    finally:
        _close_streams(args, instream, outstream)
    return 0


def cmd_decode(args) -> int:
    failed = False
    instream, outstream = _open_streams(args)
    try:
        if args.scheme in ("e1", "e2"):
            if args.k is None:
                raise CliError("--k is required for schemes e1 and e2")
            alphabet = _alphabet(4)
            flanks = _flanks(args, alphabet)
            decoder = e1_decode if args.scheme == "e1" else e2_decode

            def decode_line(u):
                return word_to_text(decoder(u, args.k, flanks), alphabet)

        else:
            if args.n is None:
                raise CliError("--n is required for scheme all-labels-del")
            alphabet = _alphabet(args.q)
            x0 = word_from_text(args.x0, alphabet)[0]
            code = build_all_labels_deletion_code(args.q, args.n, x0)

            def decode_line(u):
                return word_to_text(decode_all_labels_deletion(u, code), alphabet)

        for line in _lines(instream):
            u = labeling_from_text(line)
            try:
                print(decode_line(u), file=outstream)
            except (NotDecodable, AmbiguousDecoding) as e:
                if args.strict:
                    print(f"decode: {e}", file=sys.stderr)
                    return 1
                failed = True
                print(DECODE_FAIL, file=outstream)
    finally:
        _close_streams(args, instream, outstream)
    return 1 if failed else 0


def cmd_bounds(args) -> int:
    if args.n_min > args.n_max:
        raise CliError("--n-min must not exceed --n-max")
    rows = redundancy_gap_table(args.q, range(args.n_min, args.n_max + 1))
    instream, outstream = sys.stdin, sys.stdout
    if args.outfile:
        outstream = open(args.outfile, "w")
    try:
        if args.format == "json":
            payload = [
                {
                    "n": row.n,
                    "q": row.q,
                    "lower": str(row.lower),
                    "upper": str(row.upper),
                    "lower_decimal": float(row.lower),
                    "upper_decimal": float(row.upper),
                    "gap": row.gap,
                }
                for row in rows
            ]
            json.dump(payload, outstream, indent=2)
            print(file=outstream)
        else:
            sep = "\t" if args.format == "tsv" else "  "
            print(
                sep.join(["n", "lower", "upper", "lower_dec", "upper_dec", "gap"]),
                file=outstream,
            )
            for row in rows:
                print(
                    sep.join(
                        [
                            str(row.n),
                            str(row.lower),
                            str(row.upper),
                            f"{float(row.lower):.6g}",
                            f"{float(row.upper):.6g}",
                            f"{row.gap:.6f}",
                        ]
                    ),
                    file=outstream,
                )
    finally:
        if args.outfile:
            outstream.close()
    return 0


def cmd_search(args) -> int:
    if args.family == "tenengolts":
        res = search_tenengolts_labeling_code(args.n)
        payload = {
            "family": "tenengolts",
            "n": res.n,
            "a": res.a,
            "b": res.b,
            "size": res.size,
            "valid_labelings": res.valid_count,
        }
    else:
        res = search_hamming_coset(args.n)
        payload = {
            "family": "hamming-coset",
            "n": res.n,
            "p": res.p,
            "r": res.r,
            "syndrome": list(res.syndrome),
            "size": res.size,
        }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print("  ".join(f"{k}={v}" for k, v in payload.items()))
    return 0


def cmd_verify(args) -> int:
    reports = []
    if args.target in ("e1", "e2"):
        for k in range(2, args.k_max + 1):
            reports.append(exhaustive_decoder_check(args.target, k=k))
    elif args.target == "all-labels-del":
        for n in range(1, args.n_max + 1):
            code = build_all_labels_deletion_code(args.q, n)
            reports.append(exhaustive_decoder_check("all-labels-del", code=code))
    elif args.target == "tenengolts":
        for n in range(2, args.n_max + 1):
            reports.append(
                exhaustive_decoder_check(
                    "tenengolts", n=n, samples=args.samples, seed=args.seed
                )
            )
    elif args.target == "coset":
        for n in range(2, args.n_max + 1):
            reports.append(exhaustive_decoder_check("coset", n=n))
    ok = True
    for report in reports:
        print(report.summary())
        ok = ok and report.passed
    return 0 if ok else 1


def cmd_simulate(args) -> int:
    try:
        e1, e2_, e3 = (int(v) for v in args.errors.split(","))
    except ValueError:
        raise CliError("--errors takes three comma-separated integers")
    spec = ErrorSpec(substitutions=e1, insertions=e2_, deletions=e3)
    labels = _label_set(args)
    alphabet = _alphabet(labels.q)
    flanks = _flanks(args, alphabet)
    sigma = labels.sigma
    instream, outstream = _open_streams(args)
    try:
        for idx, line in enumerate(_lines(instream)):
            if args.raw_labeling:
                u = labeling_from_text(line)
            else:
                x = word_from_text(line, alphabet)
                u = label_framed(x, labels, flanks)
            out = simulate_channel(u, spec, args.seed + idx, sigma)
            print(labeling_to_text(out), file=outstream)
    finally:
        _close_streams(args, instream, outstream)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labelcodes",
        description="Error-correcting codes for DNA labeling sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="labeling sequences of input words")
    _add_labeling_flags(p)
    p.add_argument("--standalone", action="store_true",
                   help="use the unframed labeling map")
    _add_io_flags(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("unlabel", help="reconstruct words from framed labelings")
    _add_labeling_flags(p)
    p.add_argument("--strict", action="store_true")
    _add_io_flags(p)
    p.set_defaults(func=cmd_unlabel)

    p = sub.add_parser("encode", help="systematic encoding of data words")
    p.add_argument("--scheme", choices=["e1", "e2"], required=True)
    p.add_argument("--flank", default="A")
    _add_io_flags(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode corrupted labeling sequences")
    p.add_argument(
        "--scheme", choices=["e1", "e2", "all-labels-del"], required=True
    )
    p.add_argument("--k", type=int, default=None, help="data length (e1/e2)")
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--n", type=int, default=None,
                   help="word length (all-labels-del)")
    p.add_argument("--x0", default="A", help="left flank (all-labels-del)")
    p.add_argument("--flank", default="A")
    p.add_argument("--strict", action="store_true")
    _add_io_flags(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("bounds", help="exact lower/upper bound table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["text", "tsv", "json"], default="text")
    p.add_argument("--out", dest="outfile", default=None, metavar="PATH")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="existence searches over label classes")
    p.add_argument(
        "--family", choices=["tenengolts", "hamming-coset"], required=True
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="exhaustive decoder verification")
    p.add_argument(
        "--target",
        choices=["e1", "e2", "all-labels-del", "tenengolts", "coset"],
        required=True,
    )
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="seeded labeling-channel simulator")
    p.add_argument("--errors", required=True, metavar="E1,E2,E3",
                   help="substitutions, insertions, deletions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--raw-labeling", action="store_true",
                   help="input lines are labeling words, not DNA")
    _add_labeling_flags(p)
    _add_io_flags(p)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"labelcodes: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"labelcodes: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
