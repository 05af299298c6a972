"""The ``composition-codec`` command line tool.

Subcommands: params, encode, fragment, corrupt, decode, reconstruct,
experiment.  Multisets travel as canonical text documents (.cm) or their
JSON mirror (``--json``).  Exit codes: 0 success, 1 usage, 2
parse/validation, 3 decode failure, 4 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import channel, codebook, ecc, experiments, reconstructor
from .compositions import (
    CompositionMultiset,
    bits_of,
    fragment,
    parse,
    parse_json,
    serialize,
    serialize_json,
)
from .errors import (
    AmbiguousDecode,
    CapacityExceeded,
    CodecError,
    DimensionMismatch,
    InconsistentMultiset,
    InvalidError,
    InvalidMultiset,
    MalformedInput,
    NoAdmissibleError,
    NotACodeword,
    SigmaOutOfRange,
    SymmetryViolation,
    TooLarge,
    Uncorrectable,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DECODE = 3
EXIT_INTERNAL = 4

_DATA_ERRORS = (
    MalformedInput,
    InvalidMultiset,
    DimensionMismatch,
    InvalidError,
    TooLarge,
    CapacityExceeded,
)
_DECODE_ERRORS = (
    Uncorrectable,
    AmbiguousDecode,
    NotACodeword,
    InconsistentMultiset,
    SigmaOutOfRange,
    SymmetryViolation,
    NoAdmissibleError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="composition-codec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *names):
        if "k" in names:
            p.add_argument("--k", type=int, help="message length in bits")
        if "ecc" in names:
            p.add_argument(
                "--ecc",
                action="store_true",
                help="use the error-correcting codebook",
            )
        if "json" in names:
            p.add_argument("--json", action="store_true", help="machine output")
        if "out" in names:
            p.add_argument("--out", type=Path, help="write output to a file")
        if "infile" in names:
            p.add_argument("--in", dest="infile", type=Path, required=True)
        if "seed" in names:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("params", help="code parameters for a message length")
    common(p, "k", "ecc", "json")

    p = sub.add_parser("encode", help="message bits to codeword")
    common(p, "k", "ecc", "json", "out")
    p.add_argument("--message", required=True, help="bit string, or hex with 0x")

    p = sub.add_parser("fragment", help="string to composition multiset")
    common(p, "json", "out")
    p.add_argument("--message", required=True, help="the bit string to fragment")

    p = sub.add_parser("corrupt", help="inject one composition error")
    common(p, "json", "out", "infile", "seed")
    p.add_argument("--class", dest="class_", type=int, help="restrict to one class")

    p = sub.add_parser("decode", help="multiset back to message bits")
    common(p, "k", "ecc", "json", "infile")

    p = sub.add_parser("reconstruct", help="all strings with this multiset")
    common(p, "json", "infile")
    p.add_argument("--max-n", type=int, default=reconstructor.ORACLE_GUARD)

    p = sub.add_parser("experiment", help="batch sweeps with a report")
    common(p, "json", "seed")
    p.add_argument(
        "--mode",
        required=True,
        choices=["roundtrip", "ecc_sweep", "redundancy_table", "distance_check"],
    )
    p.add_argument("--k-range", default=None, help="A..B inclusive")
    p.add_argument("--trials", type=int, default=0, help="0 means exhaustive")
    p.add_argument("--max-n", type=int, default=11, help="length for distance_check")

    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _read_multiset(path: Path) -> CompositionMultiset:
    try:
        text = path.read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse(text)


def _message_bits(raw: str, k: int | None) -> str:
    if raw.lower().startswith("0x"):
        if k is None:
            raise UsageError("--k is required for hex messages")
        value = int(raw, 16)
        if value >= 1 << k:
            raise UsageError(f"hex message does not fit in {k} bits")
        return format(value, f"0{k}b")
    bits_of(raw)
    if k is not None and len(raw) != k:
        raise UsageError(f"message has {len(raw)} bits but --k is {k}")
    return raw


def _require_k(args) -> int:
    if args.k is None:
        raise UsageError("--k is required for this command")
    return args.k


def _parse_k_range(raw: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if raw is None:
        return default
    parts = raw.split("..")
    try:
        lo, hi = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"bad --k-range {raw!r}; expected A..B") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad --k-range {raw!r}")
    return lo, hi


def _cmd_params(args) -> int:
    k = _require_k(args)
    p = ecc.params(k) if args.ecc else codebook.params(k)
    if args.json:
        doc = {
            "k": p.k,
            "ecc": args.ecc,
            "n": p.n,
            "redundancy": p.redundancy,
            "capacity": p.capacity,
        }
        _emit(json.dumps(doc, indent=2), None)
    else:
        _emit(f"n={p.n} redundancy={p.redundancy} capacity={p.capacity}", None)
    return EXIT_OK


def _cmd_encode(args) -> int:
    message = _message_bits(args.message, args.k)
    codeword = ecc.encode(message) if args.ecc else codebook.encode(message)
    if args.json:
        _emit(json.dumps({"message": message, "codeword": codeword}), args.out)
    else:
        _emit(codeword, args.out)
    return EXIT_OK


def _cmd_fragment(args) -> int:
    multiset = fragment(args.message)
    _emit(serialize_json(multiset) if args.json else serialize(multiset), args.out)
    return EXIT_OK


def _cmd_corrupt(args) -> int:
    multiset = _read_multiset(args.infile).validate()
    choices = list(channel.enumerate_errors(multiset))
    if args.class_ is not None:
        choices = [c for c in choices if c[0].length == args.class_]
        if not choices:
            raise NoAdmissibleError(f"class {args.class_} admits no error")
    spec, corrupted = channel.pick_error(choices, args.seed)
    sys.stderr.write(spec.render() + "\n")
    _emit(
        serialize_json(corrupted) if args.json else serialize(corrupted), args.out
    )
    return EXIT_OK


def _cmd_decode(args) -> int:
    k = _require_k(args)
    multiset = _read_multiset(args.infile).validate()
    if args.ecc:
        message, diagnostics = ecc.decode(multiset, k)
        if args.json:
            doc = {"message": message, "corrected_class": diagnostics.corrupted_class}
            if diagnostics.corrupted_class is not None:
                doc["received"] = list(diagnostics.received)
                doc["corrected"] = list(diagnostics.corrected)
            _emit(json.dumps(doc), None)
        else:
            _emit(message, None)
            if diagnostics.corrupted_class is not None:
                _emit(f"corrected class {diagnostics.corrupted_class}", None)
    else:
        message = codebook.decode(multiset, k)
        _emit(json.dumps({"message": message}) if args.json else message, None)
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    multiset = _read_multiset(args.infile).validate()
    strings = sorted(reconstructor.backtrack_all(multiset, max_n=args.max_n))
    if args.json:
        _emit(json.dumps({"strings": strings}), None)
    else:
        for s in strings:
            _emit(s, None)
    return EXIT_OK


def _cmd_experiment(args) -> int:
    if args.mode == "roundtrip":
        report = experiments.run_roundtrip(
            _parse_k_range(args.k_range, (1, 10)), args.trials, args.seed
        )
    elif args.mode == "ecc_sweep":
        report = experiments.run_ecc_sweep(
            _parse_k_range(args.k_range, (1, 5)), args.trials, args.seed
        )
    elif args.mode == "redundancy_table":
        report = experiments.run_redundancy_table(
            _parse_k_range(args.k_range, (1, 4096))
        )
    else:
        report = experiments.run_distance_check(args.max_n)
    sys.stderr.write(f"wall time: {report.wall_time_s:.3f}s\n")
    _emit(report.to_json() if args.json else report.summary(), None)
    return EXIT_OK if not report.failures else EXIT_DECODE


_COMMANDS = {
    "params": _cmd_params,
    "encode": _cmd_encode,
    "fragment": _cmd_fragment,
    "corrupt": _cmd_corrupt,
    "decode": _cmd_decode,
    "reconstruct": _cmd_reconstruct,
    "experiment": _cmd_experiment,
}


def _diagnose(code: str, message: str) -> None:
    sys.stderr.write(f"composition-codec: {code}: {message}\n")


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _diagnose("usage", str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        _diagnose("usage", str(exc))
        return EXIT_USAGE
    except _DATA_ERRORS as exc:
        _diagnose(exc.code, str(exc))
        return EXIT_DATA
    except _DECODE_ERRORS as exc:
        _diagnose(exc.code, str(exc))
        return EXIT_DECODE
    except CodecError as exc:
        _diagnose(exc.code, str(exc))
        return EXIT_DATA
    except Exception as exc:  # noqa: BLE001 - last resort maps to exit 4
        _diagnose("internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
