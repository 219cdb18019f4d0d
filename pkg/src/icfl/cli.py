"""Command-line frontend.

Exit codes: 0 success, 1 a predicate or verification failed, 2 usage or
input-data error (bad flags, bad alphabet, out-of-alphabet byte, cap
exceeded), 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
from dataclasses import dataclass
from typing import IO, Iterator

from . import groupings, inverse_lyndon, lyndon, suffix_sort
from .core_text import DEFAULT_ALPHABET, Alphabet
from .errors import AlphabetError, ContractError, FactorizationError, ResourceLimitError
from .lyndon import FactorKind, Factorization

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

FACTORIZERS = {
    "cfl": lyndon.cfl,
    "cfl-in": lyndon.cfl_in,
    "icfl": inverse_lyndon.icfl,
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Record:
    id: str
    word: bytes


def _strip_eol(line: bytes) -> bytes:
    if line.endswith(b"\n"):
        line = line[:-1]
    if line.endswith(b"\r"):
        line = line[:-1]
    return line


def read_raw(stream: IO[bytes]) -> Iterator[Record]:
    """One record per line, identified by its 1-based line number; blank lines are skipped."""
    for lineno, line in enumerate(stream, 1):
        word = _strip_eol(line)
        if word:
            yield Record(str(lineno), word)


def read_fasta(stream: IO[bytes], warn=None) -> Iterator[Record]:
    """Records start at '>' header lines; sequence lines are concatenated unchanged."""
    header = None
    chunks: list[bytes] = []

    def flush():
        if header is None and not chunks:
            return None
        rid = header if header is not None else "(no header)"
        word = b"".join(chunks)
        if not word:
            if warn:
                warn(f"record {rid} is empty; skipped")
            return None
        return Record(rid, word)

    for line in stream:
        line = _strip_eol(line)
        if line.startswith(b">"):
            rec = flush()
            if rec:
                yield rec
            header = line[1:].strip().decode("latin-1")
            chunks = []
        elif line:
            chunks.append(line)
    rec = flush()
    if rec:
        yield rec


@dataclass(frozen=True)
class FactorReport:
    """Per-record factor-size summary.  ``boundaries`` are 1-based factor start positions."""

    id: str
    kind: str
    length: int
    factor_lengths: tuple[int, ...]
    boundaries: tuple[int, ...]
    factors: tuple[str, ...] | None = None

    @classmethod
    def build(cls, rid: str, f: Factorization, show_factors: bool = False) -> "FactorReport":
        return cls(
            id=rid,
            kind=f.kind.value,
            length=len(f.word),
            factor_lengths=tuple(f.lengths),
            boundaries=tuple(s + 1 for s in f.starts),
            factors=tuple(x.decode("latin-1") for x in f.factors) if show_factors else None,
        )

    @property
    def factor_count(self) -> int:
        return len(self.factor_lengths)

    def to_json(self) -> str:
        fl = self.factor_lengths
        fields = [
            ("id", json.dumps(self.id, ensure_ascii=False)),
            ("kind", json.dumps(self.kind)),
            ("length", str(self.length)),
            ("factor_count", str(self.factor_count)),
            ("factor_lengths", json.dumps(list(fl))),
            ("min", str(min(fl))),
            ("max", str(max(fl))),
            ("mean", f"{statistics.fmean(fl):.6f}"),
            ("median", f"{statistics.median(fl):.6f}"),
            ("boundaries", json.dumps(list(self.boundaries))),
        ]
        if self.factors is not None:
            fields.append(("factors", json.dumps(list(self.factors), ensure_ascii=False)))
        return "{" + ", ".join(f'"{k}": {v}' for k, v in fields) + "}"

    @classmethod
    def from_json(cls, line: str) -> "FactorReport":
        d = json.loads(line)
        factors = d.get("factors")
        return cls(
            id=d["id"],
            kind=d["kind"],
            length=d["length"],
            factor_lengths=tuple(d["factor_lengths"]),
            boundaries=tuple(d["boundaries"]),
            factors=tuple(factors) if factors is not None else None,
        )


def _emit(out, text: str) -> None:
    out.write(text + "\n")


def _label(args, rec: Record) -> str:
    # raw records are self-evident by line order; fasta ones get their header
    return f"{rec.id}\t" if args.format == "fasta" else ""


def cmd_factorize(args, records, alpha, out) -> int:
    factorize = FACTORIZERS[args.mode]
    for rec in records:
        f = factorize(rec.word, alpha)
        if args.output == "json":
            _emit(out, FactorReport.build(rec.id, f, args.show_factors).to_json())
        else:
            _emit(out, _label(args, rec) + f.render())
    return EXIT_OK


def _sesquipower(word, alpha, cap):
    try:
        return lyndon.is_strict_sesquipower_of_anti_lyndon(word, alpha, max_len=cap)
    except ResourceLimitError as exc:
        raise UsageError(f"{exc}; raise --cap to test longer records") from None


def cmd_check(args, records, alpha, out) -> int:
    tests = {
        "lyndon": lyndon.is_lyndon,
        "anti-lyndon": lyndon.is_anti_lyndon,
        "inverse-lyndon": inverse_lyndon.is_inverse_lyndon,
        "sesquipower": lambda w, a: _sesquipower(w, a, args.cap),
    }
    test = tests[args.predicate]
    status = EXIT_OK
    for rec in records:
        value = test(rec.word, alpha)
        if not value:
            status = EXIT_FAILED
        if args.output == "json":
            _emit(out, json.dumps({"id": rec.id, "predicate": args.predicate, "value": value}, ensure_ascii=False))
        else:
            _emit(out, _label(args, rec) + ("true" if value else "false"))
    return status


def verify_word(word: bytes, alpha: Alphabet, cap: int, inject_fault: bool = False) -> dict:
    """Run the ICFL consistency checks on one word.

    Returns an ordered mapping of check name to True/False, or None when the
    compatibility check was skipped because the word is longer than ``cap``.
    With ``inject_fault`` the first factor gets a duplicated last byte, which
    every downstream check must notice.
    """
    f = inverse_lyndon.icfl(word, alpha)
    factors = list(f.factors)
    if inject_fault:
        factors[0] = factors[0] + factors[0][-1:]
    checks = {}
    checks["reassembly"] = b"".join(factors) == word
    checks["inverse_lyndon"] = all(inverse_lyndon.is_inverse_lyndon(m, alpha) for m in factors)
    ranks = [alpha.ranks(m) for m in factors]
    checks["sharp_chain"] = all(a < b and not b.startswith(a) for a, b in zip(ranks, ranks[1:]))
    try:
        cand = Factorization.from_factors(factors, FactorKind.ICFL)
        checks["grouping"] = groupings.is_grouping(cand, lyndon.cfl_in(word, alpha), alpha)
    except ContractError:
        checks["grouping"] = False
    if len(word) > cap:
        checks["compatibility"] = None
    elif not checks["reassembly"]:
        checks["compatibility"] = False
    else:
        k = len(f)
        checks["compatibility"] = all(
            suffix_sort.check_compatibility(word, f, a, b, alpha, suffix_sort.OrderTag.INV_LEX)
            for a in range(k)
            for b in range(a + 1, k + 1)
        )
    return checks


def cmd_verify(args, records, alpha, out) -> int:
    status = EXIT_OK
    for rec in records:
        checks = verify_word(rec.word, alpha, args.cap, args.inject_fault)
        ok = all(v is not False for v in checks.values())
        if not ok:
            status = EXIT_FAILED
        if args.output == "json":
            _emit(out, json.dumps({"id": rec.id, "ok": ok, "checks": checks}, ensure_ascii=False))
        else:
            failed = [k for k, v in checks.items() if v is False]
            skipped = [k for k, v in checks.items() if v is None]
            line = f"{rec.id}: " + ("ok" if ok else "FAIL " + ",".join(failed))
            if skipped:
                line += f" (skipped {','.join(skipped)}: length {len(rec.word)} > cap {args.cap})"
            _emit(out, line)
    return status


def cmd_suffix_sort(args, records, alpha, out) -> int:
    for rec in records:
        if args.mode == "naive":
            if len(rec.word) > args.cap:
                raise UsageError(f"record {rec.id} has length {len(rec.word)} > cap {args.cap} for naive sorting")
            order = suffix_sort.sort_suffixes(rec.word, alpha=alpha, order=suffix_sort.OrderTag.INV_LEX)
        else:
            f = inverse_lyndon.icfl(rec.word, alpha)
            order = suffix_sort.merge_sort_suffixes(rec.word, f, alpha)
        positions = order.one_based()
        if args.output == "json":
            _emit(out, json.dumps({"id": rec.id, "mode": args.mode, "positions": positions}, ensure_ascii=False))
        else:
            _emit(out, _label(args, rec) + " ".join(map(str, positions)))
    return EXIT_OK


COMMANDS = {
    "factorize": cmd_factorize,
    "check": cmd_check,
    "verify": cmd_verify,
    "suffix-sort": cmd_suffix_sort,
}


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="input file, or '-' for standard input (default)")
    common.add_argument("--alphabet", help="symbols in increasing order, e.g. 'abcd' (default: byte order)")
    common.add_argument("--format", choices=["raw", "fasta"], default="raw", help="raw: one word per line")
    common.add_argument("--output", choices=["text", "json"], default="text")
    common.add_argument("--show-factors", action="store_true", help="include factor strings in json reports")
    common.add_argument(
        "--cap", type=_positive, default=256, help="length cap for the brute-force checks (default 256)"
    )

    parser = argparse.ArgumentParser(prog="icfl", description="Lyndon and inverse Lyndon factorizations of words.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", parents=[common], help="factorize each record")
    p.add_argument("--mode", choices=sorted(FACTORIZERS), default="icfl")

    p = sub.add_parser("check", parents=[common], help="test a word-class predicate on each record")
    p.add_argument(
        "--predicate", choices=["lyndon", "anti-lyndon", "inverse-lyndon", "sesquipower"], required=True
    )

    p = sub.add_parser("verify", parents=[common], help="check the ICFL invariants on each record")
    p.add_argument("--inject-fault", action="store_true", help="self-test: corrupt a boundary so checks must fail")

    p = sub.add_parser("suffix-sort", parents=[common], help="inverse-order suffix list (1-based positions)")
    p.add_argument("--mode", choices=["naive", "merge"], default="merge")
    return parser


def _warn(msg: str) -> None:
    print(f"icfl: warning: {msg}", file=sys.stderr)


def _error(msg: str) -> None:
    print(f"icfl: error: {msg}", file=sys.stderr)


class _Counted:
    """Wrap a record iterator, remembering whether anything came out and the current record."""

    def __init__(self, it):
        self._it = it
        self.count = 0
        self.current: Record | None = None

    def __iter__(self):
        for rec in self._it:
            self.count += 1
            self.current = rec
            yield rec


def main(argv=None, stdin=None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    stdout = stdout or sys.stdout
    try:
        alpha = Alphabet.from_text(args.alphabet) if args.alphabet is not None else DEFAULT_ALPHABET
    except AlphabetError as exc:
        _error(f"bad --alphabet: {exc}")
        return EXIT_USAGE

    try:
        if args.input == "-":
            stream = stdin if stdin is not None else sys.stdin.buffer
            close = False
        else:
            stream = open(args.input, "rb")
            close = True
    except OSError as exc:
        _error(f"cannot read {args.input}: {exc.strerror or exc}")
        return EXIT_IO

    reader = read_fasta(stream, _warn) if args.format == "fasta" else read_raw(stream)
    records = _Counted(reader)
    try:
        status = COMMANDS[args.command](args, records, alpha, stdout)
    except AlphabetError as exc:
        rid = records.current.id if records.current else "?"
        offset = f" at position {exc.offset + 1}" if exc.offset is not None else ""
        symbol = f" {bytes([exc.symbol])!r}" if exc.symbol is not None else ""
        _error(f"record {rid}: byte{symbol}{offset} is not in the alphabet")
        return EXIT_USAGE
    except UsageError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except FactorizationError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except OSError as exc:
        _error(f"I/O error: {exc}")
        return EXIT_IO
    finally:
        if close:
            stream.close()
    if records.count == 0:
        _warn("no records in input")
    return status


if __name__ == "__main__":
    sys.exit(main())
