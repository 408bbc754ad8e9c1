"""Command-line interface.

Input files look like::

    rank: 2
    tab:
    00
    01
    10

Character ``i`` of a bitstring is coordinate ``i``.  Blank lines and ``#``
comments are ignored.  Output is one ``key: value`` pair per line.

Exit codes: 0 on success, 1 when ``check`` finds that U -> W is not an
isomorphism, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import decision
from .errors import A1WeylError, BudgetExhausted, ParseError, RankTooLarge
from .f2_linalg import F2Vector
from .lattice import GVector
from .selftest import run_all
from .symmetric_space import RootDatum, validate
from .weyl import eval_word_W

EXIT_OK = 0
EXIT_NOT_ISO = 1
EXIT_INPUT = 2


def parse_input(text: str) -> RootDatum:
    rank = None
    seen_tab = False
    classes: list[F2Vector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        if rank is None:
            key, sep, value = line.partition(":")
            if not sep or key.strip() != "rank":
                raise ParseError("expected 'rank: <n>'", lineno, col)
            try:
                rank = int(value.strip())
            except ValueError:
                raise ParseError(f"rank is not an integer: {value.strip()!r}", lineno, col) from None
            if rank < 1:
                raise ParseError(f"rank must be positive, got {rank}", lineno, col)
            continue
        if not seen_tab:
            if line.replace(" ", "") != "tab:":
                raise ParseError("expected 'tab:'", lineno, col)
            seen_tab = True
            continue
        for k, ch in enumerate(line):
            if ch not in "01":
                raise ParseError(f"invalid character {ch!r} in bitstring", lineno, col + k)
        if len(line) != rank:
            raise ParseError(f"bitstring of length {len(line)}, expected {rank}", lineno, col)
        classes.append(F2Vector.from_str(line))
    if rank is None:
        raise ParseError("missing 'rank:' line", 1)
    if not seen_tab:
        raise ParseError("missing 'tab:' line", len(text.splitlines()) or 1)
    return validate(rank, classes)


def format_datum(d: RootDatum) -> str:
    return "\n".join([f"rank: {d.rank}", "tab:", *(str(c) for c in d.tab)]) + "\n"


def parse_word(spec: str, n: int | None = None) -> list[GVector]:
    """Parse ``"1,0;0,1"`` into a list of integer vectors."""
    spec = spec.strip()
    if not spec:
        return []
    word = []
    for k, letter in enumerate(spec.split(";")):
        try:
            t = tuple(int(x) for x in letter.split(","))
        except ValueError:
            raise ParseError(f"letter {k} is not a list of integers: {letter!r}", 1) from None
        if n is not None and len(t) != n:
            raise ParseError(f"letter {k} has {len(t)} coordinates, expected {n}", 1)
        word.append(t)
    return word


def format_word(word: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(x) for x in t) for t in word)


def _verdict_lines(v: decision.Verdict) -> list[str]:
    return [
        f"cardinality: {v.cardinality}",
        f"rank-sym: {v.rank_sym}",
        f"independent: {'true' if v.independent else 'false'}",
        f"verdict: {'isomorphism' if v.iso else 'not-isomorphism'}",
    ]


def _load(path: str) -> RootDatum:
    if path == "-":
        return parse_input(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())


def _cmd_check(args, out: TextIO) -> int:
    v = decision.decide(_load(args.file))
    out.write("\n".join(_verdict_lines(v)) + "\n")
    return EXIT_OK if v.iso else EXIT_NOT_ISO


def _cmd_witness(args, out: TextIO) -> int:
    d = _load(args.file)
    v = decision.decide(d)
    lines = _verdict_lines(v)
    if v.independent:
        lines.append("dependency: none")
        out.write("\n".join(lines) + "\n")
        return EXIT_OK
    w = decision.extract_witness(d)
    lines.append("dependency: " + " ".join(str(c) for c in w.dependency))
    lines.append(f"pad-zero: {'true' if w.pad_zero else 'false'}")
    if args.word_search:
        try:
            word = decision.find_identity_word(d, w, args.budget)
            lines.append("word: " + format_word(word))
        except BudgetExhausted:
            lines.append("word: not-found-within-budget")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_eval(args, out: TextIO) -> int:
    d = _load(args.file)
    result = eval_word_W(d, parse_word(args.word, d.rank))
    out.write(f"result: {result}\n")
    return EXIT_OK


def _cmd_enumerate(args, out: TextIO) -> int:
    max_rank = max(args.rank, decision.DEFAULT_MAX_ENUM_RANK) if args.force else decision.DEFAULT_MAX_ENUM_RANK
    count = 0
    for d, v in decision.enumerate_data(args.rank, up_to_gl=args.up_to_gl, max_rank=max_rank):
        out.write("datum: " + " ".join(str(c) for c in d.tab) + "\n")
        out.write("\n".join(_verdict_lines(v)) + "\n\n")
        count += 1
    out.write(f"count: {count}\n")
    return EXIT_OK


def _cmd_selftest(args, out: TextIO) -> int:
    ok = True
    for r in run_all(seed=args.seed, iters=args.iters):
        status = "pass" if r.passed else "FAIL"
        out.write(f"{r.name}: {status}" + (f" ({r.detail})" if r.detail else "") + "\n")
        ok = ok and r.passed
    return EXIT_OK if ok else EXIT_NOT_ISO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="a1weyl",
        description="Decide whether the Weyl group of an extended A1 root system has the presentation by conjugation.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide 2-independence of the nonzero classes")
    c.add_argument("file", help="datum file, or - for stdin")
    c.set_defaults(func=_cmd_check)

    w = sub.add_parser("witness", help="print a kernel certificate for a dependent datum")
    w.add_argument("file")
    w.add_argument("--word-search", action="store_true", help="also build a word trivial in W")
    w.add_argument("--budget", type=int, default=10**6, help="step limit for the word search")
    w.set_defaults(func=_cmd_witness)

    e = sub.add_parser("eval", help="evaluate a word of reflections in W")
    e.add_argument("file")
    e.add_argument("--word", required=True, help="letters separated by ';', coordinates by ','")
    e.set_defaults(func=_cmd_eval)

    n = sub.add_parser("enumerate", help="list every datum of a given rank with its verdict")
    n.add_argument("--rank", type=int, required=True)
    n.add_argument("--up-to-gl", action="store_true", help="one datum per GL(n,2)-orbit")
    n.add_argument("--force", action="store_true", help="lift the rank limit of 4")
    n.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("selftest", help="run randomized axiom checks")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--iters", type=int, default=1000)
    s.set_defaults(func=_cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (A1WeylError, OSError) as exc:
        if isinstance(exc, RankTooLarge):
            print(f"error: {exc} (use --force to override)", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
