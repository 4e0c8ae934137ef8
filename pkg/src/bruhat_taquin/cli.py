"""
Command-line front end.

    bruhat-taquin schubert poly 1324
    bruhat-taquin schubert product 213 213 --format json
    bruhat-taquin growth --base 2143 --delta "2_4@1" --gamma "1_2 2_3" --k 2
    bruhat-taquin verify --n 4 --k all --suite speclrr --jobs 4 --out report.jsonl

Exit codes: 0 on success, 1 when a theorem suite reports a failure, 2 on
malformed input (bad permutation or chain).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cache import ENV_VAR, default_cache_path, load_cache, save_cache
from .chains import ChainWord, InvalidChain
from .growth import InvalidDiagram, fill_growth_diagram
from .perms import Permutation
from .render import ascii_diagram, tikz_diagram
from .schubert import default_store, schubert_polynomial, structure_constants
from .sweeps import SUITES, THEOREM_SUITES, run_suite, summarize, write_jsonl

log = logging.getLogger("bruhat_taquin")


class UsageError(Exception):
    """Malformed user input; reported with exit code 2."""


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"malformed permutation {text!r}: {exc}") from None


def _parse_ks(text: str, n: int) -> list[int]:
    if text == "all":
        return list(range(1, n))
    try:
        ks = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise UsageError(f"--k must be 'all' or a comma separated list, got {text!r}") from None
    bad = [k for k in ks if not 1 <= k < n]
    if bad:
        raise UsageError(f"column(s) {bad} outside 1..{n - 1}")
    return ks


# --- subcommands ---------------------------------------------------------------

def cmd_schubert(args, out) -> int:
    if args.what == "poly":
        if len(args.perms) != 1:
            raise UsageError("schubert poly takes one permutation")
        w = _perm(args.perms[0])
        poly = schubert_polynomial(w)
        if args.format == "json":
            out.write(json.dumps({"perm": str(w), "nvars": poly.nvars, "poly": poly.to_json()},
                                 sort_keys=True) + "\n")
        else:
            out.write(str(poly) + "\n")
        return 0
    if len(args.perms) != 2:
        raise UsageError("schubert product takes two permutations")
    u, v = (_perm(p) for p in args.perms)
    expansion = structure_constants(u, v)
    if args.format == "json":
        out.write(json.dumps({str(p): c for p, c in expansion.coeffs}) + "\n")
    else:
        width = max((len(str(p)) for p, _ in expansion.coeffs), default=0)
        for p, c in expansion.coeffs:
            out.write(f"S_{str(p).ljust(width)}  {c}\n")
        if not expansion.coeffs:
            out.write("0\n")
    return 0


def cmd_growth(args, out) -> int:
    base = _perm(args.base)
    try:
        delta = ChainWord.parse(base, args.delta, args.l)
        gamma = ChainWord.parse(delta.end, args.gamma, args.k)
    except InvalidChain as exc:
        raise UsageError(f"invalid chain: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"malformed chain: {exc}") from None
    try:
        d = fill_growth_diagram(delta, gamma, args.k)
    except InvalidDiagram as exc:
        raise UsageError(f"invalid diagram: {exc}") from None
    if args.render == "json":
        out.write(json.dumps(d.to_json(), sort_keys=True) + "\n")
        return 0
    if args.render == "tikz":
        out.write(tikz_diagram(d) + "\n")
    else:
        out.write(ascii_diagram(d) + "\n\n")
    out.write(f"jdt: {d.output.word() or '(empty)'}\n")
    out.write(f"tags: {' '.join(d.tag_sequence()) or '(none)'}\n")
    return 0


def _worker_init(cache_path: Optional[str]) -> None:
    if cache_path:
        load_cache(Path(cache_path), default_store)


def cmd_verify(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    ks = _parse_ks(args.k, args.n)
    cache = str(args.cache) if args.cache else None
    records = run_suite(args.suite, args.n, ks, sample=args.sample, seed=args.seed,
                        jobs=args.jobs, timing=args.timing,
                        worker_init=_worker_init, init_args=(cache,))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            done = write_jsonl(records, fh)
    else:
        done = write_jsonl(records, out)
    counts = summarize(done)
    print(f"{args.suite} n={args.n}: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())),
          file=sys.stderr)
    if args.suite in THEOREM_SUITES and counts.get("fail", 0):
        return 1
    return 0


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bruhat-taquin",
                                     description="Jeu de taquin and Schubert calculus on k-Bruhat chains.")
    parser.add_argument("--cache", type=Path, default=default_cache_path(),
                        help=f"persist the Schubert polynomial memo here (default: ${ENV_VAR})")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", help="Schubert polynomials and products")
    p.add_argument("what", choices=["poly", "product"])
    p.add_argument("perms", nargs="+", metavar="PERM")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("growth", help="fill a growth diagram and print jdt")
    p.add_argument("--base", required=True, help="bottom-left permutation (start of Delta)")
    p.add_argument("--delta", default="", help='vertical chain, e.g. "2_4@1" or "2_4" with --l')
    p.add_argument("--gamma", required=True, help='horizontal chain starting at the end of Delta')
    p.add_argument("--k", type=int, default=None, help="column of Gamma's steps without @")
    p.add_argument("--l", type=int, default=None, help="column of Delta's steps without @")
    p.add_argument("--render", choices=["ascii", "tikz", "json"], default="ascii")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("verify", help="run a verification sweep and emit a JSON Lines report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", default="all", help="'all' or a comma separated list of columns")
    p.add_argument("--suite", choices=SUITES, default="speclrr")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="report path (default: stdout)")
    p.add_argument("--sample", type=int, default=None, help="check a seeded random subset of this size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="add per-instance seconds to the report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.cache:
        load_cache(args.cache, default_store)
        default_store.dirty = False
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # the reader (e.g. ``head``) went away; stop quietly, keep the cache
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    if args.cache and default_store.dirty:
        save_cache(args.cache, default_store)
    return code


if __name__ == "__main__":
    sys.exit(main())
