"""Command-line front end.

Words are written as space-separated 1-based letter indices.  The token
``z`` stands for 1 2 ... n, and ``^k`` (attached or on its own) repeats the
previous token k times.  Text output is one verdict line followed by detail
lines that start with "# ".

Exit status: 0 for a definitive answer or an all-pass suite, 2 for unknown
or inconclusive, 1 for a failed check or a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import group as grp
from .cache import ClosureCache
from .normalform import normal_form_T, normal_form_z2
from .presentation import PresentationError, build_presentation, load_presentation
from .rewrite import DEFAULT_BUDGET, IDEALS, closure, equal, ideal_witness
from .verify import CATALOG, FAIL, INCONCLUSIVE, SuiteConfig, applicable, run_suite
from .word import Word, format_word

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN = 0, 1, 2
KINDS = ("trivial", "alternating", "symmetric", "cyclic")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAIL, f"{self.prog}: error: {message}\n")


def parse_word(text: str, n: int) -> Word:
    """Parse CLI word syntax; errors name the token and its position."""
    out: list[list[int]] = []
    tokens = text.replace("^", " ^").split()
    for pos, tok in enumerate(tokens, 1):
        if tok == "z":
            out.append(list(range(1, n + 1)))
        elif tok.startswith("^"):
            if not out:
                raise UsageError(f"token {pos} {tok!r}: '^' needs a preceding token")
            try:
                k = int(tok[1:])
            except ValueError:
                raise UsageError(f"token {pos} {tok!r}: exponent must be an integer") from None
            if k < 0:
                raise UsageError(f"token {pos} {tok!r}: exponent must be nonnegative")
            out[-1] = out[-1] * k
        else:
            try:
                x = int(tok)
            except ValueError:
                raise UsageError(f"token {pos} {tok!r}: expected a letter index or 'z'") from None
            if not 1 <= x <= n:
                raise UsageError(f"token {pos} {tok!r}: letter outside 1..{n}")
            out.append([x])
    return tuple(c for chunk in out for c in chunk)


@dataclass
class CliConfig:
    presentation: object
    budget: int = DEFAULT_BUDGET
    output: str = "text"
    seed: int = 0
    cache_dir: Optional[str] = None

    def __post_init__(self):
        if self.budget < 1:
            raise UsageError("--budget must be at least 1")


def _config(args) -> CliConfig:
    if args.pres:
        if args.n is not None or args.H is not None:
            raise UsageError("--pres cannot be combined with --n/--H")
        p = load_presentation(args.pres)
    else:
        if args.n is None:
            raise UsageError("give --n (and --H) or --pres")
        p = build_presentation(args.n, args.H or "alternating")
    return CliConfig(p, args.budget, "json" if args.json else "text", args.seed, args.cache_dir)


def _emit(cfg: CliConfig, verdict: str, record: dict, details: Sequence[str] = ()):
    if cfg.output == "json":
        print(json.dumps(record, indent=2, ensure_ascii=False))
    else:
        print(verdict)
        for line in details:
            print(f"# {line}")


def _exit_for(verdict: str) -> int:
    if verdict in ("unknown", "truncated", INCONCLUSIVE):
        return EXIT_UNKNOWN
    if verdict == FAIL:
        return EXIT_FAIL
    return EXIT_OK


def cmd_eq(cfg: CliConfig, args) -> int:
    p = cfg.presentation
    u, v = parse_word(args.w1, p.n), parse_word(args.w2, p.n)
    d = equal(u, v, p, cfg.budget)
    record = {"command": "eq", "u": list(u), "v": list(v), **d.to_dict()}
    _emit(cfg, d.verdict, record, [f"reason {d.reason}", f"cost {d.cost}"])
    return _exit_for(d.verdict)


def cmd_closure(cfg: CliConfig, args) -> int:
    p = cfg.presentation
    w = parse_word(args.w, p.n)
    cache = ClosureCache(cfg.cache_dir) if cfg.cache_dir else None
    cls = closure(w, p, cfg.budget, cache=cache)
    record = {
        "command": "closure",
        "seed": list(cls.seed),
        "status": cls.status,
        "size": len(cls),
        "members": [list(m) for m in cls.members],
    }
    details = [format_word(m) for m in cls.members]
    _emit(cfg, f"{cls.status} {len(cls)}", record, details)
    return _exit_for(cls.status)


def cmd_nf(cfg: CliConfig, args) -> int:
    p = cfg.presentation
    s = parse_word(args.w, p.n)
    if args.kind == "T":
        if not args.triple:
            raise UsageError("--kind T needs --triple k,l,r")
        try:
            k, l, r = (int(x) for x in args.triple.replace(",", " ").split())
        except ValueError:
            raise UsageError(f"--triple expects three letters, got {args.triple!r}") from None
        form = normal_form_T(s, k, l, r, p)
        w = form.word(p.n)
        record = {"command": "nf", "kind": "T", "input": list(s), "form": form.to_dict(), "word": list(w)}
        _emit(cfg, format_word(w), record, [f"triple {form.triple} orientation {form.orientation}"])
    else:
        form = normal_form_z2(s, p)
        w = form.word()
        record = {"command": "nf", "kind": "z2", "input": list(s), "form": form.to_dict(), "word": list(w)}
        _emit(cfg, format_word(w), record, [f"z^2 form {form.kind} core ({form.i},{form.j}) n1={form.n1} n2={form.n2}"])
    return EXIT_OK


def cmd_member(cfg: CliConfig, args) -> int:
    p = cfg.presentation
    w = parse_word(args.w, p.n)
    verdict, witness, cost = ideal_witness(w, p, args.ideal, cfg.budget)
    record = {
        "command": "member",
        "word": list(w),
        "ideal": args.ideal,
        "verdict": verdict,
        "witness": list(witness) if witness is not None else None,
        "cost": cost,
    }
    details = [f"witness {format_word(witness)}"] if witness is not None else []
    _emit(cfg, verdict, record, details + [f"cost {cost}"])
    return _exit_for(verdict)


def cmd_group(cfg: CliConfig, args) -> int:
    p = cfg.presentation
    w = parse_word(args.w, p.n)
    g = grp.from_word(w, p.n)
    text = f"c^{g.eps} " + " ".join(f"a{i + 1}^{e}" for i, e in enumerate(g.exps))
    record = {"command": "group", "word": list(w), "image": g.to_dict(), "central": grp.is_central(g)}
    _emit(cfg, text, record, [f"central {str(grp.is_central(g)).lower()}"])
    return EXIT_OK


def cmd_verify(cfg: CliConfig, args) -> int:
    p = cfg.presentation
    if not p.is_alternating:
        raise UsageError("the check catalog needs H = alternating")
    ids = args.check or None
    if ids:
        unknown = [c for c in ids if c not in CATALOG]
        if unknown:
            raise UsageError(f"unknown check {unknown[0]!r}; see 'verify --list'")
    if args.list:
        for cid in applicable(p):
            print(cid)
        return EXIT_OK
    if args.max_len is not None and args.max_len < 0:
        raise UsageError("--max-len must be nonnegative")
    config = SuiteConfig(ids, cfg.budget, args.max_len, cfg.seed)
    report = run_suite(p, config)
    totals = report.totals
    if totals[FAIL]:
        verdict = FAIL
    elif totals[INCONCLUSIVE]:
        verdict = INCONCLUSIVE
    else:
        verdict = "pass"
    if cfg.output == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(f"{verdict} {totals['pass']}/{totals['checks']}")
        for r in report.checks:
            label = f" [{r.label}]" if r.label else ""
            print(f"# {r.check_id} {r.verdict}{label}: {r.details}")
    return _exit_for(verdict)


COMMANDS = {
    "eq": cmd_eq,
    "closure": cmd_closure,
    "nf": cmd_nf,
    "member": cmd_member,
    "group": cmd_group,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="degree n >= 3")
    common.add_argument("--H", choices=KINDS, help="permutation set (default alternating)")
    common.add_argument("--pres", help="presentation file")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="word budget per search")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cache-dir", help="directory for cached closures")

    parser = _Parser(prog="permrel", description="Word problems in S_n(H) monoids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    eq = sub.add_parser("eq", parents=[common], help="decide u = v")
    eq.add_argument("w1")
    eq.add_argument("w2")
    cl = sub.add_parser("closure", parents=[common], help="list the class of a word")
    cl.add_argument("w")
    nf = sub.add_parser("nf", parents=[common], help="normal form of z^2 s or of a_k a_l a_r z s")
    nf.add_argument("w")
    nf.add_argument("--kind", choices=("z2", "T"), default="z2")
    nf.add_argument("--triple", help="k,l,r for --kind T")
    mem = sub.add_parser("member", parents=[common], help="ideal membership")
    mem.add_argument("w")
    mem.add_argument("ideal", choices=IDEALS)
    gp = sub.add_parser("group", parents=[common], help="image in the group G")
    gp.add_argument("w")
    ver = sub.add_parser("verify", parents=[common], help="run the check catalog")
    ver.add_argument("--check", action="append", help="check id (repeatable; default all applicable)")
    ver.add_argument("--max-len", type=int, help="override the word-length bound L")
    ver.add_argument("--list", action="store_true", help="list applicable checks")
    ver.add_argument("--timing", action="store_true", help="include wall-clock seconds in JSON")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](cfg, args)
    except (UsageError, PresentationError, ValueError, OSError) as exc:
        print(f"permrel: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
