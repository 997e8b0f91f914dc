"""Command-line interface: ``scl <command> ...``.

Exit codes: 0 success, 1 property violated, 2 usage or parse error,
3 search limit reached.
"""
from __future__ import annotations

import argparse
import csv
import sys
from typing import Optional, Sequence

from . import acceptance
from .cayley import DEFAULT_ENUM_CAP, DistanceOracle, default_radius_cap, enumerate_isometric_cycles
from .errors import ResourceError, SclError
from .families import FamilySpec, u_family, w_n
from .group import STD, TWISTED, custom_alphabet, evaluate, get_alphabet
from .shortcut_free import cancellation_tree, decompose, format_split
from .shortcut_product import shortcut, verify_certificate
from .words import format_word, free_reduce, parse_word

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _show(w) -> str:
    return format_word(w) or "1"


def _alphabet(args):
    if getattr(args, "gen", None):
        return custom_alphabet(args.gen)
    return get_alphabet(args.alphabet)


def _oracle(args, alphabet=None) -> DistanceOracle:
    return DistanceOracle(alphabet or _alphabet(args), radius_cap=args.radius_cap)


def cmd_reduce(args):
    print(_show(free_reduce(parse_word(args.word, _alphabet(args)))))
    return EXIT_OK


def cmd_eval(args):
    print(evaluate(parse_word(args.word, _alphabet(args))))
    return EXIT_OK


def cmd_dist(args):
    alphabet = _alphabet(args)
    oracle = _oracle(args, alphabet)
    g = evaluate(parse_word(args.word, alphabet))
    if args.word2 is None:
        print(oracle.distance(g))
    else:
        print(oracle.distance(g, evaluate(parse_word(args.word2, alphabet))))
    return EXIT_OK


def cmd_geodesic(args):
    alphabet = _alphabet(args)
    w = parse_word(args.word, alphabet)
    v = _oracle(args, alphabet).geodesic_witness(evaluate(w))
    print(f"{_show(v)} (length {len(v)})")
    return EXIT_OK


def cmd_cycle_check(args):
    if args.wn is not None:
        if args.gen or args.alphabet != "twisted":
            print("--wn builds a word over the twisted alphabet; use --alphabet twisted", file=sys.stderr)
            return EXIT_USAGE
        w = w_n(args.wn)
    elif args.word is not None:
        w = parse_word(args.word, _alphabet(args))
    else:
        print("cycle check needs a word or --wn N", file=sys.stderr)
        return EXIT_USAGE
    report = _oracle(args, w.alphabet).is_isometric_cycle(w)
    if report.is_isometric:
        print("isometric")
        return EXIT_OK
    i, j, expected, actual = report.violation
    print(f"not isometric: d(g_{i}, g_{j}) = {actual} < {expected}")
    return EXIT_VIOLATED


def cmd_cycle_enumerate(args):
    oracle = _oracle(args)
    cycles = enumerate_isometric_cycles(
        oracle, args.max_len, enum_cap=args.enum_cap, workers=args.threads
    )
    rows = [(len(w), format_word(w)) for w in cycles]
    if args.csv:
        _write_csv(args.csv, ("length", "word"), rows)
    for length, text in rows:
        print(f"{length},{text}")
    return EXIT_OK


def cmd_shortcut_free(args):
    u = parse_word(args.word, _alphabet(args))
    split = decompose(u)
    print(format_split(split))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(cancellation_tree(u).to_dot(highlight=split.centroid))
    return EXIT_OK


def cmd_shortcut_product(args):
    if args.gen or args.alphabet != "std":
        print(
            "shortcut certificates exist only over the standard alphabet {a,b,c,d}; "
            "for other generating sets test the loop with `scl cycle check`",
            file=sys.stderr,
        )
        return EXIT_USAGE
    w = parse_word(args.word, STD)
    cert = shortcut(w)
    line = cert.to_json()
    print(line)
    if args.cert:
        with open(args.cert, "w") as fh:
            fh.write(line + "\n")
    check = verify_certificate(w, cert)
    print("verified" if check else f"rejected: {check.reason}")
    return EXIT_OK if check else EXIT_VIOLATED


def cmd_family(args):
    if args.family == "wn":
        print(format_word(w_n(args.n)))
    else:
        print(format_word(u_family(FamilySpec(args.n, args.k, args.variant))))
    return EXIT_OK


def cmd_ball(args):
    rows = _oracle(args).ball_profile(args.radius)
    if args.csv:
        _write_csv(args.csv, ("r", "sphere", "ball"), rows)
    print("r,sphere,ball")
    for r in rows:
        print(",".join(map(str, r)))
    return EXIT_OK


def cmd_verify(args):
    cfg = acceptance.Settings(level=args.level, seed=args.seed, radius_cap=args.radius_cap)
    outcomes = acceptance.run_all(cfg)
    failed = [o for o in outcomes if not o.ok]
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} criteria passed")
    return EXIT_OK if not failed else EXIT_VIOLATED


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default="std", help="std or twisted (default std)")
    common.add_argument("--gen", help='custom generators over {a,b,c,d}, e.g. "a=a,b=b,c=c,t=dB"')
    common.add_argument("--radius-cap", type=int, default=default_radius_cap(),
                        help="maximum search radius per side (env SCL_RADIUS_CAP)")
    common.add_argument("--seed", type=int, default=20240607)
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes for cycle enumeration")

    parser = _Parser(prog="scl", description="Shortcuts and isometric loops in F2 x F2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("reduce", parents=[common], help="freely reduce a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("eval", parents=[common], help="normal form of a word, in std letters")
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dist", parents=[common], help="word-metric distance")
    p.add_argument("word")
    p.add_argument("word2", nargs="?")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("geodesic", parents=[common], help="a shortest word for the element")
    p.add_argument("word")
    p.set_defaults(func=cmd_geodesic)

    cycle = sub.add_parser("cycle", help="isometric cycles").add_subparsers(
        dest="cycle_command", required=True, parser_class=_Parser
    )
    p = cycle.add_parser("check", parents=[common])
    p.add_argument("word", nargs="?")
    p.add_argument("--wn", type=int, metavar="N")
    p.set_defaults(func=cmd_cycle_check)
    p = cycle.add_parser("enumerate", parents=[common])
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_cycle_enumerate)

    sc = sub.add_parser("shortcut", help="shortcut splits and certificates").add_subparsers(
        dest="shortcut_command", required=True, parser_class=_Parser
    )
    p = sc.add_parser("free", parents=[common])
    p.add_argument("word")
    p.add_argument("--dot", help="write the cancellation tree as DOT")
    p.set_defaults(func=cmd_shortcut_free)
    p = sc.add_parser("product", parents=[common])
    p.add_argument("word")
    p.add_argument("--cert", help="write the certificate record here")
    p.set_defaults(func=cmd_shortcut_product)

    fam = sub.add_parser("family", help="the words w_n and u_k").add_subparsers(
        dest="family", required=True, parser_class=_Parser
    )
    p = fam.add_parser("wn")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_family)
    p = fam.add_parser("uk")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--variant", default="plain", choices=("plain", "prime", "dprime", "tprime"))
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ball", parents=[common], help="sphere and ball sizes")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_ball)

    ver = sub.add_parser("verify", help="acceptance suite").add_subparsers(
        dest="verify_command", required=True, parser_class=_Parser
    )
    p = ver.add_parser("acceptance", parents=[common])
    p.add_argument("--level", choices=("quick", "full"), default="full")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"scl: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SclError as exc:
        print(f"scl: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
