"""Command line entry point: ``lscrystal explore|character|orbit|verify``."""
from __future__ import annotations

import argparse
import logging
import sys

from .cartan import CartanMatrix, parse_weight
from .explorer import character, explore, export
from .order import OrderConfig
from .paths import InvalidPath, parse_path, straight, validation_error
from .verify import SUITES, run_suite
from .weyl import orbit

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _cartan_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)


def _order_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-reflection-length", type=int, default=9)
    p.add_argument("--max-chain-length", type=int, default=12)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lscrystal", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("explore", help="explore the crystal graph of B(shape)")
    _cartan_args(p)
    p.add_argument("--shape", default="1,-1")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--seed", help="seed path, e.g. 'dirs=[(1,-1)];cuts=[0,1]'")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out")
    p.add_argument("--validate-every", type=int, default=0,
                   help="re-certify every k-th node as an LS path")
    _order_args(p)

    p = sub.add_parser("character", help="weight multiplicities within the depth")
    _cartan_args(p)
    p.add_argument("--shape", default="1,-1")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--plot", help="write a weight diagram to this image file")

    p = sub.add_parser("orbit", help="Weyl orbit of a weight")
    _cartan_args(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--max-length", type=int, required=True)

    p = sub.add_parser("verify", help="run verification suites")
    _cartan_args(p)
    p.add_argument("--shape", default="1,-1")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--word-bound", type=int, default=6)
    _order_args(p)
    return parser


def _seed(cm, shape, text):
    if text is None:
        return straight(cm, shape, shape)
    return parse_path(cm, shape, text)


def cmd_explore(args, cm) -> int:
    shape = parse_weight(args.shape)
    cfg = OrderConfig(args.max_reflection_length, args.max_chain_length)
    seed = _seed(cm, shape, args.seed)
    reason = validation_error(seed, cfg)
    if reason is not None:
        raise InvalidPath(f"seed rejected: {reason}")
    g = explore(cm, seed, args.depth, cfg, validate_every=args.validate_every)
    data = export(g, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    if g.audit_failures:
        for p, why in g.audit_failures:
            print(f"audit: {p.text()}: {why}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_character(args, cm) -> int:
    shape = parse_weight(args.shape)
    g = explore(cm, straight(cm, shape, shape), args.depth)
    for w, c in character(g):
        print(f"{w}:{c}")
    if args.plot:
        from .plotting import plot_weight_diagram

        title = f"B({shape}), a1={cm.a1}, a2={cm.a2}, depth {args.depth}"
        plot_weight_diagram(g.weight_tally, args.plot, title=title)
    return EXIT_OK


def cmd_orbit(args, cm) -> int:
    orb = orbit(cm, parse_weight(args.weight), args.max_length)
    for w, nu in orb.points.items():
        print(f"{w}\t{nu}")
    for x, y in orb.collisions:
        print(f"# collision: {y} gives the same weight as {x}")
    return EXIT_OK


def cmd_verify(args, cm) -> int:
    cfg = OrderConfig(args.max_reflection_length, args.max_chain_length)
    checks = run_suite(args.suite, cm, parse_weight(args.shape), args.depth, args.word_bound, cfg)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"# a1={cm.a1} a2={cm.a2} depth={args.depth} word_bound={args.word_bound}: "
          f"{len(checks) - failed}/{len(checks)} passed")
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"explore": cmd_explore, "character": cmd_character, "orbit": cmd_orbit, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        cm = CartanMatrix(args.a1, args.a2)
        if getattr(args, "depth", 0) < 0:
            raise ValueError("depth must be nonnegative")
        return COMMANDS[args.command](args, cm)
    except (ValueError, InvalidPath) as exc:
        print(f"lscrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
