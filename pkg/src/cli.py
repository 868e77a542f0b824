"""Command-line front end.

Exit status: 0 on success, 1 when a check fails or a search finds nothing,
2 on usage, parse or input errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from src.analysis.replay import run_verify_paper
from src.calculus.fox import boundary_d2
from src.certificates.certificate import lambda_consistency, verify
from src.certificates.search import DEFAULT_MAX_CONJUGATOR_LEN as CERT_MAX_CONJUGATOR_LEN
from src.certificates.search import DEFAULT_MAX_STEPS, CertificateBounds, search_certificate
from src.data.catalog import CERT_ENE_PATH
from src.data.files import (
    format_certificate,
    format_presentation,
    format_script,
    load_certificate,
    load_presentation,
    load_script,
    save_certificate,
)
from src.delivery.report import format_check_lines, format_table
from src.errors import WindlabError
from src.groups.grammar import parse_word
from src.invariants.render import RENDER_FORMATS, render_grid
from src.invariants.winding import lambda_vector, winding_invariant
from src.presentations.moves import apply_script
from src.presentations.presentation import is_cocommutative
from src.presentations.search import (
    DEFAULT_MAX_CONJUGATOR_LEN,
    DEFAULT_MAX_MOVES,
    DEFAULT_MAX_RELATOR_LEN,
    SearchBounds,
    explore,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def _write_or_print(text: str, out: Optional[str]) -> None:
    if out:
        p = Path(out)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)
        logger.info(f"Wrote {p}")
    else:
        print(text.rstrip("\n"))


def cmd_winding(args: argparse.Namespace) -> int:
    w = parse_word(args.word)
    print(winding_invariant(w))
    if args.render:
        _write_or_print(render_grid(w, args.render), args.out)
    return EXIT_OK


def cmd_lambda(args: argparse.Namespace) -> int:
    P = load_presentation(args.presentation)
    for j, p in enumerate(lambda_vector(P), start=1):
        print(f"P_r{j} = {p}")
    return EXIT_OK


def cmd_fox(args: argparse.Namespace) -> int:
    d2 = boundary_d2(load_presentation(args.presentation))
    for i, name in enumerate(("x", "y")):
        print(f"d/d{name}: " + ", ".join(str(e) for e in d2.row(i)))
    return EXIT_OK


def cmd_moves_apply(args: argparse.Namespace) -> int:
    P = load_presentation(args.presentation)
    script = load_script(args.script, P.generator_count)
    _write_or_print(format_presentation(apply_script(P, script)), args.out)
    return EXIT_OK


def cmd_moves_search(args: argparse.Namespace) -> int:
    start = load_presentation(args.start)
    goal = load_presentation(args.goal)
    bounds = SearchBounds(
        max_moves=args.max_moves,
        max_conjugator_len=args.max_conjugator_len,
        max_relator_len=args.max_relator_len,
        automorphisms=not args.no_automorphisms,
    )
    report = explore(start, goal, bounds)
    if args.stats:
        print(report.stats().to_string(index=False))
    if report.script is None:
        print(f"no script within bounds ({report.states_seen} states seen)")
        return EXIT_FAILED
    _write_or_print(format_script(report.script) or "# start equals goal\n", args.out)
    return EXIT_OK


def cmd_cert_verify(args: argparse.Namespace) -> int:
    P = load_presentation(args.presentation)
    cert = load_certificate(args.certificate)
    target = parse_word(args.target, P.generator_count)
    ok = verify(cert, P, target)
    print(f"verify: {'PASS' if ok else 'FAIL'}")
    if P.generator_count == 2 and is_cocommutative(P):
        try:
            consistent = lambda_consistency(cert, P, target)
        except WindlabError as e:
            logger.warning(f"Lambda check skipped: {e}")
        else:
            print(f"lambda: {'PASS' if consistent else 'FAIL'}")
            ok = ok and consistent
    return EXIT_OK if ok else EXIT_FAILED


def cmd_cert_search(args: argparse.Namespace) -> int:
    P = load_presentation(args.presentation)
    target = parse_word(args.target, P.generator_count)
    bounds = CertificateBounds(max_steps=args.max_steps, max_conjugator_len=args.max_conjugator_len)
    cert = search_certificate(P, target, bounds)
    if cert is None:
        print("no certificate within bounds")
        return EXIT_FAILED
    if args.out:
        save_certificate(cert, args.out, header=f"{target} in the normal closure of {P}")
    else:
        print(format_certificate(cert).rstrip("\n") or "# empty certificate")
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    report = run_verify_paper(cert_path=Path(args.cert))
    if args.format in ("table", "both"):
        print(format_table(report))
    if args.format in ("lines", "both"):
        print(format_check_lines(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="windlab", description="Winding invariants, Q*-moves and certificates over F_2")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("winding", help="Winding invariant of a word in [F,F]")
    p.add_argument("word")
    p.add_argument("--render", choices=RENDER_FORMATS, help="Also draw the loop")
    p.add_argument("--out", help="Write the rendering to this file")
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("lambda", help="Lambda vector of a cocommutative presentation")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("fox", help="Boundary matrix d_2 from Fox derivatives")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_fox)

    moves = sub.add_parser("moves", help="Apply or search Q*-move scripts")
    moves_sub = moves.add_subparsers(dest="moves_command", required=True)
    p = moves_sub.add_parser("apply")
    p.add_argument("presentation")
    p.add_argument("--script", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_moves_apply)
    p = moves_sub.add_parser("search")
    p.add_argument("start")
    p.add_argument("goal")
    p.add_argument("--max-moves", type=int, default=DEFAULT_MAX_MOVES)
    p.add_argument("--max-conjugator-len", type=int, default=DEFAULT_MAX_CONJUGATOR_LEN)
    p.add_argument("--max-relator-len", type=int, default=DEFAULT_MAX_RELATOR_LEN)
    p.add_argument("--no-automorphisms", action="store_true", help="Q-moves only")
    p.add_argument("--stats", action="store_true", help="Print per-depth statistics")
    p.add_argument("--out")
    p.set_defaults(func=cmd_moves_search)

    cert = sub.add_parser("cert", help="Normal-closure certificates")
    cert_sub = cert.add_subparsers(dest="cert_command", required=True)
    p = cert_sub.add_parser("verify")
    p.add_argument("presentation")
    p.add_argument("certificate")
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_cert_verify)
    p = cert_sub.add_parser("search")
    p.add_argument("presentation")
    p.add_argument("--target", required=True)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--max-conjugator-len", type=int, default=CERT_MAX_CONJUGATOR_LEN)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cert_search)

    p = sub.add_parser("verify-paper", help="Replay every checkable computation")
    p.add_argument("--cert", default=str(CERT_ENE_PATH))
    p.add_argument("--format", choices=("table", "lines", "both"), default="both")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format=LOG_FORMAT)
    try:
        return args.func(args)
    except (WindlabError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
