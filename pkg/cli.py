# File: cli.py
# Path: hopfbench/cli.py

#!/usr/bin/env python3
"""
Batch front end for the algebra package.

    python cli.py qsym mul "M(1)" "M(1)"
    python cli.py mzv verify --ohno --weight 4 --i 1
    python cli.py tree mult "[[][[]]]"
    python cli.py verify all --max-degree 4 --json

Exit codes: 0 success (or every check passed), 1 a verification failed,
2 malformed input or an invalid argument. Logs go to stderr.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from app.algebra.core import LinComb
from app.algebra.hopf_trees import (
    TElement,
    epsilon,
    gl_antipode,
    gl_coproduct,
    gl_mul,
    hf_antipode,
    hf_coproduct,
    hk_antipode,
    hk_coproduct,
    kappa,
    multiplicity_by_tree_factorial,
    phi_star,
    tree_multiplicity,
)
from app.algebra.mzv import ohno_family, verify_relation, zeta_of_lincomb
from app.algebra.qsym import (
    expand_truncated,
    nsym_antipode,
    nsym_coproduct,
    nsym_mul,
    qsym_antipode,
    qsym_coproduct,
    qsym_mul,
)
from app.algebra.trees import enumerate_trees, parse_tree, symm_order, tree_factorial
from app.algebra.words import ohno_action, shuffle_lincomb, tau_lincomb
from app.core.config import Settings
from app.core.exceptions import AlgebraError, ParseError
from app.services.formatting import (
    dump_json,
    element_payload,
    format_element,
    format_tensor,
    render_summary,
    tensor_payload,
)
from app.services.parser import parse_element, parse_word
from app.services.verification import SUITES, run_all

logger = logging.getLogger("hopfbench.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

class Output:
    """Collects what a command prints, in text or JSON form"""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: List[str] = []

    def element(self, value: LinComb, family: Optional[str] = None) -> None:
        self.emit(format_element(value, family), element_payload(value, family))

    def tensor(self, value: LinComb, family: str) -> None:
        self.emit(format_tensor(value, family), tensor_payload(value, family))

    def emit(self, text: str, payload: Any) -> None:
        self.lines.append(dump_json(payload) if self.as_json else text)

    def flush(self) -> None:
        for line in self.lines:
            print(line)

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS, help="Degree cap for the identity suites")
    common.add_argument("--N", type=int, dest="N", default=argparse.SUPPRESS, help="Truncation point of the zeta series")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="Tolerance of numeric checks")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Emit JSON instead of text")

    parser = argparse.ArgumentParser(prog="hopfbench", description="Exact Hopf algebra computations and identity checks", parents=[common])
    groups = parser.add_subparsers(dest="group", required=True)

    qsym = groups.add_parser("qsym", help="Quasi-symmetric functions in the M basis").add_subparsers(dest="command", required=True)
    sub = qsym.add_parser("mul", parents=[common], help="Quasi-shuffle product")
    sub.add_argument("left")
    sub.add_argument("right")
    qsym.add_parser("coprod", parents=[common], help="Deconcatenation coproduct").add_argument("element")
    qsym.add_parser("antipode", parents=[common], help="Antipode").add_argument("element")
    sub = qsym.add_parser("expand", parents=[common], help="Truncated power series in t1..tv")
    sub.add_argument("element")
    sub.add_argument("--vars", type=int, default=None)
    sub.add_argument("--deg", type=int, default=None)

    nsym = groups.add_parser("nsym", help="Noncommutative symmetric functions in the S basis").add_subparsers(dest="command", required=True)
    sub = nsym.add_parser("mul", parents=[common])
    sub.add_argument("left")
    sub.add_argument("right")
    nsym.add_parser("coprod", parents=[common]).add_argument("element")
    nsym.add_parser("antipode", parents=[common]).add_argument("element")

    word = groups.add_parser("word", help="The word algebra Q<x,y>").add_subparsers(dest="command", required=True)
    sub = word.add_parser("shuffle", parents=[common])
    sub.add_argument("left")
    sub.add_argument("right")
    word.add_parser("tau", parents=[common]).add_argument("element")
    sub = word.add_parser("ohno", parents=[common], help="h_i acting on an admissible word")
    sub.add_argument("word")
    sub.add_argument("--i", type=int, dest="i", required=True)

    mzv = groups.add_parser("mzv", help="Truncated multiple zeta values").add_subparsers(dest="command", required=True)
    mzv.add_parser("eval", parents=[common]).add_argument("element")
    sub = mzv.add_parser("verify", parents=[common], help="Check that an element's zeta value vanishes")
    sub.add_argument("element", nargs="?")
    sub.add_argument("--ohno", action="store_true", help="Check every Ohno relation of the given weight and i")
    sub.add_argument("--weight", type=int)
    sub.add_argument("--i", type=int, dest="i", default=0)

    tree = groups.add_parser("tree", help="Rooted trees and the Hopf algebras on them").add_subparsers(dest="command", required=True)
    tree.add_parser("enum", parents=[common], help="All rooted trees with n vertices").add_argument("n", type=int)
    tree.add_parser("symm", parents=[common], help="Order of the automorphism group").add_argument("tree")
    sub = tree.add_parser("glmul", parents=[common], help="Grossman-Larson product")
    sub.add_argument("left")
    sub.add_argument("right")
    tree.add_parser("kappa", parents=[common]).add_argument("n", type=int)
    tree.add_parser("epsilon", parents=[common]).add_argument("n", type=int)
    tree.add_parser("mult", parents=[common], help="n(.; t) by iterating N").add_argument("tree")
    tree.add_parser("coprod", parents=[common], help="Coproduct of a T, K or F element").add_argument("element")
    tree.add_parser("antipode", parents=[common], help="Antipode of a T, K or F element").add_argument("element")
    tree.add_parser("phistar", parents=[common], help="phi* of a homogeneous T element, in the e basis").add_argument("element")

    verify = groups.add_parser("verify", help="Identity suites").add_subparsers(dest="command", required=True)
    sub = verify.add_parser("all", parents=[common], help="Run every suite and print a pass/fail table")
    sub.add_argument("--suite", action="append", choices=list(SUITES), help="Run only this suite (repeatable)")
    return parser

def settings_from_args(args: argparse.Namespace) -> Settings:
    overrides: Dict[str, Any] = {}
    if hasattr(args, "max_degree"):
        overrides["MAX_DEGREE"] = args.max_degree
    if hasattr(args, "N"):
        overrides["TRUNCATION_N"] = args.N
    if hasattr(args, "tol"):
        overrides["TOLERANCE"] = args.tol
    if getattr(args, "json", False):
        overrides["OUTPUT_FORMAT"] = "json"
    return Settings(**overrides)

def _tree_element(text: str) -> TElement:
    """Accept either a T[...] element or bare tree grammar"""
    if text.lstrip().startswith("T"):
        return parse_element(text, family="t").value
    return TElement.from_basis(parse_tree(text))

def _qsym_command(args, out: Output, cfg: Settings) -> int:
    if args.command == "mul":
        out.element(qsym_mul(parse_element(args.left, "qsym").value, parse_element(args.right, "qsym").value), "qsym")
    elif args.command == "coprod":
        out.tensor(qsym_coproduct(parse_element(args.element, "qsym").value), "qsym")
    elif args.command == "antipode":
        out.element(qsym_antipode(parse_element(args.element, "qsym").value), "qsym")
    else:
        series = expand_truncated(
            parse_element(args.element, "qsym").value,
            args.vars or cfg.ORACLE_NUM_VARS,
            cfg.ORACLE_MAX_DEG if args.deg is None else args.deg,
        )
        out.emit(str(series), {"series": str(series), "num_vars": series.num_vars, "max_deg": series.max_deg})
    return EXIT_OK

def _nsym_command(args, out: Output, cfg: Settings) -> int:
    if args.command == "mul":
        out.element(nsym_mul(parse_element(args.left, "nsym").value, parse_element(args.right, "nsym").value), "nsym")
    elif args.command == "coprod":
        out.tensor(nsym_coproduct(parse_element(args.element, "nsym").value), "nsym")
    else:
        out.element(nsym_antipode(parse_element(args.element, "nsym").value), "nsym")
    return EXIT_OK

def _word_value(text: str) -> LinComb:
    if text.lstrip().startswith("W") or text.strip() == "0":
        return parse_element(text, "word").value
    return LinComb.from_basis(parse_word(text))

def _word_command(args, out: Output, cfg: Settings) -> int:
    if args.command == "shuffle":
        out.element(shuffle_lincomb(_word_value(args.left), _word_value(args.right)), "word")
    elif args.command == "tau":
        out.element(tau_lincomb(_word_value(args.element)), "word")
    else:
        word = args.word.strip()
        if word.startswith("W"):
            word = word[1:].strip().strip("()")
        out.element(ohno_action(args.i, parse_word(word)), "word")
    return EXIT_OK

def _report_payload(report) -> Dict[str, Any]:
    return report.model_dump(by_alias=True)

def _report_text(report) -> str:
    verdict = "pass" if report.passed else "FAIL"
    return f"{verdict}: value={report.value:.6e} error_estimate={report.error_estimate:.3e} N={report.N} tolerance={report.tolerance:g}"

def _zeta_input(text: str) -> LinComb:
    parsed = parse_element(text)
    if parsed.family not in ("qsym", "word"):
        raise AlgebraError(f"zeta values are defined on M(...) and W(...) elements, got a {parsed.family} element")
    return parsed.value

def _mzv_command(args, out: Output, cfg: Settings) -> int:
    N = cfg.TRUNCATION_N
    if args.command == "eval":
        zeta = zeta_of_lincomb(_zeta_input(args.element), N)
        out.emit(f"{zeta.value:.12f} (error_estimate={zeta.error_estimate:.3e}, N={N})", zeta.model_dump())
        return EXIT_OK
    if args.ohno:
        if args.weight is None:
            raise AlgebraError("--ohno needs --weight")
        family = ohno_family(args.weight, args.i)
        if not family:
            raise AlgebraError(f"no Ohno relation of weight {args.weight} with i={args.i}")
        tolerance = getattr(args, "tol", cfg.OHNO_TOLERANCE)
        status = EXIT_OK
        for word, relation in family:
            report = verify_relation(relation, N, tolerance)
            status = status if report.passed else EXIT_FAILED
            payload = {"word": str(word), "relation": format_element(relation, "word"), **_report_payload(report)}
            out.emit(f"{word}: {format_element(relation, 'word')}\n  {_report_text(report)}", payload)
        return status
    if args.element is None:
        raise AlgebraError("mzv verify needs an element or --ohno")
    report = verify_relation(_zeta_input(args.element), N, cfg.TOLERANCE)
    out.emit(_report_text(report), _report_payload(report))
    return EXIT_OK if report.passed else EXIT_FAILED

def _tree_family_element(text: str):
    if text.lstrip()[:1] in ("K", "F"):
        parsed = parse_element(text)
        return parsed.family, parsed.value
    return "t", _tree_element(text)

def _tree_command(args, out: Output, cfg: Settings) -> int:
    command = args.command
    if command == "enum":
        trees = enumerate_trees(args.n)
        out.emit("\n".join(str(tree) for tree in trees), {"n": args.n, "count": len(trees), "trees": [str(tree) for tree in trees]})
    elif command == "symm":
        tree = parse_tree(args.tree)
        out.emit(str(symm_order(tree)), {"tree": str(tree), "symm": symm_order(tree)})
    elif command == "glmul":
        out.element(gl_mul(_tree_element(args.left), _tree_element(args.right)), "t")
    elif command == "kappa":
        out.element(kappa(args.n), "t")
    elif command == "epsilon":
        out.element(epsilon(args.n), "t")
    elif command == "mult":
        tree = parse_tree(args.tree)
        value = tree_multiplicity(tree)
        payload = {
            "tree": str(tree),
            "multiplicity": value,
            "tree_factorial": tree_factorial(tree),
            "by_tree_factorial": str(multiplicity_by_tree_factorial(tree)),
        }
        out.emit(str(value), payload)
    elif command == "phistar":
        out.element(phi_star(_tree_element(args.element)), "sym")
    else:
        family, value = _tree_family_element(args.element)
        operations = {
            "t": (gl_coproduct, gl_antipode),
            "hk": (hk_coproduct, hk_antipode),
            "hf": (hf_coproduct, hf_antipode),
        }
        coproduct, antipode = operations[family]
        if command == "coprod":
            out.tensor(coproduct(value), family)
        else:
            out.element(antipode(value), family)
    return EXIT_OK

def _verify_command(args, out: Output, cfg: Settings) -> int:
    summary = run_all(cfg, args.suite)
    out.emit(render_summary(summary), summary.model_dump())
    return EXIT_OK if summary.passed else EXIT_FAILED

COMMANDS = {
    "qsym": _qsym_command,
    "nsym": _nsym_command,
    "word": _word_command,
    "mzv": _mzv_command,
    "tree": _tree_command,
    "verify": _verify_command,
}

def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        cfg = settings_from_args(args)
    except ValidationError as exc:
        print(f"error: invalid option: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=cfg.LOG_LEVEL, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    out = Output(cfg.OUTPUT_FORMAT == "json")
    try:
        status = COMMANDS[args.group](args, out, cfg)
    except ParseError as exc:
        print(f"parse error: {exc.annotated()}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return status

def main() -> None:
    sys.exit(run())

if __name__ == "__main__":
    main()
