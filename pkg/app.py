"""
fuzzydet command line
Determinization and state reduction of fuzzy automata
"""
import argparse
import json
import logging
import sys
import time
from typing import List, Optional

from fza_format import load_automaton, load_relation
from models.budget import Budget, DEFAULT_MAX_FAMILY, DEFAULT_MAX_ITERATIONS, DEFAULT_MAX_STATES
from models.det_method import DetMethod
from models.errors import BudgetExceeded, FuzzyAutomataError
from models.quasi_order import InvarianceClass
from models.run_report import RunReport, reports_frame
from models.word import format_word, parse_word
from utils.emitters import (emit_dot, emit_json, emit_quasi_order_text, emit_text,
                            load_cdfa_json, quasi_order_to_dict)
from utils.equivalence import first_disagreement
from utils.invariants import check_invariant, greatest_invariant

logger = logging.getLogger("fuzzydet")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

CUSTOM_METHODS = ("phi", "psi", "children")
COMPARE_DEFAULT = [name for name in DetMethod.NAMES if name not in CUSTOM_METHODS]


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _count(minimum: int):
    """argparse type for integers of at least `minimum`"""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return parse


positive_int = _count(1)
non_negative_int = _count(0)


def _add_budget_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--max-states', type=positive_int, metavar='N',
                        default=DEFAULT_MAX_STATES,
                        help=f'cap on constructed states (default {DEFAULT_MAX_STATES})')
    parser.add_argument('--max-iters', type=positive_int, metavar='N',
                        default=DEFAULT_MAX_ITERATIONS,
                        help=f'cap on fixpoint iterations (default {DEFAULT_MAX_ITERATIONS})')
    parser.add_argument('--max-family', type=positive_int, metavar='N',
                        default=DEFAULT_MAX_FAMILY,
                        help=f'cap on the σ_u/τ_u family (default {DEFAULT_MAX_FAMILY})')


def build_parser() -> argparse.ArgumentParser:
    parser = UsageParser(prog="fuzzydet",
                         description="Determinization and state reduction of fuzzy automata")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (-vv for debug output)')
    commands = parser.add_subparsers(dest='command', metavar='<command>',
                                     parser_class=UsageParser)
    commands.required = True

    det = commands.add_parser('determinize', help='build a crisp-deterministic fuzzy automaton')
    det.add_argument('file', help='.fza automaton')
    det.add_argument('--method', default='nerode', choices=DetMethod.NAMES)
    det.add_argument('--relation', metavar='FILE',
                     help='relation file for the phi, psi and children methods')
    det.add_argument('--format', default='text', choices=['text', 'json', 'dot'])
    det.add_argument('--out', metavar='FILE', help='write the result here instead of stdout')
    det.add_argument('--no-validate', action='store_true',
                     help='skip the invariance check of a custom relation')
    _add_budget_flags(det)

    qo = commands.add_parser('quasiorder', help='greatest invariant fuzzy quasi-order')
    qo.add_argument('file', help='.fza automaton')
    qo.add_argument('--kind', required=True, choices=[c.value for c in InvarianceClass])
    qo.add_argument('--relation', metavar='FILE',
                    help='check this relation instead of computing the greatest one')
    qo.add_argument('--format', default='text', choices=['text', 'json'])
    _add_budget_flags(qo)

    ev = commands.add_parser('eval', help='degree of a word')
    ev.add_argument('file', help='.fza automaton or CDFA emitted as JSON')
    ev.add_argument('--word', required=True, metavar='SYMS',
                    help='symbols, e.g. "xy" or "x y"; "" for the empty word')

    cmp = commands.add_parser('compare', help='run several methods and check equivalence')
    cmp.add_argument('file', help='.fza automaton')
    cmp.add_argument('--methods', default=','.join(COMPARE_DEFAULT), metavar='LIST',
                     help='comma separated method names')
    cmp.add_argument('--maxlen', type=non_negative_int, default=6, metavar='K',
                     help='check all words up to this length (default 6)')
    cmp.add_argument('--format', default='text', choices=['text', 'json'])
    _add_budget_flags(cmp)

    val = commands.add_parser('validate', help='parse and validate an automaton')
    val.add_argument('file', help='.fza automaton')
    return parser


def _budget(args) -> Budget:
    return Budget(args.max_iters, args.max_family, args.max_states)


def _write(text: str, out: Optional[str] = None):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_determinize(args) -> int:
    a = load_automaton(args.file).automaton
    relation = load_relation(args.relation, a.lattice, a.n) if args.relation else None
    if args.method in CUSTOM_METHODS and relation is None:
        raise FuzzyAutomataError(f"method {args.method} needs --relation FILE")
    method = DetMethod.from_name(args.method, relation)
    result = method.run(a, _budget(args), validate=not args.no_validate)

    if args.format == 'dot':
        text = emit_dot(result.cdfa)
    elif args.format == 'json':
        text = emit_json(result.cdfa, {
            'method': method.name,
            'reverse_language': method.reverses_language,
            'input_states': a.n,
            'states_created': result.states_created,
            'closure_checks': result.closure_checks,
            'budget_hit': result.budget_hit,
            'verified': result.verified,
        }) + "\n"
    else:
        header = [f"method: {method.name}", f"input states: {a.n}"]
        if method.reverses_language:
            header.append("recognizes: reverse language")
        if not result.verified:
            header.append("verified: false")
        text = emit_text(result.cdfa, header)
    _write(text, args.out)
    return EXIT_OK


def cmd_quasiorder(args) -> int:
    a = load_automaton(args.file).automaton
    kind = InvarianceClass(args.kind)
    budget = _budget(args)
    if args.relation:
        report = check_invariant(a, load_relation(args.relation, a.lattice, a.n), kind, budget)
    else:
        report = greatest_invariant(a, kind, budget)
    if args.format == 'json':
        _write(json.dumps(quasi_order_to_dict(report), indent=2) + "\n")
    else:
        _write(emit_quasi_order_text(report, a.state_names))
    return EXIT_OK


def cmd_eval(args) -> int:
    if args.file.endswith(".json"):
        with open(args.file, encoding="utf-8") as handle:
            cdfa = load_cdfa_json(handle.read())
        value = cdfa.evaluate(parse_word(args.word, cdfa.alphabet))
        lattice = cdfa.lattice
    else:
        a = load_automaton(args.file).automaton
        value = a.language_degree(parse_word(args.word, a.alphabet))
        lattice = a.lattice
    _write(lattice.format_value(value) + "\n")
    return EXIT_OK


def run_compare(a, names: List[str], budget: Budget, max_length: int) -> List[RunReport]:
    """One report per method, sorted by method name"""
    reports = []
    for name in sorted(set(names)):
        method = DetMethod.from_name(name)
        start = time.perf_counter()
        try:
            result = method.run(a, budget)
        except BudgetExceeded as exc:
            logger.warning("%s: %s", name, exc)
            reports.append(RunReport(name, a.n, budget_hit=True,
                                     wall_time=time.perf_counter() - start))
            continue
        report = RunReport.from_result(result, a.n, time.perf_counter() - start)
        witness = first_disagreement(a, result.cdfa, max_length,
                                     reverse=method.reverses_language)
        report.equivalent = witness is None
        report.max_length = max_length
        report.witness = None if witness is None else format_word(witness)
        reports.append(report)
    return reports


def cmd_compare(args) -> int:
    a = load_automaton(args.file).automaton
    names = [name.strip() for name in args.methods.split(",") if name.strip()]
    unknown = [name for name in names if name not in COMPARE_DEFAULT]
    if unknown or not names:
        raise FuzzyAutomataError(f"cannot compare methods {', '.join(unknown) or '(none)'}; "
                                 f"choose from {', '.join(COMPARE_DEFAULT)}")
    reports = run_compare(a, names, _budget(args), args.maxlen)
    if args.format == 'json':
        _write(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False) + "\n")
    else:
        _write(reports_frame(reports).to_string() + "\n")
    return EXIT_OK


def cmd_validate(args) -> int:
    a = load_automaton(args.file).automaton
    _write(f"ok: {a.n} states, lattice {a.lattice.name}, alphabet {' '.join(a.alphabet)}\n")
    return EXIT_OK


COMMANDS = {
    'determinize': cmd_determinize,
    'quasiorder': cmd_quasiorder,
    'eval': cmd_eval,
    'compare': cmd_compare,
    'validate': cmd_validate,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FuzzyAutomataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
