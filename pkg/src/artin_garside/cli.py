"""Command-line interface: ``artin-garside <command> ...``.

Exit codes: 0 true/pass, 1 false/fail, 2 budget exhausted, 3 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .coxeter import (
    DomainError, GraphEmbedding, GraphParseError, catalog_id_of,
    expected_reflection_count, find_embedding, inclusion_chain, parse_graph_arg,
)
from .formulas import delta_formula, relative_formula
from .garside import (
    garside_element, relative_by_quotient, sigma_permutation,
)
from .verify import build_suite, run_suite
from .words import (
    Budget, BudgetExhausted, EngineError, NotADivisor, common_left_multiple,
    format_word, is_rigid, is_square_free, left_divides, lexmin_representative,
    parse_word, right_divides, right_quotient, words_equal,
)

EXIT_TRUE, EXIT_FALSE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _show(w) -> str:
    return format_word(w) or "ε"


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, **fields):
        if self.fmt == "machine":
            print(" ".join(f"{k}={v}" for k, v in fields.items()))
        else:
            for k, v in fields.items():
                print(v if k in ("word", "result") else f"{k}: {v}")

    def verdict(self, ok: bool, **extra) -> int:
        self.emit(result="true" if ok else "false", **extra)
        return EXIT_TRUE if ok else EXIT_FALSE


def _budget(args) -> Budget:
    return Budget(args.budget_class, args.budget_steps)


def _graph(arg: str):
    try:
        return parse_graph_arg(arg)
    except (DomainError, GraphParseError, OSError) as exc:
        raise InputError(f"graph {arg!r}: {exc}") from None


def _word(text: str, g):
    try:
        return parse_word(text, g)
    except DomainError as exc:
        raise InputError(f"word {text!r}: {exc}") from None


# -- commands ------------------------------------------------------------------

def cmd_delta(args, out: Output) -> int:
    g = _graph(args.graph)
    cid = catalog_id_of(g)
    w = delta_formula(cid) if cid else garside_element(g, _budget(args))
    out.emit(word=_show(w), length=len(w))
    if args.check_length:
        if cid is None:
            raise InputError("--check-length needs a catalog graph")
        expected = expected_reflection_count(cid)
        out.emit(table=expected, match="pass" if expected == len(w) else "fail")
        return EXIT_TRUE if expected == len(w) else EXIT_FALSE
    return EXIT_TRUE


def _parse_map(text: str) -> dict[int, int]:
    try:
        return dict(tuple(int(x) for x in pair.split(":")) for pair in text.split(","))
    except ValueError:
        raise InputError(f"bad --map {text!r}; expected '1:1,2:3,...'") from None


def cmd_relative(args, out: Output) -> int:
    budget = _budget(args)
    big = _graph(args.larger)
    big_id = catalog_id_of(big)
    formula = None
    if args.smaller.isdigit():
        if big_id is None:
            raise InputError("a step index needs a catalog graph")
        chain = inclusion_chain(big_id)
        step = int(args.smaller)
        if not 0 <= step < len(chain):
            raise InputError(f"{big_id} has chain steps 0..{len(chain) - 1}")
        e = chain[step].embedding
        formula = relative_formula(big_id, step)
    else:
        small = _graph(args.smaller)
        if args.map:
            mp = _parse_map(args.map)
            try:
                e = GraphEmbedding(small, big, tuple(mp[i] for i in small.vertices))
            except (KeyError, DomainError) as exc:
                raise InputError(f"--map: {exc}") from None
        else:
            e = None
            if big_id is not None:
                chain = inclusion_chain(big_id)
                if len(chain) >= 2 and chain[-2].graph == small:
                    e = chain[-1].embedding
                    formula = relative_formula(big_id, len(chain) - 1)
            if e is None:
                e = find_embedding(small, big)
            if e is None:
                raise InputError(f"{args.smaller} does not embed in {args.larger}")
    w = formula
    if w is None or args.check:
        q = relative_by_quotient(e, budget)
        if w is not None and not words_equal(w, q, e.target, budget):
            out.emit(word=_show(w), length=len(w), check="fail")
            return EXIT_FALSE
        w = w if w is not None else q
    out.emit(word=_show(w), length=len(w))
    if args.check:
        out.emit(check="pass")
    return EXIT_TRUE


def cmd_eq(args, out):
    g = _graph(args.graph)
    return out.verdict(words_equal(_word(args.u, g), _word(args.w, g), g, _budget(args), args.engine))


def cmd_divides(args, out):
    g = _graph(args.graph)
    fn = right_divides if args.right else left_divides
    return out.verdict(fn(_word(args.u, g), _word(args.w, g), g, _budget(args), args.engine))


def cmd_sqfree(args, out):
    g = _graph(args.graph)
    return out.verdict(is_square_free(_word(args.w, g), g, _budget(args)))


def cmd_rigid(args, out):
    g = _graph(args.graph)
    return out.verdict(is_rigid(_word(args.w, g), g, _budget(args)))


def cmd_sigma(args, out):
    g = _graph(args.graph)
    budget = _budget(args)
    w = _word(args.word, g) if args.word is not None else garside_element(g, budget)
    sigma = sigma_permutation(w, g, budget, args.engine)
    out.emit(sigma=str(sigma) or "(empty)", total=str(sigma.is_total(g.rank)).lower(),
             involution=str(sigma.is_involution()).lower())
    return EXIT_TRUE


def cmd_lexmin(args, out):
    g = _graph(args.graph)
    out.emit(word=_show(lexmin_representative(_word(args.w, g), g, _budget(args))))
    return EXIT_TRUE


def cmd_quotient(args, out):
    g = _graph(args.graph)
    try:
        r = right_quotient(_word(args.prefix, g), _word(args.w, g), g, _budget(args), args.engine)
    except NotADivisor as exc:
        print(f"not a divisor: {exc}", file=sys.stderr)
        return EXIT_FALSE
    out.emit(word=_show(r))
    return EXIT_TRUE


def cmd_lcm(args, out):
    g = _graph(args.graph)
    out.emit(word=_show(common_left_multiple(_word(args.u, g), _word(args.w, g), g, _budget(args))))
    return EXIT_TRUE


def cmd_verify(args, out):
    report = run_suite(_budget(args), args.jobs, build_suite(args.max_rank))
    print(report.to_machine(timing=not args.no_timing) if out.fmt == "machine" else report.to_text())
    if args.output:
        Path(args.output).write_text(report.to_json())
    return report.exit_code


def cmd_bench(args, out):
    if args.list:
        print("\n".join(bench.INSTANCES))
        return EXIT_TRUE
    names = args.instances or list(bench.INSTANCES)
    unknown = [n for n in names if n not in bench.INSTANCES]
    if unknown:
        raise InputError(f"unknown instances {unknown}; try --list")
    engines = ("bfs", "reversing") if args.engine == "both" else (args.engine,)
    rows = []
    for n in names:
        rows += bench.run_instance(n, engines, _budget(args))
    sys.stdout.write(bench.to_csv(rows))
    return EXIT_TRUE


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-class", type=int, default=10**6, metavar="N",
                        help="maximum equivalence-class size for BFS (default 10^6)")
    common.add_argument("--budget-steps", type=int, default=10**7, metavar="N",
                        help="maximum reversing steps (default 10^7)")
    common.add_argument("--engine", choices=("bfs", "reversing", "both"), default="reversing")
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = _Parser(prog="artin-garside", description="Garside elements of spherical Artin monoids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("delta", cmd_delta, "Garside element of a graph")
    p.add_argument("graph")
    p.add_argument("--check-length", action="store_true")

    p = add("relative", cmd_relative, "relative Garside element of an inclusion")
    p.add_argument("larger")
    p.add_argument("smaller", help="smaller graph, or a step index into the larger graph's chain")
    p.add_argument("--map", help="explicit embedding as 'i:j,...' (smaller vertex : larger vertex)")
    p.add_argument("--check", action="store_true", help="cross-check the formula against the quotient")

    for name, fn, help in (("eq", cmd_eq, "word equality"), ("lcm", cmd_lcm, "least common multiple")):
        p = add(name, fn, help)
        p.add_argument("graph")
        p.add_argument("u")
        p.add_argument("w")

    p = add("divides", cmd_divides, "left or right divisibility of w by u")
    side = p.add_mutually_exclusive_group()
    side.add_argument("--left", action="store_true", default=True)
    side.add_argument("--right", action="store_true")
    p.add_argument("graph")
    p.add_argument("u")
    p.add_argument("w")

    for name, fn, help in (("sqfree", cmd_sqfree, "square-freeness (class enumeration)"),
                           ("rigid", cmd_rigid, "rigidity (unique representing word)"),
                           ("lexmin", cmd_lexmin, "lexicographically least representative")):
        p = add(name, fn, help)
        p.add_argument("graph")
        p.add_argument("w")

    p = add("sigma", cmd_sigma, "conjugation permutation x_i w = w x_sigma(i)")
    p.add_argument("graph")
    p.add_argument("--word", help="defaults to the Garside element of the graph")

    p = add("quotient", cmd_quotient, "r with w = prefix . r")
    p.add_argument("graph")
    p.add_argument("prefix")
    p.add_argument("w")

    p = add("verify-paper", cmd_verify, "run the full catalog verification suite")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="also write the report as JSON")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from machine output")

    p = add("bench", cmd_bench, "time both engines on named instances (CSV)")
    p.add_argument("instances", nargs="*")
    p.add_argument("--list", action="store_true")
    p.set_defaults(engine="both")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        if args.budget_class <= 0 or args.budget_steps <= 0:
            raise InputError("budgets must be positive")
        return args.fn(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        out.emit(result="budget-exhausted")
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EngineError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
