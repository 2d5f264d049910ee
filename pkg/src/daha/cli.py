"""Command-line front end.

Three subcommands:

* ``daha eval`` -- act by a generator word on an element of either module
  and print the canonical form of the result;
* ``daha check`` -- run the verification suites (defining relations in both
  representations, the averaging intertwiner, the symmetrized-subspace
  closure) and exit 0 exactly when every case passes;
* ``daha bench`` -- time random-word actions in both representations and
  report term-count growth.

Exit codes are a stable contract: 0 success, 1 at least one check failed,
2 usage or parse error.  Every check header echoes kappa, the seed and the
suite sizes so runs are reproducible; with ``--format json-lines`` the same
information is emitted as one JSON record per line (a ``header`` record
followed by ``check`` records; see the README for the schema).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import __version__, polyrep, verify
from . import skein as skein_mod
from .errors import ParseError, RankMismatchError
from .laurent import LaurentPoly, parse_laurent
from .skein import SkeinElement, parse_skein
from .verify import CheckReport
from .words import parse_word


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="daha",
        description="Exact computations in the double affine Hecke algebra and its two module structures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="act by a word on an element and print the result")
    p_eval.add_argument("--rep", choices=("poly", "skein"), required=True,
                        help="which module: Laurent polynomials or skein basis pairs")
    p_eval.add_argument("--kappa", type=int, required=True, help="number of strands (>= 1)")
    group_w = p_eval.add_mutually_exclusive_group(required=True)
    group_w.add_argument("--word", help="generator word, e.g. 's1*y1' (empty string = identity)")
    group_w.add_argument("--word-file", help="file containing the generator word")
    group_e = p_eval.add_mutually_exclusive_group(required=True)
    group_e.add_argument("--elem", help="element text, e.g. 'X1' or '(a1^2*a2^-1,[2 1])'")
    group_e.add_argument("--elem-file", help="file containing the element")
    p_eval.add_argument("--d-eq-s", action="store_true", help="substitute d = s before printing")

    p_check = sub.add_parser("check", help="run verification suites")
    p_check.add_argument("--suite", choices=("relations", "intertwiner", "subrep", "all"),
                         required=True)
    p_check.add_argument("--kappa", type=int, required=True)
    p_check.add_argument("--seed", type=int, default=0, help="seed for random words (default 0)")
    p_check.add_argument("--max-exp", type=int, default=None,
                         help="exponent bound for input grids (defaults: poly relations 3, "
                              "or 2 for kappa >= 4; everything else 2)")
    p_check.add_argument("--num-words", type=int, default=50,
                         help="random words per random suite (default 50)")
    p_check.add_argument("--max-word-len", type=int, default=4,
                         help="maximum random word length (default 4)")
    p_check.add_argument("--max-inputs", type=int, default=None,
                         help="cap the number of grid inputs (seeded sample when exceeded)")
    p_check.add_argument("--format", choices=("text", "json-lines"), default="text")

    p_bench = sub.add_parser("bench", help="time random-word actions in both representations")
    p_bench.add_argument("--kappa", type=int, required=True)
    p_bench.add_argument("--word-len", type=int, required=True)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--count", type=int, default=5, help="number of random words (default 5)")
    return parser


def _read_arg(inline: str | None, path: str | None) -> str:
    if inline is not None:
        return inline
    with open(path, encoding="utf-8") as handle:
        return handle.read().strip()


def _cmd_eval(args: argparse.Namespace) -> int:
    if args.kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {args.kappa}")
    word_text = _read_arg(args.word, args.word_file)
    elem_text = _read_arg(args.elem, args.elem_file)
    word = parse_word(word_text, args.kappa)
    if args.rep == "poly":
        element = parse_laurent(elem_text, args.kappa)
        result = polyrep.act_word(word, element)
    else:
        element = parse_skein(elem_text, args.kappa)
        result = skein_mod.act_word(word, element)
    if args.d_eq_s:
        result = result.substitute_d_eq_s()
    print(result)
    return 0


def _cap_inputs(inputs: list, cap: int | None, seed: int) -> list:
    if cap is None or len(inputs) <= cap:
        return inputs
    return random.Random(seed).sample(inputs, cap)


def _run_suites(args: argparse.Namespace) -> tuple[dict, list[CheckReport]]:
    kappa, seed = args.kappa, args.seed
    grid_bound = args.max_exp if args.max_exp is not None else 2
    reports: list[CheckReport] = []
    sizes: dict = {}

    if args.suite in ("relations", "all"):
        for rep in ("poly", "skein"):
            bound = (args.max_exp if args.max_exp is not None
                     else verify.default_relation_bound(kappa, rep))
            if rep == "poly":
                inputs = verify.monomial_grid(kappa, bound)
            else:
                inputs = verify.basis_grid(kappa, bound)
            inputs = _cap_inputs(inputs, args.max_inputs, seed)
            sizes[f"relations_{rep}_inputs"] = len(inputs)
            sizes[f"relations_{rep}_bound"] = bound
            reports.extend(verify.check_relations(kappa, rep, inputs))

    if args.suite in ("intertwiner", "all"):
        words = verify.single_generator_words(kappa)
        words += verify.random_words(kappa, args.num_words, args.max_word_len, seed)
        monomials = _cap_inputs(verify.monomial_grid(kappa, grid_bound), args.max_inputs, seed)
        sizes["intertwiner_words"] = len(words)
        sizes["intertwiner_monomials"] = len(monomials)
        reports.append(verify.check_intertwiner(kappa, words, monomials, seed=seed))

    if args.suite in ("subrep", "all"):
        words = verify.random_words(kappa, args.num_words, args.max_word_len, seed)
        rng = random.Random(seed + 1)
        monomials = [
            LaurentPoly.monomial(
                kappa, [rng.randint(-grid_bound, grid_bound) for _ in range(kappa)]
            )
            for _ in words
        ]
        sizes["subrep_words"] = len(words)
        reports.append(verify.check_subrep_closure(kappa, words, monomials, seed=seed))

    return sizes, reports


def _cmd_check(args: argparse.Namespace) -> int:
    if args.kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {args.kappa}")
    header = {
        "record": "header",
        "suite": args.suite,
        "kappa": args.kappa,
        "seed": args.seed,
        "max_exp": args.max_exp,
        "num_words": args.num_words,
        "max_word_len": args.max_word_len,
        "max_inputs": args.max_inputs,
    }
    try:
        sizes, reports = _run_suites(args)
    except ArithmeticError as exc:
        # An arithmetic failure inside a suite is itself a check failure.
        reports = [CheckReport(
            label=f"{args.suite}:aborted",
            kappa=args.kappa,
            cases=1,
            failures=1,
            seed=args.seed,
            counterexample=verify.Counterexample("<suite>", "<aborted>", str(exc), ""),
        )]
        sizes = {}
    header.update(sizes)

    if args.format == "json-lines":
        print(json.dumps(header, sort_keys=True))
        for report in reports:
            record = {"record": "check", **report.to_dict()}
            print(json.dumps(record, sort_keys=True))
    else:
        meta = " ".join(f"{k}={v}" for k, v in header.items() if k != "record" and v is not None)
        print(f"# {meta}")
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            print(f"{status} {report.label}: cases={report.cases} failures={report.failures}")
            if report.counterexample is not None:
                ce = report.counterexample
                print(f"     word:  {ce.word}")
                print(f"     input: {ce.input}")
                print(f"     lhs:   {ce.lhs}")
                print(f"     rhs:   {ce.rhs}")
        total_failures = sum(r.failures for r in reports)
        print(f"# total: {len(reports)} checks, {sum(r.cases for r in reports)} cases, "
              f"{total_failures} failures")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.kappa < 1 or args.word_len < 1 or args.count < 1:
        raise ValueError("kappa, word length and count must all be >= 1")
    kappa = args.kappa
    alphabet = verify.default_alphabet(kappa)
    rng = random.Random(args.seed)
    from .words import GeneratorWord

    words = [
        GeneratorWord(kappa, [rng.choice(alphabet) for _ in range(args.word_len)])
        for _ in range(args.count)
    ]
    print(f"# bench kappa={kappa} word_len={args.word_len} seed={args.seed} count={args.count}")

    start_poly = LaurentPoly.one(kappa)
    t0 = time.perf_counter()
    poly_terms = [polyrep.act_word(w, start_poly).term_count() for w in words]
    poly_ms = (time.perf_counter() - t0) * 1000

    start_skein = SkeinElement.basis(kappa, (0,) * kappa)
    t0 = time.perf_counter()
    skein_terms = [skein_mod.act_word(w, start_skein).term_count() for w in words]
    skein_ms = (time.perf_counter() - t0) * 1000

    print(f"poly:  total={poly_ms:.2f}ms per_word={poly_ms / len(words):.2f}ms terms={poly_terms}")
    print(f"skein: total={skein_ms:.2f}ms per_word={skein_ms / len(words):.2f}ms terms={skein_terms}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "check":
            return _cmd_check(args)
        return _cmd_bench(args)
    except (ParseError, RankMismatchError, ValueError, IndexError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
