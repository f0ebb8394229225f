"""Command-line front end: distance bounds, bound tables, code analysis,
and the randomized operator-identity verification suite.

Exit codes: 0 = success, 1 = invalid input, 2 = verification failure
(an identity check failed, or solver evidence failed re-verification).

All rationals in JSON output are exact ``"p/q"`` strings; text output
may round for display but is never fed back into computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .codes import (
    classify_parity,
    code_enumerators,
    dual_distribution,
    is_real,
    load_code,
    observed_distance,
    shadow_distribution,
    weight_distribution,
)
from .enumerators import Enumerator, analytic_distance_bound
from .lp import (
    BoundOptions,
    bound_table,
    build_lp,
    feasibility_profile,
    result_to_json,
    solve_feasibility,
    table_to_csv,
    table_to_json,
)
from .verify import run_verification


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 1, keeping 2 for verification."""

    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fraction_flag(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected an exact rational like 2 or 3/2, got {text!r}"
        ) from None


def _resolve_k_dim(args: argparse.Namespace) -> tuple[Fraction, Optional[int]]:
    """(K, log2 K or None) from the --k / --K pair; --k defaults to 0."""
    if args.k is not None and args.k_dim is not None:
        raise ValueError("give either --k or --K, not both")
    if args.k_dim is not None:
        k_dim = args.k_dim
    else:
        k = args.k if args.k is not None else 0
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        k_dim = Fraction(2**k)
    if k_dim < 1:
        raise ValueError(f"K must be >= 1, got {k_dim}")
    num = k_dim.numerator
    if k_dim.denominator == 1 and num & (num - 1) == 0:
        return k_dim, num.bit_length() - 1
    return k_dim, None


def _options_suffix(opts: BoundOptions) -> str:
    tags = []
    if opts.pure:
        tags.append("pure")
    if opts.self_dual_parity:
        tags.append("self-dual parity")
    return f" [{', '.join(tags)}]" if tags else ""


def _format_enum(e: Enumerator) -> str:
    return "(" + ", ".join(str(c) for c in e) + ")"


def _certificate_entries(problem, certificate) -> list[dict[str, str]]:
    return [
        {"row": f"{label[0]}:{label[1]}", "multiplier": str(v)}
        for label, v in zip(problem.labels, certificate)
        if v != 0
    ]


def _print_certificate(problem, certificate) -> None:
    for entry in _certificate_entries(problem, certificate):
        print(f"  {entry['row']}: {entry['multiplier']}")


def _cmd_bound(args: argparse.Namespace) -> int:
    k_dim, k_log = _resolve_k_dim(args)
    opts = BoundOptions(pure=args.pure, self_dual_parity=args.self_dual_parity)
    if args.n < 1:
        raise ValueError(f"n must be positive, got {args.n}")

    if args.d is not None:
        problem = build_lp(args.n, k_dim, args.d, opts)
        result = solve_feasibility(problem)
        if args.format == "json":
            sys.stdout.write(result_to_json(problem, result))
            return 0
        print(
            f"(({args.n}, {k_dim}, {args.d})){_options_suffix(opts)}: "
            f"{result.status}"
        )
        if result.witness is not None and args.show_witness:
            print(f"witness: A = ({', '.join(str(v) for v in result.witness)})")
        if result.certificate is not None and args.show_certificate:
            print("infeasibility certificate (row: multiplier):")
            _print_certificate(problem, result.certificate)
        return 0

    profile = feasibility_profile(args.n, k_dim, opts)
    bound = max((d for d, res in profile.items() if res.feasible), default=0)
    analytic = analytic_distance_bound(args.n, k_dim)

    if args.format == "json":
        payload: dict = {
            "n": args.n,
            "k": k_log,
            "K": str(k_dim),
            "pure": opts.pure,
            "self_dual_parity": opts.self_dual_parity,
            "lp_bound": bound,
            "analytic_bound": analytic,
        }
        if args.show_witness and bound >= 1:
            payload["witness_d"] = bound
            payload["witness"] = [str(v) for v in profile[bound].witness]
        if args.show_certificate and bound < args.n:
            refuted = build_lp(args.n, k_dim, bound + 1, opts)
            payload["certificate_d"] = bound + 1
            payload["certificate"] = _certificate_entries(
                refuted, profile[bound + 1].certificate
            )
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return 0

    print(
        f"LP bound for (({args.n}, {k_dim})){_options_suffix(opts)}: "
        f"d <= {bound}"
    )
    print(f"analytic bound: d <= {analytic}")
    if args.show_witness:
        if bound >= 1:
            witness = profile[bound].witness
            print(
                f"witness at d = {bound}: "
                f"A = ({', '.join(str(v) for v in witness)})"
            )
        else:
            print("no feasible distance, so no witness")
    if args.show_certificate:
        if bound < args.n:
            refuted = build_lp(args.n, k_dim, bound + 1, opts)
            print(f"infeasibility certificate at d = {bound + 1} (row: multiplier):")
            _print_certificate(refuted, profile[bound + 1].certificate)
        else:
            print(f"every distance up to n = {args.n} is feasible; no certificate")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise ValueError(f"--max-n must be positive, got {args.max_n}")
    if args.jobs < 1:
        raise ValueError(f"--jobs must be positive, got {args.jobs}")
    k_range = tuple(args.k) if args.k else (0, 1, 2)
    rows = bound_table(args.max_n, k_range, jobs=args.jobs)
    text = table_to_csv(rows) if args.format == "csv" else table_to_json(rows)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    path = args.code_file
    try:
        code = load_code(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 1

    dist = weight_distribution(code)
    dual = dual_distribution(code)
    shadow = shadow_distribution(code)
    a, b, s = code_enumerators(code)
    parity = classify_parity(code)
    real = is_real(code)
    shadow_ok = all(c >= 0 for c in s)
    domination_ok = all(
        code.k_dim * b[i] >= a[i] for i in range(code.n + 1)
    )
    witness, pure = observed_distance(a, b, code.k_dim)

    if args.format == "json":
        payload = {
            "file": path,
            "n": code.n,
            "dim": code.dim,
            "K": code.k_dim,
            "generators": [str(g) for g in code.generators],
            "parity": parity,
            "real": real,
            "weight_distribution": list(dist.counts),
            "dual_distribution": list(dual.counts),
            "shadow_distribution": list(shadow.counts),
            "a": [str(c) for c in a],
            "b": [str(c) for c in b],
            "s": [str(c) for c in s],
            "shadow_nonnegative": shadow_ok,
            "kb_dominates_a": domination_ok,
            "distance_witness": witness,
            "pure": pure if witness is not None else None,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return 0

    print(f"code: {path}")
    print(f"n = {code.n}, dim = {code.dim}, K = {code.k_dim}")
    print(f"generators: {', '.join(str(g) for g in code.generators) or '(none)'}")
    print(f"parity: {parity}")
    print(f"real projection: {'yes' if real else 'no'}")
    print(f"weight distribution: {tuple(dist.counts)}")
    print(f"dual weight distribution: {tuple(dual.counts)}")
    print(f"shadow distribution: {tuple(shadow.counts)}")
    print(f"A = {_format_enum(a)}")
    print(f"B = {_format_enum(b)}")
    print(f"S = {_format_enum(s)}")
    print(f"shadow coefficients nonnegative: {'yes' if shadow_ok else 'no'}")
    print(f"K B_d >= A_d at every weight: {'yes' if domination_ok else 'no'}")
    if witness is None:
        print("observed distance witness: none")
    else:
        print(
            f"observed distance witness: d = {witness} "
            f"({'pure' if pure else 'impure'})"
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.max_n <= 6:
        raise ValueError(f"--max-n must be in 1..6, got {args.max_n}")
    if args.trials < 1:
        raise ValueError(f"--trials must be positive, got {args.trials}")
    report = run_verification(n_max=args.max_n, trials=args.trials, seed=args.seed)
    if args.format == "json":
        payload = {
            "n_max": report.n_max,
            "trials": report.trials,
            "seed": report.seed,
            "all_passed": report.all_passed,
            "identities": [
                {
                    "name": r.name,
                    "max_violation": r.max_violation,
                    "tolerance": r.tolerance,
                    "checks": r.checks,
                    "passed": r.passed,
                    "worst_context": r.worst_context,
                }
                for r in report.reports
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(report.format_text())
        print("result: PASS" if report.all_passed else "result: FAIL")
    return 0 if report.all_passed else 2


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qshadow",
        description=(
            "Exact distance bounds, enumerator tables, and stabilizer code "
            "analysis for quantum codes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "bound",
        help="certified LP distance bound for an ((n, K)) pair",
        description=(
            "Scan distances downward and report the largest d whose "
            "feasibility system admits an exact witness; optionally show "
            "the witness and the refutation one step above.  With --d, "
            "solve just that single system."
        ),
    )
    p.add_argument("--n", type=int, required=True, help="number of qubits")
    p.add_argument(
        "--k", type=int, default=None, help="log2 of the subspace dimension K (default 0)"
    )
    p.add_argument(
        "--K",
        dest="k_dim",
        type=_fraction_flag,
        default=None,
        help="subspace dimension as an exact rational (alternative to --k)",
    )
    p.add_argument(
        "--d",
        type=int,
        default=None,
        help="solve the single distance-d system instead of scanning",
    )
    p.add_argument(
        "--pure", action="store_true", help="add A_i = 0 for 1 <= i < d"
    )
    p.add_argument(
        "--self-dual-parity",
        dest="self_dual_parity",
        action="store_true",
        help="K = 1 only: pin S_i = 0 at every i with n - i odd (implies --pure)",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--show-witness",
        action="store_true",
        help="print the feasible enumerator at d = bound",
    )
    p.add_argument(
        "--show-certificate",
        action="store_true",
        help="print the infeasibility multipliers at d = bound + 1",
    )
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser(
        "table",
        help="bound table over n <= max-n and a set of k = log2 K values",
        description=(
            "Emit one row per (n, k) with the plain LP bound, the pure LP "
            "bound, and the closed-form analytic bound.  k = 0 rows use "
            "the self-dual parity system."
        ),
    )
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument(
        "--k",
        type=int,
        action="append",
        default=None,
        help="log2 K column to include (repeatable; default 0 1 2)",
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="write to this path instead of stdout")
    p.add_argument(
        "--jobs", type=int, default=1, help="parallel solver processes (default 1)"
    )
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser(
        "analyze",
        help="enumerators, distributions, and structure of a stabilizer code file",
        description=(
            "Parse a generator file (one signed Pauli string per line, "
            "optional n=<int> header, # comments) and report exact "
            "enumerators, distributions, parity, reality, and the "
            "observed distance witness."
        ),
    )
    p.add_argument("code_file", help="path to the generator file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser(
        "verify",
        help="run the randomized operator-identity suite against the dense oracle",
        description=(
            "Check transform and shadow identities on random operators "
            "and codes; exits 2 if any identity exceeds tolerance."
        ),
    )
    p.add_argument("--max-n", dest="max_n", type=int, default=4, help="1..6 (default 4)")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
