"""Exact rational phase-1 simplex for feasibility systems.

Solves "find x >= 0 with a_i . x <= b_i or a_i . x == b_i per row" over
Fractions.  Only feasibility is needed, so phase 1 is the whole story:
minimize the sum of artificial variables; zero optimum means feasible
(read the witness off the basis), positive optimum means infeasible and
the phase-1 duals convert into row multipliers for a Farkas refutation.

Pivoting starts with Dantzig's rule for speed and switches permanently
to Bland's rule after a fixed number of iterations, which rules out
cycling and guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

BLAND_SWITCH = 300
MAX_PIVOTS = 200_000


@dataclass(frozen=True)
class SimplexOutcome:
    feasible: bool
    # On feasible: values of the structural variables (length nvars).
    witness: tuple[Fraction, ...] | None
    # On infeasible: one multiplier per input row; nonnegative on "le"
    # rows, free on "eq" rows; sum(dual . rows) has all coefficients
    # >= 0 while sum(dual . rhs) < 0.
    dual: tuple[Fraction, ...] | None


def solve_feasibility_system(
    coeffs: list[list[Fraction]],
    rels: list[str],
    rhs: list[Fraction],
    nvars: int,
) -> SimplexOutcome:
    m = len(coeffs)
    if not (len(rels) == len(rhs) == m):
        raise ValueError("rows, relations, and right-hand sides must align")
    for rel in rels:
        if rel not in ("le", "eq"):
            raise ValueError(f"unknown relation {rel!r}")

    slack_rows = [i for i, rel in enumerate(rels) if rel == "le"]
    slack_col = {i: nvars + j for j, i in enumerate(slack_rows)}
    art_base = nvars + len(slack_rows)
    ncols = art_base + m

    # Equality tableau with rhs in the last slot; rows with negative
    # rhs are negated (recorded in row_sign) so artificials start >= 0.
    tableau: list[list[Fraction]] = []
    row_sign = []
    for i in range(m):
        row = [ZERO] * (ncols + 1)
        for j, c in enumerate(coeffs[i]):
            row[j] = Fraction(c)
        if i in slack_col:
            row[slack_col[i]] = ONE
        row[-1] = Fraction(rhs[i])
        sign = 1
        if row[-1] < 0:
            sign = -1
            row = [-v for v in row]
        row[art_base + i] = ONE
        tableau.append(row)
        row_sign.append(sign)

    basis = [art_base + i for i in range(m)]
    # Reduced costs c_j - z_j for minimizing the artificial sum: the
    # artificial columns start basic at cost 1, everything else at 0.
    reduced = [ZERO] * ncols
    for j in range(art_base):
        reduced[j] = -sum(tableau[i][j] for i in range(m))

    for it in range(MAX_PIVOTS):
        bland = it >= BLAND_SWITCH
        col = _entering(reduced, bland)
        if col is None:
            break
        row = _leaving(tableau, basis, col, bland)
        if row is None:
            raise ArithmeticError("phase-1 objective unbounded; invalid tableau")
        _pivot(tableau, reduced, basis, row, col)
    else:
        raise ArithmeticError(f"simplex did not terminate in {MAX_PIVOTS} pivots")

    value = sum((tableau[i][-1] for i in range(m) if basis[i] >= art_base), ZERO)
    if value == 0:
        witness = [ZERO] * nvars
        for i, b in enumerate(basis):
            if b < nvars:
                witness[b] = tableau[i][-1]
        return SimplexOutcome(True, tuple(witness), None)

    # Infeasible: y_i = 1 - reduced[artificial_i]; undo the row negation
    # and flip orientation so multipliers certify the original rows.
    dual = tuple(
        -row_sign[i] * (ONE - reduced[art_base + i]) for i in range(m)
    )
    return SimplexOutcome(False, None, dual)


def _entering(reduced: list[Fraction], bland: bool) -> int | None:
    if bland:
        for j, r in enumerate(reduced):
            if r < 0:
                return j
        return None
    best = None
    best_val = ZERO
    for j, r in enumerate(reduced):
        if r < best_val:
            best, best_val = j, r
    return best


def _leaving(
    tableau: list[list[Fraction]],
    basis: list[int],
    col: int,
    bland: bool,
) -> int | None:
    best = None
    best_ratio = None
    for i, row in enumerate(tableau):
        a = row[col]
        if a > 0:
            ratio = row[-1] / a
            if best_ratio is None or ratio < best_ratio:
                best, best_ratio = i, ratio
            elif ratio == best_ratio:
                # Bland ties on the smallest basis index; otherwise any
                # deterministic choice will do, so reuse the same rule.
                if basis[i] < basis[best]:
                    best = i
    return best


def _pivot(
    tableau: list[list[Fraction]],
    reduced: list[Fraction],
    basis: list[int],
    prow: int,
    pcol: int,
) -> None:
    row = tableau[prow]
    inv = ONE / row[pcol]
    if inv != 1:
        tableau[prow] = row = [v * inv for v in row]
    for i, other in enumerate(tableau):
        if i == prow:
            continue
        f = other[pcol]
        if f:
            tableau[i] = [u - f * v for u, v in zip(other, row)]
    f = reduced[pcol]
    if f:
        for j in range(len(reduced)):
            if row[j]:
                reduced[j] -= f * row[j]
    basis[prow] = pcol
