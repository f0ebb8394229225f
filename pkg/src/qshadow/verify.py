"""Randomized cross-validation of the dense oracle against the exact layer.

Each identity below ties two independent computation routes together:
trace sums over explicit matrices on one side, exact Krawtchouk
transforms (evaluated in floating point) on the other.  A run reports
the worst observed violation per identity; anything beyond tolerance
is a failure with the seed and parameters that produced it.

Closed-form anchor cases (the identity operator and the |0><0|
projector) run unconditionally so that a broken oracle cannot hide
behind random inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import enumerators
from .codes import AdditiveCode, classify_parity, code_enumerators, random_additive_code
from .enumerators import Enumerator, even_subcode_enumerators
from .oracle import (
    DenseOperator,
    N_CAP,
    enum_a,
    enum_b,
    enum_s,
    pauli_expansion_coeff,
    pauli_matrix,
    projection_from_additive,
    random_hermitian,
    random_projection,
    random_psd,
    tilde,
    trace_pauli_product,
)
from .paulis import PauliElement, weight

IDENTITY_TOL = 1e-8
NONNEG_TOL = 1e-9


@dataclass(frozen=True)
class IdentityReport:
    name: str
    tolerance: float
    max_violation: float
    worst_context: str
    checks: int

    @property
    def passed(self) -> bool:
        return bool(self.max_violation <= self.tolerance)


@dataclass(frozen=True)
class VerificationReport:
    n_max: int
    trials: int
    seed: int
    reports: tuple[IdentityReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def format_text(self) -> str:
        width = max(len(r.name) for r in self.reports)
        lines = [
            f"verification suite: n <= {self.n_max}, {self.trials} trials, seed {self.seed}",
            f"{'identity'.ljust(width)}  {'max violation':>13}  {'tol':>7}  result",
        ]
        for r in self.reports:
            status = "ok" if r.passed else f"FAIL ({r.worst_context})"
            lines.append(
                f"{r.name.ljust(width)}  {r.max_violation:13.3e}  {r.tolerance:7.0e}  {status}"
            )
        return "\n".join(lines)


class _Tracker:
    """Accumulates the worst violation seen for one identity."""

    def __init__(self, name: str, tolerance: float = IDENTITY_TOL) -> None:
        self.name = name
        self.tolerance = tolerance
        self.max_violation = 0.0
        self.worst_context = "-"
        self.checks = 0

    def record(self, violation: float, context: str) -> None:
        violation = float(violation)
        self.checks += 1
        if violation > self.max_violation:
            self.max_violation = violation
            self.worst_context = context

    def report(self) -> IdentityReport:
        return IdentityReport(
            self.name, self.tolerance, self.max_violation, self.worst_context, self.checks
        )


def _float_macwilliams(a: np.ndarray) -> np.ndarray:
    n = len(a) - 1
    table = np.array(enumerators.krawtchouk_table(n), dtype=np.float64)
    return table @ a / 2 ** n


def _float_shadow(a: np.ndarray) -> np.ndarray:
    n = len(a) - 1
    table = np.array(enumerators.krawtchouk_table(n), dtype=np.float64)
    signs = np.array([(-1) ** r for r in range(n + 1)], dtype=np.float64)
    return table @ (signs * a) / 2 ** n


def _diff(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


def _fixed_cases(trackers: dict[str, _Tracker]) -> None:
    ident = DenseOperator.identity(1)
    zero = DenseOperator(np.array([[1, 0], [0, 0]], dtype=complex))
    one = DenseOperator(np.array([[0, 0], [0, 1]], dtype=complex))
    cases = [
        ("enum_a(I)", enum_a(ident), [4.0, 0.0]),
        ("enum_b(I)", enum_b(ident), [2.0, 6.0]),
        ("enum_s(I)", enum_s(ident), [2.0, 6.0]),
        ("enum_a(|0><0|)", enum_a(zero), [1.0, 1.0]),
        ("enum_b(|0><0|)", enum_b(zero), [1.0, 1.0]),
        ("enum_s(|0><0|)", enum_s(zero), [0.0, 2.0]),
    ]
    t = trackers["closed_form_anchors"]
    for label, got, want in cases:
        t.record(_diff(got, np.array(want)), label)
    t.record(_diff(tilde(zero).matrix, one.matrix), "twist(|0><0|) = |1><1|")
    t.record(_diff(tilde(ident).matrix, ident.matrix), "twist(I) = I")


def _expansion_sign_case(m: DenseOperator, t: _Tracker, context: str) -> None:
    tm = tilde(m)
    for x in range(1 << m.n):
        for z in range(1 << m.n):
            e = PauliElement(m.n, x, z)
            lhs = pauli_expansion_coeff(tm, e)
            rhs = (-1) ** weight(e) * pauli_expansion_coeff(m, e)
            t.record(abs(complex(lhs) - complex(rhs)), context + f" E={e.label()}")


def _random_odd_code(n: int, rng: np.random.Generator) -> AdditiveCode | None:
    for _ in range(80):
        dim = int(rng.integers(1, n + 1))
        code = random_additive_code(n, dim, int(rng.integers(1 << 62)))
        if classify_parity(code) == "odd":
            return code
    return None


def run_verification(n_max: int = 4, trials: int = 50, seed: int = 1) -> VerificationReport:
    """Run every identity check; see module docstring for the catalog."""
    if not 1 <= n_max <= N_CAP:
        raise ValueError(f"need 1 <= n_max <= {N_CAP}, got {n_max}")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")

    trackers = {
        name: _Tracker(name)
        for name in (
            "closed_form_anchors",
            "duality_of_enumerators",
            "shadow_via_transform",
            "shadow_argument_symmetry",
            "twist_pair_invariance",
            "twist_involution",
            "twist_expansion_signs",
            "projection_moments",
            "rank_one_shadow_zeros",
            "odd_code_even_extension",
        )
    }
    trackers["psd_nonnegativity"] = _Tracker("psd_nonnegativity", NONNEG_TOL)

    _fixed_cases(trackers)

    master = np.random.default_rng(seed)
    for n in range(1, n_max + 1):
        # Large n are smoke-tested: a tenth of the instance budget.
        n_trials = trials if n <= 4 else max(1, trials // 10)
        for trial in range(n_trials):
            sub = int(master.integers(0, 2 ** 63))
            ctx = f"n={n} trial={trial} seed={seed}"
            m1 = random_hermitian(n, sub)
            m2 = random_hermitian(n, sub + 1)

            a = enum_a(m1, m2)
            b = enum_b(m1, m2)
            s = enum_s(m1, m2)
            trackers["duality_of_enumerators"].record(
                max(_diff(b, _float_macwilliams(a)), _diff(a, _float_macwilliams(b))), ctx
            )
            trackers["shadow_via_transform"].record(_diff(s, _float_shadow(a)), ctx)
            trackers["shadow_argument_symmetry"].record(_diff(s, enum_s(m2, m1)), ctx)
            trackers["twist_pair_invariance"].record(
                _diff(enum_a(tilde(m1), tilde(m2)), a), ctx
            )
            trackers["twist_involution"].record(
                _diff(tilde(tilde(m1)).matrix, m1.matrix), ctx
            )

            p1 = random_psd(n, sub + 2)
            p2 = random_psd(n, sub + 3)
            worst = -min(float(np.min(enum_b(p1, p2))), float(np.min(enum_s(p1, p2))))
            trackers["psd_nonnegativity"].record(max(worst, 0.0), ctx)

            k = int(master.integers(1, 2 ** n + 1))
            proj = random_projection(n, k, sub + 4)
            pa = enum_a(proj)
            pb = enum_b(proj)
            t = trackers["projection_moments"]
            t.record(abs(pa[0] - k ** 2), ctx + f" K={k} (A_0)")
            t.record(abs(pb[0] - k), ctx + f" K={k} (B_0)")
            t.record(max(0.0, -float(np.min(pa))), ctx + f" K={k} (A_d >= 0)")
            t.record(max(0.0, -float(np.min(k * pb - pa))), ctx + f" K={k} (K B_d >= A_d)")

            pure = random_projection(n, 1, sub + 5)
            ps = enum_s(pure)
            zero_idx = [n - 2 * j - 1 for j in range((n + 1) // 2)]
            trackers["rank_one_shadow_zeros"].record(
                float(np.max(np.abs(ps[zero_idx]))), ctx + f" indices {zero_idx}"
            )

            if n <= 2 and trial < 5:
                _expansion_sign_case(m1, trackers["twist_expansion_signs"], ctx)

            if n <= 4:
                code = _random_odd_code(n, master)
                if code is not None:
                    p = projection_from_additive(code)
                    doubled = DenseOperator(p.matrix + tilde(p).matrix)
                    a_c, b_c, s_c = code_enumerators(code)
                    a0, b0 = even_subcode_enumerators(a_c, b_c, s_c)
                    t = trackers["odd_code_even_extension"]
                    t.record(_diff(enum_a(doubled), [float(v) for v in a0]), ctx)
                    t.record(_diff(enum_b(doubled), [float(v) for v in b0]), ctx)

    order = [
        "closed_form_anchors",
        "duality_of_enumerators",
        "shadow_via_transform",
        "shadow_argument_symmetry",
        "twist_pair_invariance",
        "twist_involution",
        "twist_expansion_signs",
        "psd_nonnegativity",
        "projection_moments",
        "rank_one_shadow_zeros",
        "odd_code_even_extension",
    ]
    return VerificationReport(
        n_max, trials, seed, tuple(trackers[name].report() for name in order)
    )
