"""Acceptance gate: eight release criteria, one test (one verdict line) each.

Run `pytest -v tests/test_acceptance.py` for one pass/fail line per
criterion.  Tolerances are part of the contract; expected numbers are
tagged with their provenance:

  [TRIVIAL]  forced by definitions (closed forms, counting)
  [DERIVED]  frozen from an independent computation (dense oracle,
             hand calculation, or the exact solver audited end to end)

Criterion 4's table of distance ceilings was computed by the exact LP
itself and is checked for self-consistency: every listed bound must be
reproduced with a re-verified feasibility witness at d and a re-verified
infeasibility certificate at d + 1.
"""

from __future__ import annotations

import random
import time
import warnings
from fractions import Fraction

import numpy as np

from qshadow.cli import main as cli_main
from qshadow.codes import (
    AdditiveCode,
    classify_parity,
    code_enumerators,
    five_qubit_code,
    random_additive_code,
    shadow_distribution,
    shadow_distribution_direct,
)
from qshadow.enumerators import (
    Enumerator,
    analytic_distance_bound,
    even_subcode_enumerators,
    extend_self_dual,
    krawtchouk,
    macwilliams,
    macwilliams_by_substitution,
    shadow_transform,
    shadow_transform_by_substitution,
)
from qshadow.lp import BoundOptions, build_lp, verify_certificate, verify_witness
from qshadow.oracle import (
    DenseOperator,
    enum_a,
    enum_b,
    enum_s,
    projection_from_additive,
    random_projection,
    tilde,
)
from qshadow.verify import run_verification

from conftest import SEED

PLAIN = BoundOptions()
PURE = BoundOptions(pure=True)
PARITY = BoundOptions(self_dual_parity=True)

ORACLE_TOL = 1e-8
CODE_TOL = 1e-9

# [DERIVED] Distance ceilings for the published parameter sets with
# n <= 20, computed by this exact LP (self-dual rows at K = 1, plain
# rows otherwise) and consistent with the known pattern of sitting
# exactly 1 above the additive-code bounds 3, 5, 4, 3, 3, 2, 4, 2.
TABLE_ENTRIES = {
    (7, 0): 4,
    (13, 0): 6,
    (15, 4): 5,
    (15, 7): 4,
    (16, 8): 4,
    (18, 12): 3,
    (19, 8): 5,
    (19, 13): 3,
}


def _floats(e: Enumerator) -> list[float]:
    return [float(v) for v in e]


def test_criterion_1_oracle_identity_suite():
    """Randomized operator identities hold within 1e-8 in under 2 minutes."""
    start = time.perf_counter()
    report = run_verification(n_max=6, trials=50, seed=1)
    elapsed = time.perf_counter() - start

    required = {
        "duality_of_enumerators",
        "shadow_via_transform",
        "shadow_argument_symmetry",
        "twist_pair_invariance",
        "twist_involution",
        "psd_nonnegativity",
        "projection_moments",
    }
    by_name = {r.name: r for r in report.reports}
    missing = required - set(by_name)
    assert not missing, f"identity checks missing from the suite: {missing}"
    for name in sorted(required):
        r = by_name[name]
        assert r.max_violation <= ORACLE_TOL, (
            f"{name}: max violation {r.max_violation:.3e} exceeds {ORACLE_TOL:.0e} "
            f"({r.worst_context})"
        )
    failures = [r.name for r in report.reports if not r.passed]
    assert not failures, f"identity checks failed: {failures}"
    assert elapsed < 120.0, f"suite took {elapsed:.1f}s, budget is 120s"
    print(
        f"criterion 1: {len(report.reports)} identities pass within {ORACLE_TOL:.0e} "
        f"in {elapsed:.1f}s"
    )


def test_criterion_2_combinatorial_matches_oracle():
    """Group-walk enumerators equal dense-matrix enumerators; shadow scans agree."""
    codes: list[AdditiveCode] = [
        AdditiveCode.from_generators([], n=2),
        AdditiveCode.from_generators(["+Z"]),
        AdditiveCode.from_generators(["+ZI", "+IZ"]),
        five_qubit_code(),
    ]
    rng = random.Random(SEED + 2)
    while len(codes) < 24:
        n = rng.randrange(1, 5)
        codes.append(random_additive_code(n, rng.randrange(0, n + 1), rng))

    for code in codes:
        a, b, s = code_enumerators(code)
        p = projection_from_additive(code)
        for got, want in (
            (enum_a(p), a),
            (enum_b(p), b),
            (enum_s(p), s),
        ):
            assert np.allclose(got, _floats(want), rtol=0.0, atol=CODE_TOL), (
                f"oracle disagrees with combinatorics beyond {CODE_TOL:.0e} for {code}"
            )
        assert shadow_distribution(code) == shadow_distribution_direct(code), (
            f"transform shadow != direct-scan shadow for {code}"
        )
    print(f"criterion 2: {len(codes)} codes agree with the oracle within {CODE_TOL:.0e}")


def test_criterion_3_exact_transform_algebra():
    """Involution and route agreement are exact; Krawtchouk column sums close."""
    rng = random.Random(SEED + 3)
    checked = 0
    for n in range(1, 31):
        for _ in range(100):
            e = Enumerator(tuple(
                Fraction(rng.randrange(-60, 61), rng.randrange(1, 10))
                for _ in range(n + 1)
            ))
            m = macwilliams(e)
            assert macwilliams(m) == e, f"double transform not the identity at n={n}"
            assert m == macwilliams_by_substitution(e), (
                f"coefficient and substitution routes disagree at n={n}"
            )
            assert shadow_transform(e) == shadow_transform_by_substitution(e), (
                f"shadow routes disagree at n={n}"
            )
            checked += 1
    for n in range(1, 11):
        total = sum(krawtchouk(i, 0, n) for i in range(n + 1))
        assert total == 4 ** n, f"sum_i P_i(0,{n}) = {total} != 4^{n}"  # [TRIVIAL]
    print(f"criterion 3: {checked} random enumerators transform exactly up to n=30")


def test_criterion_4_lp_reproductions(lp_cache):
    """Pinned feasibility verdicts, closed-form ceilings, certified table."""
    # [DERIVED] verdicts frozen from the exact solver with audited evidence
    prof = lp_cache.profile(5, 2, PLAIN)
    assert prof[3].feasible and not prof[4].feasible
    prof = lp_cache.profile(7, 1, PARITY)
    assert prof[4].feasible and not prof[5].feasible
    assert lp_cache.profile(6, 1, PARITY)[4].feasible

    # LP bound never beats the closed-form ceilings (K = 1 rows use the
    # self-dual options; a rank-one system without them is vacuous).
    for n in range(1, 16):
        assert lp_cache.bound(n, 1, PARITY) <= analytic_distance_bound(n, 1)
        for k_dim in (2, 4, 8):
            assert lp_cache.bound(n, k_dim, PLAIN) <= analytic_distance_bound(n, k_dim)

    # Correctable-error cap: floor((d-1)/2) <= floor((n+1)/6).
    for n in range(1, 21):
        for k in range(4):
            opts = PARITY if k == 0 else PLAIN
            bound = lp_cache.bound(n, 2 ** k, opts)
            assert (bound - 1) // 2 <= (n + 1) // 6, (
                f"correctable cap violated at n={n}, K={2 ** k}: bound {bound}"
            )

    # Self-consistency of the distance table, evidence re-verified on
    # freshly built systems (not the solver's own word).
    for (n, k), expected in TABLE_ENTRIES.items():
        opts = PARITY if k == 0 else PLAIN
        scan = lp_cache.profile(n, 2 ** k, opts)
        d_star = max((d for d, res in scan.items() if res.feasible), default=0)
        assert d_star == expected, (
            f"((n={n}, K=2^{k})): scan gives d <= {d_star}, table says {expected}"
        )
        assert verify_witness(
            build_lp(n, 2 ** k, d_star, opts), scan[d_star].witness
        ), f"witness at d={d_star} fails re-verification for ((n={n}, K=2^{k}))"
        if d_star < n:
            assert verify_certificate(
                build_lp(n, 2 ** k, d_star + 1, opts), scan[d_star + 1].certificate
            ), f"certificate at d={d_star + 1} fails for ((n={n}, K=2^{k}))"
    print(
        f"criterion 4: verdicts, ceilings (n<=15), caps (n<=20), and "
        f"{len(TABLE_ENTRIES)} table entries certified"
    )


def test_criterion_5_pure_impure_comparison(lp_cache):
    """Both bound variants are computed and certified; differences are findings."""
    findings = []
    for n in range(1, 16):
        for k_dim in (1, 2, 4):
            bounds = {}
            for label, opts in (("impure", PLAIN), ("pure", PURE)):
                scan = lp_cache.profile(n, k_dim, opts)
                bound = max((d for d, res in scan.items() if res.feasible), default=0)
                bounds[label] = bound
                if bound >= 1:
                    assert verify_witness(
                        build_lp(n, k_dim, bound, opts), scan[bound].witness
                    ), f"{label} witness fails at (n={n}, K={k_dim}, d={bound})"
                if bound < n:
                    assert verify_certificate(
                        build_lp(n, k_dim, bound + 1, opts),
                        scan[bound + 1].certificate,
                    ), f"{label} certificate fails at (n={n}, K={k_dim}, d={bound + 1})"
            if bounds["impure"] != bounds["pure"]:
                findings.append(
                    f"(n={n}, K={k_dim}): impure d <= {bounds['impure']}, "
                    f"pure d <= {bounds['pure']}"
                )
    if findings:
        warnings.warn(
            "pure and impure LP bounds disagree (expected for K = 1, where the "
            "impure rank-one system is vacuous):\n  " + "\n  ".join(findings),
            stacklevel=1,
        )
    print(
        f"criterion 5: 45 systems certified both ways; "
        f"{len(findings)} disagreement(s) reported as findings"
    )


def test_criterion_6_even_extension_pipeline():
    """|0> extends to the Bell enumerator exactly; P + ~P matches combinatorics."""
    a, b, s = code_enumerators(AdditiveCode.from_generators(["+Z"]))
    a0, b0 = even_subcode_enumerators(a, b, s)
    assert extend_self_dual(a0, b0) == Enumerator.of(1, 0, 3)  # [DERIVED]

    rng = random.Random(SEED + 6)
    checked = 0
    attempts = 0
    while checked < 12:
        attempts += 1
        assert attempts < 500, "could not sample enough odd codes"
        n = rng.randrange(1, 5)
        code = random_additive_code(n, rng.randrange(1, n + 1), rng)
        if classify_parity(code) != "odd":
            continue
        a, b, s = code_enumerators(code)
        a0, b0 = even_subcode_enumerators(a, b, s)
        p = projection_from_additive(code)
        doubled = DenseOperator(p.matrix + tilde(p).matrix)
        assert np.allclose(enum_a(doubled), _floats(a0), rtol=0.0, atol=ORACLE_TOL)
        assert np.allclose(enum_b(doubled), _floats(b0), rtol=0.0, atol=ORACLE_TOL)
        checked += 1
    print(f"criterion 6: Bell extension exact; {checked} odd codes double correctly")


def test_criterion_7_rank_one_shadow_zeros():
    """Rank-one shadows vanish at weights n - 2k - 1 (hence S_0 at odd n)."""
    worst = 0.0
    for n in range(1, 6):
        zero_idx = [n - 2 * j - 1 for j in range((n + 1) // 2)]
        for trial in range(20):
            s = enum_s(random_projection(n, 1, SEED + 100 * n + trial))
            worst = max(worst, float(np.max(np.abs(s[zero_idx]))))
            if n % 2 == 1:
                worst = max(worst, abs(float(s[0])))
    assert worst <= ORACLE_TOL, f"shadow zero pattern violated by {worst:.3e}"
    print(f"criterion 7: 100 rank-one shadows vanish as required (worst {worst:.1e})")


def test_criterion_8_determinism(tmp_path, capsys):
    """Repeated CLI runs are byte-identical: the table and the verify numbers."""
    paths = [tmp_path / "table_a.csv", tmp_path / "table_b.csv"]
    for path in paths:
        assert cli_main(["table", "--max-n", "12", "--out", str(path)]) == 0
    first, second = (p.read_bytes() for p in paths)
    assert first and first == second, "table --max-n 12 is not reproducible"

    outputs = []
    for _ in range(2):
        assert cli_main([
            "verify", "--max-n", "3", "--trials", "15", "--seed", "7",
        ]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1], "verify output differs between identical runs"
    assert "result: PASS" in outputs[0]
    print("criterion 8: table and verification outputs reproduce byte-for-byte")
