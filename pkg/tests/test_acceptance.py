"""Acceptance suite: every criterion is exact (zero tolerance) and prints
one pass/fail line.  Run with ``pytest tests/test_acceptance.py -v -s``."""

import random

from tracedet.exactpoly import LAMBDA, Polynomial, entry
from tracedet.identbuild import build_thm1, build_thm3
from tracedet.symmat import (
    EVEN_CORRECTED,
    ODD_CORRECTED,
    PolyMatrix,
    det_dp,
    det_perm_oracle,
    det_signed_perm_expansion,
    pfaffian,
    pfaffian_split,
)
from tracedet.verify import (
    verify_magnus_numeric,
    verify_magnus_original,
    verify_thm1,
    verify_thm2,
    verify_thm3_family,
    verify_trace_relation,
)

MASTER_SEED = 42


def check(ok: bool, label: str) -> None:
    print(("PASS " if ok else "FAIL ") + label)
    assert ok, label


def a(i, j):
    return Polynomial.of_var(entry(i, j))


def generic_skew(n):
    def rule(i, j):
        if i == j:
            return 0
        return a(i, j) if i < j else -a(j, i)

    return PolyMatrix.build(range(1, n + 1), range(1, n + 1), rule)


def test_criterion_01_thm1_residual_zero():
    ok = all(verify_thm1(n).passed for n in range(0, 7))
    check(ok, "criterion 1: det A - (-1)^n det B - det C = 0 for n = 0..6")


def test_criterion_02_thm3_residual_zero():
    ok = all(verify_thm3_family(n, "thm3").passed for n in range(1, 7))
    check(ok, "criterion 2: det A - beta(det B + det C) = (a[1,1]-2beta) det inner, n = 1..6")


def test_criterion_03_cor5():
    ok = all(verify_thm3_family(n, "cor5").passed for n in range(2, 7))
    check(ok, "criterion 3: symmetric specialization det A = det B + det C, n = 2..6")


def test_criterion_04_cor6():
    ok = all(verify_thm3_family(n, "cor6").passed for n in (2, 4, 6))
    check(ok, "criterion 4: skew specialization det A + det B + det C = 0, n = 2,4,6")


def test_criterion_05_thm7():
    ok = all(verify_thm3_family(n, "thm7").passed for n in (4, 6))
    check(ok, "criterion 5: det C = -2 Pf_e(A) Pf_o(A) symbolically, n = 4,6")


def test_criterion_06_pfaffian_engine():
    ok = True
    for n in (2, 4, 6):
        m = generic_skew(n)
        pf = pfaffian(m)
        pf_e, pf_o = pfaffian_split(m)
        ok = ok and pf ** 2 == det_dp(m) and pf_e + pf_o == pf
    check(ok, "criterion 6: Pf(A)^2 = det A and Pf = Pf_e + Pf_o for generic skew, n = 2,4,6")


def test_criterion_07_determinant_trace_identity_trials():
    ok = True
    for generator in ("sl2z", "gaussian"):
        for n in range(1, 7):
            ok = ok and verify_magnus_numeric(n, 100, MASTER_SEED, generator).passed
    check(ok, "criterion 7: det A = det B + det C on 100 trials per n = 1..6, both "
              "generators, with det A = 0 (n >= 4) and det B = det C = 0 (n >= 5)")


def test_criterion_08_four_by_four_identity_trials():
    ok = verify_magnus_original(100, MASTER_SEED).passed
    check(ok, "criterion 8: both 4x4 trace identities exact on 100 trials")


def test_criterion_09_thm2_det_zero():
    ok = all(verify_thm2(n, 100, MASTER_SEED).passed for n in (5, 6))
    ok = ok and verify_thm2(5, 1, MASTER_SEED, "exhaustive").passed
    check(ok, "criterion 9: det D = 0 with verified left kernels, n = 5,6, 100 trials "
              "plus the exhaustive 2^5 sign sweep")


def test_criterion_10_trace_relation():
    ok = verify_trace_relation(1000, MASTER_SEED).passed
    ok = ok and verify_trace_relation(1000, MASTER_SEED, "gaussian").passed
    check(ok, "criterion 10: tr(mM^-1) = tr m tr M - tr(mM) on 1000 pairs per generator")


def test_criterion_11_engine_cross_check():
    rng = random.Random(MASTER_SEED)
    ok = True
    for _ in range(50):
        m = PolyMatrix.build(
            range(5), range(5),
            lambda i, j: rng.randint(-3, 3) * a(rng.randint(0, 4), rng.randint(0, 4)),
        )
        ok = ok and det_dp(m) == det_perm_oracle(m)
    for n in (2, 3, 4):
        _, b_mat, c_mat = build_thm3(n)
        base = PolyMatrix.build(range(2, n + 1), range(2, n + 1), lambda i, j: a(i, j))
        corr = {i: a(1, i) for i in range(2, n + 1)}
        ok = ok and det_signed_perm_expansion(base, corr, EVEN_CORRECTED) == det_dp(b_mat)
        ok = ok and det_signed_perm_expansion(base, corr, ODD_CORRECTED) == det_dp(c_mat)
    check(ok, "criterion 11: det_dp = det_perm_oracle on 50 random 5x5, and the "
              "signed-permutation expansions match det B / det C for n <= 4")


def test_criterion_12_lambda_degree_bound():
    ok = True
    for n in range(0, 6):
        a_mat, b_mat, _ = build_thm1(n)
        for m in (a_mat, b_mat):
            det = det_dp(m)
            for k in range(2, n + 3):
                ok = ok and det.coeff_in_var(LAMBDA, k).is_zero()
    check(ok, "criterion 12: coefficient of lambda^k in det A and det B is zero "
              "for k >= 2, n <= 5")


def test_criterion_13_mutation_sensitivity():
    report = verify_thm1(3, corrupt_sign=True)
    ok = (
        not report.passed
        and report.residual is not None
        and not Polynomial.from_text(report.residual).is_zero()
    )
    check(ok, "criterion 13: one flipped sign in B (n = 3) fails with a nonzero "
              "residual witness")
