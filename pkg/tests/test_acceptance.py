"""The eight acceptance criteria, one test each, at their stated tolerances.

Each test prints a single ``[PASS]`` / ``[FAIL]`` line to the terminal,
bypassing output capture, before asserting.
"""
import numpy as np
import pytest

from entangle_ring.positivity import region_check, state_casimirs
from entangle_ring.states import bell_state, werner_state
from entangle_ring.verification import (
    check_casimir_identities,
    check_hilbert,
    check_homogeneity,
    check_invariance,
    check_linearization,
    check_positivity_equivalence,
    check_region,
    check_werner,
)

from oracles import molien_geometric

SEED = 42


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
        assert ok, detail

    return emit


def test_1_positivity_equivalence(report):
    r = check_positivity_equivalence(SEED, n=10_000, tol=1e-10)
    ok = r["mismatches"] == 0 and r["seconds"] < 10
    report(1, "eigenvalue vs S_k positivity", ok,
           f"{r['samples']} samples, {r['non_positive']} non-positive, "
           f"{r['mismatches']} mismatches, {r['seconds']:.1f}s")


def test_2_region_inequalities(report):
    r = check_region(SEED, n=1000)
    bell = region_check(state_casimirs(bell_state()))
    werner = region_check(state_casimirs(werner_state(-0.5)))
    ok = (
        r["outside"] == 0
        and bell.status == "boundary"
        and int(np.sum(np.abs(bell.margins) < 1e-10)) == 3
        and werner.status == "outside"
        and abs(werner.margins[4] + 1.6875) <= 1e-12
    )
    report(2, "Casimir region", ok,
           f"{r['outside']} of 1000 physical outside, Bell {bell.status}, "
           f"Werner(-1/2) third margin {werner.margins[4]:.15f}")


def test_3_casimir_identities(report):
    r = check_casimir_identities(SEED, n=500, tol=1e-11)
    report(3, "Casimirs from local invariants", r["max_residual"] < 1e-11,
           f"max residual {r['max_residual']:.2e} over 500 states")


def test_4_local_invariance(report):
    r = check_invariance(SEED, states=20, trials=100, tol=1e-10)
    ok = (
        r["max_local_deviation"] < 1e-10
        and r["quantities"] >= 20 + 10 + 15 + 3
        and r["global_c200_change"] > 1e-3
        and r["global_sk_change"] < 1e-10
    )
    report(4, "local invariance and global witness", ok,
           f"local max {r['max_local_deviation']:.2e} over {r['quantities']} quantities, "
           f"global dC200 {r['global_c200_change']:.3f}, dS {r['global_sk_change']:.1e}")


def test_5_linearization(report):
    r = check_linearization(SEED, trials=100)
    ok = r["max_commuting_error"] < 1e-11 and r["max_homomorphism_error"] < 1e-10
    report(5, "linearized action", ok,
           f"commuting {r['max_commuting_error']:.1e}, homomorphism {r['max_homomorphism_error']:.1e}")


def test_6_molien_and_rank(report):
    r = check_hilbert(SEED, kmax=6)
    independent = molien_geometric({0: 1, 4: 1, 5: 1, 6: 3, 7: 2, 8: 2, 9: 3, 10: 1, 11: 1, 15: 1},
                                   (1, 2, 2, 2, 3, 3, 4, 4, 4, 6), 6)
    expected = [1, 1, 4, 6, 16, 23, 52]
    ok = (
        r["molien"] == expected == independent
        and r["ranks"] == expected[1:]
        and r["stable_across_seeds"]
        and r["seconds"] < 30
    )
    report(6, "Molien series and rank oracle", ok,
           f"d_0..d_6 {r['molien']}, ranks {r['ranks']}, {r['seconds']:.1f}s")


def test_7_homogeneity(report):
    r = check_homogeneity(SEED, n=100, tol=1e-12)
    report(7, "multi-degree homogeneity", r["max_relative_error"] < 1e-12,
           f"max relative error {r['max_relative_error']:.1e} over 100 pairs")


def test_8_werner_family(report):
    r = check_werner(SEED)
    ok = r["max_casimir_error"] < 1e-12 and abs(r["flip_point"] + 1 / 3) < 1e-8
    report(8, "Werner Casimirs and positivity flip", ok,
           f"Casimir error {r['max_casimir_error']:.1e}, flip at {r['flip_point']:.12f}")
