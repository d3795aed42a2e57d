"""Numerical checks of the algebraic claims, each returning a JSON-ready dict.

Every check carries a ``passed`` flag; ``run_checks`` aggregates them for
``entangle-ring verify``.
"""
from __future__ import annotations

import time

import numpy as np

from . import group_action as ga
from .hilbert import basis_consistency, molien_expand
from .invariants import MULTIDEGREE, casimir_identities_residual, evaluate_all
from .positivity import (
    BOUNDARY_TOL,
    char_poly_coeffs,
    positivity_check,
    region_check,
    region_sample,
    state_casimirs,
    werner_flip_point,
)
from .states import bell_state, fano_decompose, random_state, werner_state

# Seed-stream tags keep the checks statistically independent under one master seed.
_POS, _INV, _CAS, _LIN, _HOM = range(1, 6)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        out["seconds"] = time.perf_counter() - t0
        return out

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_positivity_equivalence(seed: int, n: int = 10_000, tol: float = BOUNDARY_TOL) -> dict:
    """Eigenvalue positivity versus ``S_k >= 0`` on random Hermitian unit-trace matrices."""
    positive = band = mismatches = 0
    for i in range(n):
        rho = random_state(4, [seed, _POS, i], "hermitian-unit-trace")
        lam_min = np.linalg.eigvalsh(rho.entries)[0]
        s = char_poly_coeffs(rho).s
        by_eig = lam_min >= -tol
        by_s = bool(np.all(s >= -tol))
        positive += by_eig
        if abs(lam_min) <= tol or np.min(np.abs(s)) <= tol:
            band += 1
            continue
        mismatches += by_eig != by_s
    return {
        "passed": bool(mismatches == 0),
        "samples": n,
        "positive": int(positive),
        "non_positive": n - int(positive),
        "in_band": band,
        "mismatches": int(mismatches),
    }


@_timed
def check_region(seed: int, n: int = 1000) -> dict:
    rows = region_sample(n, seed)
    outside = sum(not r.inside for r in rows)
    bell = region_check(state_casimirs(bell_state()))
    bell_zero = int(np.sum(np.abs(bell.margins) < 1e-10))
    werner = region_check(state_casimirs(werner_state(-0.5)))
    third = float(werner.margins[4])
    passed = (
        outside == 0
        and bell.status == "boundary"
        and bell_zero == 3
        and werner.status == "outside"
        and abs(third + 1.6875) <= 1e-12
    )
    return {
        "passed": bool(passed),
        "physical_samples": n,
        "outside": outside,
        "bell_status": bell.status,
        "bell_zero_margins": bell_zero,
        "werner_status": werner.status,
        "werner_third_margin": third,
    }


@_timed
def check_casimir_identities(seed: int, n: int = 500, tol: float = 1e-11) -> dict:
    worst = 0.0
    for i in range(n):
        f = fano_decompose(random_state(4, [seed, _CAS, i], "hermitian-unit-trace"))
        worst = max(worst, max(abs(r) for r in casimir_identities_residual(f)))
    return {"passed": bool(worst < tol), "samples": n, "max_residual": worst}


@_timed
def check_invariance(seed: int, states: int = 20, trials: int = 100, tol: float = 1e-10) -> dict:
    """Local invariance of everything, plus a global SU(4) non-invariance witness."""
    worst = {}
    for i in range(states):
        rho = random_state(4, [seed, _INV, i])
        rep = ga.invariance_report(rho, trials, seed * 1000 + i)
        for k, v in rep.max_deviation.items():
            worst[k] = max(worst.get(k, 0.0), v)
    local_max = max(worst.values())

    rho = random_state(4, [seed, _INV, states])
    moved = ga.adjoint_action(rho, ga.haar_su(4, [seed, _INV, states]))
    d200 = abs(evaluate_all(fano_decompose(moved)).c200 - evaluate_all(fano_decompose(rho)).c200)
    ds = float(np.max(np.abs(char_poly_coeffs(moved).s - char_poly_coeffs(rho).s)))
    passed = local_max < tol and d200 > 1e-3 and ds < 1e-10
    return {
        "passed": bool(passed),
        "states": states,
        "trials": trials,
        "quantities": len(worst),
        "max_local_deviation": local_max,
        "global_c200_change": d200,
        "global_sk_change": ds,
    }


@_timed
def check_linearization(seed: int, trials: int = 100) -> dict:
    commute = ortho = homo = 0.0
    for t in range(trials):
        rho = random_state(4, [seed, _LIN, t], "hermitian-unit-trace")
        ua, ub = ga.random_local_pair([seed, _LIN, t, 0])
        va, vb = ga.random_local_pair([seed, _LIN, t, 1])
        lin = ga.linearized_action(ua, ub)
        direct = fano_decompose(ga.adjoint_action(rho, ga.local_unitary(ua, ub))).vector
        commute = max(commute, float(np.max(np.abs(direct - lin.L @ fano_decompose(rho).vector))))
        ortho = max(ortho, float(np.max(np.abs(lin.L.T @ lin.L - np.eye(15)))))
        # rho -> U^+ rho U composes in reverse; u -> L(u^+) is a homomorphism
        lv = ga.linearized_action(va, vb)
        prod_l = ga.linearized_action(ua @ va, ub @ vb).L
        dag_l = ga.linearized_action((ua @ va).dagger(), (ub @ vb).dagger()).L
        dag_prod = ga.linearized_action(ua.dagger(), ub.dagger()).L @ ga.linearized_action(va.dagger(), vb.dagger()).L
        homo = max(homo, float(np.max(np.abs(prod_l - lv.L @ lin.L))), float(np.max(np.abs(dag_l - dag_prod))))
    passed = commute < 1e-11 and ortho < 1e-10 and homo < 1e-10
    return {
        "passed": bool(passed),
        "trials": trials,
        "max_commuting_error": commute,
        "max_orthogonality_error": ortho,
        "max_homomorphism_error": homo,
    }


def homogeneity_deviation(f, scales) -> float:
    """Worst relative violation of ``C(ta, ub, vC) = t^s u^t v^q C(a, b, C)``."""
    t, u, v = scales
    base = evaluate_all(f).as_dict()
    g = f.scaled(t, u, v)
    moved = evaluate_all(g).as_dict()
    na, nb, nc = np.linalg.norm(g.a), np.linalg.norm(g.b), np.linalg.norm(g.C)
    worst = 0.0
    for name, (s, tt, q) in MULTIDEGREE.items():
        expected = t**s * u**tt * v**q * base[name]
        scale = max(abs(expected), na**s * nb**tt * nc**q)
        if scale > 0:
            worst = max(worst, abs(moved[name] - expected) / scale)
    return worst


@_timed
def check_homogeneity(seed: int, n: int = 100, tol: float = 1e-12) -> dict:
    rng = np.random.default_rng([seed, _HOM])
    worst = 0.0
    for i in range(n):
        f = fano_decompose(random_state(4, [seed, _HOM, i], "hermitian-unit-trace"))
        scales = rng.uniform(0.5, 2.0, 3) * rng.choice([-1.0, 1.0], 3)
        worst = max(worst, homogeneity_deviation(f, scales))
    return {"passed": bool(worst < tol), "pairs": n, "max_relative_error": worst}


@_timed
def check_hilbert(seed: int, kmax: int = 6) -> dict:
    expected = (1, 1, 4, 6, 16, 23, 52)
    series = molien_expand(kmax)
    first = basis_consistency(kmax, seed)
    second = basis_consistency(kmax, seed + 1)
    ranks = [r.rank for r in first.rows]
    stable = ranks == [r.rank for r in second.rows]
    exact = tuple(series.coeffs[: len(expected)]) == expected[: kmax + 1]
    return {
        "passed": bool(first.ok and second.ok and stable and exact),
        "molien": list(series.coeffs),
        "ranks": ranks,
        "stable_across_seeds": stable,
        "report": first.to_dict(),
    }


@_timed
def check_werner(seed: int = 0) -> dict:
    ps = np.linspace(-1.0 / 3.0, 1.0, 13)
    cas_err = 0.0
    for p in ps:
        c = state_casimirs(werner_state(p))
        cas_err = max(cas_err, abs(c.c2 - p**2), abs(c.c3 - p**3), abs(c.c4 - p**4))
    flip = werner_flip_point()
    below = positivity_check(werner_state(-1.0 / 3.0 - 1e-8)).status
    above = positivity_check(werner_state(-1.0 / 3.0 + 1e-8)).status
    passed = cas_err < 1e-12 and abs(flip + 1.0 / 3.0) < 1e-8 and below == "non-positive" and above == "positive"
    return {
        "passed": bool(passed),
        "max_casimir_error": cas_err,
        "flip_point": flip,
        "status_below": below,
        "status_above": above,
    }


CHECKS = {
    "positivity": check_positivity_equivalence,
    "region": check_region,
    "casimir": check_casimir_identities,
    "invariance": check_invariance,
    "linearization": check_linearization,
    "homogeneity": check_homogeneity,
    "hilbert": check_hilbert,
    "werner": check_werner,
}


def run_checks(names, seed: int, trials: int | None = None, kmax: int | None = None) -> dict:
    results = {}
    for name in names:
        kwargs = {}
        if name in ("invariance", "linearization") and trials is not None:
            kwargs["trials"] = trials
        if name == "hilbert" and kmax is not None:
            kwargs["kmax"] = kmax
        results[name] = CHECKS[name](seed, **kwargs)
    return {"seed": seed, "passed": all(r["passed"] for r in results.values()), "checks": results}
