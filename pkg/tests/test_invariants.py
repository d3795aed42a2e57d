import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from entangle_ring.invariants import (
    J_DEGREES,
    K_DEGREES,
    MULTIDEGREE,
    NAMES,
    all_values,
    basis_values,
    casimir_identities_residual,
    casimirs_from_invariants,
    evaluate_all,
    total_degrees,
)
from entangle_ring.positivity import state_casimirs
from entangle_ring.states import FanoForm, bell_state, fano_decompose, maximally_mixed, random_state
from entangle_ring.verification import homogeneity_deviation

from oracles import raw_invariants

# entries are zero or at least 1e-30 in size so degree-15 products stay in normal range
_entries = st.floats(-1.5, 1.5, allow_nan=False).map(lambda x: x if abs(x) >= 1e-30 else 0.0)
fano_vectors = arrays(np.float64, 15, elements=_entries)
scales = st.floats(0.25, 4.0).flatmap(lambda x: st.sampled_from([x, -x]))

SWAP = {
    "c200": "c020", "c202": "c022", "c204": "c024", "c214": "c124",
    "c215": "c125", "c306": "c036", "c213": "c123",
}
SWAP.update({v: k for k, v in SWAP.items()})
SWAP_FIXED = ("c002", "c003", "c004", "c111", "c112", "c113")


def natural_scale(f, name):
    s, t, q = MULTIDEGREE[name]
    return np.linalg.norm(f.a) ** s * np.linalg.norm(f.b) ** t * np.linalg.norm(f.C) ** q


def test_names_and_degrees():
    assert len(NAMES) == 20
    assert sorted(sum(d) for d in MULTIDEGREE.values()) == [2, 2, 2, 3, 3, 4, 4, 4, 4, 5, 6, 6, 6, 6, 7, 7, 8, 8, 9, 9]


class TestExamples:
    def test_bell(self):
        f = FanoForm(np.zeros(3), np.zeros(3), np.diag([1.0, -1.0, 1.0]))
        inv = evaluate_all(f).as_dict()
        raw = raw_invariants(f.a, f.b, f.C)
        assert raw["c002"] == 3 and raw["c003"] == -1 and raw["c004"] == 3
        assert inv["c002"] == 3 and inv["c003"] == -1 and inv["c004"] == 3
        for name, (s, t, _) in MULTIDEGREE.items():
            if s or t:
                assert inv[name] == 0

    def test_product_state(self):
        a = b = np.array([0.0, 0.0, 1.0])
        f = FanoForm(a, b, np.outer(a, b))
        inv = evaluate_all(f)
        raw = raw_invariants(f.a, f.b, f.C)
        for got in (inv.as_dict(), raw):
            assert got["c111"] == 1 and got["c113"] == 1
            assert got["c204"] == 1 and got["c024"] == 1
            assert got["c112"] == 0 and got["c003"] == 0

    def test_zero(self):
        assert not evaluate_all(FanoForm.from_vector(np.zeros(15))).as_array().any()


def test_shortcuts_match_index_sums():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        f = FanoForm.from_vector(rng.normal(size=15))
        got = evaluate_all(f).as_dict()
        raw = raw_invariants(f.a, f.b, f.C)
        for name in NAMES:
            scale = max(abs(raw[name]), natural_scale(f, name))
            assert abs(got[name] - raw[name]) <= 1e-12 * scale, name


@given(fano_vectors, scales, scales, scales)
@settings(max_examples=200, deadline=None)
def test_homogeneity(v, t, u, w):
    assert homogeneity_deviation(FanoForm.from_vector(v), (t, u, w)) < 1e-12


@given(fano_vectors)
@settings(max_examples=100, deadline=None)
def test_swap_symmetry(v):
    f = FanoForm.from_vector(v)
    inv = evaluate_all(f).as_dict()
    sw = evaluate_all(f.swapped()).as_dict()
    for name, other in SWAP.items():
        scale = max(abs(inv[other]), natural_scale(f, other), 1e-300)
        assert abs(sw[name] - inv[other]) <= 1e-12 * scale
    for name in SWAP_FIXED:
        assert sw[name] == pytest.approx(inv[name], rel=1e-12, abs=1e-12 * natural_scale(f, name))


class TestBasisValues:
    def test_bell(self):
        f = fano_decompose(bell_state())
        bv = basis_values(evaluate_all(f), state_casimirs(bell_state()))
        k, j = bv.k, bv.j
        assert k[0] == 1
        assert k[1] == pytest.approx(1) and k[4] == pytest.approx(1)
        assert k[6] == pytest.approx(3)
        assert j[0] == pytest.approx(1)
        for idx in (2, 3, 5, 7, 8, 9):  # K3 K4 K6 K8 K9 K10
            assert abs(k[idx]) < 1e-14
        for idx in range(1, 15):
            assert abs(j[idx]) < 1e-14

    def test_maximally_mixed(self):
        rho = maximally_mixed(4)
        bv = basis_values(evaluate_all(fano_decompose(rho)), state_casimirs(rho))
        assert bv.k[0] == 1 and not bv.k[1:].any() and not bv.j.any()

    def test_product_relations_exact(self):
        rho = random_state(4, 31)
        bv = basis_values(evaluate_all(fano_decompose(rho)), state_casimirs(rho))
        j = bv.j
        assert j[3] == j[0] * j[1]
        assert j[4] == j[0] * j[2]
        assert j[5] == j[1] * j[2]
        assert j[6] == j[0] * j[1] * j[2]

    def test_degrees(self):
        assert sorted(K_DEGREES[1:]) == [2, 2, 2, 3, 3, 4, 4, 4, 6]
        assert sorted(J_DEGREES) == [4, 5, 6, 6, 6, 7, 7, 8, 8, 9, 9, 9, 10, 11, 15]
        deg = total_degrees()
        vals = all_values(fano_decompose(random_state(4, 1)))
        assert set(vals) == set(deg)


class TestCasimirIdentities:
    def test_random_states(self):
        worst = 0.0
        for i in range(500):
            f = fano_decompose(random_state(4, [12, i], "hermitian-unit-trace"))
            worst = max(worst, *map(abs, casimir_identities_residual(f)))
        assert worst < 1e-11

    def test_bell(self):
        f = fano_decompose(bell_state())
        assert np.max(np.abs(casimir_identities_residual(f))) < 1e-14
        assert casimirs_from_invariants(evaluate_all(f)).c2 == pytest.approx(1.0)

    def test_zero(self):
        assert casimir_identities_residual(FanoForm.from_vector(np.zeros(15))) == (0, 0, 0)

    @given(fano_vectors)
    @settings(max_examples=100, deadline=None)
    def test_identities_hold_off_the_physical_set(self, v):
        f = FanoForm.from_vector(v)
        r = casimir_identities_residual(f)
        n2 = float(f.vector @ f.vector)
        assert np.max(np.abs(r)) <= 1e-13 * max(1.0, n2**2)
