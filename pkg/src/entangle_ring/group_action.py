"""Haar sampling, the adjoint action ``rho -> U^+ rho U`` and its linearization.

For ``U = u_A x u_B`` the Fano coordinates transform as
``a -> R_A a``, ``b -> R_B b``, ``C -> R_A C R_B^T`` where
``u^+ sigma_i u = (R)_ji sigma_j``. Because the action is
``U^+ rho U`` the map ``u -> R`` reverses products:
``R(u1 u2) = R(u2) R(u1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._parallel import parallel_map
from .errors import ContractError
from .invariants import all_values, total_degrees
from .positivity import char_poly_coeffs
from .states import DensityMatrix, FanoForm, fano_decompose
from .su_basis import PAULI

UNITARY_TOL = 1e-12

LOCAL = "local"
GLOBAL = "global"


@dataclass(frozen=True, eq=False)
class UnitaryMatrix:
    entries: np.ndarray

    def __post_init__(self):
        u = np.array(self.entries, dtype=complex)
        n = u.shape[0]
        if u.shape != (n, n):
            raise ContractError(f"square matrix expected, got {u.shape}")
        if np.max(np.abs(u.conj().T @ u - np.eye(n))) > UNITARY_TOL:
            raise ContractError("matrix is not unitary")
        if abs(np.linalg.det(u) - 1) > UNITARY_TOL:
            raise ContractError("determinant is not 1")
        u.setflags(write=False)
        object.__setattr__(self, "entries", u)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: "UnitaryMatrix") -> "UnitaryMatrix":
        return UnitaryMatrix(self.entries @ other.entries)

    def dagger(self) -> "UnitaryMatrix":
        return UnitaryMatrix(self.entries.conj().T)


@dataclass(frozen=True, eq=False)
class LinearizedAction:
    """15x15 real matrix acting on ``(a, b, vec C)``; ``vec`` is row-major."""

    L: np.ndarray
    r_a: np.ndarray = field(repr=False)
    r_b: np.ndarray = field(repr=False)

    def apply(self, f: FanoForm) -> FanoForm:
        return FanoForm.from_vector(self.L @ f.vector)


def haar_su(d: int, seed) -> UnitaryMatrix:
    """Haar-random element of SU(d).

    QR of a complex Ginibre matrix with the phases of ``diag(R)`` moved into
    ``Q``; the determinant is then divided out with its principal d-th root.
    The adjoint action ignores the resulting centre element.
    """
    if d < 2:
        raise ContractError(f"d >= 2 required, got {d}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    q = q * (diag / np.abs(diag))
    q = q / np.linalg.det(q) ** (1.0 / d)
    return UnitaryMatrix(q)


def adjoint_action(rho: DensityMatrix, u: UnitaryMatrix) -> DensityMatrix:
    if rho.dim != u.dim:
        raise ContractError(f"state has d={rho.dim}, unitary has d={u.dim}")
    m = u.entries.conj().T @ rho.entries @ u.entries
    return DensityMatrix(m, unit_trace=rho.unit_trace)


def local_unitary(u_a: UnitaryMatrix, u_b: UnitaryMatrix) -> UnitaryMatrix:
    if u_a.dim != 2 or u_b.dim != 2:
        raise ContractError("local unitaries must both be 2x2")
    return UnitaryMatrix(np.kron(u_a.entries, u_b.entries))


def so3_rotation(u: UnitaryMatrix) -> np.ndarray:
    """``R`` with ``u^+ sigma_i u = R_ji sigma_j``."""
    m = u.entries
    conj = np.einsum("ab,ibc,cd->iad", m.conj().T, PAULI, m)
    # R[j, i] = Tr(sigma_j u^+ sigma_i u) / 2
    return 0.5 * np.einsum("jab,iba->ji", PAULI, conj).real


def linearized_action(u_a: UnitaryMatrix, u_b: UnitaryMatrix) -> LinearizedAction:
    r_a = so3_rotation(u_a)
    r_b = so3_rotation(u_b)
    big = np.zeros((15, 15))
    big[:3, :3] = r_a
    big[3:6, 3:6] = r_b
    big[6:, 6:] = np.kron(r_a, r_b)
    return LinearizedAction(big, r_a, r_b)


def random_local_pair(seed) -> tuple[UnitaryMatrix, UnitaryMatrix]:
    ss = np.random.SeedSequence(seed)
    sa, sb = ss.spawn(2)
    return haar_su(2, sa), haar_su(2, sb)


def _quantities(rho: DensityMatrix) -> dict:
    out = all_values(fano_decompose(rho))
    s = char_poly_coeffs(rho).s
    out.update({f"S{k}": float(s[k - 1]) for k in range(1, 5)})
    return out


def _deviation(x: float, y: float, scale: float) -> float:
    diff = abs(y - x)
    denom = max(abs(x), scale)
    return diff / denom if denom > 0 else diff


@dataclass(frozen=True)
class InvarianceReport:
    group: str
    trials: int
    max_deviation: dict

    def worst(self, names=None) -> float:
        names = self.max_deviation if names is None else names
        return max((self.max_deviation[n] for n in names), default=0.0)


def invariance_report(rho: DensityMatrix, trials: int, seed: int, group: str = LOCAL) -> InvarianceReport:
    """Max relative change of every invariant over random conjugations of ``rho``.

    Polynomial quantities of degree ``k`` are compared relative to
    ``max(|x|, |V|**k)`` with ``V = (a, b, vec C)``, so values that vanish by
    accident do not inflate the ratio; the ``S_k`` relative to ``max(|x|, 1)``.
    ``group`` is ``'local'`` (SU(2) x SU(2)) or ``'global'`` (SU(4)).
    """
    if rho.dim != 4 or not rho.unit_trace:
        raise ContractError("invariance_report needs a unit-trace 4x4 state")
    if group not in (LOCAL, GLOBAL):
        raise ValueError(f"group must be {LOCAL!r} or {GLOBAL!r}")
    base = _quantities(rho)
    norm = float(np.linalg.norm(fano_decompose(rho).vector))
    degrees = total_degrees()
    scales = {n: (norm ** degrees[n] if n in degrees else 1.0) for n in base}

    def trial(t):
        if group == LOCAL:
            u = local_unitary(*random_local_pair([seed, t]))
        else:
            u = haar_su(4, [seed, t])
        moved = _quantities(adjoint_action(rho, u))
        return {n: _deviation(base[n], moved[n], scales[n]) for n in base}

    worst = dict.fromkeys(base, 0.0)
    for dev in parallel_map(trial, range(trials)):
        for n, v in dev.items():
            worst[n] = max(worst[n], v)
    return InvarianceReport(group, trials, worst)


def orbit_dimension(f: FanoForm, tol: float = 1e-9) -> int:
    """Rank of the tangent map of SO(3) x SO(3) at ``f`` (6 for generic points)."""
    gens = []
    for k in range(3):
        x = np.zeros((3, 3))
        i, j = [(1, 2), (2, 0), (0, 1)][k]
        x[i, j], x[j, i] = -1.0, 1.0
        gens.append(x)
    rows = []
    for x in gens:
        rows.append(np.concatenate([x @ f.a, np.zeros(3), (x @ f.C).ravel()]))
    for x in gens:
        rows.append(np.concatenate([np.zeros(3), x @ f.b, (f.C @ x.T).ravel()]))
    s = np.linalg.svd(np.array(rows), compute_uv=False)
    return int(np.sum(s > tol * max(s[0], 1e-300)))
