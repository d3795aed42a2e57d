"""Density matrices and their coordinates.

Two coordinate systems are used for 4-level states:

* the generalized Bloch vector ``xi`` (15 reals) with respect to
  ``gellmann_basis(4)``, via ``rho = (I + sqrt(6) xi.lambda)/4``;
* the Fano triple ``(a, b, C)`` with respect to tensor products of Pauli
  matrices, ``rho = (I + a.sigma x I + I x b.sigma + c_ij sigma_i x sigma_j)/4``.

They are related by the fixed orthogonal map returned by
:func:`fano_to_bloch_matrix`: in the normalized tensor-Pauli basis the Bloch
vector is ``(a, b, vec C)/sqrt(3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ContractError
from .su_basis import PAULI, BasisSet, gellmann_basis

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-10
# Bloch radius range for the deliberately non-positive sampler.
HERMITIAN_RADIUS_MAX = 1.5

KINDS = ("hilbert-schmidt", "pure", "hermitian-unit-trace")

I2 = np.eye(2, dtype=complex)


def _readonly(arr):
    arr = np.array(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Dense Hermitian matrix; ``unit_trace`` records which contract applies.

    ``unit_trace=None`` infers the flag from the trace.
    """

    entries: np.ndarray
    unit_trace: bool | None = None

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ContractError(f"square matrix expected, got shape {m.shape}")
        scale = max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL * scale:
            raise ContractError("matrix is not Hermitian")
        m = 0.5 * (m + m.conj().T)
        tr = np.trace(m).real
        flag = self.unit_trace
        if flag is None:
            flag = abs(tr - 1.0) <= TRACE_TOL
        elif flag and abs(tr - 1.0) > TRACE_TOL:
            raise ContractError(f"unit_trace=True but Tr = {tr!r}")
        object.__setattr__(self, "entries", _readonly(m))
        object.__setattr__(self, "unit_trace", bool(flag))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def purity(self) -> float:
        """``Tr(rho**2)``."""
        return float(np.einsum("ij,ji->", self.entries, self.entries).real)

    def eigenvalues(self) -> np.ndarray:
        """Real eigenvalues in ascending order."""
        return np.linalg.eigvalsh(self.entries)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "unit_trace": self.unit_trace,
            "re": self.entries.real.tolist(),
            "im": self.entries.imag.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DensityMatrix":
        try:
            dim = int(data["dim"])
            re = np.asarray(data["re"], dtype=float)
            im = np.asarray(data["im"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractError(f"malformed state record: {exc}") from exc
        if re.shape != (dim, dim) or im.shape != (dim, dim):
            raise ContractError(f"re/im must both be {dim}x{dim}")
        return cls(re + 1j * im, data.get("unit_trace"))


@dataclass(frozen=True, eq=False)
class BlochVector:
    dim: int
    xi: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.xi, dtype=float)
        if x.shape != (self.dim * self.dim - 1,):
            raise ContractError(f"Bloch vector for d={self.dim} needs {self.dim ** 2 - 1} entries")
        object.__setattr__(self, "xi", _readonly(x))

    def norm2(self) -> float:
        return float(self.xi @ self.xi)


@dataclass(frozen=True, eq=False)
class FanoForm:
    """Two-qubit coordinates: local Bloch vectors ``a``, ``b`` and correlations ``C``."""

    a: np.ndarray
    b: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        c = np.asarray(self.C, dtype=float)
        if a.shape != (3,) or b.shape != (3,) or c.shape != (3, 3):
            raise ContractError("Fano form needs a, b of length 3 and C of shape 3x3")
        object.__setattr__(self, "a", _readonly(a))
        object.__setattr__(self, "b", _readonly(b))
        object.__setattr__(self, "C", _readonly(c))

    @property
    def vector(self) -> np.ndarray:
        """``(a, b, vec C)`` with ``C`` flattened row-major."""
        return np.concatenate([self.a, self.b, self.C.ravel()])

    @classmethod
    def from_vector(cls, v) -> "FanoForm":
        v = np.asarray(v, dtype=float)
        if v.shape != (15,):
            raise ContractError("Fano vector must have 15 entries")
        return cls(v[:3], v[3:6], v[6:].reshape(3, 3))

    def swapped(self) -> "FanoForm":
        """Exchange the two qubits."""
        return FanoForm(self.b, self.a, self.C.T)

    def scaled(self, t: float, u: float, v: float) -> "FanoForm":
        return FanoForm(t * self.a, u * self.b, v * self.C)

    def to_dict(self) -> dict:
        return {"a": self.a.tolist(), "b": self.b.tolist(), "C": self.C.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "FanoForm":
        try:
            return cls(data["a"], data["b"], data["C"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractError(f"malformed Fano record: {exc}") from exc


# --- Bloch form -------------------------------------------------------------


def _check_basis(dim: int, basis: BasisSet | None) -> BasisSet:
    basis = gellmann_basis(dim) if basis is None else basis
    if basis.dim != dim:
        raise ContractError(f"basis is for d={basis.dim}, state has d={dim}")
    return basis


def from_bloch(xi: BlochVector, basis: BasisSet | None = None) -> DensityMatrix:
    d = xi.dim
    basis = _check_basis(d, basis)
    m = np.eye(d) + np.sqrt(d * (d - 1) / 2.0) * np.tensordot(xi.xi, basis.matrices, axes=1)
    return DensityMatrix(m / d, unit_trace=True)


def to_bloch(rho: DensityMatrix, basis: BasisSet | None = None) -> BlochVector:
    if not rho.unit_trace:
        raise ContractError("to_bloch requires a unit-trace state")
    d = rho.dim
    basis = _check_basis(d, basis)
    expect = np.einsum("ij,aji->a", rho.entries, basis.matrices).real
    return BlochVector(d, np.sqrt(d / (2.0 * (d - 1))) * expect)


# --- Fano form --------------------------------------------------------------


@lru_cache(maxsize=1)
def tensor_pauli_matrices() -> np.ndarray:
    """The 15 products ``sigma_i x I``, ``I x sigma_j``, ``sigma_i x sigma_j`` (unnormalized)."""
    mats = [np.kron(s, I2) for s in PAULI]
    mats += [np.kron(I2, s) for s in PAULI]
    mats += [np.kron(s, t) for s in PAULI for t in PAULI]
    return _readonly(mats)


@lru_cache(maxsize=1)
def fano_to_bloch_matrix() -> np.ndarray:
    """Orthogonal 15x15 map ``O`` with ``xi_gellmann = O @ vector / sqrt(3)``."""
    lam = gellmann_basis(4).matrices
    tp = tensor_pauli_matrices() / np.sqrt(2.0)
    return _readonly(0.5 * np.einsum("aij,Aji->aA", lam, tp).real)


def fano_to_bloch(f: FanoForm) -> BlochVector:
    return BlochVector(4, fano_to_bloch_matrix() @ f.vector / np.sqrt(3.0))


def bloch_to_fano(xi: BlochVector) -> FanoForm:
    if xi.dim != 4:
        raise ContractError("Fano form exists only for d=4")
    return FanoForm.from_vector(np.sqrt(3.0) * fano_to_bloch_matrix().T @ xi.xi)


def hermitian_coordinates(m) -> tuple[float, FanoForm]:
    """Split any 4x4 Hermitian matrix as ``(T I + a.s x I + ...)/4``; returns ``(T, (a, b, C))``."""
    m = getattr(m, "entries", m)
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ContractError(f"two-qubit coordinates need a 4x4 matrix, got {m.shape}")
    v = np.einsum("ij,Aji->A", m, tensor_pauli_matrices()).real
    return float(np.trace(m).real), FanoForm.from_vector(v)


def fano_decompose(rho: DensityMatrix) -> FanoForm:
    if rho.dim != 4:
        raise ContractError(f"Fano form needs a 4x4 state, got d={rho.dim}")
    if not rho.unit_trace:
        raise ContractError("fano_decompose requires a unit-trace state")
    return hermitian_coordinates(rho.entries)[1]


def fano_compose(f: FanoForm) -> DensityMatrix:
    """Hermitian unit-trace matrix of a Fano triple; positivity is not checked."""
    m = np.eye(4, dtype=complex) + np.tensordot(f.vector, tensor_pauli_matrices(), axes=1)
    return DensityMatrix(m / 4.0, unit_trace=True)


# --- reductions and constructors ---------------------------------------------


def partial_trace(rho: DensityMatrix, keep: str, dims: tuple[int, int]) -> DensityMatrix:
    """Reduced matrix on subsystem ``keep`` ('A' or 'B') of an ``r*s`` system."""
    r, s = dims
    if r * s != rho.dim:
        raise ContractError(f"dims {dims} do not factor a {rho.dim}x{rho.dim} matrix")
    t = rho.entries.reshape(r, s, r, s)
    if keep == "A":
        red = np.einsum("ijkj->ik", t)
    elif keep == "B":
        red = np.einsum("ijil->jl", t)
    else:
        raise ValueError(f"keep must be 'A' or 'B', not {keep!r}")
    return DensityMatrix(red, unit_trace=rho.unit_trace)


def maximally_mixed(d: int) -> DensityMatrix:
    return DensityMatrix(np.eye(d) / d, unit_trace=True)


def pure_state(psi) -> DensityMatrix:
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return DensityMatrix(np.outer(psi, psi.conj()), unit_trace=True)


def bell_state() -> DensityMatrix:
    """Projector on ``(|00> + |11>)/sqrt(2)``."""
    return pure_state([1, 0, 0, 1])


def werner_state(p: float) -> DensityMatrix:
    """``p |Phi+><Phi+| + (1 - p) I/4``; positive exactly for ``-1/3 <= p <= 1``."""
    return DensityMatrix(p * bell_state().entries + (1 - p) * np.eye(4) / 4, unit_trace=True)


def qubit_state(alpha) -> DensityMatrix:
    alpha = np.asarray(alpha, dtype=float)
    return DensityMatrix(0.5 * (I2 + np.tensordot(alpha, PAULI, axes=1)), unit_trace=True)


def product_state(a, b) -> DensityMatrix:
    return DensityMatrix(np.kron(qubit_state(a).entries, qubit_state(b).entries), unit_trace=True)


def random_state(d: int, seed, kind: str = "hilbert-schmidt") -> DensityMatrix:
    """Seeded random state.

    ``hilbert-schmidt``: ``G G^+ / Tr`` for a complex Ginibre matrix ``G``.
    ``pure``: projector on a normalized complex Gaussian vector.
    ``hermitian-unit-trace``: ``I/d`` plus the traceless part of a GUE matrix,
    rescaled to a Bloch radius drawn uniformly from ``[0, 1.5]``; often
    not positive.

    ``seed`` may be anything accepted by :func:`numpy.random.default_rng`.
    """
    if d < 2:
        raise ContractError(f"d >= 2 required, got {d}")
    rng = np.random.default_rng(seed)
    if kind == "hilbert-schmidt":
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        m = g @ g.conj().T
        return DensityMatrix(m / np.trace(m).real, unit_trace=True)
    if kind == "pure":
        return pure_state(rng.standard_normal(d) + 1j * rng.standard_normal(d))
    if kind == "hermitian-unit-trace":
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        x = 0.5 * (g + g.conj().T)
        x -= np.trace(x).real / d * np.eye(d)
        radius = rng.uniform(0.0, HERMITIAN_RADIUS_MAX)
        # ||rho - I/d||_F = sqrt((d-1)/d) |xi|
        x *= np.sqrt((d - 1) / d) * radius / np.linalg.norm(x)
        return DensityMatrix(np.eye(d) / d + x, unit_trace=True)
    raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")
