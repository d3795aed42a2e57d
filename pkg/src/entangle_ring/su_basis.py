"""Generalized Gell-Mann bases of su(d), structure constants and the vee product.

Normalization throughout is ``Tr(l_a l_b) = 2 delta_ab`` so that

    l_a l_b = (2/d) delta_ab I + (d_abc + i f_abc) l_c .
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

TOL = 1e-12

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
PAULI.setflags(write=False)


def _frozen(arr):
    arr = np.array(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BasisSet:
    """Ordered list of ``d**2 - 1`` Hermitian traceless d x d matrices."""

    dim: int
    matrices: np.ndarray  # shape (d*d - 1, d, d)

    def __post_init__(self):
        m = _frozen(np.asarray(self.matrices, dtype=complex))
        n = self.dim * self.dim - 1
        if m.shape != (n, self.dim, self.dim):
            raise ValueError(f"expected {n} matrices of size {self.dim}, got shape {m.shape}")
        object.__setattr__(self, "matrices", m)

    def __len__(self):
        return len(self.matrices)

    def gram(self) -> np.ndarray:
        """Matrix of ``Tr(l_a l_b)``; equals ``2 I`` for a valid basis."""
        return np.einsum("aij,bji->ab", self.matrices, self.matrices).real

    def permuted(self, order) -> "BasisSet":
        return BasisSet(self.dim, self.matrices[list(order)])


@dataclass(frozen=True, eq=False)
class StructureConstants:
    dim: int
    d_sym: np.ndarray
    f_anti: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "d_sym", _frozen(self.d_sym))
        object.__setattr__(self, "f_anti", _frozen(self.f_anti))


def gellmann_basis(d: int) -> BasisSet:
    """Generalized Gell-Mann matrices in canonical order.

    Symmetric off-diagonal pairs ``(j, k), j < k`` come first, then the
    antisymmetric pairs in the same order, then the ``d - 1`` diagonal
    matrices. For ``d = 2`` this is exactly ``(sigma_1, sigma_2, sigma_3)``.
    """
    return _gellmann_basis(int(d))


@lru_cache(maxsize=None)
def _gellmann_basis(d: int) -> BasisSet:
    if d < 2:
        raise DomainError(f"su(d) basis needs d >= 2, got {d}")
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    mats = []
    for j, k in pairs:
        m = np.zeros((d, d), dtype=complex)
        m[j, k] = m[k, j] = 1
        mats.append(m)
    for j, k in pairs:
        m = np.zeros((d, d), dtype=complex)
        m[j, k] = -1j
        m[k, j] = 1j
        mats.append(m)
    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1
        diag[l] = -l
        mats.append(np.diag(diag * np.sqrt(2.0 / (l * (l + 1)))).astype(complex))
    return BasisSet(d, np.array(mats))


def structure_constants(basis: BasisSet) -> StructureConstants:
    """``d_abc = Tr({l_a, l_b} l_c)/4`` and ``f_abc = -i Tr([l_a, l_b] l_c)/4``."""
    return _structure_constants(basis)


@lru_cache(maxsize=16)
def _structure_constants(basis: BasisSet) -> StructureConstants:
    lam = basis.matrices
    # t[a,b,c] = Tr(l_a l_b l_c)
    t = np.einsum("aij,bjk,cki->abc", lam, lam, lam)
    d_sym = 0.25 * (t + t.transpose(1, 0, 2)).real
    f_anti = (-0.25j * (t - t.transpose(1, 0, 2))).real
    return StructureConstants(basis.dim, d_sym, f_anti)


def vee_product(xi, sc: StructureConstants) -> np.ndarray:
    """Symmetric product ``(xi v xi)_k = sqrt(d(d-1)/2)/(d-2) d_ijk xi_i xi_j``.

    Accepts a :class:`~entangle_ring.states.BlochVector` or a plain array.
    """
    d = sc.dim
    if d == 2:
        raise DomainError("vee-product undefined for d=2")
    x = np.asarray(getattr(xi, "xi", xi), dtype=float)
    if x.shape != (d * d - 1,):
        raise ValueError(f"Bloch vector of length {d * d - 1} expected, got {x.shape}")
    return np.sqrt(d * (d - 1) / 2.0) / (d - 2) * np.einsum("ijk,i,j->k", sc.d_sym, x, x)
