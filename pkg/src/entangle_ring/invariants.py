"""The SU(2) x SU(2) polynomial invariants of a two-qubit Fano triple.

Each invariant ``C^(stq)`` is homogeneous of degree ``s`` in ``a``, ``t`` in
``b`` and ``q`` in ``C``. Under local unitaries ``a -> R_A a``,
``b -> R_B b`` and ``C -> R_A C R_B^T`` with ``R_A, R_B`` in SO(3); every
formula below is a contraction of SO(3) tensors on each side, built from
``M = C C^T`` (A side) and ``N = C^T C`` (B side).

The degree-6..9 invariants are triple products. ``C^(214)`` uses the
reading ``b . (C^T a x N C^T a)``, the only one consistent with its
multi-degree.
"""
from __future__ import annotations

from dataclasses import astuple, dataclass, fields

import numpy as np

from .positivity import CasimirTriple, casimirs
from .states import FanoForm, fano_to_bloch

NAMES = (
    "c002", "c200", "c020",
    "c003", "c111",
    "c004", "c202", "c022", "c112",
    "c113",
    "c123", "c204", "c024", "c213",
    "c214", "c124",
    "c125", "c215",
    "c306", "c036",
)

MULTIDEGREE = {name: tuple(int(ch) for ch in name[1:]) for name in NAMES}

K_NAMES = tuple(f"K{i}" for i in range(1, 11))
J_NAMES = tuple(f"J{i}" for i in range(1, 16))
K_DEGREES = (0, 2, 2, 2, 3, 3, 4, 4, 4, 6)
J_DEGREES = (4, 5, 6, 9, 10, 11, 15, 6, 6, 7, 7, 8, 8, 9, 9)


@dataclass(frozen=True)
class LocalInvariants:
    c002: float
    c200: float
    c020: float
    c003: float
    c111: float
    c004: float
    c202: float
    c022: float
    c112: float
    c113: float
    c123: float
    c204: float
    c024: float
    c213: float
    c214: float
    c124: float
    c125: float
    c215: float
    c306: float
    c036: float

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def as_array(self) -> np.ndarray:
        return np.array(astuple(self))


@dataclass(frozen=True, eq=False)
class BasisValues:
    k: np.ndarray  # K1..K10
    j: np.ndarray  # J1..J15

    def as_dict(self) -> dict:
        out = dict(zip(K_NAMES, map(float, self.k)))
        out.update(zip(J_NAMES, map(float, self.j)))
        return out


def cofactor(c: np.ndarray) -> np.ndarray:
    """``cof(C)_{i alpha} = eps_ijk eps_{alpha beta gamma} c_{j beta} c_{k gamma} / 2``."""
    return np.array([np.cross(c[1], c[2]), np.cross(c[2], c[0]), np.cross(c[0], c[1])])


def _triple(x, y, z) -> float:
    return float(x @ np.cross(y, z))


def evaluate_all(f: FanoForm) -> LocalInvariants:
    a, b, c = f.a, f.b, f.C
    m = c @ c.T
    n = c.T @ c
    ma = m @ a
    nb = n @ b
    cb = c @ b
    cta = c.T @ a
    return LocalInvariants(
        c002=float(np.sum(c * c)),
        c200=float(a @ a),
        c020=float(b @ b),
        c003=_triple(c[0], c[1], c[2]),
        c111=float(a @ cb),
        c004=float(np.sum(m * m)),
        c202=float(a @ ma),
        c022=float(b @ nb),
        c112=float(2.0 * a @ cofactor(c) @ b),
        c113=float(ma @ cb),
        c123=_triple(b, cta, nb),
        c204=float(ma @ ma),
        c024=float(nb @ nb),
        c213=_triple(a, cb, ma),
        c214=_triple(b, cta, n @ cta),
        c124=_triple(a, cb, m @ cb),
        c125=_triple(b, nb, n @ cta),
        c215=_triple(a, ma, m @ cb),
        c306=_triple(a, ma, m @ ma),
        c036=_triple(b, nb, n @ nb),
    )


def casimirs_from_invariants(inv: LocalInvariants) -> CasimirTriple:
    """su(4) Casimirs expressed through the low-degree local invariants."""
    c2 = (inv.c200 + inv.c020 + inv.c002) / 3.0
    c3 = inv.c111 - inv.c003
    c4 = (2.0 * (inv.c200 * inv.c020 + inv.c202 + inv.c022 - inv.c112) + inv.c002**2 - inv.c004) / 6.0
    return CasimirTriple(c2, c3, c4)


def basis_values(inv: LocalInvariants, cas: CasimirTriple) -> BasisValues:
    """Primary (K) and secondary (J) invariants; ``K1`` is the constant 1."""
    k = np.array([
        1.0,
        cas.c2,
        inv.c200,
        inv.c020,
        cas.c3,
        inv.c111,
        inv.c004,
        inv.c202,
        inv.c022,
        inv.c204 + inv.c024,
    ])
    j1, j2, j3 = cas.c4, inv.c113, inv.c204 - inv.c024
    j = np.array([
        j1, j2, j3,
        j1 * j2, j1 * j3, j2 * j3, j1 * j2 * j3,
        inv.c123, inv.c213,
        inv.c214, inv.c124,
        inv.c215, inv.c125,
        inv.c306, inv.c036,
    ])
    return BasisValues(k, j)


def casimir_identities_residual(f: FanoForm) -> tuple[float, float, float]:
    """Bloch-side Casimirs minus their expressions in local invariants."""
    bloch = casimirs(fano_to_bloch(f))
    fano = casimirs_from_invariants(evaluate_all(f))
    return tuple(x - y for x, y in zip(bloch.as_tuple(), fano.as_tuple()))


def all_values(f: FanoForm) -> dict:
    """Every invariant, K/J basis element and Casimir of ``f``, keyed by name."""
    inv = evaluate_all(f)
    cas = casimirs(fano_to_bloch(f))
    out = inv.as_dict()
    out.update(basis_values(inv, cas).as_dict())
    out.update(C2=cas.c2, C3=cas.c3, C4=cas.c4)
    return out


def total_degrees() -> dict:
    """Polynomial degree in ``(a, b, C)`` of each key of :func:`all_values`."""
    out = {name: sum(deg) for name, deg in MULTIDEGREE.items()}
    out.update(zip(K_NAMES, K_DEGREES))
    out.update(zip(J_NAMES, J_DEGREES))
    out.update(C2=2, C3=3, C4=4)
    return out
