"""Positivity of Hermitian matrices through characteristic-polynomial coefficients.

``det(x I - rho) = x^n - S_1 x^(n-1) + S_2 x^(n-2) - ... + (-1)^n S_n``;
a Hermitian ``rho`` is positive semi-definite iff every ``S_k >= 0``.
For 4-level states the ``S_k`` are polynomials in the three su(4)
Casimirs ``C2 = xi.xi``, ``C3 = (xi v xi).xi``, ``C4 = (xi v xi).(xi v xi)``.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from math import factorial, prod

import numpy as np
from scipy.optimize import bisect

from ._parallel import parallel_map
from .errors import ContractError, DomainError
from .states import BlochVector, DensityMatrix, random_state, to_bloch, werner_state
from .su_basis import StructureConstants, gellmann_basis, structure_constants, vee_product

BOUNDARY_TOL = 1e-10

CSV_COLUMNS = ("C2", "C3", "C4", "S2", "S3", "S4", "inside")


@dataclass(frozen=True, eq=False)
class CharPolyCoeffs:
    dim: int
    s: np.ndarray  # (S_1, ..., S_n)

    def __getitem__(self, k: int) -> float:
        """``S_k`` with 1-based ``k``."""
        if not 1 <= k <= self.dim:
            raise IndexError(k)
        return float(self.s[k - 1])


@dataclass(frozen=True)
class CasimirTriple:
    c2: float
    c3: float
    c4: float

    def as_tuple(self):
        return (self.c2, self.c3, self.c4)


@dataclass(frozen=True, eq=False)
class PositivityReport:
    status: str  # positive | non-positive | boundary
    margins: np.ndarray  # S_1..S_n


@dataclass(frozen=True, eq=False)
class RegionReport:
    status: str  # inside | boundary | outside
    margins: np.ndarray  # six lower/upper slack values, see region_margins


@dataclass(frozen=True)
class RegionRow:
    c2: float
    c3: float
    c4: float
    s2: float
    s3: float
    s4: float
    inside: bool


def _sc4(sc):
    return structure_constants(gellmann_basis(4)) if sc is None else sc


def char_poly_coeffs(rho) -> CharPolyCoeffs:
    """Elementary symmetric functions of the spectrum via Newton's identities.

    ``k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i`` with power traces
    ``p_i = Tr(rho^i)``.
    """
    m = np.asarray(getattr(rho, "entries", rho), dtype=complex)
    n = m.shape[0]
    p = np.empty(n + 1)
    power = np.eye(n, dtype=complex)
    for i in range(1, n + 1):
        power = power @ m
        p[i] = np.trace(power).real
    e = np.zeros(n + 1)
    e[0] = 1.0
    for k in range(1, n + 1):
        e[k] = sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)) / k
    return CharPolyCoeffs(n, e[1:])


def positivity_check(rho: DensityMatrix) -> PositivityReport:
    """Classify by the signs of ``S_k``; ``|S_k| <= 1e-10`` counts as boundary."""
    if not rho.unit_trace:
        raise ContractError("positivity_check requires a unit-trace state")
    s = char_poly_coeffs(rho).s
    if np.any(s < -BOUNDARY_TOL):
        status = "non-positive"
    elif np.any(np.abs(s) <= BOUNDARY_TOL):
        status = "boundary"
    else:
        status = "positive"
    return PositivityReport(status, s)


def normalized_bounds(coeffs: CharPolyCoeffs) -> np.ndarray:
    """``k! n^(k-1) S_k / ((n-1)(n-2)...(n-k+1))`` for ``k = 2..n``, unclamped.

    Physical states give values in ``[0, 1]``; ``I/n`` gives exactly 1.
    """
    n = coeffs.dim
    if abs(coeffs[1] - 1.0) > 1e-10:
        raise ContractError("normalized bounds need S_1 = Tr(rho) = 1")
    out = []
    for k in range(2, n + 1):
        falling = prod(range(n - k + 1, n))
        out.append(factorial(k) * n ** (k - 1) * coeffs[k] / falling)
    return np.array(out)


def s_from_bloch(xi: BlochVector, sc: StructureConstants | None = None, upto: int | None = None):
    """Closed forms of ``S_2 .. S_upto`` (``upto <= 4``) from a Bloch vector.

    ``upto`` defaults to ``min(n, 4)``. ``sc`` must come from the basis the
    Bloch vector was taken in; default is the Gell-Mann basis.
    """
    n = xi.dim
    upto = min(n, 4) if upto is None else upto
    if upto > n or not 2 <= upto <= 4:
        raise DomainError(f"S_{upto} not available for n={n}")
    if sc is None:
        sc = structure_constants(gellmann_basis(n))
    x = xi.xi
    c2 = float(x @ x)
    out = [(n - 1) / (2 * n) * (1 - c2)]
    if upto >= 3:
        v = vee_product(x, sc)
        c3 = float(v @ x)
        out.append((n - 1) * (n - 2) / (6 * n**2) * (1 - 3 * c2 + 2 * c3))
    if upto >= 4:
        c4 = float(v @ v)
        out.append(
            (n - 1) * (n - 2) * (n - 3) / (24 * n**3)
            * (1 - 6 * c2 + 8 * c3 + 3 * (n - 1) / (n - 3) * c2**2 - 6 * (n - 2) / (n - 3) * c4)
        )
    return tuple(out)


def casimirs(xi: BlochVector, sc: StructureConstants | None = None) -> CasimirTriple:
    if xi.dim != 4:
        raise DomainError(f"su(4) Casimirs need d=4, got d={xi.dim}")
    x = xi.xi
    v = vee_product(x, _sc4(sc))
    return CasimirTriple(float(x @ x), float(v @ x), float(v @ v))


def state_casimirs(rho: DensityMatrix) -> CasimirTriple:
    return casimirs(to_bloch(rho))


def s_from_casimirs(t: CasimirTriple):
    c2, c3, c4 = t.as_tuple()
    return (
        3.0 / 8.0 * (1 - c2),
        (1 - 3 * c2 + 2 * c3) / 16.0,
        ((1 - 3 * c2) ** 2 + 8 * c3 - 12 * c4) / 256.0,
    )


def region_margins(t: CasimirTriple) -> np.ndarray:
    """Slacks of ``0 <= C2 <= 1``, ``0 <= 3C2 - 2C3 <= 1``, ``0 <= Q <= 1``.

    ``Q = (1 - 3C2)^2 + 8C3 - 12C4``; order is (lower, upper) per inequality.
    """
    c2, c3, c4 = t.as_tuple()
    second = 3 * c2 - 2 * c3
    third = (1 - 3 * c2) ** 2 + 8 * c3 - 12 * c4
    return np.array([c2, 1 - c2, second, 1 - second, third, 1 - third])


def region_check(t: CasimirTriple) -> RegionReport:
    """Boundary as soon as any margin is within 1e-10 of zero.

    The maximally mixed point ``(0, 0, 0)`` is a corner of the region and
    therefore reports ``boundary``.
    """
    m = region_margins(t)
    if np.any(m < -BOUNDARY_TOL):
        status = "outside"
    elif np.any(np.abs(m) <= BOUNDARY_TOL):
        status = "boundary"
    else:
        status = "inside"
    return RegionReport(status, m)


def _region_row(seed: int, index: int, kind: str) -> RegionRow:
    rho = random_state(4, [seed, index], kind)
    t = state_casimirs(rho)
    s = s_from_casimirs(t)
    return RegionRow(*t.as_tuple(), *s, region_check(t).status != "outside")


def region_sample(n: int, seed: int, kind: str = "hilbert-schmidt") -> list[RegionRow]:
    """Casimir triples of ``n`` random states; sample ``i`` uses seed ``[seed, i]``."""
    return parallel_map(lambda i: _region_row(seed, i, kind), range(n))


def region_csv(rows, out=None) -> str:
    """CSV with header, 17 significant digits, LF line endings."""
    buf = io.StringIO() if out is None else out
    buf.write(",".join(CSV_COLUMNS) + "\n")
    for r in rows:
        nums = ",".join(format(x, ".16e") for x in (r.c2, r.c3, r.c4, r.s2, r.s3, r.s4))
        buf.write(f"{nums},{int(r.inside)}\n")
    return buf.getvalue() if out is None else ""


def werner_s4(p: float) -> float:
    return char_poly_coeffs(werner_state(p))[4]


def werner_flip_point(lo: float = -0.9, hi: float = 0.0, xtol: float = 1e-12) -> float:
    """Bisect the sign change of ``S_4`` along the Werner family."""
    return bisect(werner_s4, lo, hi, xtol=xtol)
