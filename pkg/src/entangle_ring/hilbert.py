"""Hilbert series of the invariant ring and a numerical-rank check of it.

The invariants live on the 16-dimensional space of 4x4 Hermitian matrices
``H = (T I + a.s x I + I x b.s + c_ij s_i x s_j)/4``; the trace ``T`` is the
degree-1 primary invariant responsible for the ``(1 - q)`` factor.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError, DomainError, RankInstabilityError
from .invariants import all_values
from .states import FanoForm, hermitian_coordinates, random_state

# M(q) = N(q) / prod(1 - q^e)
MOLIEN_NUMERATOR = {0: 1, 4: 1, 5: 1, 6: 3, 7: 2, 8: 2, 9: 3, 10: 1, 11: 1, 15: 1}
MOLIEN_DENOMINATOR_DEGREES = (1, 2, 2, 2, 3, 3, 4, 4, 4, 6)
KMAX_LIMIT = 64
ORACLE_KMAX = 6
RANK_RTOL = 1e-8

GENERATORS = (
    ("T", 1),
    ("K2", 2), ("K3", 2), ("K4", 2),
    ("K5", 3), ("K6", 3),
    ("K7", 4), ("K8", 4), ("K9", 4), ("J1", 4),
    ("J2", 5),
    ("K10", 6), ("J3", 6), ("J8", 6), ("J9", 6),
    ("J10", 7), ("J11", 7),
    ("J12", 8), ("J13", 8),
    ("J14", 9), ("J15", 9),
)


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def molien_denominator() -> list[int]:
    den = [1]
    for e in MOLIEN_DENOMINATOR_DEGREES:
        den = _poly_mul(den, [1] + [0] * (e - 1) + [-1])
    return den


def molien_expand(kmax: int) -> PowerSeries:
    """Coefficients ``d_0..d_kmax`` by exact integer series division."""
    if not 0 <= kmax <= KMAX_LIMIT:
        raise DomainError(f"kmax must lie in [0, {KMAX_LIMIT}], got {kmax}")
    den = molien_denominator()
    out = []
    for k in range(kmax + 1):
        acc = MOLIEN_NUMERATOR.get(k, 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc)  # den[0] == 1
    return PowerSeries(tuple(out))


def monomials(k: int) -> list[tuple[int, ...]]:
    """Exponent vectors over :data:`GENERATORS` of weighted degree exactly ``k``."""
    degs = [d for _, d in GENERATORS]
    out = []

    def rec(i, rem, cur):
        if rem == 0:
            out.append(tuple(cur + [0] * (len(degs) - i)))
            return
        if i == len(degs):
            return
        for m in range(rem // degs[i] + 1):
            rec(i + 1, rem - m * degs[i], cur + [m])

    rec(0, k, [])
    return out


def generator_values(trace: float, f: FanoForm) -> np.ndarray:
    vals = all_values(f)
    return np.array([trace if name == "T" else vals[name] for name, _ in GENERATORS])


def sample_point(seed) -> tuple[float, FanoForm]:
    """Generic point of the Hermitian space: a unit-trace sample times a random trace."""
    ss = np.random.SeedSequence(seed)
    s_state, s_trace = ss.spawn(2)
    rho = random_state(4, s_state, "hermitian-unit-trace")
    t = np.random.default_rng(s_trace).uniform(0.5, 2.0)
    return hermitian_coordinates(t * rho.entries)


def evaluation_matrix(k: int, samples: int, seed) -> np.ndarray:
    """Rows: sample points; columns: degree-``k`` monomials in the generators."""
    exps = np.array(monomials(k))
    vals = np.array([generator_values(*sample_point([*np.atleast_1d(seed), i])) for i in range(samples)])
    return np.prod(vals[:, None, :] ** exps[None, :, :], axis=2)


def numerical_rank(a: np.ndarray, rtol: float = RANK_RTOL) -> int:
    """Rank after scaling columns to unit norm; singular values above ``rtol * s_max``."""
    norms = np.linalg.norm(a, axis=0)
    norms[norms == 0] = 1.0
    s = np.linalg.svd(a / norms, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def dimension_oracle(k: int, samples: int | None = None, seed: int = 0) -> int:
    """Dimension of the span of generator monomials of degree ``k``.

    Evaluated on two independent point sets derived from ``seed``; the
    ranks must agree or :class:`RankInstabilityError` is raised.
    """
    if not 0 <= k <= ORACLE_KMAX:
        raise DomainError(f"dimension oracle supports 0 <= k <= {ORACLE_KMAX}, got {k}")
    count = len(monomials(k))
    if samples is None:
        samples = 2 * count + 8
    if samples < 2 * count:
        raise ContractError(f"need at least {2 * count} samples for {count} monomials")
    ranks = [numerical_rank(evaluation_matrix(k, samples, [seed, stream])) for stream in (0, 1)]
    if ranks[0] != ranks[1]:
        raise RankInstabilityError(f"degree {k}: ranks {ranks[0]} and {ranks[1]} disagree")
    return ranks[0]


@dataclass(frozen=True)
class DegreeCheck:
    k: int
    molien: int
    monomials: int
    rank: int | None
    match: bool
    error: str | None = None


@dataclass(frozen=True)
class ConsistencyReport:
    seed: int
    rows: tuple

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "ok": self.ok,
            "degrees": [
                {
                    "k": r.k,
                    "molien": r.molien,
                    "monomials": r.monomials,
                    "rank": r.rank,
                    "match": r.match,
                    **({"error": r.error} if r.error else {}),
                }
                for r in self.rows
            ],
        }


def basis_consistency(kmax: int = ORACLE_KMAX, seed: int = 0) -> ConsistencyReport:
    series = molien_expand(kmax)
    rows = []
    for k in range(1, kmax + 1):
        n_mono = len(monomials(k))
        try:
            rank = dimension_oracle(k, seed=seed)
        except RankInstabilityError as exc:
            rows.append(DegreeCheck(k, series[k], n_mono, None, False, str(exc)))
            continue
        rows.append(DegreeCheck(k, series[k], n_mono, rank, rank == series[k]))
    return ConsistencyReport(seed, tuple(rows))
