"""Table of Hilbert series coefficients, monomial counts and numerical ranks.

    python scripts/hilbert_table.py --kmax 12 --seed 0

Ranks are only computed up to degree 6; higher rows show the series and the
raw monomial count.
"""
import argparse
from dataclasses import dataclass

from entangle_ring.hilbert import ORACLE_KMAX, dimension_oracle, molien_expand, monomials


@dataclass
class TableConfig:
    kmax: int = 10
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=TableConfig.kmax)
    ap.add_argument("--seed", type=int, default=TableConfig.seed)
    cfg = TableConfig(**vars(ap.parse_args()))

    series = molien_expand(cfg.kmax)
    print(f"{'k':>3} {'d_k':>6} {'monomials':>10} {'rank':>6}")
    for k in range(cfg.kmax + 1):
        rank = dimension_oracle(k, seed=cfg.seed) if 1 <= k <= ORACLE_KMAX else None
        print(f"{k:>3} {series[k]:>6} {len(monomials(k)):>10} {'' if rank is None else rank:>6}")


if __name__ == "__main__":
    main()
