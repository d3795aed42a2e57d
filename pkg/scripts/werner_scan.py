"""Scan the Werner family: Casimirs, S_4, positivity and region status.

    python scripts/werner_scan.py --points 13
"""
import argparse
from dataclasses import dataclass

import numpy as np

from entangle_ring.positivity import char_poly_coeffs, positivity_check, region_check, state_casimirs, werner_flip_point
from entangle_ring.states import werner_state


@dataclass
class ScanConfig:
    p_min: float = -1.0
    p_max: float = 1.0
    points: int = 21


def scan(cfg: ScanConfig):
    for p in np.linspace(cfg.p_min, cfg.p_max, cfg.points):
        rho = werner_state(p)
        c = state_casimirs(rho)
        yield p, c, char_poly_coeffs(rho)[4], positivity_check(rho).status, region_check(c).status


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p-min", type=float, default=ScanConfig.p_min)
    ap.add_argument("--p-max", type=float, default=ScanConfig.p_max)
    ap.add_argument("--points", type=int, default=ScanConfig.points)
    cfg = ScanConfig(**vars(ap.parse_args()))

    print(f"{'p':>8} {'C2':>10} {'C3':>10} {'C4':>10} {'S4':>12}  positivity    region")
    for p, c, s4, pos, reg in scan(cfg):
        print(f"{p:8.4f} {c.c2:10.6f} {c.c3:10.6f} {c.c4:10.6f} {s4:12.4e}  {pos:<13} {reg}")
    print(f"S4 changes sign at p = {werner_flip_point():.12f}")


if __name__ == "__main__":
    main()
