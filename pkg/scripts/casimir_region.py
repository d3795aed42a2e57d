"""Sample Casimir triples of random two-qubit states and tally region membership.

    python scripts/casimir_region.py --n 5000 --seed 0 --out region.csv

Writes the CSV produced by ``region_sample`` and prints, per sampler kind,
how many points fall outside the inequality region and how many of those are
genuinely non-positive.
"""
import argparse
from dataclasses import dataclass

from entangle_ring.positivity import region_csv, region_sample
from entangle_ring.states import random_state


@dataclass
class RegionConfig:
    n: int = 2000
    seed: int = 0
    out: str | None = None


def summarize(cfg: RegionConfig, kind: str) -> dict:
    rows = region_sample(cfg.n, cfg.seed, kind)
    outside = [i for i, r in enumerate(rows) if not r.inside]
    negative = sum(random_state(4, [cfg.seed, i], kind).eigenvalues()[0] < 0 for i in outside)
    return {"kind": kind, "n": cfg.n, "outside": len(outside), "outside_and_negative": int(negative), "rows": rows}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=RegionConfig.n)
    p.add_argument("--seed", type=int, default=RegionConfig.seed)
    p.add_argument("--out", help="CSV path for the hermitian-unit-trace sample")
    cfg = RegionConfig(**vars(p.parse_args()))

    for kind in ("hilbert-schmidt", "pure", "hermitian-unit-trace"):
        s = summarize(cfg, kind)
        print(f"{kind:<22} n={s['n']}  outside={s['outside']}  of which non-positive={s['outside_and_negative']}")
        if cfg.out and kind == "hermitian-unit-trace":
            with open(cfg.out, "w", newline="\n") as fh:
                region_csv(s["rows"], fh)
            print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
