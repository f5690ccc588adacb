"""Sweep oracle/engine agreement over a range of strand counts."""
import argparse
import dataclasses
import time

from bklgarside import ncp, oracle


@dataclasses.dataclass
class SweepConfig:
    n_min: int = 2
    n_max: int = 4
    max_len: int = 4
    limit: int = oracle.DEFAULT_LIMIT


def run(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'n':>3} {'simples':>8} {'bf':>5} {'prod bad':>9} {'words':>8} {'word bad':>9} {'sec':>7}")
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        simples = len(ncp.enumerate_nc(n))
        bf = len(oracle.enumerate_simples_bf(n, cfg.limit)) if n <= 5 else None
        prod_bad = len(oracle.product_mismatches(n, cfg.limit)) if n <= 5 else None
        words, bad = oracle.word_mismatches(n, cfg.max_len, cfg.limit)
        dt = time.perf_counter() - t0
        ok &= simples == ncp.catalan(n) and bf in (None, simples) and not prod_bad and not bad
        print(f"{n:>3} {simples:>8} {bf if bf is not None else '-':>5} "
              f"{prod_bad if prod_bad is not None else '-':>9} {words:>8} {len(bad):>9} {dt:>7.2f}")
    return ok


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for f in dataclasses.fields(SweepConfig):
        p.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    cfg = SweepConfig(**vars(p.parse_args()))
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
