"""Time normal forms, lcms and group equality on random words."""
import argparse
import dataclasses
import random
import statistics
import time

from bklgarside.bkl import BklInstance, atom_word_fraction


@dataclasses.dataclass
class BenchConfig:
    ns: tuple = (4, 6, 8, 10)
    lengths: tuple = (10, 50, 200)
    reps: int = 20
    seed: int = 0


def bench(cfg: BenchConfig) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'n':>3} {'len':>5} {'nf ms':>8} {'lcm ms':>8} {'eq ms':>8}")
    for n in cfg.ns:
        inst = BklInstance(n)
        atoms = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for length in cfg.lengths:
            t_nf, t_lcm, t_eq = [], [], []
            for _ in range(cfg.reps):
                w1, w2 = ([rng.choice(atoms) for _ in range(length)] for _ in range(2))
                t0 = time.perf_counter()
                u = inst.normal_form(inst.atom(*a) for a in w1)
                v = inst.normal_form(inst.atom(*a) for a in w2)
                t1 = time.perf_counter()
                inst.right_lcm([u, v])
                t2 = time.perf_counter()
                signed = [(a, rng.choice([1, -1])) for a in w1]
                atom_word_fraction(inst, signed) == atom_word_fraction(inst, signed[::-1])
                t3 = time.perf_counter()
                t_nf.append((t1 - t0) / 2)
                t_lcm.append(t2 - t1)
                t_eq.append(t3 - t2)
            print(f"{n:>3} {length:>5} {1e3 * statistics.median(t_nf):>8.2f} "
                  f"{1e3 * statistics.median(t_lcm):>8.2f} {1e3 * statistics.median(t_eq):>8.2f}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--ns", type=int, nargs="+", default=list(BenchConfig.ns))
    p.add_argument("--lengths", type=int, nargs="+", default=list(BenchConfig.lengths))
    p.add_argument("--reps", type=int, default=BenchConfig.reps)
    p.add_argument("--seed", type=int, default=BenchConfig.seed)
    a = p.parse_args()
    bench(BenchConfig(tuple(a.ns), tuple(a.lengths), a.reps, a.seed))


if __name__ == "__main__":
    main()
