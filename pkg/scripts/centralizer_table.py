"""
Tabulate the atoms of the centralizer of Delta^(n/d) for every divisor d.

Alongside the engine's answer the table gives the number of rotation
invariant simples and an independent count: invariant simples that are not
the product of two non-trivial invariant simples.
"""
import argparse
import dataclasses
import itertools

from bklgarside import ncp
from bklgarside.bkl import centralizer_atoms, try_product_bkl
from bklgarside.ncp import NcPartition


@dataclasses.dataclass
class TableConfig:
    n_max: int = 8
    compact: bool = True


def indecomposable(n: int, step: int) -> set:
    unit = NcPartition.singletons(n)
    inv = [s for s in ncp.enumerate_nc(n) if s != unit and ncp.rotate(s, step) == s]
    products = {try_product_bkl(a, b) for a, b in itertools.product(inv, repeat=2)}
    return set(inv) - products


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=TableConfig.n_max)
    p.add_argument("--full", action="store_true", help="print singleton parts too")
    a = p.parse_args()
    cfg = TableConfig(n_max=a.n_max, compact=not a.full)
    for n in range(2, cfg.n_max + 1):
        for d in (d for d in range(1, n + 1) if n % d == 0):
            atoms = centralizer_atoms(n, d)
            check = indecomposable(n, n // d)
            inv = sum(ncp.rotate(s, n // d) == s for s in ncp.enumerate_nc(n))
            flag = "" if set(atoms) == check else "  MISMATCH"
            shown = " ".join(s.compact_str() if cfg.compact else str(s) for s in atoms) if d > 1 else "(all atoms)"
            print(f"n={n} d={d}: {len(atoms)} atoms, {inv} invariant simples{flag}  {shown}")


if __name__ == "__main__":
    main()
