"""
The Birman-Ko-Lee (band generator) monoid as a pre-Garside instance.

Simples are non-crossing partitions of n points, atoms are the two-point
partitions a(i, j) and Delta is the one-part partition. Products are decided
in the symmetric group: lam * mu is simple exactly when the reflection
lengths add and the composed permutation is again the image of a
non-crossing partition.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import ncp
from .errors import IncompatibleError, MalformedError
from .garside import NormalForm, PreGarside
from .ncp import NcPartition
from .perm import compose, reflection_length

SignedAtom = tuple[tuple[int, int], int]


def try_product_bkl(lam: NcPartition, mu: NcPartition) -> NcPartition | None:
    if lam.n != mu.n:
        raise IncompatibleError(f"size mismatch: {lam.n} vs {mu.n}")
    sigma = compose(ncp.phi(lam), ncp.phi(mu))
    if reflection_length(sigma) != ncp.nc_length(lam) + ncp.nc_length(mu):
        return None
    return ncp.from_perm(sigma)


def _left_quotient(lam: NcPartition, mu: NcPartition) -> NcPartition | None:
    return ncp.rel_complement(lam, mu) if ncp.refines(lam, mu) else None


def _right_quotient(lam: NcPartition, mu: NcPartition) -> NcPartition | None:
    c = ncp.from_perm(compose(ncp.phi(mu), ncp.phi(lam).inverse()))
    if c is None or try_product_bkl(c, lam) != mu:
        return None
    return c


class BklInstance(PreGarside):
    """
    Band-generator monoid on n strands.

    With ``fast=False`` the lattice operations fall back to the engine's
    generic table scans, which is what the cross-checks compare against.
    """

    def __init__(self, n: int, fast: bool = True, max_n: int = ncp.MAX_ENUMERATE_N):
        self.n = n
        fast_paths = {}
        if fast:
            fast_paths = dict(
                left_quotient=_left_quotient,
                right_quotient=_right_quotient,
                meet=ncp.meet,
                join=ncp.join,
                bar=lambda lam: ncp.rotate(lam, -1),
            )
        super().__init__(
            unit=NcPartition.singletons(n),
            atoms=[NcPartition.atom(n, i, j) for i in range(n) for j in range(i + 1, n)],
            product=try_product_bkl,
            length=ncp.nc_length,
            simples=lambda: ncp.enumerate_nc(n, max_n),
            delta=NcPartition.full(n),
            name=f"BKL(n={n}{'' if fast else ', scan'})",
            **fast_paths,
        )

    def atom(self, i: int, j: int) -> int:
        return self.intern(NcPartition.atom(self.n, i, j))

    def simple(self, lam: NcPartition) -> int:
        if lam.n != self.n:
            raise IncompatibleError(f"partition on {lam.n} points, instance has {self.n}")
        return self.intern(lam)

    def conj_by_delta(self, nf: NormalForm, k: int) -> NormalForm:
        """Delta^-k nf Delta^k, computed by rotating every factor by -k."""
        self._check(nf)
        return NormalForm(self, tuple(self.intern(ncp.rotate(self.obj(f), -k)) for f in nf.factors))


def canonical_word(lam: NcPartition) -> list[tuple[int, int]]:
    """Atom word for a simple: each part's ascending chain, parts by least element."""
    return [(p[k], p[k + 1]) for p in lam.parts for k in range(len(p) - 1)]


def centralizer_atoms(n: int, d: int) -> list[NcPartition]:
    """
    Atoms of the submonoid of elements commuting with Delta^(n/d).

    These are the rotation-by-(n/d)-invariant canonical factors that are not
    products of other such invariant orbit lcms.
    """
    if d < 1 or n % d:
        raise MalformedError(f"d={d} does not divide n={n}")
    step = n // d
    inst = BklInstance(n)
    ids = inst.fixed_atoms(lambda lam: ncp.rotate(lam, step))
    return [inst.obj(i) for i in ids]


def to_artin(word: Iterable[SignedAtom]) -> list[tuple[int, int]]:
    """
    Rewrite signed band generators as signed Artin generators.

    a(i, j) with i < j becomes s_{i+1} ... s_j s_{j-1}^-1 ... s_{i+1}^-1, with
    s_k standing for a(k-1, k). Generators are returned as (k, +1 | -1).
    """
    out: list[tuple[int, int]] = []
    for (i, j), e in word:
        if not 0 <= i < j:
            raise MalformedError(f"atom a({i},{j}) needs 0 <= i < j")
        up = [(k, 1) for k in range(i + 1, j + 1)]
        down = [(k, -1) for k in range(j - 1, i, -1)]
        expansion = up + down
        if e < 0:
            expansion = [(k, -s) for k, s in reversed(expansion)]
        out.extend(expansion * abs(e))
    return out


def atom_word_fraction(inst: BklInstance, word: Sequence[SignedAtom]):
    return inst.fraction_from_word([(inst.atom(i, j), e) for (i, j), e in word])
