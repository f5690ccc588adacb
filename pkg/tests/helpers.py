"""Shared fixtures-by-function and brute-force oracles for the test suite."""
import functools
import itertools

from bklgarside.artin import ArtinInstance
from bklgarside.bkl import BklInstance
from bklgarside.garside import PreGarside


@functools.lru_cache(maxsize=None)
def bkl(n, fast=True):
    return BklInstance(n, fast=fast)


@functools.lru_cache(maxsize=None)
def artin(n):
    return ArtinInstance(n)


def atoms_of(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def set_partitions(elems):
    """Every set partition of a list, by the textbook recursion."""
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1:]


def crosses_naive(parts):
    """a < b < c < d with a, c in one part and b, d in another."""
    where = {i: k for k, p in enumerate(parts) for i in p}
    pts = sorted(where)
    for a, b, c, d in itertools.combinations(pts, 4):
        if where[a] == where[c] and where[b] == where[d] and where[a] != where[b]:
            return True
    return False


def divisor_instance(N, with_delta=True):
    """Divisors of N under multiplication, defined while the product divides N."""
    divs = [d for d in range(1, N + 1) if N % d == 0]

    def omega(k):
        count, p = 0, 2
        while k > 1:
            while k % p == 0:
                k //= p
                count += 1
            p += 1
        return count

    return PreGarside(
        unit=1,
        atoms=[d for d in divs if omega(d) == 1],
        product=lambda a, b: a * b if N % (a * b) == 0 else None,
        length=omega,
        simples=lambda: divs,
        delta=N if with_delta else None,
        name=f"div({N})",
    )


# -- identities between products of atoms ---------------------------------------------


def _part(n, nu):
    from bklgarside.ncp import NcPartition
    return NcPartition(n, (tuple(sorted(nu)),))


def _subsets(n, min_size=1):
    for k in range(min_size, n + 1):
        yield from itertools.combinations(range(n), k)


def _chain(inst, cyc):
    """Engine normal form of a(z1,z2) a(z2,z3) ... a(z_{k-1},z_k)."""
    return inst.normal_form(inst.atom(*sorted(p)) for p in zip(cyc, cyc[1:]))


def rotation_failures(n):
    """The chain over a part does not depend on where the clockwise walk starts."""
    inst, out = bkl(n), []
    for nu in _subsets(n, 2):
        want = inst.element(inst.simple(_part(n, nu)))
        for s in range(len(nu)):
            cyc = nu[s:] + nu[:s]
            if _chain(inst, cyc) != want:
                out.append(f"chain from {cyc[0]} over {nu}")
    return out


def commutation_failures(n):
    """delta_nu delta_nu' = delta_nu' delta_nu for parts of a common non-crossing partition."""
    from bklgarside.ncp import NcPartition, is_noncrossing
    inst, out = bkl(n), []
    for nu, mu in itertools.combinations(list(_subsets(n)), 2):
        if set(nu) & set(mu):
            continue
        rest = [(k,) for k in range(n) if k not in nu + mu]
        if not is_noncrossing([nu, mu] + rest, n):
            continue
        a, b = inst.element(inst.simple(_part(n, nu))), inst.element(inst.simple(_part(n, mu)))
        both = inst.element(inst.simple(NcPartition(n, (nu, mu))))
        if not a * b == b * a == both:
            out.append(f"{nu} vs {mu}")
    return out


def factorization_failures(n):
    """
    (i) delta_nu = delta_nu' * delta(nu cut at nu') for nu' inside nu.
    (ii), (iii) for lam finer than lam' exactly one simple completes lam to lam'.
    """
    from bklgarside import ncp
    from bklgarside.ncp import NcPartition
    inst, out = bkl(n), []
    for nu in _subsets(n, 1):
        for k in range(1, len(nu) + 1):
            for sub in itertools.combinations(nu, k):
                cut = inst.simple(NcPartition(n, tuple(ncp.cut(nu, sub))))
                if inst.product(inst.simple(_part(n, sub)), cut) != inst.simple(_part(n, nu)):
                    out.append(f"(i) {sub} in {nu}")
    simples = ncp.enumerate_nc(n)
    for lam, lam2 in itertools.product(simples, repeat=2):
        if not ncp.refines(lam, lam2):
            continue
        hits = [mu for mu in simples
                if inst.product(inst.simple(lam), inst.simple(mu)) == inst.simple(lam2)]
        tag = "(ii)" if len(lam2.nontrivial_parts()) <= 1 else "(iii)"
        if len(hits) != 1 or hits[0] != ncp.rel_complement(lam, lam2):
            out.append(f"{tag} {lam} below {lam2}: {len(hits)} completions")
    return out


def poset_mismatches(n):
    """Divisibility among simples, two ways, against refinement (scan instance)."""
    from bklgarside import ncp
    inst, out = bkl(n, fast=False), []
    simples = ncp.enumerate_nc(n)
    ids = {s: inst.simple(s) for s in simples}
    products = {}
    for a, c in itertools.product(simples, repeat=2):
        b = inst.product(ids[a], ids[c])
        if b is not None:
            products.setdefault(ids[a], set()).add(b)
    for lam, lam2 in itertools.product(simples, repeat=2):
        ref = ncp.refines(lam, lam2)
        via_product = ids[lam2] in products.get(ids[lam], ())
        via_engine = inst.left_divide(inst.element(ids[lam]), inst.element(ids[lam2])) is not None
        if not ref == via_product == via_engine:
            out.append(f"{lam} vs {lam2}: refines={ref} product={via_product} engine={via_engine}")
    return out
