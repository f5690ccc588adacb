"""
Non-crossing partitions of n points on a circle.

Points are labelled 0, ..., n-1 in clockwise order, so a clockwise walk
around a part is its increasing index sequence. A partition is stored with
every part sorted and the parts sorted by least element; this makes equality
and hashing canonical.

Via ``phi`` each partition determines a permutation whose cycles are the
parts, each part z_1 < ... < z_k being the product (z_1 z_2)(z_2 z_3)...
of transpositions composed left to right. Those permutations are exactly
the canonical factors of the band-generator braid monoid seen through the
projection to the symmetric group.
"""
from __future__ import annotations

import dataclasses
import functools
import math
import re
from typing import Iterable, Iterator, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import IncompatibleError, MalformedError, ResourceLimitError
from .perm import Permutation

MAX_ENUMERATE_N = 12

Parts = tuple[tuple[int, ...], ...]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _labels(n: int, parts: Iterable[Iterable[int]], complete: bool) -> list[int]:
    """Block label of every point; raises on overlaps, gaps or bad indices."""
    label = [-1] * n
    for b, part in enumerate(parts):
        part = list(part)
        if not part:
            raise MalformedError("empty part")
        for i in part:
            if not isinstance(i, int) or not 0 <= i < n:
                raise MalformedError(f"index {i!r} out of range for n={n}")
            if label[i] != -1:
                raise MalformedError(f"index {i} appears in two parts")
            label[i] = b
    if -1 in label:
        if not complete:
            raise MalformedError(f"index {label.index(-1)} is in no part")
        nxt = max(label) + 1
        for i in range(n):
            if label[i] == -1:
                label[i] = nxt
                nxt += 1
    return label


def _crossing_pair(label: Sequence[int]) -> tuple[int, int] | None:
    """Return two crossing block labels, or None if the labelling is non-crossing."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, b in enumerate(label):
        first.setdefault(b, i)
        last[b] = i
    stack: list[int] = []
    for i, b in enumerate(label):
        if first[b] == i:
            if last[b] != i:
                stack.append(b)
            continue
        if stack[-1] != b:
            return b, stack[-1]
        if last[b] == i:
            stack.pop()
    return None


def _canonical(n: int, label: Sequence[int]) -> Parts:
    blocks: dict[int, list[int]] = {}
    for i, b in enumerate(label):
        blocks.setdefault(b, []).append(i)
    return tuple(sorted(tuple(v) for v in blocks.values()))


@dataclasses.dataclass(frozen=True)
class NcPartition:
    """
    A non-crossing partition of {0, ..., n-1}.

    ``parts`` may omit singletons on construction; they are filled in, and
    the stored value always covers every point.
    """

    n: int
    parts: Parts

    def __post_init__(self):
        if self.n < 1:
            raise MalformedError(f"n must be positive, got {self.n}")
        label = _labels(self.n, self.parts, complete=True)
        if _crossing_pair(label) is not None:
            raise MalformedError(f"crossing partition: {self.parts}")
        object.__setattr__(self, "parts", _canonical(self.n, label))

    @classmethod
    def singletons(cls, n: int) -> NcPartition:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> NcPartition:
        return cls(n, (tuple(range(n)),))

    @classmethod
    def atom(cls, n: int, i: int, j: int) -> NcPartition:
        if i == j:
            raise MalformedError("an atom needs two distinct points")
        return cls(n, ((i, j),))

    @classmethod
    def parse(cls, text: str, n: int) -> NcPartition:
        """Parse ``{0 1 3}{2}{4 5}``; singletons may be omitted."""
        body = text.strip()
        if not re.fullmatch(r"(\{\s*\d+(\s+\d+)*\s*\}\s*)+", body):
            raise MalformedError(f"cannot parse partition {text!r}")
        parts = [tuple(int(t) for t in m.split()) for m in re.findall(r"\{([^}]*)\}", body)]
        return cls(n, tuple(parts))

    def nontrivial_parts(self) -> Parts:
        return tuple(p for p in self.parts if len(p) > 1)

    def block_of(self, i: int) -> tuple[int, ...]:
        for p in self.parts:
            if i in p:
                return p
        raise IndexError(i)

    def __str__(self) -> str:
        return "".join("{" + " ".join(map(str, p)) + "}" for p in self.parts)

    def compact_str(self) -> str:
        """Like ``str`` but with singletons dropped (unless all parts are singletons)."""
        nt = self.nontrivial_parts()
        if not nt:
            return str(self)
        return "".join("{" + " ".join(map(str, p)) + "}" for p in nt)

    def to_lists(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def _same_n(a: NcPartition, b: NcPartition) -> None:
    if a.n != b.n:
        raise IncompatibleError(f"size mismatch: {a.n} vs {b.n}")


def is_noncrossing(parts: Iterable[Iterable[int]], n: int) -> bool:
    """
    Whether a set partition of {0, ..., n-1} is non-crossing.

    Raises MalformedError if ``parts`` overlap or miss a point.
    """
    return _crossing_pair(_labels(n, parts, complete=False)) is None


def refines(lam: NcPartition, mu: NcPartition) -> bool:
    """True iff every part of ``lam`` lies inside a part of ``mu``."""
    _same_n(lam, mu)
    label = _labels(mu.n, mu.parts, complete=False)
    return all(len({label[i] for i in p}) == 1 for p in lam.parts)


def meet(lam: NcPartition, mu: NcPartition) -> NcPartition:
    """Common refinement; a refinement of a non-crossing partition is non-crossing."""
    _same_n(lam, mu)
    lm = _labels(lam.n, lam.parts, complete=False)
    mm = _labels(mu.n, mu.parts, complete=False)
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(lam.n):
        groups.setdefault((lm[i], mm[i]), []).append(i)
    return NcPartition(lam.n, tuple(tuple(g) for g in groups.values()))


def join(lam: NcPartition, mu: NcPartition) -> NcPartition:
    """Finest non-crossing partition coarser than both arguments."""
    _same_n(lam, mu)
    n = lam.n
    ds = DisjointSet(range(n))
    for p in lam.parts + mu.parts:
        for i in p[1:]:
            ds.merge(p[0], i)
    while True:
        label = [ds[i] for i in range(n)]
        pair = _crossing_pair(label)
        if pair is None:
            break
        ds.merge(*pair)
    return NcPartition(n, tuple(tuple(s) for s in ds.subsets()))


def nc_length(lam: NcPartition) -> int:
    return lam.n - len(lam.parts)


def phi(lam: NcPartition) -> Permutation:
    """Image in the symmetric group: each part z_1 < ... < z_k sends z_j to z_{j-1}."""
    m = list(range(lam.n))
    for p in lam.parts:
        for j, z in enumerate(p):
            m[z] = p[j - 1]
    return Permutation(tuple(m))


def from_perm(p: Permutation) -> NcPartition | None:
    """Inverse of ``phi`` on its image; None when ``p`` is not a canonical-factor image."""
    label = [0] * p.n
    for b, cyc in enumerate(p.cycles()):
        for i in cyc:
            label[i] = b
    if _crossing_pair(label) is not None:
        return None
    lam = NcPartition(p.n, _canonical(p.n, label))
    return lam if phi(lam) == p else None


def rotate(lam: NcPartition, k: int) -> NcPartition:
    """Replace every index i by (i + k) mod n."""
    n = lam.n
    return NcPartition(n, tuple(tuple((i + k) % n for i in p) for p in lam.parts))


def cut(nu: Iterable[int], cut_points: Iterable[int]) -> list[tuple[int, ...]]:
    """
    Cut the cyclically ordered set ``nu`` at ``cut_points``.

    Each part is a cut point followed by the non-cut points up to the next
    cut point, in clockwise (increasing, wrapping) order. Parts come back
    sorted, least element first.
    """
    nu = sorted(set(nu))
    cuts = set(cut_points)
    if not cuts:
        raise MalformedError("cut needs at least one cut point")
    if not cuts <= set(nu):
        raise MalformedError(f"cut points {sorted(cuts - set(nu))} not in the set")
    start = next(k for k, z in enumerate(nu) if z in cuts)
    walk = nu[start:] + nu[:start]
    out: list[list[int]] = []
    for z in walk:
        if z in cuts:
            out.append([z])
        else:
            out[-1].append(z)
    return sorted(tuple(sorted(p)) for p in out)


def _complement_in(block: tuple[int, ...], inner: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    inner = [q for q in inner if len(q) > 1]
    if not inner:
        return [block]
    head, rest = inner[0], inner[1:]
    out = []
    for piece in cut(block, head):
        s = set(piece)
        out += _complement_in(piece, [q for q in rest if s.issuperset(q)])
    return out


def rel_complement(lam: NcPartition, mu: NcPartition) -> NcPartition:
    """
    The partition ``c`` with ``phi(lam) * phi(c) == phi(mu)`` and lengths adding.

    Requires ``refines(lam, mu)``. Each part of ``mu`` is cut at one part of
    ``lam`` it contains, and the pieces are processed recursively.
    """
    if not refines(lam, mu):
        raise MalformedError(f"{lam} does not refine {mu}")
    parts: list[tuple[int, ...]] = []
    for block in mu.nontrivial_parts():
        s = set(block)
        parts += _complement_in(block, [q for q in lam.parts if s.issuperset(q)])
    return NcPartition(mu.n, tuple(parts))


def kreweras(lam: NcPartition) -> NcPartition:
    return rel_complement(lam, NcPartition.full(lam.n))


@functools.lru_cache(maxsize=None)
def _nc_range(lo: int, hi: int) -> tuple[Parts, ...]:
    """All non-crossing partitions of the interval [lo, hi), as part tuples."""
    if lo >= hi:
        return ((),)
    out: list[Parts] = []

    def extend(block: tuple[int, ...], start: int) -> Iterator[Parts]:
        # block closes here; [start, hi) is free
        for tail in _nc_range(start, hi):
            yield (block,) + tail
        # or the next block element is j, and (start, j) is free
        for j in range(start, hi):
            for inner in _nc_range(start, j):
                for rest in extend(block + (j,), j + 1):
                    yield inner + rest

    out.extend(extend((lo,), lo + 1))
    return tuple(out)


def enumerate_nc(n: int, max_n: int = MAX_ENUMERATE_N) -> list[NcPartition]:
    """Every non-crossing partition of n points, each once (Catalan(n) of them)."""
    if n < 1:
        raise MalformedError(f"n must be positive, got {n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the enumeration bound {max_n}")
    return [NcPartition(n, parts) for parts in _nc_range(0, n)]
