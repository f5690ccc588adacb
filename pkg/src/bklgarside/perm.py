"""
Permutations of {0, ..., n-1} in one-line notation.

Composition is left to right: ``compose(p, q)`` applies ``p`` first and then
``q``, so that a word in transpositions read left to right maps to the
product of its letters in the same order.
"""
from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

from .errors import IncompatibleError, MalformedError


@dataclasses.dataclass(frozen=True)
class Permutation:
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.map)
        if sorted(m) != list(range(len(m))):
            raise MalformedError(f"not a permutation: {list(m)}")
        object.__setattr__(self, "map", m)

    @property
    def n(self) -> int:
        return len(self.map)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        m = list(range(n))
        m[i], m[j] = m[j], m[i]
        return cls(tuple(m))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Each cycle ``(a b c)`` sends a to b, b to c and c to a."""
        m = list(range(n))
        seen = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if not 0 <= a < n or a in seen:
                    raise MalformedError(f"bad cycle entry {a} for degree {n}")
                seen.add(a)
                m[a] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(m))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Accept one-line ``[2 0 1]`` or cycle notation ``(0 1)(2 3)``."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise MalformedError(f"unterminated one-line form: {text!r}")
            entries = [int(t) for t in text[1:-1].replace(",", " ").split()]
            p = cls(tuple(entries))
            if n is not None and p.n != n:
                raise IncompatibleError(f"expected degree {n}, got {p.n}")
            return p
        if n is None:
            raise MalformedError("cycle notation needs an explicit degree")
        if text in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(\s*[ ,]\s*\d+)*\s*\)\s*)+", text):
            raise MalformedError(f"cannot parse permutation {text!r}")
        cycles = [
            [int(t) for t in body.replace(",", " ").split()]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(n, cycles)

    def __call__(self, i: int) -> int:
        return self.map[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.map):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles including fixed points, each starting at its least element."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.map[i]
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.map))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.map)) + "]"

    def cycle_str(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.n != q.n:
        raise IncompatibleError(f"degree mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(q.map[i] for i in p.map))


def orbit_partition(p: Permutation) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(c) for c in p.cycles())


def reflection_length(p: Permutation) -> int:
    """Minimal number of transpositions whose product is ``p``."""
    return p.n - len(p.cycles())


def coxeter_length(p: Permutation) -> int:
    """Number of inversions, i.e. length in the adjacent transpositions."""
    m = p.map
    return sum(1 for i in range(len(m)) for j in range(i + 1, len(m)) if m[i] > m[j])
