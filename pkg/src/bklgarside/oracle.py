"""
Brute-force ground truth for the band-generator monoid.

Positive words over the atoms are compared by breadth-first search through
the defining relations. All relations preserve word length, so the search
space at a fixed length is finite and the answer is exact.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from typing import Iterable, Sequence

from . import ncp
from .bkl import BklInstance, canonical_word
from .errors import ResourceLimitError
from .ncp import NcPartition

Atom = tuple[int, int]
Word = tuple[Atom, ...]

DEFAULT_LIMIT = 200_000


@dataclasses.dataclass(frozen=True)
class RelationSet:
    n: int
    rules: tuple[tuple[Word, Word], ...]

    @classmethod
    def bkl(cls, n: int) -> RelationSet:
        """Commutation of non-crossing disjoint atoms, and the three-term cyclic rule."""
        atoms = [(i, j) for i in range(n) for j in range(i + 1, n)]
        rules = []
        for s, t in itertools.combinations(atoms, 2):
            if set(s) & set(t):
                continue
            if ncp.is_noncrossing([s, t] + [(k,) for k in range(n) if k not in s + t], n):
                rules.append(((s, t), (t, s)))
        for i, j, k in itertools.combinations(range(n), 3):
            words = [((i, j), (j, k)), ((j, k), (i, k)), ((i, k), (i, j))]
            rules += [(a, b) for a, b in itertools.combinations(words, 2)]
        return cls(n, tuple(rules))

    @property
    def moves(self) -> dict[Word, list[Word]]:
        table: dict[Word, list[Word]] = {}
        for a, b in self.rules:
            table.setdefault(a, []).append(b)
            table.setdefault(b, []).append(a)
        return table


def _neighbours(word: Word, moves: dict[Word, list[Word]]) -> Iterable[Word]:
    for i in range(len(word) - 1):
        for rep in moves.get(word[i:i + 2], ()):
            yield word[:i] + rep + word[i + 2:]


def equivalence_class(word: Sequence[Atom], rels: RelationSet, limit: int = DEFAULT_LIMIT) -> frozenset[Word]:
    moves = rels.moves
    start = tuple(word)
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for v in _neighbours(w, moves):
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise ResourceLimitError(f"equivalence class exceeds {limit} words")
                todo.append(v)
    return frozenset(seen)


def equivalent_words(w1: Sequence[Atom], w2: Sequence[Atom], rels: RelationSet | int,
                     limit: int = DEFAULT_LIMIT) -> bool:
    """Whether two positive atom words are equal in the monoid."""
    if isinstance(rels, int):
        rels = RelationSet.bkl(rels)
    w1, w2 = tuple(map(tuple, w1)), tuple(map(tuple, w2))
    if len(w1) != len(w2):
        return False
    if w1 == w2:
        return True
    moves = rels.moves
    seen = {w1}
    todo = deque([w1])
    while todo:
        w = todo.popleft()
        for v in _neighbours(w, moves):
            if v == w2:
                return True
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise ResourceLimitError(f"search exceeded {limit} words")
                todo.append(v)
    return False


def enumerate_simples_bf(n: int, limit: int = DEFAULT_LIMIT) -> list[frozenset[Word]]:
    """Classes of left divisors of the Delta word a(0,1) a(1,2) ... a(n-2,n-1)."""
    if n > 5:
        raise ResourceLimitError(f"brute-force enumeration is capped at n=5, got {n}")
    rels = RelationSet.bkl(n)
    top = equivalence_class(canonical_word(NcPartition.full(n)), rels, limit)
    prefixes = {w[:k] for w in top for k in range(len(w) + 1)}
    classes: list[frozenset[Word]] = []
    covered: set[Word] = set()
    for p in sorted(prefixes, key=lambda w: (len(w), w)):
        if p in covered:
            continue
        cls = equivalence_class(p, rels, limit)
        covered |= cls
        classes.append(cls)
    return classes


def product_mismatches(n: int, limit: int = DEFAULT_LIMIT) -> list[str]:
    """
    Compare the engine's partial product with presentation rewriting on all
    pairs of simples: lam * mu == nu in the engine exactly when the words
    agree under the relations.
    """
    inst = BklInstance(n)
    rels = RelationSet.bkl(n)
    simples = ncp.enumerate_nc(n)
    by_len: dict[int, list[NcPartition]] = {}
    for s in simples:
        by_len.setdefault(ncp.nc_length(s), []).append(s)
    out = []
    for lam, mu in itertools.product(simples, repeat=2):
        engine = inst.product(inst.simple(lam), inst.simple(mu))
        engine = None if engine is None else inst.obj(engine)
        word = canonical_word(lam) + canonical_word(mu)
        cls = equivalence_class(word, rels, limit)
        hits = [nu for nu in by_len.get(len(word), []) if tuple(canonical_word(nu)) in cls]
        oracle = hits[0] if hits else None
        if len(hits) > 1 or engine != oracle:
            out.append(f"{lam} * {mu}: engine {engine}, oracle {hits}")
    return out


def word_mismatches(n: int, max_len: int, limit: int = DEFAULT_LIMIT) -> tuple[int, list[str]]:
    """
    Compare normal-form equality with presentation equivalence on every
    positive atom word of length at most ``max_len``. Returns the number of
    words checked and the mismatches.
    """
    inst = BklInstance(n)
    rels = RelationSet.bkl(n)
    atoms = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    count = 0
    for length in range(max_len + 1):
        words = list(itertools.product(atoms, repeat=length))
        count += len(words)
        nf = {w: inst.normal_form(inst.atom(*a) for a in w) for w in words}
        seen: set[Word] = set()
        oracle_keys: dict = {}
        for w in words:
            if w in seen:
                continue
            cls = equivalence_class(w, rels, limit)
            seen |= cls
            keys = {nf[v] for v in cls}
            if len(keys) != 1:
                out.append(f"oracle class of {w} splits into {len(keys)} normal forms")
            for k in keys:
                if k in oracle_keys:
                    out.append(f"{w} and {oracle_keys[k]} share a normal form but are not equivalent")
                oracle_keys[k] = w
    return count, out
