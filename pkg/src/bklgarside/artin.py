"""
The classical Artin braid monoid with permutations as simples.

A permutation is simple-multiplied by another when their inversion counts
add; Delta is the order-reversing permutation.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from .errors import IncompatibleError
from .garside import Fraction, PreGarside
from .perm import Permutation, compose, coxeter_length


def try_product_artin(p: Permutation, q: Permutation) -> Permutation | None:
    if p.n != q.n:
        raise IncompatibleError(f"degree mismatch: {p.n} vs {q.n}")
    r = compose(p, q)
    return r if coxeter_length(r) == coxeter_length(p) + coxeter_length(q) else None


def _left_quotient(p: Permutation, q: Permutation) -> Permutation | None:
    c = compose(p.inverse(), q)
    return c if coxeter_length(p) + coxeter_length(c) == coxeter_length(q) else None


def _right_quotient(p: Permutation, q: Permutation) -> Permutation | None:
    c = compose(q, p.inverse())
    return c if coxeter_length(c) + coxeter_length(p) == coxeter_length(q) else None


class ArtinInstance(PreGarside):
    def __init__(self, n: int):
        self.n = n
        w0 = Permutation(tuple(range(n - 1, -1, -1)))
        super().__init__(
            unit=Permutation.identity(n),
            atoms=[Permutation.transposition(n, k - 1, k) for k in range(1, n)],
            product=try_product_artin,
            length=coxeter_length,
            simples=lambda: (Permutation(m) for m in itertools.permutations(range(n))),
            delta=w0,
            left_quotient=_left_quotient,
            right_quotient=_right_quotient,
            bar=lambda p: compose(compose(w0, p), w0),
            name=f"Artin(n={n})",
        )

    def generator(self, k: int) -> int:
        """Id of s_k, the swap of points k-1 and k."""
        return self.intern(Permutation.transposition(self.n, k - 1, k))

    def word_fraction(self, word: Iterable[tuple[int, int]]) -> Fraction:
        return self.fraction_from_word([(self.generator(k), e) for k, e in word])
