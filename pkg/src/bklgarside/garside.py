"""
A generic engine for monoids presented by a pre-Garside structure.

An instance is a finite set of simple elements with a partial product, a
unit, a set of atoms and a length function. The engine interns every simple
as a small integer and works on those integers; callers may pass either
integers or the underlying simple objects.

Elements of the monoid are `NormalForm` values (left-greedy factorisations
into simples); elements of the group of fractions are `Fraction` values
x^-1 y with x and y having no common left divisor.

Lattice operations on simples (quotients, gcd, lcm) default to table scans
over all simples. Instances with a combinatorial model pass faster
callables for them.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from typing import Any, Callable, Hashable, Iterable, Sequence

from .errors import IncompatibleError, MalformedError, UnsupportedInstanceError

Simple = Hashable
Quotient = Callable[[Any, Any], Any]


class PreGarside:
    """
    A pre-Garside structure together with the algorithms it supports.

    Parameters
    ----------
    unit, atoms, product, length:
        The structure itself. ``product(a, b)`` returns the simple ``ab`` or
        None when the product is undefined in the set of simples.
    simples:
        Zero-argument callable enumerating every simple. Only needed by the
        scanning fallbacks and exhaustive checks.
    delta:
        A common right multiple of all simples, if there is one.
    left_quotient, right_quotient, meet, join:
        Optional fast paths on raw simples. ``left_quotient(a, b)`` is the c
        with ``ac = b`` (or None), ``right_quotient(a, b)`` the c with
        ``ca = b``, ``meet`` the left gcd and ``join`` the right lcm.
    bar:
        Optional fast path for the simple with ``a Delta = Delta bar(a)``.
    """

    def __init__(
        self,
        unit: Simple,
        atoms: Iterable[Simple],
        product: Callable[[Any, Any], Any],
        length: Callable[[Any], int],
        simples: Callable[[], Iterable[Simple]] | None = None,
        delta: Simple | None = None,
        *,
        left_quotient: Quotient | None = None,
        right_quotient: Quotient | None = None,
        meet: Quotient | None = None,
        join: Quotient | None = None,
        bar: Callable[[Any], Any] | None = None,
        name: str = "",
    ):
        self.name = name
        self._objs: list[Simple] = []
        self._ids: dict[Simple, int] = {}
        self._product_fn = product
        self._length_fn = length
        self._simples_fn = simples
        self._fast = dict(
            left_quotient=left_quotient,
            right_quotient=right_quotient,
            meet=meet,
            join=join,
            bar=bar,
        )
        self.unit = self.intern(unit)
        self.atoms = tuple(self.intern(s) for s in atoms)
        self.delta = None if delta is None else self.intern(delta)

        self._prod_cache: dict[tuple[int, int], int | None] = {}
        self._len_cache: dict[int, int] = {}
        self._cache: dict[tuple, Any] = {}
        self._table: dict[str, Any] | None = None

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    # -- interning -----------------------------------------------------------

    def intern(self, obj: Simple) -> int:
        i = self._ids.get(obj)
        if i is None:
            i = len(self._objs)
            self._objs.append(obj)
            self._ids[obj] = i
        return i

    def obj(self, i: int) -> Simple:
        return self._objs[i]

    def as_id(self, x: int | Simple) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if not 0 <= x < len(self._objs):
                raise MalformedError(f"unknown simple id {x}")
            return x
        return self.intern(x)

    def simple_ids(self) -> list[int]:
        """Ids of all simples (enumerates and interns them on first call)."""
        if "all" not in self._cache:
            if self._simples_fn is None:
                raise UnsupportedInstanceError("instance cannot enumerate its simples")
            self._cache["all"] = sorted({self.intern(s) for s in self._simples_fn()})
        return self._cache["all"]

    # -- the partial product ---------------------------------------------------

    def product(self, a: int, b: int) -> int | None:
        key = (a, b)
        if key not in self._prod_cache:
            r = self._product_fn(self._objs[a], self._objs[b])
            self._prod_cache[key] = None if r is None else self.intern(r)
        return self._prod_cache[key]

    def length(self, a: int) -> int:
        if a not in self._len_cache:
            self._len_cache[a] = self._length_fn(self._objs[a])
        return self._len_cache[a]

    def _full_table(self) -> dict[str, Any]:
        """Every defined product, indexed for the divisor and multiple scans."""
        if self._table is None:
            left_div: dict[int, dict[int, int]] = {}
            right_div: dict[int, dict[int, int]] = {}
            for a in self.simple_ids():
                for c in self.simple_ids():
                    b = self.product(a, c)
                    if b is not None:
                        left_div.setdefault(b, {})[a] = c
                        right_div.setdefault(b, {})[c] = a
            self._table = dict(left_div=left_div, right_div=right_div)
        return self._table

    def _memo(self, key: tuple, fn: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def _fast_call(self, name: str, *args: int) -> int | None:
        r = self._fast[name](*(self._objs[a] for a in args))
        return None if r is None else self.intern(r)

    def left_quotient(self, a: int, b: int) -> int | None:
        """The simple c with ``a c = b``, or None if a does not left-divide b."""
        if self._fast["left_quotient"] is not None:
            return self._memo(("lq", a, b), lambda: self._fast_call("left_quotient", a, b))
        return self._full_table()["left_div"].get(b, {}).get(a)

    def right_quotient(self, a: int, b: int) -> int | None:
        """The simple c with ``c a = b``, or None."""
        if self._fast["right_quotient"] is not None:
            return self._memo(("rq", a, b), lambda: self._fast_call("right_quotient", a, b))
        return self._full_table()["right_div"].get(b, {}).get(a)

    def left_divides(self, a: int, b: int) -> bool:
        return self.left_quotient(a, b) is not None

    def meet(self, a: int, b: int) -> int:
        """Left gcd of two simples."""
        if self._fast["meet"] is not None:
            return self._memo(("meet", a, b), lambda: self._fast_call("meet", a, b))

        def scan():
            ld = self._full_table()["left_div"]
            common = ld[a].keys() & ld[b].keys()
            return max(common, key=self.length)

        return self._memo(("meet", a, b), scan)

    def join(self, a: int, b: int) -> int | None:
        """Right lcm of two simples within the simples, or None."""
        if self._fast["join"] is not None:
            return self._memo(("join", a, b), lambda: self._fast_call("join", a, b))

        def scan():
            ld = self._full_table()["left_div"]
            common = [m for m, divs in ld.items() if a in divs and b in divs]
            return min(common, key=self.length, default=None)

        return self._memo(("join", a, b), scan)

    def left_join(self, a: int, b: int) -> int | None:
        """Left lcm of two simples within the simples, or None."""

        def compute():
            if self.delta is not None:
                g = self.meet(self.left_complement(a), self.left_complement(b))
                return self.complement(g)
            rd = self._full_table()["right_div"]
            common = [m for m, divs in rd.items() if a in divs and b in divs]
            return min(common, key=self.length, default=None)

        return self._memo(("ljoin", a, b), compute)

    def _need_delta(self) -> int:
        if self.delta is None:
            raise UnsupportedInstanceError(f"{self!r} has no Garside element")
        return self.delta

    def complement(self, a: int) -> int:
        """Right complement: the simple a* with ``a a* = Delta``."""
        d = self._need_delta()
        c = self.left_quotient(a, d)
        if c is None:
            raise MalformedError(f"{self._objs[a]} does not divide Delta")
        return c

    def left_complement(self, a: int) -> int:
        """Left complement: the simple *a with ``*a a = Delta``."""
        d = self._need_delta()
        c = self.right_quotient(a, d)
        if c is None:
            raise MalformedError(f"{self._objs[a]} does not divide Delta")
        return c

    def bar(self, a: int) -> int:
        """The simple with ``a Delta = Delta bar(a)``."""
        self._need_delta()
        if self._fast["bar"] is not None:
            return self._memo(("bar", a), lambda: self._fast_call("bar", a))
        return self._memo(("bar", a), lambda: self.complement(self.complement(a)))

    def bar_inv(self, a: int) -> int:
        self._need_delta()
        return self._memo(("barinv", a), lambda: self.left_complement(self.left_complement(a)))

    def bar_power(self, a: int, k: int) -> int:
        step = self.bar if k >= 0 else self.bar_inv
        for _ in range(abs(k)):
            a = step(a)
        return a

    # -- greedy normal forms -----------------------------------------------------

    def alpha2(self, a: int, b: int) -> tuple[int, int]:
        """
        Split ``ab`` as head * tail with head = a c, c the largest left divisor
        of b such that a c is simple, and b = c * tail.
        """
        return self._memo(("alpha2", a, b), lambda: self._alpha2(a, b))

    def _alpha2(self, a: int, b: int) -> tuple[int, int]:
        if self.delta is not None:
            c = self.meet(self.complement(a), b)
        else:
            # saturate: extend c by atoms while c s divides b and a c s is simple
            c = self.unit
            grown = True
            while grown:
                grown = False
                for s in self.atoms:
                    cs = self.product(c, s)
                    if cs is not None and self.left_divides(cs, b) and self.product(a, cs) is not None:
                        c, grown = cs, True
                        break
        head = self.product(a, c)
        tail = self.left_quotient(c, b)
        return head, tail

    def is_normal(self, factors: Sequence[int]) -> bool:
        if any(f == self.unit for f in factors):
            return False
        return all(self.alpha2(x, y)[0] == x for x, y in zip(factors, factors[1:]))

    def _push(self, factors: list[int], s: int) -> None:
        """Right-multiply a greedy factor list in place by one simple."""
        if s == self.unit:
            return
        factors.append(s)
        for i in range(len(factors) - 2, -1, -1):
            head, tail = self.alpha2(factors[i], factors[i + 1])
            if head == factors[i]:
                break
            factors[i], factors[i + 1] = head, tail
        while factors and factors[-1] == self.unit:
            factors.pop()

    def _nf(self, word: Iterable[int]) -> tuple[int, ...]:
        out: list[int] = []
        for s in word:
            self._push(out, s)
        if self.unit in out:
            # a unit can only stop short in the middle if the instance breaks the axioms
            raise MalformedError("normal form left a unit factor; instance is not pre-Garside")
        return tuple(out)

    def normal_form(self, word: Iterable[int | Simple]) -> NormalForm:
        """Left-greedy normal form of a product of simples."""
        return NormalForm(self, self._nf(self.as_id(s) for s in word))

    def identity(self) -> NormalForm:
        return NormalForm(self, ())

    def element(self, s: int | Simple) -> NormalForm:
        return self.normal_form([s])

    def _check(self, *xs: NormalForm | Fraction) -> None:
        for x in xs:
            if x.instance is not self:
                raise IncompatibleError(f"{x!r} belongs to a different instance")

    def multiply(self, u: NormalForm, v: NormalForm) -> NormalForm:
        self._check(u, v)
        out = list(u.factors)
        for s in v.factors:
            self._push(out, s)
        return NormalForm(self, tuple(out))

    def delta_power(self, k: int) -> NormalForm:
        return NormalForm(self, (self._need_delta(),) * k)

    # -- divisibility, gcd and lcm in the monoid ----------------------------------

    def _div_simple(self, c: int, u: Sequence[int]) -> tuple[int, ...] | None:
        """c^-1 u for a simple c, or None if c does not left-divide u."""
        if c == self.unit:
            return tuple(u)
        if not u:
            return None
        q = self.left_quotient(c, u[0])
        if q is None:
            return None
        return self._nf((q, *u[1:]))

    def left_divide(self, g: NormalForm, u: NormalForm) -> NormalForm | None:
        """The element x with g x = u, or None if g does not left-divide u."""
        self._check(g, u)
        rest: tuple[int, ...] | None = u.factors
        for c in g.factors:
            rest = self._div_simple(c, rest)
            if rest is None:
                return None
        return NormalForm(self, rest)

    def left_gcd(self, u: NormalForm, v: NormalForm) -> NormalForm:
        self._check(u, v)
        g: list[int] = []
        a, b = u.factors, v.factors
        while a and b:
            c = self.meet(a[0], b[0])
            if c == self.unit:
                break
            g.append(c)
            a, b = self._div_simple(c, a), self._div_simple(c, b)
        return self.normal_form(g)

    def _join_or_fail(self, a: int, b: int, left: bool) -> int:
        m = self.left_join(a, b) if left else self.join(a, b)
        if m is None:
            raise UnsupportedInstanceError(
                f"no common multiple of {self._objs[a]} and {self._objs[b]} among the simples"
            )
        return m

    def _right_reverse(self, us: Sequence[int], vs: Sequence[int]) -> tuple[list[int], list[int]]:
        """Simple words X, Y with u X = v Y = right lcm(u, v)."""
        x = list(vs)
        ys: list[int] = []
        for a in us:
            cur, xs = a, []
            for b in x:
                m = self._join_or_fail(cur, b, left=False)
                xs.append(self.left_quotient(cur, m))
                cur = self.left_quotient(b, m)
            x = xs
            ys.append(cur)
        return x, ys

    def _left_reverse(self, us: Sequence[int], vs: Sequence[int]) -> tuple[list[int], list[int]]:
        """Simple words A, B with A u = B v = left lcm(u, v)."""
        x = list(vs)
        bs: list[int] = []
        for a in reversed(us):
            cur, ps = a, []
            for b in reversed(x):
                m = self._join_or_fail(cur, b, left=True)
                ps.append(self.right_quotient(cur, m))
                cur = self.right_quotient(b, m)
            x = ps[::-1]
            bs.append(cur)
        return x, bs[::-1]

    def right_lcm(self, elems: Sequence[NormalForm]) -> NormalForm:
        """Least common right multiple of a non-empty list of elements."""
        if not elems:
            raise MalformedError("right_lcm needs at least one element")
        self._check(*elems)
        acc = elems[0]
        for v in elems[1:]:
            x, _ = self._right_reverse(acc.factors, v.factors)
            acc = self.normal_form((*acc.factors, *x))
        return acc

    def left_lcm(self, elems: Sequence[NormalForm]) -> NormalForm:
        if not elems:
            raise MalformedError("left_lcm needs at least one element")
        self._check(*elems)
        acc = elems[0]
        for v in elems[1:]:
            a, _ = self._left_reverse(acc.factors, v.factors)
            acc = self.normal_form((*a, *acc.factors))
        return acc

    # -- the Delta automorphism and fixed submonoids --------------------------------

    def bar_nf(self, u: NormalForm, k: int = 1) -> NormalForm:
        """Delta^-k u Delta^k; the automorphism preserves greedy normal forms."""
        self._check(u)
        return NormalForm(self, tuple(self.bar_power(f, k) for f in u.factors))

    def fixed_atoms(self, generators: Callable[[Any], Any] | Sequence[Callable[[Any], Any]]) -> list[int]:
        """
        Atoms of the submonoid fixed by the group generated by ``generators``.

        Each generator is an automorphism given by its action on raw simples;
        it must permute the atoms. The result is the set of right lcms of the
        atom orbits that are not products of the other such lcms, sorted by
        length and then id.
        """
        gens = [generators] if callable(generators) else list(generators)
        atom_set = set(self.atoms)
        act = {}
        for g_idx, g in enumerate(gens):
            for s in self.atoms:
                t = self.intern(g(self._objs[s]))
                if t not in atom_set:
                    raise MalformedError(f"generator {g_idx} sends atom {self._objs[s]} outside the atoms")
                act[g_idx, s] = t
        orbits, seen = [], set()
        for s in self.atoms:
            if s in seen:
                continue
            orbit, todo = {s}, [s]
            while todo:
                x = todo.pop()
                for g_idx in range(len(gens)):
                    y = act[g_idx, x]
                    if y not in orbit:
                        orbit.add(y)
                        todo.append(y)
            seen |= orbit
            orbits.append(sorted(orbit))
        lcms = []
        for orbit in orbits:
            m: int | None = orbit[0]
            for s in orbit[1:]:
                m = self.join(m, s)
                if m is None:
                    break
            if m is not None and m not in lcms:
                lcms.append(m)
        keep = [e for e in lcms if not self._generated_by(e, [f for f in lcms if f != e])]
        return sorted(keep, key=lambda i: (self.length(i), i))

    def _generated_by(self, target: int, gens: Sequence[int]) -> bool:
        """Whether the simple ``target`` is a product of elements of ``gens``."""
        # every prefix of a factorisation of a simple is a simple dividing it
        frontier, seen = deque([self.unit]), {self.unit}
        while frontier:
            p = frontier.popleft()
            for g in gens:
                q = self.product(p, g)
                if q is None or q in seen or not self.left_divides(q, target):
                    continue
                if q == target:
                    return True
                seen.add(q)
                frontier.append(q)
        return False

    # -- group of fractions ------------------------------------------------------------

    def fraction_reduce(self, x: NormalForm, y: NormalForm) -> Fraction:
        """The reduced pair for x^-1 y: both sides divided by their left gcd."""
        self._check(x, y)
        self._need_delta()
        g = self.left_gcd(x, y)
        return Fraction(self.left_divide(g, x), self.left_divide(g, y))

    def fraction(self, x: NormalForm | None = None, y: NormalForm | None = None) -> Fraction:
        return self.fraction_reduce(x or self.identity(), y or self.identity())

    def fraction_multiply(self, f: Fraction, g: Fraction) -> Fraction:
        self._check(f, g)
        a, b = self._left_reverse(f.den.factors, g.num_inv.factors)
        left = self.normal_form((*a, *f.num_inv.factors))
        right = self.normal_form((*b, *g.den.factors))
        return self.fraction_reduce(left, right)

    def fraction_invert(self, f: Fraction) -> Fraction:
        self._check(f)
        return Fraction(f.den, f.num_inv)

    def fraction_equal(self, f: Fraction, g: Fraction) -> bool:
        self._check(f, g)
        f = self.fraction_reduce(f.num_inv, f.den)
        g = self.fraction_reduce(g.num_inv, g.den)
        return f == g

    def fraction_from_word(self, word: Iterable[tuple[int | Simple, int]]) -> Fraction:
        """Product of simples raised to integer exponents."""
        acc = self.fraction()
        for s, e in word:
            u = self.element(s)
            step = self.fraction(None, u) if e >= 0 else self.fraction(u, None)
            for _ in range(abs(e)):
                acc = self.fraction_multiply(acc, step)
        return acc

    def delta_form(self, f: Fraction) -> tuple[int, NormalForm]:
        """
        Write x^-1 y as Delta^p z with z positive and not left-divisible by Delta.
        """
        self._check(f)
        d = self._need_delta()
        r = len(f.num_inv)
        # Delta^r x^-1 = prod over i = r..1 of bar^-(i-1)(*c_i)
        w = [
            self.bar_power(self.left_complement(c), -(i - 1))
            for i, c in reversed(list(enumerate(f.num_inv.factors, start=1)))
        ]
        z = self._nf((*w, *f.den.factors))
        k = 0
        while k < len(z) and z[k] == d:
            k += 1
        return k - r, NormalForm(self, z[k:])

    def fraction_from_delta_form(self, p: int, z: NormalForm) -> Fraction:
        if p >= 0:
            return self.fraction(None, self.multiply(self.delta_power(p), z))
        return self.fraction(self.delta_power(-p), z)


@dataclasses.dataclass(frozen=True, eq=False)
class NormalForm:
    """A monoid element as its left-greedy factor sequence (simple ids)."""

    instance: PreGarside
    factors: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.instance is other.instance and self.factors == other.factors

    def __hash__(self):
        return hash((id(self.instance), self.factors))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other: NormalForm) -> NormalForm:
        return self.instance.multiply(self, other)

    def simples(self) -> list[Simple]:
        return [self.instance.obj(f) for f in self.factors]

    def length(self) -> int:
        return sum(self.instance.length(f) for f in self.factors)

    def is_identity(self) -> bool:
        return not self.factors

    def __repr__(self):
        return "NormalForm(" + " * ".join(map(str, self.simples())) + ")"


@dataclasses.dataclass(frozen=True)
class Fraction:
    """The group element num_inv^-1 den."""

    num_inv: NormalForm
    den: NormalForm

    @property
    def instance(self) -> PreGarside:
        return self.num_inv.instance

    def __mul__(self, other: Fraction) -> Fraction:
        return self.instance.fraction_multiply(self, other)

    def inverse(self) -> Fraction:
        return self.instance.fraction_invert(self)

    def is_identity(self) -> bool:
        return self.num_inv.is_identity() and self.den.is_identity()


def derived_atoms(inst: PreGarside) -> set[int]:
    """Non-units that are not a product of two non-units."""
    ids = inst.simple_ids()
    nonunit = [a for a in ids if a != inst.unit]
    composite = {
        c for a in nonunit for b in nonunit if (c := inst.product(a, b)) is not None
    }
    return set(nonunit) - composite


def check_axioms(inst: PreGarside, to_perm: Callable[[Any], Any] | None = None) -> dict[str, list[str]]:
    """
    Exhaustively test the pre-Garside axioms on every simple.

    Returns violations keyed by axiom name; every list is empty when the
    instance is sound. ``to_perm``, if given, is a map to a group that is
    checked to be multiplicative on defined products and injective on the
    simples: together these give cancellation against any monoid element.
    """
    ids = inst.simple_ids()
    u = inst.unit
    out: dict[str, list[str]] = {k: [] for k in ("i", "ii", "iii", "iv", "iv'", "v", "vi")}
    name = inst.obj

    for a in ids:
        if inst.product(u, a) != a or inst.product(a, u) != a:
            out["i"].append(f"unit is not neutral on {name(a)}")
    for a, b, c in itertools.product(ids, repeat=3):
        ab = inst.product(a, b)
        bc = inst.product(b, c)
        lhs = None if ab is None else inst.product(ab, c)
        rhs = None if bc is None else inst.product(a, bc)
        if lhs != rhs:
            out["i"].append(f"associativity fails on {name(a)}, {name(b)}, {name(c)}")

    for a, b in itertools.product(ids, repeat=2):
        ab = inst.product(a, b)
        if a != u and b != u and ab == u:
            out["ii"].append(f"{name(a)} * {name(b)} is the unit")
    if derived_atoms(inst) != set(inst.atoms):
        out["ii"].append("declared atoms differ from the derived atoms")

    if inst.length(u) != 0:
        out["iii"].append("unit has nonzero length")
    for a in ids:
        if a != u and inst.length(a) <= 0:
            out["iii"].append(f"{name(a)} has non-positive length")
    for a, b in itertools.product(ids, repeat=2):
        ab = inst.product(a, b)
        if ab is not None and inst.length(ab) != inst.length(a) + inst.length(b):
            out["iii"].append(f"length not additive on {name(a)} * {name(b)}")

    right_mult = {a: {b for b in ids if _divides(inst, a, b)} for a in ids}
    left_mult = {a: {b for b in ids if _rdivides(inst, a, b)} for a in ids}
    for s, t in itertools.combinations_with_replacement(inst.atoms, 2):
        for key, mult, div in (("iv", right_mult, _divides), ("iv'", left_mult, _rdivides)):
            common = mult[s] & mult[t]
            if common and not any(all(div(inst, m, x) for x in common) for m in common):
                out[key].append(f"{name(s)}, {name(t)} have no least common multiple")
        common = right_mult[s] & right_mult[t]
        if not common:
            continue
        lcm = min(common, key=inst.length)
        for a in ids:
            if inst.product(a, s) is not None and inst.product(a, t) is not None:
                if inst.product(a, lcm) is None:
                    out["v"].append(f"{name(a)} * lcm({name(s)}, {name(t)}) is not simple")
    if inst.delta is not None:
        for a in ids:
            if not _divides(inst, a, inst.delta):
                out["v"].append(f"{name(a)} does not left-divide Delta")

    for m in ids:
        right = {}
        left = {}
        for a in ids:
            am, ma = inst.product(a, m), inst.product(m, a)
            if am is not None:
                if am in right:
                    out["vi"].append(f"{name(a)} m = {name(right[am])} m for m = {name(m)}")
                right[am] = a
            if ma is not None:
                if ma in left:
                    out["vi"].append(f"m {name(a)} = m {name(left[ma])} for m = {name(m)}")
                left[ma] = a
    if to_perm is not None:
        images = {}
        for a in ids:
            img = to_perm(name(a))
            if img in images:
                out["vi"].append(f"{name(a)} and {name(images[img])} have the same image")
            images[img] = a
        for a, b in itertools.product(ids, repeat=2):
            ab = inst.product(a, b)
            if ab is not None and to_perm(name(ab)) != to_perm(name(a)) * to_perm(name(b)):
                out["vi"].append(f"image map not multiplicative on {name(a)} * {name(b)}")
    return out


def _divides(inst: PreGarside, a: int, b: int) -> bool:
    return inst._full_table()["left_div"].get(b, {}).get(a) is not None


def _rdivides(inst: PreGarside, a: int, b: int) -> bool:
    return inst._full_table()["right_div"].get(b, {}).get(a) is not None
