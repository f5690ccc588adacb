"""
Command-line front end.

Words are products of terms joined by ``*`` or ``.``; a term is a band
generator ``a(i,j)`` (0 <= i < j < n) or a partition literal such as
``{0 1}{2 3}``, each optionally raised to a signed integer power with
``^``. All indices are 0-based.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from typing import Sequence

from . import ncp
from .bkl import BklInstance, canonical_word, centralizer_atoms, to_artin
from .errors import GarsideError, MalformedError, ParseError
from .garside import Fraction, NormalForm
from .ncp import NcPartition


@dataclasses.dataclass(frozen=True)
class Term:
    kind: str  # "atom" or "partition"
    value: NcPartition
    exponent: int = 1


@dataclasses.dataclass(frozen=True)
class WordExpr:
    n: int
    terms: tuple[Term, ...]

    def is_positive(self) -> bool:
        return all(t.exponent >= 0 for t in self.terms)

    def signed_atoms(self) -> list[tuple[tuple[int, int], int]]:
        out = []
        for t in self.terms:
            word = canonical_word(t.value)
            if t.exponent < 0:
                out += [(a, -1) for a in reversed(word)] * -t.exponent
            else:
                out += [(a, 1) for a in word] * t.exponent
        return out


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode())

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, self.offset(pos))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self, signed: bool = False) -> int:
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "+", "-"):
            self.pos = start
            raise self.error("expected an integer")
        return int(digits)


def parse_word(text: str, n: int) -> WordExpr:
    """Parse a word; the empty string is the identity."""
    sc = _Scanner(text)
    terms = []
    if sc.peek() == "":
        return WordExpr(n, ())
    while True:
        terms.append(_parse_term(sc, n))
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "*.":
            raise sc.error(f"unexpected character {ch!r}")
        sc.pos += 1
    return WordExpr(n, tuple(terms))


def _parse_term(sc: _Scanner, n: int) -> Term:
    start = sc.pos
    ch = sc.peek()
    if ch == "a":
        sc.pos += 1
        sc.expect("(")
        at = sc.pos
        i = sc.integer()
        sc.expect(",")
        j = sc.integer()
        sc.expect(")")
        if not i < j:
            raise sc.error(f"atom a({i},{j}) needs i < j", at)
        if j >= n:
            raise sc.error(f"index {j} out of range for n={n}", at)
        term = Term("atom", NcPartition.atom(n, i, j))
    elif ch == "{":
        parts = []
        while sc.peek() == "{":
            sc.pos += 1
            part = []
            while sc.peek() not in ("}", ""):
                at = sc.pos
                k = sc.integer()
                if not 0 <= k < n:
                    raise sc.error(f"index {k} out of range for n={n}", at)
                part.append(k)
            if not part and sc.peek() == "}":
                raise sc.error("empty part")
            sc.expect("}")
            parts.append(tuple(part))
        try:
            value = NcPartition(n, tuple(parts))
        except MalformedError as exc:
            raise sc.error(str(exc), start) from None
        term = Term("partition", value)
    else:
        raise sc.error("expected an atom a(i,j) or a partition literal")
    if sc.peek() == "^":
        sc.pos += 1
        term = dataclasses.replace(term, exponent=sc.integer(signed=True))
    return term


def word_fraction(inst: BklInstance, w: WordExpr) -> Fraction:
    return inst.fraction_from_word([(inst.simple(t.value), t.exponent) for t in w.terms])


def word_positive(inst: BklInstance, w: WordExpr) -> NormalForm:
    if not w.is_positive():
        raise MalformedError("this command takes positive words only")
    return inst.normal_form(inst.simple(t.value) for t in w.terms for _ in range(t.exponent))


def _literal(lam: NcPartition, compact: bool) -> str:
    return lam.compact_str() if compact else str(lam)


def format_nf(nf: NormalForm, compact: bool = False) -> str:
    if nf.is_identity():
        return str(NcPartition.singletons(nf.instance.n))
    return " * ".join(_literal(s, compact) for s in nf.simples())


def format_delta_form(inst: BklInstance, p: int, z: NormalForm, compact: bool = False) -> str:
    if p >= 0:
        return format_nf(inst.multiply(inst.delta_power(p), z), compact)
    head = f"{NcPartition.full(inst.n)}^{p}"
    return head if z.is_identity() else head + " * " + format_nf(z, compact)


def _json_factors(nf: NormalForm) -> list[list[list[int]]]:
    return [s.to_lists() for s in nf.simples()]


def _emit_element(args, inst: BklInstance, f: Fraction, extra: dict | None = None) -> None:
    p, z = inst.delta_form(f)
    if args.json:
        if p >= 0:
            z, p = inst.multiply(inst.delta_power(p), z), 0
        print(json.dumps({"n": inst.n, **(extra or {}), "delta_power": p, "factors": _json_factors(z)}))
    else:
        print(format_delta_form(inst, p, z, args.compact))


def _emit_nf(args, inst: BklInstance, nf: NormalForm) -> None:
    if args.json:
        print(json.dumps({"n": inst.n, "delta_power": 0, "factors": _json_factors(nf)}))
    else:
        print(format_nf(nf, args.compact))


def cmd_nf(args) -> int:
    inst = BklInstance(args.n)
    _emit_element(args, inst, word_fraction(inst, parse_word(args.word, args.n)))
    return 0


def cmd_eq(args) -> int:
    inst = BklInstance(args.n)
    f = word_fraction(inst, parse_word(args.word1, args.n))
    g = word_fraction(inst, parse_word(args.word2, args.n))
    equal = inst.fraction_equal(f, g)
    if args.json:
        print(json.dumps({"n": args.n, "equal": equal}))
    else:
        print("equal" if equal else "not equal")
    return 0 if equal else 1


def cmd_lattice(args) -> int:
    inst = BklInstance(args.n)
    u = word_positive(inst, parse_word(args.word1, args.n))
    v = word_positive(inst, parse_word(args.word2, args.n))
    res = inst.right_lcm([u, v]) if args.command == "lcm" else inst.left_gcd(u, v)
    _emit_nf(args, inst, res)
    return 0


def cmd_conj(args) -> int:
    inst = BklInstance(args.n)
    f = word_fraction(inst, parse_word(args.word, args.n))
    g = Fraction(inst.conj_by_delta(f.num_inv, args.k), inst.conj_by_delta(f.den, args.k))
    _emit_element(args, inst, g, {"k": args.k})
    return 0


def cmd_centralizer(args) -> int:
    atoms = centralizer_atoms(args.n, args.d)
    if args.json:
        print(json.dumps({"n": args.n, "d": args.d, "atoms": [a.to_lists() for a in atoms]}))
    else:
        for a in atoms:
            print(_literal(a, args.compact))
    return 0


def cmd_simples(args) -> int:
    simples = ncp.enumerate_nc(args.n, args.max_n)
    if args.json:
        payload = {"n": args.n, "count": len(simples)}
        if args.list:
            payload["simples"] = [s.to_lists() for s in simples]
        print(json.dumps(payload))
    elif args.list:
        for s in simples:
            print(_literal(s, args.compact))
    else:
        print(len(simples))
    return 0


def cmd_to_artin(args) -> int:
    gens = to_artin(parse_word(args.word, args.n).signed_atoms())
    if args.json:
        print(json.dumps({"n": args.n, "artin": [[k, e] for k, e in gens]}))
    else:
        print(" * ".join(f"s{k}" + ("" if e > 0 else "^-1") for k, e in gens))
    return 0


def cmd_verify(args) -> int:
    from . import oracle

    report = []
    t0 = time.perf_counter()
    simples = ncp.enumerate_nc(args.n, args.max_n)
    expected = ncp.catalan(args.n)
    report.append(("simples count", len(simples) == expected, f"{len(simples)} (Catalan {expected})"))
    if args.n <= 5:
        bf = len(oracle.enumerate_simples_bf(args.n, args.limit))
        report.append(("brute-force simples", bf == expected, f"{bf} classes"))
        bad = oracle.product_mismatches(args.n, args.limit)
        report.append(("partial product vs rewriting", not bad, f"{len(bad)} mismatches"))
    count, bad = oracle.word_mismatches(args.n, args.max_len, args.limit)
    report.append((f"words of length <= {args.max_len}", not bad, f"{count} words, {len(bad)} mismatches"))
    elapsed = time.perf_counter() - t0
    ok = all(r[1] for r in report)
    if args.json:
        print(json.dumps({
            "n": args.n,
            "ok": ok,
            "seconds": round(elapsed, 3),
            "checks": [{"name": name, "ok": good, "detail": d} for name, good, d in report],
        }))
    else:
        for name, good, detail in report:
            print(f"{'PASS' if good else 'FAIL'}  {name}: {detail}")
        print(f"{'all checks agree' if ok else 'DISAGREEMENT'} ({elapsed:.2f}s)")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, required=True, help="number of strands")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--compact", action="store_true", help="omit singleton parts in output")

    p = argparse.ArgumentParser(prog="bklgarside", description="Band-generator braid monoid toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", parents=[common], help="greedy normal form (Delta^p times simples)")
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("eq", parents=[common], help="exit 0 if two words are equal, 1 if not")
    s.add_argument("word1")
    s.add_argument("word2")
    s.set_defaults(func=cmd_eq)

    for name in ("lcm", "gcd"):
        s = sub.add_parser(name, parents=[common], help=f"right {name} of two positive words")
        s.add_argument("word1")
        s.add_argument("word2")
        s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("conj", parents=[common], help="Delta^-k w Delta^k")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("word")
    s.set_defaults(func=cmd_conj)

    s = sub.add_parser("centralizer", parents=[common], help="atoms of the centralizer of Delta^(n/d)")
    s.add_argument("-d", type=int, required=True)
    s.set_defaults(func=cmd_centralizer)

    s = sub.add_parser("simples", parents=[common], help="count or list the canonical factors")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    s.add_argument("--max-n", type=int, default=ncp.MAX_ENUMERATE_N)
    s.set_defaults(func=cmd_simples)

    s = sub.add_parser("to-artin", parents=[common], help="rewrite in Artin generators s1, s2, ...")
    s.add_argument("word")
    s.set_defaults(func=cmd_to_artin)

    s = sub.add_parser("verify", parents=[common], help="cross-check the engine against rewriting")
    s.add_argument("--max-len", type=int, default=3)
    s.add_argument("--max-n", type=int, default=ncp.MAX_ENUMERATE_N)
    s.add_argument("--limit", type=int, default=200_000, help="word bound for each rewriting search")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        print("error: -n must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except GarsideError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
