"""Text formats: polynomials, ideal files, binomial system files and chain files.

Ideal file::

    ring 4 x y z t
    gen y^2 - x*z
    gen x^2

System file::

    nvars 4
    degree 3
    rho 1 -2 1 0
    A 3 0 0 0
    C 0 2 0 1

Chain file::

    ideal c.txt
    edge init_rlex c.txt b.txt =

Blank lines and lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import TermOrder, as_order
from .errors import ParseError
from .monomial import MonomialIdeal
from .polyalg import Ideal, Polynomial, default_names

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"[0-9]+")


class _Cursor:
    def __init__(self, text: str, line: int, col0: int):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        pos = self.pos if pos is None else pos
        return ParseError(msg, self.line, self.col0 + pos + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, pattern: re.Pattern) -> str | None:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group()


def parse_polynomial(text: str, names: Sequence[str], line: int = 1, col0: int = 0) -> Polynomial:
    """Parse ``3/2*x^2*y - z + 1`` over the given variable names."""
    index = {name: k for k, name in enumerate(names)}
    n = len(names)
    cur = _Cursor(text.replace("−", "-"), line, col0)
    terms: dict = {}
    first = True
    while True:
        ch = cur.peek()
        if not ch:
            if first:
                raise cur.error("empty polynomial")
            break
        sign = 1
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            cur.pos += 1
        elif not first:
            raise cur.error(f"expected '+' or '-', found {ch!r}")
        first = False
        coeff = Fraction(1)
        exp = [0] * n
        have_factor = False
        num = cur.take(_INT)
        if num is not None:
            coeff = Fraction(int(num))
            if cur.peek() == "/":
                cur.pos += 1
                cur.skip()
                start = cur.pos
                den = cur.take(_INT)
                if den is None:
                    raise cur.error("expected a denominator")
                if int(den) == 0:
                    raise cur.error("zero denominator", start)
                coeff /= int(den)
            have_factor = True
            if cur.peek() == "*":
                cur.pos += 1
                have_factor = False
        while not have_factor or cur.peek() == "*":
            if have_factor:
                cur.pos += 1
            cur.skip()
            start = cur.pos
            name = cur.take(_NAME)
            if name is None:
                raise cur.error("expected a variable name")
            if name not in index:
                raise cur.error(f"unknown variable {name!r}", start)
            power = 1
            if cur.peek() == "^":
                cur.pos += 1
                cur.skip()
                digits = cur.take(_INT)
                if digits is None:
                    raise cur.error("exponent must be a nonnegative integer")
                power = int(digits)
            exp[index[name]] += power
            have_factor = True
        e = tuple(exp)
        v = terms.get(e, 0) + sign * coeff
        if v:
            terms[e] = v
        else:
            terms.pop(e, None)
    return Polynomial(n, terms)


def canonical_generators(gens: Sequence[Polynomial], order="rlex") -> list[Polynomial]:
    """Monic, deduplicated, descending by leading exponent then by full term list."""
    if not gens:
        return []
    order = as_order(order, gens[0].n)
    out = {g.monic(order) for g in gens if g}

    def key(f: Polynomial):
        return [(order.key(a), c) for a, c in f.sorted_terms(order)]

    return sorted(out, key=key, reverse=True)


def format_monomial(a: Sequence[int], names: Sequence[str]) -> str:
    return Polynomial.monomial(a).to_str(names)


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield k, raw, stripped


@dataclass
class IdealFile:
    ideal: Ideal
    names: list


def parse_ideal_text(text: str) -> IdealFile:
    names = None
    n = None
    gens = []
    for k, raw, line in _lines(text):
        head, _, rest = line.partition(" ")
        col0 = raw.index(head) + len(head) + 1
        if head == "ring":
            if names is not None:
                raise ParseError("duplicate ring line", k, 1)
            parts = rest.split()
            if not parts or not parts[0].isdigit() or int(parts[0]) < 1:
                raise ParseError("ring needs a positive variable count", k, col0)
            n = int(parts[0])
            names = parts[1:] or default_names(n)
            if len(names) != n:
                raise ParseError(f"ring declares {n} variables but names {len(names)}", k, col0)
            if len(set(names)) != n or not all(_NAME.fullmatch(x) for x in names):
                raise ParseError("variable names must be distinct identifiers", k, col0)
        elif head == "gen":
            if names is None:
                raise ParseError("gen before ring", k, 1)
            gens.append(parse_polynomial(rest, names, k, col0))
        else:
            raise ParseError(f"unknown directive {head!r}", k, 1)
    if names is None:
        raise ParseError("missing ring line", 1, 1)
    return IdealFile(Ideal(n, gens), list(names))


def emit_generators(gens: Sequence[Polynomial], names: Sequence[str]) -> list[str]:
    return [f"gen {g.to_str(names)}" for g in canonical_generators(list(gens))]


def emit_ideal(I: Ideal, names: Sequence[str] | None = None,
               generators: Sequence[Polynomial] | None = None) -> str:
    names = list(names) if names is not None else default_names(I.n)
    gens = I.generators if generators is None else generators
    lines = [f"ring {I.n} {' '.join(names)}"] + emit_generators(gens, names)
    return "\n".join(lines) + "\n"


def emit_monomial_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    names = list(names) if names is not None else default_names(I.n)
    lines = [f"ring {I.n} {' '.join(names)}"]
    lines += [f"gen {format_monomial(a, names)}" for a in I.sorted_gens("rlex")]
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def parse_ideal(path: str) -> IdealFile:
    return parse_ideal_text(read_text(path))


# -- binomial systems -------------------------------------------------------------

def _ints(rest: str, k: int, col0: int, allow_negative: bool) -> tuple:
    out = []
    for tok in rest.split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"expected an integer, found {tok!r}", k, col0) from None
        if v < 0 and not allow_negative:
            raise ParseError("exponents must be nonnegative", k, col0)
        out.append(v)
    return tuple(out)


def parse_system_text(text: str):
    from .binomial import BinomialSystem

    n = d = None
    rho = None  # (vector, line)
    A, C = [], []
    for k, raw, line in _lines(text):
        head, _, rest = line.partition(" ")
        col0 = raw.index(head) + len(head) + 1
        if head in ("nvars", "degree"):
            vals = _ints(rest, k, col0, False)
            if len(vals) != 1:
                raise ParseError(f"{head} takes one integer", k, col0)
            if head == "nvars":
                n = vals[0]
            else:
                d = vals[0]
        elif head == "rho":
            rho = (_ints(rest, k, col0, True), k)
        elif head in ("A", "C"):
            (A if head == "A" else C).append((_ints(rest, k, col0, False), k))
        else:
            raise ParseError(f"unknown directive {head!r}", k, 1)
    if n is None or d is None:
        raise ParseError("system needs nvars and degree lines", 1, 1)
    rho = rho if rho is not None else ((0,) * n, 1)
    for v, k in [rho] + A + C:
        if len(v) != n:
            raise ParseError(f"vector {v} does not have {n} entries", k, 1)
    for v, k in A + C:
        if sum(v) != d:
            raise ParseError(f"exponent {v} does not have degree {d}", k, 1)
    return BinomialSystem(n, d, frozenset(v for v, _ in A), frozenset(v for v, _ in C),
                          tuple(rho[0]))


def emit_system(sys) -> str:
    key = TermOrder.rlex(sys.n).key
    lines = [f"nvars {sys.n}", f"degree {sys.d}", "rho " + " ".join(map(str, sys.rho))]
    lines += ["A " + " ".join(map(str, a)) for a in sorted(sys.A, key=key, reverse=True)]
    lines += ["C " + " ".join(map(str, c)) for c in sorted(sys.C, key=key, reverse=True)]
    return "\n".join(lines) + "\n"


def parse_system(path: str):
    return parse_system_text(read_text(path))


# -- chains -------------------------------------------------------------------------

@dataclass
class ChainFile:
    ideals: dict  # path -> IdealFile
    edges: list  # ChainEdge


def parse_chain_text(text: str, base_dir: str = ".") -> ChainFile:
    from .binomial import ChainEdge

    ideals: dict = {}
    edges = []

    def load(path: str, k: int) -> str:
        if path not in ideals:
            full = path if os.path.isabs(path) else os.path.join(base_dir, path)
            try:
                ideals[path] = parse_ideal(full)
            except OSError as exc:
                raise ParseError(f"cannot read {path}: {exc.strerror}", k, 1) from None
        return path

    for k, _raw, line in _lines(text):
        parts = line.split()
        if parts[0] == "ideal" and len(parts) == 2:
            load(parts[1], k)
        elif parts[0] == "edge" and len(parts) in (4, 5):
            ann = parts[4] if len(parts) == 5 else None
            edges.append(ChainEdge(parts[1], load(parts[2], k), load(parts[3], k), ann))
        else:
            raise ParseError(f"malformed chain line {line!r}", k, 1)
    return ChainFile(ideals, edges)


def parse_chain(path: str) -> ChainFile:
    return parse_chain_text(read_text(path), os.path.dirname(os.path.abspath(path)))
