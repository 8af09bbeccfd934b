"""Sparse polynomials over Q with exact Fraction coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..combinat import TermOrder, add, as_order, divides
from ..errors import WidthMismatch


def _mul_terms(p: Mapping, q: Mapping) -> dict:
    out: dict = {}
    for a, c in p.items():
        for b, d in q.items():
            e = tuple(x + y for x, y in zip(a, b))
            v = out.get(e, 0) + c * d
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class Polynomial:
    """An element of Q[X_1..X_n].

    ``terms`` maps exponent tuples to nonzero Fractions.  Term order only
    matters when asking for leading data or a sorted term list.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for a, c in items:
            a = tuple(a)
            if len(a) != n:
                raise WidthMismatch(f"exponent {a} does not have width {n}")
            c = Fraction(c)
            if c:
                v = out.get(a, 0) + c
                if v:
                    out[a] = v
                else:
                    out.pop(a, None)
        self.n = n
        self.terms = out
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, a: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(a), {tuple(a): coeff})

    @classmethod
    def constant(cls, n: int, c=1) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        return cls(n, {tuple(1 if k == i else 0 for k in range(n)): 1})

    @classmethod
    def binomial(cls, a: Sequence[int], b: Sequence[int]) -> "Polynomial":
        """X^a - X^b."""
        return cls(len(a), [(a, 1), (b, -1)])

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(a) for a in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support_width(self) -> int:
        """Smallest i such that the polynomial lies in K[X_1..X_i]."""
        w = 0
        for a in self.terms:
            for i in range(len(a) - 1, -1, -1):
                if a[i]:
                    w = max(w, i + 1)
                    break
        return w

    def sorted_terms(self, order) -> list:
        key = as_order(order, self.n).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading(self, order) -> tuple:
        """(exponent, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        key = as_order(order, self.n).key
        a = max(self.terms, key=key)
        return a, self.terms[a]

    def lead_exp(self, order):
        return self.leading(order)[0]

    def monic(self, order) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading(order)[1])

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise WidthMismatch(f"widths differ: {self.n} vs {other.n}")
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            v = out.get(a, 0) + c
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw(self.n, {})
            return Polynomial._raw(self.n, {a: c * other for a, c in self.terms.items()})
        other = self._coerce(other)
        return Polynomial._raw(self.n, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, a: Sequence[int], c=1) -> "Polynomial":
        return Polynomial._raw(self.n, {add(b, a): d * c for b, d in self.terms.items()})

    def divide_monomial(self, a: Sequence[int]) -> "Polynomial":
        """Exact division by X^a; every term must be divisible."""
        out = {}
        for b, c in self.terms.items():
            if not divides(a, b):
                raise ValueError(f"X^{tuple(a)} does not divide the term X^{b}")
            out[tuple(x - y for x, y in zip(b, a))] = c
        return Polynomial._raw(self.n, out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Image under the algebra map X_j -> images[j]."""
        if len(images) != self.n:
            raise WidthMismatch("need one image per variable")
        m = images[0].n if images else 0
        # integral images stay in int arithmetic until the final scaling
        base = [{e: (v.numerator if v.denominator == 1 else v) for e, v in img.terms.items()}
                for img in images]
        powers: list[list[dict]] = [[{(0,) * m: 1}] for _ in images]
        out: dict = {}
        for a, c in self.terms.items():
            acc = {(0,) * m: 1}
            for j, k in enumerate(a):
                if k:
                    pw = powers[j]
                    while len(pw) <= k:
                        pw.append(_mul_terms(pw[-1], base[j]))
                    acc = _mul_terms(acc, pw[k])
            for e, v in acc.items():
                v = out.get(e, 0) + c * v
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(m, {e: Fraction(v) for e, v in out.items()})

    def embed(self, n: int, offset: int = 0) -> "Polynomial":
        """View in a ring of width n with the variables shifted by offset."""
        pad = n - self.n - offset
        if pad < 0 or offset < 0:
            raise WidthMismatch("target ring too small")
        return Polynomial._raw(n, {(0,) * offset + a + (0,) * pad: c
                                   for a, c in self.terms.items()})

    def project(self, keep: Sequence[int]) -> "Polynomial":
        """Keep only the listed variable positions (others must be absent)."""
        out = {}
        keep = list(keep)
        dropped = [i for i in range(self.n) if i not in keep]
        for a, c in self.terms.items():
            if any(a[i] for i in dropped):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(a[i] for i in keep)] = c
        return Polynomial._raw(len(keep), out)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable perm[k] to position k."""
        return Polynomial._raw(self.n, {tuple(a[p] for p in perm): c
                                        for a, c in self.terms.items()})

    # -- comparison and display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def to_str(self, names: Sequence[str] | None = None, order: TermOrder | str = "rlex") -> str:
        if not self.terms:
            return "0"
        names = list(names) if names is not None else default_names(self.n)
        parts = []
        for a, c in self.sorted_terms(order):
            mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}"
                            for i, k in enumerate(a) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.n}, {self.to_str()!r})"


def default_names(n: int) -> list[str]:
    if n <= 4:
        return ["x", "y", "z", "t"][:n]
    if n == 5:
        return ["x", "y", "z", "t", "u"]
    return [f"x{i}" for i in range(1, n + 1)]
