"""
Exact Laurent polynomials in t = q^(1/N) with integer coefficients.

A ``LaurentT`` is an immutable map exponent -> coefficient with no zero
entries. The attached ``N`` fixes the meaning of q as t**N; combining
polynomials with different ``N`` raises ``MixedN``.

>>> q = LaurentT.q(1)
>>> (q - 1) * (q + 1)
LaurentT('q^2 - 1')
>>> q.invert_unit()
LaurentT('q^-1')
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import MixedN, NonIntegralExponent, NotAUnit

__all__ = ["LaurentT", "delta_half_of"]

Scalar = Union[int, "LaurentT"]


class LaurentT:
    __slots__ = ("terms", "N", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, N: int = 1):
        if N < 1:
            raise ValueError("N must be a positive integer")
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self.N = N
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, N: int) -> "LaurentT":
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.N = N
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int, N: int = 1) -> "LaurentT":
        return cls._raw({0: c} if c else {}, N)

    @classmethod
    def t(cls, e: int = 1, N: int = 1, c: int = 1) -> "LaurentT":
        """c * t**e."""
        return cls._raw({e: c} if c else {}, N)

    @classmethod
    def q(cls, N: int = 1, k: int = 1) -> "LaurentT":
        """q**k = t**(k*N)."""
        return cls._raw({k * N: 1}, N)

    def _coerce(self, other: Scalar) -> "LaurentT":
        if isinstance(other, LaurentT):
            if other.N != self.N:
                raise MixedN(f"cannot combine N={self.N} with N={other.N}")
            return other
        if isinstance(other, int):
            return LaurentT.const(other, self.N)
        return NotImplemented

    # ring operations

    def __add__(self, other: Scalar) -> "LaurentT":
        if type(other) is not LaurentT or other.N != self.N:
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        out = self.terms.copy()
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentT._raw(out, self.N)

    __radd__ = __add__

    def __neg__(self) -> "LaurentT":
        return LaurentT._raw({e: -c for e, c in self.terms.items()}, self.N)

    def __sub__(self, other: Scalar) -> "LaurentT":
        if type(other) is not LaurentT or other.N != self.N:
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        out = self.terms.copy()
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentT._raw(out, self.N)

    def __rsub__(self, other: Scalar) -> "LaurentT":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentT":
        if type(other) is not LaurentT or other.N != self.N:
            if isinstance(other, int):
                if not other:
                    return LaurentT._raw({}, self.N)
                return LaurentT._raw({e: c * other for e, c in self.terms.items()}, self.N)
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        a, b = self.terms, other.terms
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentT._raw({ea + e: ca * c for e, c in b.items()}, self.N)
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentT._raw({eb + e: cb * c for e, c in a.items()}, self.N)
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return LaurentT._raw({e: c for e, c in out.items() if c}, self.N)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentT":
        """self * t**k."""
        return LaurentT._raw({e + k: c for e, c in self.terms.items()}, self.N)

    def __pow__(self, k: int) -> "LaurentT":
        if k < 0:
            return self.invert_unit() ** (-k)
        out = LaurentT.const(1, self.N)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, LaurentT):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.N, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # queries

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def invert_unit(self) -> "LaurentT":
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of Z[t, 1/t]")
        (e, c), = self.terms.items()
        return LaurentT._raw({-e: c}, self.N)

    def is_in_Zq(self) -> bool:
        """True iff every exponent is a nonnegative multiple of N."""
        return all(e >= 0 and e % self.N == 0 for e in self.terms)

    def degree(self) -> int:
        """Largest exponent of t."""
        return max(self.terms)

    def low_degree(self) -> int:
        return min(self.terms)

    def degree_q(self) -> Fraction:
        return Fraction(self.degree(), self.N)

    def evaluate(self, t: Fraction | int) -> Fraction:
        t = Fraction(t)
        return sum((c * t**e for e, c in self.terms.items()), Fraction(0))

    def evaluate_q(self, q: int) -> Fraction:
        """Value at a q for which only integral q-powers occur."""
        if any(e % self.N for e in self.terms):
            raise NonIntegralExponent(f"{self} is not a Laurent polynomial in q")
        qf = Fraction(q)
        return sum((c * qf ** (e // self.N) for e, c in self.terms.items()), Fraction(0))

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]], N: int = 1) -> "LaurentT":
        out: dict[int, int] = {}
        for e, c in data:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out, N)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        in_q = all(e % self.N == 0 for e in self.terms)
        var = "q" if in_q else "t"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            k = e // self.N if in_q else e
            if k == 0:
                mono = str(abs(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text

    def __repr__(self) -> str:
        return f"LaurentT('{self}')" if self.N == 1 else f"LaurentT('{self}', N={self.N})"


def delta_half_of(datum, coweight) -> LaurentT:
    """t ** (N * ht(coweight)), the square root of the modular character."""
    e = datum.ht(coweight) * datum.N
    if e.denominator != 1:
        raise NonIntegralExponent(f"N*ht({tuple(coweight)}) = {e} is not an integer")
    return LaurentT.t(int(e), datum.N)
