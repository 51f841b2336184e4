"""
The Hecke algebra of the Weyl group: finite combinations of T_w with
Laurent coefficients, multiplied through the quadratic relation

    T_i T_w = T_{r_i w}                   if l(r_i w) = l(w) + 1
            = (q - 1) T_w + q T_{r_i w}   otherwise.

Raw elements are plain dicts {WeylElt: LaurentT}; ``HWElt`` wraps one for
operator syntax. All raw helpers return fresh dicts and never mutate inputs.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ZeroElement
from .laurent import LaurentT
from .rootdata import RootDatum
from .weyl import WeylElt, WeylGroup, weyl_group

__all__ = ["HeckeW", "HWElt", "hecke_w"]

Raw = dict  # dict[WeylElt, LaurentT]


def add_into(acc: Raw, h: Mapping, scale=None) -> None:
    """acc += scale * h, dropping zeros."""
    for w, c in h.items():
        if scale is not None:
            c = c * scale
        v = acc.get(w)
        v = c if v is None else v + c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def scale_raw(h: Mapping, c) -> Raw:
    out = {}
    for w, x in h.items():
        y = x * c
        if y:
            out[w] = y
    return out


class HeckeW:
    """Arithmetic context for the Hecke algebra of one root datum."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.W: WeylGroup = weyl_group(datum)
        self.N = datum.N
        self.one = LaurentT.const(1, self.N)
        self.q = LaurentT.q(self.N)
        self.q_inv = LaurentT.q(self.N, -1)
        self.q_minus_1 = self.q - 1
        self._basis_mul: dict[tuple[WeylElt, WeylElt], Raw] = {}
        self._tinv: dict[WeylElt, Raw] = {}
        self._apoly: dict[tuple[WeylElt, WeylElt], LaurentT] = {}

    # constructors

    def T(self, w: WeylElt | Iterable[int]) -> "HWElt":
        if not isinstance(w, WeylElt):
            w = self.W.from_word(w)
        return HWElt(self, {w: self.one})

    def unit(self) -> "HWElt":
        return self.T(self.W.identity)

    def scalar(self, c) -> "HWElt":
        c = self.coerce(c)
        return HWElt(self, {self.W.identity: c} if c else {})

    def zero(self) -> "HWElt":
        return HWElt(self, {})

    def coerce(self, c) -> LaurentT:
        if isinstance(c, LaurentT):
            return c
        return LaurentT.const(int(c), self.N)

    # raw arithmetic

    def gen_mul(self, i: int, h: Mapping) -> Raw:
        """T_i * h."""
        W = self.W
        out: Raw = {}
        for w, c in h.items():
            rw = W.lmul(i, w)
            if rw.length > w.length:
                add_into(out, {rw: c})
            else:
                qc = c.shift(self.N)
                add_into(out, {w: qc - c, rw: qc})
        return out

    def mul_gen(self, h: Mapping, i: int) -> Raw:
        """h * T_i."""
        W = self.W
        out: Raw = {}
        for w, c in h.items():
            wr = W.rmul(w, i)
            if wr.length > w.length:
                add_into(out, {wr: c})
            else:
                qc = c.shift(self.N)
                add_into(out, {w: qc - c, wr: qc})
        return out

    def gen_inv_mul(self, i: int, h: Mapping) -> Raw:
        """T_i^{-1} * h, using T_i^{-1} = q^{-1} T_i - (1 - q^{-1})."""
        out = scale_raw(self.gen_mul(i, h), self.q_inv)
        add_into(out, h, self.q_inv - 1)
        return out

    def mul_gen_inv(self, h: Mapping, i: int) -> Raw:
        out = scale_raw(self.mul_gen(h, i), self.q_inv)
        add_into(out, h, self.q_inv - 1)
        return out

    def basis_mul(self, u: WeylElt, v: WeylElt) -> Raw:
        """T_u T_v, letter by letter along the reduced word of u."""
        key = (u, v)
        out = self._basis_mul.get(key)
        if out is None:
            out = {v: self.one}
            for i in reversed(u.word):
                out = self.gen_mul(i, out)
            self._basis_mul[key] = out
        return out

    def mul(self, a: Mapping, b: Mapping) -> Raw:
        out: Raw = {}
        for u, c in a.items():
            for v, d in b.items():
                add_into(out, self.basis_mul(u, v), c * d)
        return out

    def t_inverse_raw(self, w: WeylElt) -> Raw:
        """T_w^{-1} = T_{i_k}^{-1} ... T_{i_1}^{-1} for w = r_{i_1} ... r_{i_k}."""
        out = self._tinv.get(w)
        if out is None:
            out = {self.W.identity: self.one}
            for i in w.word:
                out = self.gen_inv_mul(i, out)
            self._tinv[w] = out
        return out

    # public operations

    def hw_mul(self, a: "HWElt", b: "HWElt") -> "HWElt":
        return HWElt(self, self.mul(a.terms, b.terms))

    def t_inverse(self, w: WeylElt) -> "HWElt":
        return HWElt(self, dict(self.t_inverse_raw(w)))

    def a_poly(self, u: WeylElt, w: WeylElt) -> LaurentT:
        """
        Polynomials a_{u,w} with sum_{u <= w} a_{u,w}(q) T_u = q^{l(w)} T_{w^{-1}}^{-1}.

        Recursion on a left descent w = r_i v: the sum for w is (q T_i^{-1})
        times the sum for v, so the coefficient of T_u is a_{r_i u, v} when
        r_i u < u and q a_{r_i u, v} - (q - 1) a_{u, v} otherwise. Terms whose
        first index leaves the Bruhat interval are 0.
        """
        key = (u, w)
        out = self._apoly.get(key)
        if out is not None:
            return out
        W = self.W
        if not W.bruhat_leq(u, w):
            out = LaurentT.const(0, self.N)
        elif w.length == 0:
            out = self.one
        else:
            i = w.word[0]
            v = W.lmul(i, w)
            ru = W.lmul(i, u)
            if ru.length < u.length:
                out = self.a_poly(ru, v)
            else:
                out = self.q * self.a_poly(ru, v) - self.q_minus_1 * self.a_poly(u, v)
        self._apoly[key] = out
        return out

    def elt_length(self, h: "HWElt") -> int:
        if not h.terms:
            raise ZeroElement("length of the zero element is undefined")
        return max(w.length for w in h.terms)


class HWElt:
    """An element of the finite Hecke algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: HeckeW, terms: Mapping | None = None):
        self.alg = alg
        self.terms: Raw = {w: c for w, c in (terms or {}).items() if c}

    def _wrap(self, other) -> "HWElt":
        if isinstance(other, HWElt):
            return other
        return self.alg.scalar(other)

    def __add__(self, other) -> "HWElt":
        out = dict(self.terms)
        add_into(out, self._wrap(other).terms)
        return HWElt(self.alg, out)

    __radd__ = __add__

    def __neg__(self) -> "HWElt":
        return HWElt(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> "HWElt":
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> "HWElt":
        return self._wrap(other) - self

    def __mul__(self, other) -> "HWElt":
        if isinstance(other, HWElt):
            return HWElt(self.alg, self.alg.mul(self.terms, other.terms))
        return HWElt(self.alg, scale_raw(self.terms, self.alg.coerce(other)))

    def __rmul__(self, other) -> "HWElt":
        return HWElt(self.alg, scale_raw(self.terms, self.alg.coerce(other)))

    def __eq__(self, other) -> bool:
        if isinstance(other, HWElt):
            return self.terms == other.terms
        if isinstance(other, (int, LaurentT)):
            return self == self.alg.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, w: WeylElt) -> LaurentT:
        return self.terms.get(w, LaurentT.const(0, self.alg.N))

    def support(self) -> list[WeylElt]:
        return sorted(self.terms)

    def length(self) -> int:
        return self.alg.elt_length(self)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            name = "T_1" if not w.word else "T_" + "".join(f"r{i}" for i in w.word)
            parts.append(f"({self.terms[w]})*{name}")
        return " + ".join(parts)


def hecke_w(datum: RootDatum) -> HeckeW:
    """The shared Hecke algebra context of a datum."""
    H = getattr(datum, "_hecke_w", None)
    if H is None:
        H = HeckeW(datum)
        datum._hecke_w = H
    return H
