"""
The Iwahori-Hecke algebra in its Bernstein-Lusztig presentation.

Elements are stored in the normal form sum_lambda h_lambda Z^lambda with the
finite Hecke coefficient h_lambda on the left, as a dict
{lambda: {w: c}}. Products are normalized by moving Z^lambda to the right
past one T_i at a time:

    Z^lambda T_i = T_i Z^{r_i(lambda)} + (q - 1) F_i(lambda)

with F_i(lambda) the sum of Z^mu over [lambda, r_i(lambda)[ when
alpha_i(lambda) >= 0, and minus the sum over ]lambda, r_i(lambda)] when
alpha_i(lambda) < 0. Only coweights of the Tits cone are admitted.

The Iwahori-Matsumoto basis T_{lambda.w} is reached through constructors
(``t_basis_elt``) and eliminators (``expand_in_T``, ``expand_full_T``,
``coeff_T_right``); it has no closed product of its own.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from ._vector import (Overflow, WeylIndex, convolve_rows, from_rows, right_gen_rows, scalar_rows,
                      to_rows)
from .errors import SizeBudgetExceeded, ZeroElement
from .heckew import HeckeW, HWElt, add_into, hecke_w, scale_raw
from .laurent import LaurentT, delta_half_of
from .rootdata import Coweight, RootDatum, vadd
from .weyl import WeylElt

__all__ = ["BLAlgebra", "BLElt", "bl_algebra"]

Raw = dict  # {Coweight: {WeylElt: LaurentT}}

_VECTOR_WORK = 200  # input size products above which products run on int64 rows
_PAIR_FACTOR = 100


def add_bl(acc: Raw, lam: Coweight, h: Mapping, scale=None) -> None:
    """acc[lam] += scale * h, dropping empty coefficients."""
    cur = acc.get(lam)
    if cur is None:
        cur = {}
    add_into(cur, h, scale)
    if cur:
        acc[lam] = cur
    else:
        acc.pop(lam, None)


def add_bl_all(acc: Raw, b: Mapping, scale=None) -> None:
    for lam, h in b.items():
        add_bl(acc, lam, h, scale)


class BLAlgebra:
    """Arithmetic context for the Bernstein-Lusztig algebra of one root datum."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.H: HeckeW = hecke_w(datum)
        self.W = self.H.W
        self.N = datum.N
        self.e = self.W.identity
        self._zt: dict[tuple[Coweight, WeylElt], Raw] = {}
        self._tbasis: dict[tuple[Coweight, WeylElt], Raw] = {}
        self._left_chain: dict[tuple[Coweight, WeylElt], dict] = {}
        self._right_chain: dict[tuple[Coweight, WeylElt], dict] = {}
        self._zexp: dict[Coweight, Raw] = {}
        # a coordinate where each coroot is nonzero, to index its strings
        self._widx = WeylIndex(self.W)
        self._string_coord = [next(j for j, c in enumerate(cor) if c) for cor in datum.coroots]

    # constructors

    def check_yplus(self, lam: Iterable[int]) -> tuple[Coweight, WeylElt]:
        """(lambda^{++}, w_lambda), raising unless lambda lies in the Tits cone."""
        lam = tuple(lam)
        return self.W.in_tits_cone(lam).require(lam)

    def Z(self, lam: Iterable[int]) -> "BLElt":
        lam = tuple(lam)
        self.check_yplus(lam)
        return BLElt(self, {lam: {self.e: self.H.one}})

    def T(self, w: WeylElt | Iterable[int]) -> "BLElt":
        if not isinstance(w, WeylElt):
            w = self.W.from_word(w)
        return BLElt(self, {self.zero_weight: {w: self.H.one}})

    def Tinv(self, w: WeylElt | Iterable[int]) -> "BLElt":
        if not isinstance(w, WeylElt):
            w = self.W.from_word(w)
        return BLElt(self, {self.zero_weight: dict(self.H.t_inverse_raw(w))})

    def scalar(self, c) -> "BLElt":
        c = self.H.coerce(c)
        return BLElt(self, {self.zero_weight: {self.e: c}} if c else {})

    def zero(self) -> "BLElt":
        return BLElt(self, {})

    def from_hw(self, h: HWElt | Mapping) -> "BLElt":
        terms = h.terms if isinstance(h, HWElt) else h
        return BLElt(self, {self.zero_weight: dict(terms)} if terms else {})

    def hw_times_z(self, h: HWElt | Mapping, lam: Iterable[int]) -> "BLElt":
        """h Z^lambda."""
        lam = tuple(lam)
        self.check_yplus(lam)
        terms = h.terms if isinstance(h, HWElt) else h
        return BLElt(self, {lam: dict(terms)} if terms else {})

    @property
    def zero_weight(self) -> Coweight:
        return (0,) * self.datum.n

    # the commutation rule

    def correction(self, lam: Coweight, i: int) -> tuple[list[Coweight], int]:
        """Points and sign of F_i(lambda)."""
        a = self.datum.pair(i, lam)
        if a > 0:
            return self.datum.line_interval(lam, i, "open-right"), 1
        if a < 0:
            return self.datum.line_interval(lam, i, "open-left"), -1
        return [], 0

    def zt(self, lam: Coweight, w: WeylElt) -> Raw:
        """Z^lambda T_w in normal form. The returned dict is shared; do not mutate."""
        key = (lam, w)
        out = self._zt.get(key)
        if out is not None:
            return out
        if w.length == 0:
            out = {lam: {w: self.H.one}}
        else:
            H = self.H
            i = w.word[0]
            rest = self.W.lmul(i, w)
            out = {}
            for mu, h in self.zt(self.datum.reflect(i, lam), rest).items():
                add_bl(out, mu, H.gen_mul(i, h))
            pts, sign = self.correction(lam, i)
            if pts:
                scale = H.q_minus_1 * sign
                for p in pts:
                    add_bl_all(out, self.zt(p, rest), scale)
        self._zt[key] = out
        return out

    def z_times_hw(self, lam: Coweight, g: Mapping) -> Raw:
        """Z^lambda g for g in the finite Hecke algebra."""
        out: Raw = {}
        for w, c in g.items():
            add_bl_all(out, self.zt(lam, w), c)
        return out

    # raw arithmetic

    def string_position(self, lam: Coweight, i: int) -> tuple[Coweight, int]:
        """(base, k) with lambda = base + k alpha_i^vee and base fixed on the alpha_i^vee-string."""
        cor = self.datum.coroots[i]
        j = self._string_coord[i]
        k = lam[j] // cor[j]
        return tuple(x - k * c for x, c in zip(lam, cor)), k

    def right_gen_raw(self, a: Mapping, i: int) -> Raw:
        """
        a T_i for a whole element. Each F_i(lambda) is an interval of the
        alpha_i^vee-string through lambda, so the corrections on one string are
        accumulated as a difference array and emitted by a single sweep.
        """
        H, d, N = self.H, self.datum, self.N
        cor = d.coroots[i]
        out: Raw = {}
        events: dict[Coweight, dict[int, dict]] = {}
        for lam, h in a.items():
            add_bl(out, d.reflect(i, lam), H.mul_gen(h, i))
            s = d.pair(i, lam)
            if not s:
                continue
            base, k = self.string_position(lam, i)
            if s > 0:
                lo, hi = k - s + 1, k
                h = {w: c.shift(N) - c for w, c in h.items()}
            else:
                lo, hi = k + 1, k - s
                h = {w: c - c.shift(N) for w, c in h.items()}
            ev = events.setdefault(base, {})
            add_into(ev.setdefault(lo, {}), h)
            add_into(ev.setdefault(hi + 1, {}), h, -1)
        for base, ev in events.items():
            run: dict = {}
            keys = sorted(ev)
            for k, nxt in zip(keys, keys[1:]):
                add_into(run, ev[k])
                if run:
                    for m in range(k, nxt):
                        add_bl(out, tuple(x + m * c for x, c in zip(base, cor)), run)
        return out

    def _right_word(self, a: Mapping, w: WeylElt, cache: dict) -> Raw:
        """a T_w, reusing a T_v for prefixes v of w stored in the cache."""
        x = cache.get(w)
        if x is None:
            i = w.word[-1]
            x = self.right_gen_raw(self._right_word(a, self.W.rmul(w, i), cache), i)
            cache[w] = x
        return x

    def mul_raw(self, a: Mapping, b: Mapping, budget: int | None = None) -> Raw:
        """
        a b = sum_w (a T_w) Y_w with Y_w = sum_mu c_{mu,w} Z^mu for
        b = sum_mu (sum_w c_{mu,w} T_w) Z^mu. Raises SizeBudgetExceeded when
        an intermediate a T_w has more monomials than the budget, or the
        final convolution more than _PAIR_FACTOR times as many term pairs.
        """
        ys: dict[WeylElt, dict] = {}
        for mu, g in b.items():
            for w, c in g.items():
                ys.setdefault(w, {})[mu] = c
        size_a = sum(len(c.terms) for h in a.values() for c in h.values())
        if size_a * sum(map(len, ys.values())) > _VECTOR_WORK:
            try:
                return self._mul_rows(a, ys, budget)
            except Overflow:
                pass
        cache = {self.e: a}
        out: Raw = {}
        for w, y in ys.items():
            x = self._right_word(a, w, cache)
            if budget is not None:
                size = sum(len(c.terms) for h in x.values() for c in h.values())
                if size > budget:
                    raise SizeBudgetExceeded(size, budget)
            for mu, c in y.items():
                for tau, h in x.items():
                    add_bl(out, vadd(tau, mu), h, c)
        return out

    def _mul_rows(self, a: Mapping, ys: Mapping, budget: int | None) -> Raw:
        """mul_raw on int64 rows."""
        widx = self._widx
        d = self.datum
        roots = [np.array(r, dtype=np.int64) for r in d.roots]
        cors = [np.array(c, dtype=np.int64) for c in d.coroots]
        cache = {self.e: to_rows(a, widx)}

        def word(w: WeylElt):
            x = cache.get(w)
            if x is None:
                i = w.word[-1]
                K, C = word(self.W.rmul(w, i))
                x = cache[w] = right_gen_rows(K, C, i, roots[i], cors[i], self.N, widx)
                if budget is not None and len(x[1]) > budget:
                    raise SizeBudgetExceeded(len(x[1]), budget)
            return x

        blocks = [(*word(w), *scalar_rows(y)) for w, y in ys.items()]
        pairs = sum(len(b[1]) * len(b[3]) for b in blocks)
        if budget is not None and pairs > _PAIR_FACTOR * budget:
            raise SizeBudgetExceeded(pairs, _PAIR_FACTOR * budget)
        return from_rows(*convolve_rows(blocks), widx, self.N)

    def mul_raw_by_zt(self, a: Mapping, b: Mapping) -> Raw:
        """The same product through the memoized normal forms of Z^lambda T_w."""
        H = self.H
        out: Raw = {}
        for lam, h in a.items():
            for mu, g in b.items():
                for tau, k in self.z_times_hw(lam, g).items():
                    add_bl(out, vadd(tau, mu), H.mul(h, k))
        return out

    def left_hw(self, h: Mapping, a: Mapping) -> Raw:
        """h a for h in the finite Hecke algebra."""
        out: Raw = {}
        for lam, g in a.items():
            add_bl(out, lam, self.H.mul(h, g))
        return out

    def right_hw(self, a: Mapping, g: Mapping) -> Raw:
        """a g for g in the finite Hecke algebra."""
        out: Raw = {}
        cache = {self.e: a}
        for w, c in g.items():
            add_bl_all(out, self._right_word(a, w, cache), c)
        return out

    def right_gen(self, a: Mapping, i: int, inverse: bool = False) -> Raw:
        H = self.H
        g = H.t_inverse_raw(self.W.gen(i)) if inverse else {self.W.gen(i): H.one}
        return self.right_hw(a, g)

    def left_gen(self, i: int, a: Mapping, inverse: bool = False) -> Raw:
        H = self.H
        out: Raw = {}
        for lam, h in a.items():
            add_bl(out, lam, H.gen_inv_mul(i, h) if inverse else H.gen_mul(i, h))
        return out

    def bl_mul(self, a: "BLElt", b: "BLElt") -> "BLElt":
        return BLElt(self, self.mul_raw(a.terms, b.terms))

    # Iwahori-Matsumoto basis

    def im_left_uses_inverse(self, lam: Coweight, w: WeylElt, i: int) -> bool:
        """Whether T_{r_i(lambda.w)} = T_i^{-1} T_{lambda.w}."""
        a = self.datum.pair(i, lam)
        if a > 0:
            return False
        if a == 0:
            return self.W.lmul(i, w).length < w.length
        return True

    def im_right_uses_inverse(self, lam: Coweight, w: WeylElt, i: int) -> bool:
        """Whether T_{(lambda.w) r_i} = T_{lambda.w} T_i^{-1}."""
        s = self.datum.pair(i, self.W.act(w.inverse(), lam))
        if s < 0:
            return False
        if s == 0:
            return self.W.rmul(w, i).length < w.length
        return True

    def t_basis_raw(self, lam: Coweight, w: WeylElt | None = None) -> Raw:
        """T_{lambda.w} in normal form (shared; do not mutate)."""
        w = self.e if w is None else w
        lam = tuple(lam)
        key = (lam, w)
        out = self._tbasis.get(key)
        if out is not None:
            return out
        if w.length == 0:
            dom, wl = self.check_yplus(lam)
            H = self.H
            base = self.z_times_hw(dom, H.t_inverse_raw(wl))
            out = self.left_hw({wl: H.one}, base)
            dh = delta_half_of(self.datum, dom)
            out = {mu: scale_raw(h, dh) for mu, h in out.items()}
        else:
            i = w.word[-1]
            v = self.W.rmul(w, i)
            out = self.right_gen(self.t_basis_raw(lam, v), i,
                                 self.im_right_uses_inverse(lam, v, i))
        self._tbasis[key] = out
        return out

    def t_basis_elt(self, lam: Iterable[int], w: WeylElt | None = None) -> "BLElt":
        return BLElt(self, self.t_basis_raw(tuple(lam), w))

    def leading_unit(self, lam: Coweight) -> dict:
        """The Z^lambda coefficient of T_lambda: q^{-l} delta^{1/2} T_{w_lambda} T_{w_lambda^{-1}}."""
        dom, wl = self.check_yplus(lam)
        H = self.H
        c = delta_half_of(self.datum, dom) * H.q ** (-wl.length)
        return scale_raw(H.basis_mul(wl, wl.inverse()), c)

    def leading_unit_inverse(self, lam: Coweight) -> dict:
        dom, wl = self.check_yplus(lam)
        H = self.H
        c = delta_half_of(self.datum, dom).invert_unit() * H.q ** wl.length
        return scale_raw(H.mul(H.t_inverse_raw(wl.inverse()), H.t_inverse_raw(wl)), c)

    def _maximal_classes(self, support: Iterable[Coweight]) -> set[Coweight]:
        doms = {self.check_yplus(lam)[0] for lam in support}
        leq = self.datum.dominance_leq
        return {m for m in doms if not any(o != m and leq(m, o) for o in doms)}

    def expand_in_T_raw(self, a: Mapping) -> Raw:
        """(h_lambda) with a = sum h_lambda T_lambda, by elimination over maximal classes."""
        H = self.H
        res: Raw = {lam: dict(h) for lam, h in a.items()}
        out: Raw = {}
        while res:
            top = self._maximal_classes(res)
            batch = [lam for lam in res if self.check_yplus(lam)[0] in top]
            for lam in batch:
                h = H.mul(res[lam], self.leading_unit_inverse(lam))
                add_bl(out, lam, h)
                for mu, k in self.t_basis_raw(lam).items():
                    add_bl(res, mu, H.mul(h, k), -1)
            if any(lam in res for lam in batch):  # pragma: no cover - triangularity guard
                raise ArithmeticError("elimination failed to clear a maximal class")
        return out

    def expand_z(self, lam: Coweight) -> Raw:
        """T-expansion of Z^lambda (shared; do not mutate). h Z^lambda expands to h times it."""
        out = self._zexp.get(lam)
        if out is None:
            out = self.expand_in_T_raw({lam: {self.e: self.H.one}})
            self._zexp[lam] = out
        return out

    def expand_in_T(self, a: "BLElt") -> dict[Coweight, HWElt]:
        return {lam: HWElt(self.H, h) for lam, h in self.expand_in_T_raw(a.terms).items()}

    def assemble_T(self, coeffs: Mapping) -> "BLElt":
        """sum h_lambda T_lambda."""
        out: Raw = {}
        for lam, h in coeffs.items():
            terms = h.terms if isinstance(h, HWElt) else h
            add_bl_all(out, self.left_hw(terms, self.t_basis_raw(tuple(lam))))
        return BLElt(self, out)

    def left_chain(self, nu: Coweight, x: WeylElt) -> dict:
        """g with T_{x(nu).x} = g T_nu, built from the left Iwahori-Matsumoto steps."""
        key = (nu, x)
        out = self._left_chain.get(key)
        if out is None:
            if x.length == 0:
                out = {self.e: self.H.one}
            else:
                i = x.word[0]
                y = self.W.lmul(i, x)
                g = self.left_chain(nu, y)
                inv = self.im_left_uses_inverse(self.W.act(y, nu), y, i)
                out = self.H.gen_inv_mul(i, g) if inv else self.H.gen_mul(i, g)
            self._left_chain[key] = out
        return out

    def right_chain(self, nu: Coweight, x: WeylElt) -> dict:
        """r with T_{nu.x} = T_nu r, built from the right Iwahori-Matsumoto steps."""
        key = (nu, x)
        out = self._right_chain.get(key)
        if out is None:
            if x.length == 0:
                out = {self.e: self.H.one}
            else:
                i = x.word[-1]
                y = self.W.rmul(x, i)
                r = self.right_chain(nu, y)
                inv = self.im_right_uses_inverse(nu, y, i)
                out = self.H.mul_gen_inv(r, i) if inv else self.H.mul_gen(r, i)
            self._right_chain[key] = out
        return out

    def split_left(self, nu: Coweight, h: Mapping) -> dict[WeylElt, LaurentT]:
        """(c_x) with h T_nu = sum_x c_x T_{x(nu).x}."""
        H = self.H
        res = dict(h)
        out: dict[WeylElt, LaurentT] = {}
        while res:
            top = max(w.length for w in res)
            for y in [w for w in res if w.length == top]:
                g = self.left_chain(nu, y)
                c = res[y] * g[y].invert_unit()
                out[y] = c
                add_into(res, g, -c)
        return out

    def expand_full_T_raw(self, a: Mapping) -> dict[tuple[Coweight, WeylElt], LaurentT]:
        """(c) with a = sum c_{mu,x} T_{mu.x} over the full Iwahori-Matsumoto basis."""
        out: dict[tuple[Coweight, WeylElt], LaurentT] = {}
        for nu, h in self.expand_in_T_raw(a).items():
            for x, c in self.split_left(nu, h).items():
                out[(self.W.act(x, nu), x)] = c
        return out

    def expand_full_T(self, a: "BLElt") -> dict[tuple[Coweight, WeylElt], LaurentT]:
        return self.expand_full_T_raw(a.terms)

    def assemble_full_T(self, coeffs: Mapping) -> "BLElt":
        out: Raw = {}
        for (mu, x), c in coeffs.items():
            add_bl_all(out, self.t_basis_raw(tuple(mu), x), c)
        return BLElt(self, out)

    def right_decomposition_raw(self, a: Mapping) -> Raw:
        """(h_nu) with a = sum T_nu h_nu."""
        out: Raw = {}
        for (mu, x), c in self.expand_full_T_raw(a).items():
            add_bl(out, mu, self.right_chain(mu, x), c)
        return out

    def coeff_T_right(self, a: "BLElt", nu: Iterable[int]) -> HWElt:
        return HWElt(self.H, self.right_decomposition_raw(a.terms).get(tuple(nu), {}))

    def assemble_right(self, coeffs: Mapping) -> "BLElt":
        """sum T_nu h_nu."""
        out: Raw = {}
        for nu, h in coeffs.items():
            terms = h.terms if isinstance(h, HWElt) else h
            add_bl_all(out, self.right_hw(self.t_basis_raw(tuple(nu)), terms))
        return BLElt(self, out)

    # anti-involution

    def psi_raw(self, a: Mapping) -> Raw:
        """
        The anti-automorphism fixing every T_i and Z^lambda: T_w Z^lambda ->
        Z^lambda T_{w^{-1}}, computed as (sum_lambda c_{lambda,w} Z^lambda) T_{w^{-1}}.
        """
        groups: dict[WeylElt, Raw] = {}
        for lam, h in a.items():
            for w, c in h.items():
                groups.setdefault(w.inverse(), {})[lam] = {self.e: c}
        out: Raw = {}
        for v, x in groups.items():
            add_bl_all(out, self.mul_raw(x, {self.zero_weight: {v: self.H.one}}))
        return out

    def psi_raw_by_zt(self, a: Mapping) -> Raw:
        """psi through the memoized normal forms of Z^lambda T_w."""
        out: Raw = {}
        for lam, h in a.items():
            for w, c in h.items():
                add_bl_all(out, self.zt(lam, w.inverse()), c)
        return out

    def anti_involution(self, a: "BLElt") -> "BLElt":
        return BLElt(self, self.psi_raw(a.terms))


class BLElt:
    """An element of the Iwahori-Hecke algebra, as sum_lambda h_lambda Z^lambda."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: BLAlgebra, terms: Mapping | None = None):
        self.alg = alg
        self.terms: Raw = {}
        for lam, h in (terms or {}).items():
            h = {w: c for w, c in h.items() if c}
            if h:
                self.terms[tuple(lam)] = h

    def _wrap(self, other) -> "BLElt":
        if isinstance(other, BLElt):
            return other
        if isinstance(other, HWElt):
            return self.alg.from_hw(other)
        return self.alg.scalar(other)

    def __add__(self, other) -> "BLElt":
        out = {lam: dict(h) for lam, h in self.terms.items()}
        add_bl_all(out, self._wrap(other).terms)
        return BLElt(self.alg, out)

    __radd__ = __add__

    def __neg__(self) -> "BLElt":
        return BLElt(self.alg, {lam: scale_raw(h, -1) for lam, h in self.terms.items()})

    def __sub__(self, other) -> "BLElt":
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> "BLElt":
        return self._wrap(other) - self

    def __mul__(self, other) -> "BLElt":
        if isinstance(other, (int, LaurentT)):
            c = self.alg.H.coerce(other)
            return BLElt(self.alg, {lam: scale_raw(h, c) for lam, h in self.terms.items()})
        return BLElt(self.alg, self.alg.mul_raw(self.terms, self._wrap(other).terms))

    def __rmul__(self, other) -> "BLElt":
        if isinstance(other, (int, LaurentT)):
            return self * other
        return BLElt(self.alg, self.alg.mul_raw(self._wrap(other).terms, self.terms))

    def __eq__(self, other) -> bool:
        if isinstance(other, (BLElt, HWElt, int, LaurentT)):
            return self.terms == self._wrap(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset((lam, frozenset(h.items())) for lam, h in self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff_Z(self, lam: Iterable[int]) -> HWElt:
        return HWElt(self.alg.H, self.terms.get(tuple(lam), {}))

    def supp_Z(self) -> set[Coweight]:
        return set(self.terms)

    def length(self) -> int:
        if not self.terms:
            raise ZeroElement("length of the zero element is undefined")
        return max(w.length for h in self.terms.values() for w in h)

    def to_json(self) -> list[dict]:
        rows = []
        for lam in sorted(self.terms):
            for w in sorted(self.terms[lam]):
                rows.append({"word": list(w.word), "coweight": list(lam),
                             "coeff": self.terms[lam][w].to_json()})
        return rows

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms):
            h = HWElt(self.alg.H, self.terms[lam])
            parts.append(f"({h})*Z{list(lam)}")
        return " + ".join(parts)


def bl_algebra(datum: RootDatum) -> BLAlgebra:
    """The shared Bernstein-Lusztig algebra context of a datum."""
    B = getattr(datum, "_bl_algebra", None)
    if B is None:
        B = BLAlgebra(datum)
        datum._bl_algebra = B
    return B


def bl_from_json(alg: BLAlgebra, rows: Iterable[Mapping]) -> BLElt:
    out: Raw = {}
    for row in rows:
        w = alg.W.from_word(row["word"])
        c = LaurentT.from_json(row["coeff"], alg.N)
        add_bl(out, tuple(row["coweight"]), {w: c})
    return BLElt(alg, out)
