"""
The completed algebra: formal series sum h_lambda Z^lambda whose support is
Weyl almost finite, with coefficientwise convolution.

Elements are lazy. A ``CompletedElt`` carries a coefficient evaluator
(memoized per coweight), a ``WafCertificate`` bounding its support, and a
class-support enumerator listing the nonzero coweights of one W_0-orbit up
to a length bound. Every answer that depends on a bounded search carries a
flag: ``"exact"`` or ``"complete_under_bound"``.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Mapping

from .blalgebra import BLAlgebra, BLElt, Raw, add_bl, bl_algebra
from .errors import NotDominant
from .heckew import HWElt, add_into, scale_raw
from .laurent import LaurentT
from .rootdata import Coweight, RootDatum, vsub
from .supportsets import reverse_tilde_T
from .waf import WafCertificate, certificate_sum, maxima
from .weyl import WeylElt, weyl_group

__all__ = [
    "EXACT", "BOUNDED", "CompletedElt", "SummableFamily", "from_finite", "z_orbit_series",
    "t_orbit_series", "completed_mul", "decompose_Tw_theta", "t_expand_window",
    "verify_central_window", "depth_window", "orbit_window",
]

EXACT = "exact"
BOUNDED = "complete_under_bound"

CoeffFn = Callable[[Coweight], tuple[dict, bool]]
ClassFn = Callable[[Coweight, int], tuple[frozenset, bool]]


def _flag(exact: bool) -> str:
    return EXACT if exact else BOUNDED


def orbit_window(datum: RootDatum, dom: Coweight, L: int) -> tuple[dict[Coweight, WeylElt], bool]:
    """orbit_upto(dom, L) and whether it is the whole orbit."""
    W = weyl_group(datum)
    orb = W.orbit_upto(dom, L)
    return orb, len(W.orbit_upto(dom, L + 1)) == len(orb)


def _dominant_below(datum: RootDatum, m: Coweight, D: int) -> list[Coweight]:
    """Dominant lambda <= m with ht(m - lambda) <= D, by increasing height gap."""
    out = []
    seen = {m}
    layer = [m]
    for _ in range(D + 1):
        out.extend(p for p in layer if datum.is_dominant(p))
        nxt = []
        for p in layer:
            for cor in datum.coroots:
                r = vsub(p, cor)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        layer = nxt
    return out


def depth_window(datum: RootDatum, cert: WafCertificate, D: int, L: int) -> list[Coweight]:
    """nu with ht(m - nu^{++}) <= D for some certificate bound m and l(w_nu) <= L."""
    W = weyl_group(datum)
    out: set[Coweight] = set()
    for m in cert.maxima:
        for dom in _dominant_below(datum, m, D):
            out |= set(W.orbit_upto(dom, L))
    return sorted(out)


class CompletedElt:
    """An element of the completed algebra, evaluated lazily."""

    def __init__(self, alg: BLAlgebra, coeff_fn: CoeffFn, certificate: WafCertificate,
                 class_fn: ClassFn | None = None, name: str = "elt"):
        self.alg = alg
        self.datum = alg.datum
        self._coeff_fn = coeff_fn
        self.certificate = certificate
        self._class_fn = class_fn
        self.name = name
        self._cache: dict[Coweight, tuple[dict, bool]] = {}

    # coefficients

    def coeff_flagged(self, nu: Iterable[int]) -> tuple[dict, bool]:
        """(raw coefficient of Z^nu, exact)."""
        nu = tuple(nu)
        out = self._cache.get(nu)
        if out is None:
            out = self._coeff_fn(nu) if self._covered(nu) else ({}, True)
            self._cache[nu] = out
        return out

    def _covered(self, nu: Coweight) -> bool:
        # nu <= nu^{++}, so the cheap dominance test comes first
        d = self.datum
        if not any(d.dominance_leq(nu, m) for m in self.certificate.maxima):
            return False
        ans = weyl_group(d).in_tits_cone(nu)
        # undecided points are evaluated anyway; the evaluator flags them
        return ans.tag == "unknown" or any(d.dominance_leq(ans.dominant, m)
                                           for m in self.certificate.maxima if ans.inside)

    def coeff_raw(self, nu: Iterable[int]) -> dict:
        return self.coeff_flagged(nu)[0]

    def coeff(self, nu: Iterable[int]) -> HWElt:
        return HWElt(self.alg.H, self.coeff_raw(nu))

    def class_support(self, dom: Iterable[int], L: int) -> tuple[frozenset[Coweight], str]:
        """Nonzero coweights of W_0.dom with l(w_lambda) <= L, and a completeness flag."""
        dom = tuple(dom)
        if not self.datum.is_dominant(dom):
            raise NotDominant(f"{dom} is not dominant")
        if not any(self.datum.dominance_leq(dom, m) for m in self.certificate.maxima):
            return frozenset(), EXACT
        if self._class_fn is not None:
            pts, exact = self._class_fn(dom, L)
            return pts, _flag(exact)
        exact = True
        pts = set()
        for lam in weyl_group(self.datum).orbit_upto(dom, L):
            h, ex = self.coeff_flagged(lam)
            exact = exact and ex
            if h:
                pts.add(lam)
        return frozenset(pts), _flag(exact)

    def restrict(self, window: Iterable[Iterable[int]]) -> BLElt:
        """The finite element sum over the window of coeff(lambda) Z^lambda."""
        out = {}
        for lam in window:
            h = self.coeff_raw(lam)
            if h:
                out[tuple(lam)] = dict(h)
        return BLElt(self.alg, out)

    # arithmetic

    def __add__(self, other: "CompletedElt") -> "CompletedElt":
        return SummableFamily([self, other]).sum()

    def __neg__(self) -> "CompletedElt":
        return self.scale(-1)

    def __sub__(self, other: "CompletedElt") -> "CompletedElt":
        return self + (-other)

    def scale(self, c) -> "CompletedElt":
        c = self.alg.H.coerce(c)

        def coeff(nu):
            h, ex = self.coeff_flagged(nu)
            return scale_raw(h, c), ex

        return CompletedElt(self.alg, coeff, self.certificate if c else WafCertificate(),
                            self._class_fn if c else None, name=f"({c})*{self.name}")

    def __mul__(self, other) -> "CompletedElt":
        if isinstance(other, CompletedElt):
            return completed_mul(self, other)
        if isinstance(other, BLElt):
            return completed_mul(self, from_finite(other))
        return self.scale(other)

    def __rmul__(self, other) -> "CompletedElt":
        if isinstance(other, BLElt):
            return completed_mul(from_finite(other), self)
        return self.scale(other)

    def __repr__(self) -> str:
        return f"CompletedElt({self.name}, certificate={self.certificate.to_json()})"


class SummableFamily:
    """A finite family of completed elements; its sum is again completed."""

    def __init__(self, members: Iterable[CompletedElt]):
        self.members = list(members)

    def sum(self) -> CompletedElt:
        if not self.members:
            raise ValueError("empty family has no algebra context")
        alg = self.members[0].alg
        cert = WafCertificate()
        for a in self.members:
            cert = cert.union(alg.datum, a.certificate)
        members = self.members

        def coeff(nu):
            out: dict = {}
            exact = True
            for a in members:
                h, ex = a.coeff_flagged(nu)
                exact = exact and ex
                add_into(out, h)
            return out, exact

        return CompletedElt(alg, coeff, cert, name="+".join(a.name for a in members))


# constructors

def from_finite(a: BLElt) -> CompletedElt:
    """The embedding of the Hecke algebra into its completion."""
    alg = a.alg
    W = alg.W
    terms = {lam: dict(h) for lam, h in a.terms.items()}
    doms = {lam: W.dominant_rep(lam)[0] for lam in terms}
    cert = WafCertificate(maxima(alg.datum, doms.values()))

    def coeff(nu):
        return terms.get(nu, {}), True

    def classes(dom, L):
        return frozenset(lam for lam in terms if doms[lam] == dom
                         and W.dominant_rep(lam)[1].length <= L), True

    return CompletedElt(alg, coeff, cert, classes, name="finite")


def _check_dom(datum: RootDatum, dom) -> Coweight:
    dom = tuple(dom)
    if not datum.is_dominant(dom):
        raise NotDominant(f"{dom} is not dominant")
    return dom


def z_orbit_series(datum: RootDatum, dom: Iterable[int], weight=1) -> CompletedElt:
    """weight times the sum of Z^mu over the W_0-orbit of dom."""
    alg = bl_algebra(datum)
    dom = _check_dom(datum, dom)
    c = alg.H.coerce(weight)
    W = alg.W

    def coeff(nu):
        if not datum.dominance_leq(nu, dom):
            return {}, True
        ans = W.in_tits_cone(nu)
        if ans.tag == "unknown":
            return {}, False
        return ({alg.e: c} if ans.inside and ans.dominant == dom and c else {}), True

    def classes(d, L):
        if d != dom or not c:
            return frozenset(), True
        return frozenset(W.orbit_upto(dom, L)), True

    return CompletedElt(alg, coeff, WafCertificate(frozenset({dom})), classes,
                        name=f"Zorbit{list(dom)}")


def t_orbit_series(datum: RootDatum, dom: Iterable[int], weight=1, L: int = 8) -> CompletedElt:
    """
    weight times the sum of T_mu over the W_0-orbit of dom. Z-coefficients
    sum the normal forms of T_mu for l(w_mu) <= L; they are exact only when
    the orbit is exhausted within that bound.
    """
    alg = bl_algebra(datum)
    dom = _check_dom(datum, dom)
    c = alg.H.coerce(weight)
    orbit, exhausted = orbit_window(datum, dom, L)

    def coeff(nu):
        out: dict = {}
        for mu in orbit:
            h = alg.t_basis_raw(mu).get(nu)
            if h:
                add_into(out, h, c)
        return out, exhausted

    def classes(d, L2):
        # coefficients in other classes exist too, but each costs an orbit-wide scan
        orb, _ = orbit_window(datum, d, L2)
        return frozenset(lam for lam in orb if series.coeff_raw(lam)), False

    series = CompletedElt(alg, coeff, WafCertificate(frozenset({dom})), classes,
                          name=f"Torbit{list(dom)}")
    return series


# convolution

def completed_mul(a: CompletedElt, b: CompletedElt) -> CompletedElt:
    """
    The convolution product. The Z^nu coefficient collects the pairs
    (lambda, mu) with a_lambda Z^lambda b_mu Z^mu contributing to Z^nu:
    mu ranges over the box [nu - m1, m2] and lambda over the coweights from
    which tau = nu - mu is reachable by the tilde operator of some w in the
    support of b_mu.
    """
    alg = a.alg
    datum = alg.datum
    H = alg.H
    cert = certificate_sum(datum, a.certificate, b.certificate)
    m1s = sorted(a.certificate.maxima)
    m2s = sorted(b.certificate.maxima)

    def coeff(nu):
        out: dict = {}
        exact = True
        mus: set[Coweight] = set()
        for m1 in m1s:
            for m2 in m2s:
                mus.update(datum.box_interval(vsub(nu, m1), m2))
        for mu in sorted(mus):
            g, ex = b.coeff_flagged(mu)
            exact = exact and ex
            if not g:
                continue
            tau = vsub(nu, mu)
            lams: set[Coweight] = set()
            for w in g:
                for m1 in m1s:
                    found, ex = reverse_tilde_T(datum, tau, w, m1)
                    exact = exact and ex
                    lams |= found
            for lam in sorted(lams):
                h, ex = a.coeff_flagged(lam)
                exact = exact and ex
                if not h:
                    continue
                k: dict = {}
                for w, cw in g.items():
                    add_into(k, alg.zt(lam, w).get(tau, {}), cw)
                if k:
                    add_into(out, H.mul(h, k))
        return out, exact

    return CompletedElt(alg, coeff, cert, name=f"({a.name})*({b.name})")


# decompositions

def decompose_Tw_theta(a: CompletedElt, window: Iterable[Iterable[int]]) -> dict[WeylElt, dict[Coweight, LaurentT]]:
    """theta_w on the window, with a = sum_w T_w theta_w."""
    out: dict[WeylElt, dict[Coweight, LaurentT]] = {}
    for lam in window:
        lam = tuple(lam)
        for w, c in a.coeff_raw(lam).items():
            out.setdefault(w, {})[lam] = c
    return out


def assemble_Tw_theta(alg: BLAlgebra, theta: Mapping[WeylElt, Mapping[Coweight, LaurentT]]) -> BLElt:
    """sum_w T_w theta_w for finitely supported theta."""
    out: Raw = {}
    for w, series in theta.items():
        for lam, c in series.items():
            add_bl(out, lam, {w: c})
    return BLElt(alg, out)


def t_expand_window(a: CompletedElt, window: Iterable[Iterable[int]], L: int) -> tuple[dict[Coweight, HWElt], str]:
    """
    h_nu with a = sum h_nu T_nu, for nu in the window. Contributors lambda
    satisfy nu^{++} <= lambda^{++} <= m for a certificate bound m; each class
    is searched up to length L.
    """
    alg = a.alg
    datum = alg.datum
    W = alg.W
    H = alg.H
    exact = True
    out: dict[Coweight, HWElt] = {}
    for nu in window:
        nu = tuple(nu)
        ans = W.in_tits_cone(nu)
        if not ans.inside:
            exact = exact and ans.tag == "outside"
            continue
        classes: list[tuple] = []
        for m in a.certificate.maxima:
            for dom in datum.box_interval(ans.dominant, m):
                if datum.is_dominant(dom):
                    classes.append((datum.ht(vsub(m, dom)), dom))
        acc: dict = {}
        for _, dom in sorted(set(classes)):
            pts, flag = a.class_support(dom, L)
            _, exhausted = orbit_window(datum, dom, L)
            exact = exact and flag == EXACT and exhausted
            for lam in sorted(pts):
                h, ex = a.coeff_flagged(lam)
                exact = exact and ex
                k = alg.expand_z(lam).get(nu)
                if h and k:
                    add_into(acc, H.mul(h, k))
        if acc:
            out[nu] = HWElt(H, acc)
    return out, _flag(exact)


# the center

def _record(lemma: str, instance, ok: bool, witness=None) -> dict:
    return {"lemma": lemma, "instance": instance, "status": "pass" if ok else "fail",
            "witness": witness}


def random_finite(alg: BLAlgebra, rng: random.Random, terms: int = 3, maxlen: int = 2,
                  coord: int = 2) -> BLElt:
    """A random finite element sum c T_w Z^lambda with small supports."""
    W = alg.W
    elems = W.elements_upto(maxlen)
    pts = []
    n = alg.datum.n
    while len(pts) < terms:
        lam = tuple(rng.randint(-coord, coord) for _ in range(n))
        if W.in_tits_cone(lam).inside:
            pts.append(lam)
    out: Raw = {}
    for lam in pts:
        w = rng.choice(elems)
        c = LaurentT.const(rng.choice([-2, -1, 1, 2]), alg.N) * alg.H.q ** rng.randint(-1, 1)
        add_bl(out, lam, {w: c})
    return BLElt(alg, out)


def verify_central_window(datum: RootDatum, dom: Iterable[int], weight=1, window=None,
                          L: int = 8, samples: int = 20, seed: int = 0, depth: int = 3,
                          window_L: int = 2) -> dict:
    """
    Check that the orbit sum of Z^dom is central: the finite identities with
    each T_i on orbit points up to length L, then the commutator with random
    finite elements coefficientwise on a window. Without an explicit window,
    each commutator is checked on depth_window of the product certificate.
    """
    alg = bl_algebra(datum)
    dom = _check_dom(datum, dom)
    W = alg.W
    checks = []
    for lam in sorted(W.orbit_upto(dom, L), key=lambda p: (W.dominant_rep(p)[1].length, p)):
        for i in range(datum.rank):
            a = datum.pair(i, lam)
            Ti = alg.T([i])
            if a == 0:
                z = alg.Z(lam)
                ok = Ti * z == z * Ti
                checks.append(_record("T_i commutes with Z^lambda when alpha_i(lambda) = 0",
                                      {"lambda": list(lam), "i": i}, ok))
            elif a > 0:
                z = alg.Z(lam) + alg.Z(datum.reflect(i, lam))
                lhs, rhs = Ti * z, z * Ti
                ok = lhs == rhs
                checks.append(_record("T_i commutes with Z^lambda + Z^{r_i lambda}",
                                      {"lambda": list(lam), "i": i}, ok,
                                      None if ok else (lhs - rhs).to_json()))
    z = z_orbit_series(datum, dom, weight)
    rng = random.Random(seed)
    for s in range(samples):
        x = random_finite(alg, rng)
        fx = from_finite(x)
        zx, xz = completed_mul(z, fx), completed_mul(fx, z)
        win = window if window is not None else depth_window(datum, zx.certificate, depth, window_L)
        bad = []
        exact = True
        for nu in win:
            h1, e1 = zx.coeff_flagged(nu)
            h2, e2 = xz.coeff_flagged(nu)
            exact = exact and e1 and e2
            if h1 != h2:
                bad.append(list(nu))
        checks.append(_record("orbit sum commutes with a finite element on a window",
                              {"sample": s, "x": x.to_json(), "window_size": len(win),
                               "flag": _flag(exact)}, not bad, bad or None))
    return {"dominant": list(dom), "L": L, "checks": checks,
            "passed": all(c["status"] == "pass" for c in checks)}
