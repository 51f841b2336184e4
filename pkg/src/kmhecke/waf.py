"""
Almost-finite and Weyl-almost-finite supports, and Looijenga series.

A set E of coweights is almost finite when it lies below finitely many
points for the dominance order, and Weyl almost finite (WAF) when its whole
W_0-orbit is. For E inside the Tits cone the latter means that the dominant
representatives of E are bounded by a finite set of dominant maxima, which is
what a ``WafCertificate`` stores.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Union

from .errors import NotDominant
from .laurent import LaurentT
from .rootdata import Coweight, RootDatum, vadd, vscale, vsub
from .weyl import weyl_group

__all__ = [
    "Finite", "Orbit", "Ray", "UnionFamily", "SupportFamily", "WafCertificate",
    "Classification", "classify", "certificate_sum", "maxima", "LooijengaSeries",
    "orbit_sum", "monomial", "looijenga_coeff", "counterexample_report", "ray_witness",
    "family_from_json",
]


@dataclass(frozen=True)
class Finite:
    points: frozenset[Coweight]


@dataclass(frozen=True)
class Orbit:
    base: Coweight


@dataclass(frozen=True)
class Ray:
    """base - k alpha_i^vee for k >= 0."""
    base: Coweight
    i: int


@dataclass(frozen=True)
class UnionFamily:
    parts: tuple


SupportFamily = Union[Finite, Orbit, Ray, UnionFamily]


def maxima(datum: RootDatum, points: Iterable[Coweight]) -> frozenset[Coweight]:
    """The dominance-maximal elements of a finite set."""
    pts = set(map(tuple, points))
    leq = datum.dominance_leq
    return frozenset(p for p in pts if not any(o != p and leq(p, o) for o in pts))


@dataclass(frozen=True)
class WafCertificate:
    """Dominant bounds M: every certified lambda has lambda^{++} <= m for some m in M."""

    maxima: frozenset[Coweight] = frozenset()

    def covers(self, datum: RootDatum, lam: Iterable[int]) -> bool:
        ans = weyl_group(datum).in_tits_cone(tuple(lam))
        if not ans.inside:
            return False
        return any(datum.dominance_leq(ans.dominant, m) for m in self.maxima)

    def union(self, datum: RootDatum, other: "WafCertificate") -> "WafCertificate":
        return WafCertificate(maxima(datum, self.maxima | other.maxima))

    def to_json(self) -> list[list[int]]:
        return [list(m) for m in sorted(self.maxima)]


def certificate_sum(datum: RootDatum, c1: WafCertificate, c2: WafCertificate) -> WafCertificate:
    """Bounds for S1 + S2 from bounds for S1 and S2: the maxima of {(m1 + m2)^{++}}."""
    W = weyl_group(datum)
    sums = {W.dominant_rep(vadd(a, b))[0] for a in c1.maxima for b in c2.maxima}
    return WafCertificate(maxima(datum, sums))


@dataclass
class Classification:
    af: bool | None
    waf: str  # "yes" | "no" | "unknown"
    certificate: WafCertificate | None = None
    witness: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "af": self.af,
            "waf": self.waf,
            "certificate": self.certificate.to_json() if self.certificate else None,
            "witness": self.witness,
        }


def ray_witness(datum: RootDatum, lam: Coweight, i: int, K: int = 8) -> list[dict]:
    """
    Points lambda - k alpha_i^vee with their dominant representatives; on an
    affine datum the heights of the representatives grow without bound.
    """
    W = weyl_group(datum)
    out = []
    for k in range(K + 1):
        p = vsub(lam, vscale(k, datum.coroots[i]))
        ans = W.in_tits_cone(p)
        row = {"k": k, "point": list(p), "tag": ans.tag}
        if ans.inside:
            row["dominant"] = list(ans.dominant)
            row["ht"] = str(datum.ht(ans.dominant))
        out.append(row)
    return out


def _first_exit(datum: RootDatum, lam: Coweight, i: int, limit: int = 10_000) -> int | None:
    """Least k with lambda - k alpha_i^vee outside the Tits cone, if found below the limit."""
    W = weyl_group(datum)
    for k in range(limit):
        if W.in_tits_cone(vsub(lam, vscale(k, datum.coroots[i]))).tag == "outside":
            return k
    return None


def classify(datum: RootDatum, family: SupportFamily, witness_len: int = 8) -> Classification:
    W = weyl_group(datum)
    if isinstance(family, Finite):
        doms = []
        unknown = False
        for p in family.points:
            ans = W.in_tits_cone(p)
            if ans.tag == "outside":
                return Classification(True, "no", None, [{"outside_tits_cone": list(p)}])
            if ans.tag == "unknown":
                unknown = True
            else:
                doms.append(ans.dominant)
        if unknown:
            return Classification(True, "unknown")
        return Classification(True, "yes", WafCertificate(maxima(datum, doms)))
    if isinstance(family, Orbit):
        if not datum.is_dominant(family.base):
            raise NotDominant(f"{family.base} is not dominant")
        return Classification(True, "yes", WafCertificate(frozenset({tuple(family.base)})))
    if isinstance(family, Ray):
        lam, i = tuple(family.base), family.i
        # the ray lies below its base, so it is always almost finite
        if datum.kind in ("finite", "affine"):
            # r_i of the ray is r_i(lambda) + Z_{>=0} alpha_i^vee, unbounded above
            return Classification(True, "no", None, ray_witness(datum, lam, i, witness_len))
        if datum.kind == "indefinite" and datum.rank == 2 and datum.light_cone_form is not None:
            # alpha_i^vee is spacelike, so the ray leaves the Tits cone; WAF sets lie in Y^+
            k = _first_exit(datum, lam, i)
            if k is not None:
                return Classification(True, "no", None, ray_witness(datum, lam, i, max(k, witness_len)))
        return Classification(True, "unknown")
    if isinstance(family, UnionFamily):
        parts = [classify(datum, p, witness_len) for p in family.parts]
        af = None if any(p.af is None for p in parts) else all(p.af for p in parts)
        if any(p.waf == "no" for p in parts):
            wit = [w for p in parts if p.waf == "no" for w in p.witness]
            return Classification(af, "no", None, wit)
        if any(p.waf == "unknown" for p in parts):
            return Classification(af, "unknown")
        cert = WafCertificate()
        for p in parts:
            cert = cert.union(datum, p.certificate)
        return Classification(af, "yes", cert)
    raise TypeError(f"not a support family: {family!r}")


def counterexample_report(datum: RootDatum, lam: Coweight, i: int, L: int = 6) -> dict:
    """
    For E = {w(lambda) + alpha_i^vee}: each sampled u.E lies below
    lambda + u(alpha_i^vee), while the points lambda + u(alpha_i^vee) of W_0.E
    have dominant representatives of unbounded height.
    """
    W = weyl_group(datum)
    lam = tuple(lam)
    cor = datum.coroots[i]
    orbit = list(W.orbit_upto(lam, L))
    elems = W.elements_upto(L)
    bounded = []
    for u in elems:
        bound = vadd(lam, W.act(u, cor))
        pts = [W.act(u, vadd(p, cor)) for p in orbit]
        bounded.append({"u": list(u.word), "bound": list(bound),
                        "holds": all(datum.dominance_leq(p, bound) for p in pts)})
    chain = []
    for u in elems:
        p = vadd(lam, W.act(u, cor))
        ans = W.in_tits_cone(p)
        if ans.inside:
            chain.append((datum.ht(ans.dominant), ans.dominant, u))
    chain.sort(key=lambda t: (t[0], t[1]))
    # keep a strictly increasing chain of dominant representatives
    strict = []
    for h, dom, u in chain:
        if not strict or (dom != strict[-1][1] and datum.dominance_leq(strict[-1][1], dom)):
            strict.append((h, dom, u))
    return {
        "u_bounded": bounded,
        "increasing_maxima": [{"u": list(u.word), "dominant": list(dom), "ht": str(h)}
                              for h, dom, u in strict],
    }


class LooijengaSeries:
    """A formal series sum a_mu Z^mu with a dominance bound on its support."""

    def __init__(self, datum: RootDatum, coeff: Callable[[Coweight], LaurentT | int],
                 bounds: Iterable[Coweight], name: str = "series"):
        self.datum = datum
        self._coeff = coeff
        self.bounds = frozenset(map(tuple, bounds))
        self.name = name

    def coeff(self, mu: Iterable[int]) -> LaurentT | int:
        return self._coeff(tuple(mu))

    def __repr__(self) -> str:
        return f"LooijengaSeries({self.name})"


def monomial(datum: RootDatum, terms: Mapping[Coweight, LaurentT | int] | Coweight) -> LooijengaSeries:
    """A finite series; a bare coweight means Z^lambda."""
    if not isinstance(terms, Mapping):
        terms = {tuple(terms): 1}
    terms = {tuple(k): v for k, v in terms.items() if v}
    return LooijengaSeries(datum, lambda mu: terms.get(mu, 0), maxima(datum, terms),
                           name=f"finite{sorted(terms)}")


def orbit_sum(datum: RootDatum, dom: Iterable[int]) -> LooijengaSeries:
    """sum of Z^mu over the W_0-orbit of a dominant coweight."""
    dom = tuple(dom)
    if not datum.is_dominant(dom):
        raise NotDominant(f"{dom} is not dominant")
    W = weyl_group(datum)

    def coeff(mu: Coweight) -> int:
        if not datum.dominance_leq(mu, dom):
            return 0
        ans = W.in_tits_cone(mu)
        return int(ans.inside and ans.dominant == dom)

    return LooijengaSeries(datum, coeff, [dom], name=f"orbit{list(dom)}")


def looijenga_coeff(x: LooijengaSeries, y: LooijengaSeries, nu: Iterable[int]):
    """The Z^nu coefficient of x y: sum of a_lambda b_mu over lambda + mu = nu."""
    datum = x.datum
    nu = tuple(nu)
    seen: set[Coweight] = set()
    total = 0
    for m1 in x.bounds:
        for m2 in y.bounds:
            for lam in datum.box_interval(vsub(nu, m2), m1):
                if lam in seen:
                    continue
                seen.add(lam)
                a = x.coeff(lam)
                if a:
                    b = y.coeff(vsub(nu, lam))
                    if b:
                        total = total + a * b
    return total


def family_from_json(data) -> SupportFamily:
    """Families as JSON: {"finite": [[...], ...]}, {"orbit": [...]}, {"ray": [...], "i": k}, {"union": [...]}."""
    if "finite" in data:
        return Finite(frozenset(tuple(p) for p in data["finite"]))
    if "orbit" in data:
        return Orbit(tuple(data["orbit"]))
    if "ray" in data:
        return Ray(tuple(data["ray"]), int(data["i"]))
    if "union" in data:
        return UnionFamily(tuple(family_from_json(p) for p in data["union"]))
    raise ValueError(f"unknown family {data!r}")
