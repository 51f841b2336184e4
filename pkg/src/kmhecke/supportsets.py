"""
Support operators on coweights.

For a simple index i and a coweight lambda with a = alpha_i(lambda), the four
one-step operators are

    plain:  {r_i(lambda)} if a >= 0, else {lambda, r_i(lambda)}
    bar:    plain together with the open segment ]lambda, r_i(lambda)[
    tilde:  [lambda, r_i(lambda)] if a >= 0, else ]lambda, r_i(lambda)]
    hat:    [lambda, r_i(lambda)]

(segments are lattice points on the alpha_i^vee line). A word acts by
composition from right to left, and an element w by the union over all of
its reduced words. These sets bound Z-supports: Z^lambda T_w is supported in
tilde_{w^{-1}}(lambda) and Z^lambda T_w^{-1} in bar_w(lambda).
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import NotComparable
from .rootdata import Coweight, RootDatum, vadd, vscale, vsub
from .weyl import WeylElt, weyl_group

__all__ = [
    "VARIANTS", "script_T_step", "script_T_word", "script_T_of_elt", "script_S",
    "reverse_tilde_T", "depth", "m_lambda", "depth_and_m",
]

VARIANTS = ("plain", "bar", "tilde", "hat")


def script_T_step(datum: RootDatum, variant: str, i: int, lam: Iterable[int]) -> frozenset[Coweight]:
    lam = tuple(lam)
    a = datum.pair(i, lam)
    r = datum.reflect(i, lam)
    if variant == "plain":
        return frozenset({r} if a >= 0 else {lam, r})
    if variant == "bar":
        base = {r} if a >= 0 else {lam, r}
        return frozenset(base.union(datum.line_interval(lam, i, "open")))
    if variant == "tilde":
        mode = "closed" if a >= 0 else "open-left"
        return frozenset(datum.line_interval(lam, i, mode))
    if variant == "hat":
        return frozenset(datum.line_interval(lam, i, "closed"))
    raise ValueError(f"unknown variant {variant!r}")


def script_T_word(datum: RootDatum, variant: str, word: Iterable[int],
                  E: Iterable[Iterable[int]]) -> frozenset[Coweight]:
    """The operator of the word (i_1, ..., i_k): apply i_k first and i_1 last."""
    cur = {tuple(x) for x in E}
    for i in reversed(tuple(word)):
        nxt: set[Coweight] = set()
        for lam in cur:
            nxt |= script_T_step(datum, variant, i, lam)
        cur = nxt
    return frozenset(cur)


def script_T_of_elt(datum: RootDatum, variant: str, w: WeylElt,
                    E: Iterable[int] | Iterable[Iterable[int]], cap: int | None = None) -> frozenset[Coweight]:
    """Union of the word operators over all reduced words of w."""
    E = _as_set(E)
    out: set[Coweight] = set()
    for word in weyl_group(datum).all_reduced_words(w, cap):
        out |= script_T_word(datum, variant, word, E)
    return frozenset(out)


def _as_set(E) -> set[Coweight]:
    E = list(E)
    if E and isinstance(E[0], int):
        return {tuple(E)}
    return {tuple(x) for x in E}


def script_S(datum: RootDatum, w: WeylElt, lam: Iterable[int], cap: int | None = None) -> frozenset[Coweight]:
    """{v(lambda) : v <= w and v(lambda) <= w(lambda)}."""
    W = weyl_group(datum)
    lam = tuple(lam)
    top = W.act(w, lam)
    return frozenset(W.act(v, lam) for v in W.bruhat_lower_interval(w, cap)
                     if datum.dominance_leq(W.act(v, lam), top))


def _admissible(datum: RootDatum, mu: Coweight, m: Coweight) -> bool | None:
    """mu in Y^+ with mu^{++} <= m; None when Tits-cone membership is undecided."""
    if not datum.dominance_leq(mu, m):
        return False
    ans = weyl_group(datum).in_tits_cone(mu)
    if ans.tag == "outside":
        return False
    if ans.tag == "unknown":
        return None
    return datum.dominance_leq(ans.dominant, m)


def _tilde_predecessors(datum: RootDatum, tau: Coweight, i: int, m: Coweight) -> list[Coweight]:
    """All mu <= m on the alpha_i^vee line through tau with tau in tilde_i(mu)."""
    gap = datum.coroot_coords(vsub(m, tau))
    if gap is None or any(g < 0 for j, g in enumerate(gap) if j != i):
        return []
    a = datum.pair(i, tau)
    c = gap[i]
    cor = datum.coroots[i]
    out = []
    # mu = tau + k alpha_i^vee, r_i(mu) = tau - (a + k) alpha_i^vee; both must lie below m
    for k in range(-a - c, c + 1):
        if a + 2 * k >= 0:
            ok = k >= 0 and a + k >= 0
        else:
            ok = k < 0 and k <= -a
        if ok:
            out.append(vadd(tau, vscale(k, cor)))
    return out


def reverse_tilde_T(datum: RootDatum, tau: Iterable[int], w: WeylElt, m: Iterable[int],
                    cap: int | None = None) -> tuple[frozenset[Coweight], bool]:
    """
    All lambda in Y^+ with tau in tilde_{w^{-1}}(lambda) and lambda^{++} <= m.

    Returns (set, exact). Every point visited on the way lies in the convex
    hull of the orbit of lambda, so its dominant representative is also below
    m; this bounds each backward step to a finite segment. Branches with an
    undecided Tits-cone answer are kept and clear the exact flag.
    """
    tau, m = tuple(tau), tuple(m)
    W = weyl_group(datum)
    exact = True
    found: set[Coweight] = set()
    start = _admissible(datum, tau, m)
    if start is False:
        return frozenset(), True
    if start is None:
        exact = False
    for word in W.all_reduced_words(w, cap):
        # tilde_{w^{-1}} applies the letters of ``word`` in order, so undo them from the end
        layer = {tau}
        for i in reversed(word):
            nxt: set[Coweight] = set()
            for t in layer:
                for mu in _tilde_predecessors(datum, t, i, m):
                    ok = _admissible(datum, mu, m)
                    if ok is None:
                        exact = False
                    if ok is not False:
                        nxt.add(mu)
            layer = nxt
            if not layer:
                break
        found |= layer
    return frozenset(found), exact


def depth(datum: RootDatum, lam: Iterable[int], mu: Iterable[int]) -> int:
    """ht(lambda^{++} - mu^{++}) for mu in lambda + Q^vee."""
    lam, mu = tuple(lam), tuple(mu)
    if datum.coroot_coords(vsub(lam, mu)) is None:
        raise NotComparable(f"{mu} is not in {lam} + Q^vee")
    W = weyl_group(datum)
    ld, _ = W.dominant_rep(lam)
    md, _ = W.dominant_rep(mu)
    return int(datum.ht(vsub(ld, md)))


def m_lambda(datum: RootDatum, lam: Iterable[int], i: int) -> float | int:
    """Minimal depth over the open segment ]lambda, r_i(lambda)[, or +inf when it is empty."""
    lam = tuple(lam)
    pts = datum.line_interval(lam, i, "open")
    if not pts:
        return math.inf
    return min(depth(datum, lam, mu) for mu in pts)


def depth_and_m(datum: RootDatum, lam: Iterable[int], mu: Iterable[int], i: int) -> tuple[int, float | int]:
    return depth(datum, lam, mu), m_lambda(datum, lam, i)

