"""
The Weyl group of a root datum, acting on coweights.

Elements are integer matrices acting on Y; they are interned per group, so
each distinct element is built (and its reduced word computed) once. A
vector ``rho`` strictly inside the fundamental chamber detects descents:
i is a left descent of w iff alpha_i(w(rho)) < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LengthCapExceeded, NotDominant, NotInTitsCone, TitsConeUnknown
from .rootdata import Coweight, RootDatum

__all__ = ["WeylElt", "WeylGroup", "TitsConeAnswer", "weyl_group", "DEFAULT_CAP"]

DEFAULT_CAP = 12
DEFAULT_MAX_STEPS = 2000

Matrix = tuple[tuple[int, ...], ...]


class WeylElt:
    """A Weyl group element with its action matrix and lex-minimal reduced word."""

    __slots__ = ("group", "matrix", "word", "length", "_hash", "__weakref__")

    def __init__(self, group: "WeylGroup", matrix: Matrix, word: tuple[int, ...]):
        self.group = group
        self.matrix = matrix
        self.word = word
        self.length = len(word)
        self._hash = hash(matrix)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.mul(self, other)

    def __call__(self, v: Sequence[int]) -> Coweight:
        return self.group.act(self, v)

    def inverse(self) -> "WeylElt":
        return self.group.inverse(self)

    def is_identity(self) -> bool:
        return self.length == 0

    def __repr__(self) -> str:
        if not self.word:
            return "WeylElt(1)"
        return "WeylElt(" + "".join(f"r{i}" for i in self.word) + ")"

    def __lt__(self, other: "WeylElt") -> bool:
        # deterministic ordering for output: by length, then word
        return (self.length, self.word) < (other.length, other.word)


@dataclass(frozen=True)
class TitsConeAnswer:
    """Result of a Tits-cone membership query."""

    tag: str  # "inside" | "outside" | "unknown"
    dominant: Coweight | None = None
    w: WeylElt | None = None
    steps: int = 0

    @property
    def inside(self) -> bool:
        return self.tag == "inside"

    def require(self, v: Coweight) -> tuple[Coweight, WeylElt]:
        """Return (dominant representative, minimal w) or raise."""
        if self.tag == "inside":
            return self.dominant, self.w
        if self.tag == "outside":
            raise NotInTitsCone(f"{v} is not in the Tits cone")
        raise TitsConeUnknown(f"membership of {v} undecided after {self.steps} steps")


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _matvec(m: Matrix, v: Sequence[int]) -> Coweight:
    return tuple(sum(r * x for r, x in zip(row, v)) for row in m)


class WeylGroup:
    def __init__(self, datum: RootDatum, cap: int = DEFAULT_CAP):
        self.datum = datum
        self.cap = cap
        n, r = datum.n, datum.rank
        self._elements: dict[Matrix, WeylElt] = {}
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.identity = self._intern(ident, ())
        gens = []
        for i in range(r):
            # r_i(v) = v - alpha_i(v) coroot_i, column j is r_i(e_j)
            m = tuple(tuple(int(k == j) - datum.coroots[i][k] * datum.roots[i][j]
                            for j in range(n)) for k in range(n))
            gens.append(self._intern(m, (i,)))
        self.gens: tuple[WeylElt, ...] = tuple(gens)
        self._lmul: dict[tuple[int, WeylElt], WeylElt] = {}
        self._rmul: dict[tuple[WeylElt, int], WeylElt] = {}
        self._inv: dict[WeylElt, WeylElt] = {}
        self._tits: dict[Coweight, TitsConeAnswer] = {}
        self._leq: dict[tuple[WeylElt, WeylElt], bool] = {}
        self._interval: dict[WeylElt, frozenset[WeylElt]] = {}
        self._red: dict[WeylElt, frozenset[tuple[int, ...]]] = {}

    # construction

    def _reduced_word(self, m: Matrix) -> tuple[int, ...]:
        d = self.datum
        rho = d.rho
        v = _matvec(m, rho)
        word = []
        while v != rho:
            for i in range(d.rank):
                if d.pair(i, v) < 0:
                    break
            else:  # pragma: no cover - cannot happen for group elements
                raise ValueError("matrix is not in the Weyl group")
            word.append(i)
            v = d.reflect(i, v)
        return tuple(word)

    def _intern(self, m: Matrix, word: tuple[int, ...] | None = None) -> WeylElt:
        e = self._elements.get(m)
        if e is None:
            if word is None:
                word = self._reduced_word(m)
            e = WeylElt(self, m, word)
            self._elements[m] = e
        return e

    def gen(self, i: int) -> WeylElt:
        return self.gens[i]

    def from_word(self, word: Iterable[int]) -> WeylElt:
        w = self.identity
        for i in reversed(tuple(word)):
            w = self.lmul(i, w)
        return w

    def from_matrix(self, m: Sequence[Sequence[int]]) -> WeylElt:
        return self._intern(tuple(tuple(int(x) for x in row) for row in m))

    # arithmetic

    def lmul(self, i: int, w: WeylElt) -> WeylElt:
        """r_i w."""
        key = (i, w)
        out = self._lmul.get(key)
        if out is None:
            out = self._intern(_matmul(self.gens[i].matrix, w.matrix))
            self._lmul[key] = out
        return out

    def rmul(self, w: WeylElt, i: int) -> WeylElt:
        """w r_i."""
        key = (w, i)
        out = self._rmul.get(key)
        if out is None:
            out = self._intern(_matmul(w.matrix, self.gens[i].matrix))
            self._rmul[key] = out
        return out

    def mul(self, u: WeylElt, v: WeylElt) -> WeylElt:
        w = v
        for i in reversed(u.word):
            w = self.lmul(i, w)
        return w

    def inverse(self, w: WeylElt) -> WeylElt:
        out = self._inv.get(w)
        if out is None:
            out = self.from_word(reversed(w.word))
            self._inv[w] = out
            self._inv[out] = w
        return out

    def act(self, w: WeylElt, v: Sequence[int]) -> Coweight:
        return _matvec(w.matrix, v)

    def is_left_descent(self, i: int, w: WeylElt) -> bool:
        return self.datum.pair(i, _matvec(w.matrix, self.datum.rho)) < 0

    def is_right_descent(self, w: WeylElt, i: int) -> bool:
        return self.rmul(w, i).length < w.length

    def left_descents(self, w: WeylElt) -> list[int]:
        wr = _matvec(w.matrix, self.datum.rho)
        return [i for i in range(self.datum.rank) if self.datum.pair(i, wr) < 0]

    def length_and_word(self, w: WeylElt) -> tuple[int, tuple[int, ...]]:
        return w.length, w.word

    # words, Bruhat order

    def _check_cap(self, w: WeylElt, cap: int | None) -> None:
        cap = self.cap if cap is None else cap
        if w.length > cap:
            raise LengthCapExceeded(w.length, cap)

    def all_reduced_words(self, w: WeylElt, cap: int | None = None) -> frozenset[tuple[int, ...]]:
        self._check_cap(w, cap)
        return self._all_reduced(w)

    def _all_reduced(self, w: WeylElt) -> frozenset[tuple[int, ...]]:
        out = self._red.get(w)
        if out is None:
            if w.length == 0:
                out = frozenset({()})
            else:
                words = set()
                for i in self.left_descents(w):
                    for m in self._all_reduced(self.lmul(i, w)):
                        words.add((i,) + m)
                out = frozenset(words)
            self._red[w] = out
        return out

    def bruhat_leq(self, u: WeylElt, w: WeylElt) -> bool:
        if u.length > w.length:
            return False
        if u.length == 0:
            return True
        if u.length == w.length:
            return u == w
        key = (u, w)
        out = self._leq.get(key)
        if out is None:
            # for a left descent s of w: u <= w iff (su <= sw if s descends u, else u <= sw)
            s = w.word[0]
            sw = self.lmul(s, w)
            if self.is_left_descent(s, u):
                out = self.bruhat_leq(self.lmul(s, u), sw)
            else:
                out = self.bruhat_leq(u, sw)
            self._leq[key] = out
        return out

    def bruhat_lower_interval(self, w: WeylElt, cap: int | None = None) -> frozenset[WeylElt]:
        self._check_cap(w, cap)
        return self._interval_of(w)

    def _interval_of(self, w: WeylElt) -> frozenset[WeylElt]:
        out = self._interval.get(w)
        if out is None:
            if w.length == 0:
                out = frozenset({w})
            else:
                i = w.word[0]
                lower = self._interval_of(self.lmul(i, w))
                out = lower | frozenset(self.lmul(i, u) for u in lower)
            self._interval[w] = out
        return out

    def elements_upto(self, L: int) -> list[WeylElt]:
        """All elements of length <= L, by breadth-first search."""
        seen = {self.identity}
        frontier = [self.identity]
        out = [self.identity]
        for _ in range(L):
            nxt = []
            for w in frontier:
                for i in range(self.datum.rank):
                    u = self.lmul(i, w)
                    if u.length == w.length + 1 and u not in seen:
                        seen.add(u)
                        nxt.append(u)
            nxt.sort()
            out.extend(nxt)
            frontier = nxt
        return out

    # Tits cone and dominant representatives

    def in_tits_cone(self, v: Sequence[int], max_steps: int = DEFAULT_MAX_STEPS) -> TitsConeAnswer:
        v = tuple(v)
        ans = self._tits.get(v)
        if ans is not None and (ans.tag != "unknown" or ans.steps >= max_steps):
            return ans
        if self._exact_outside(v):
            ans = TitsConeAnswer("outside")
        else:
            ans = self._raise(v, max_steps)
        self._tits[v] = ans
        return ans

    def _exact_outside(self, v: Coweight) -> bool:
        """True when an exact criterion places v outside the Tits cone."""
        d = self.datum
        if d.kind == "affine":
            dv = sum(a * x for a, x in zip(d.delta, v))
            if dv > 0:
                return False
            return not (dv == 0 and all(d.pair(i, v) == 0 for i in range(d.rank)))
        if d.light_cone_form is not None:
            if not any(v):
                return False
            # inside iff timelike and on the same nappe as rho
            return not (d.form_value(v, v) < 0 and d.form_value(v, d.rho) < 0)
        return False

    def _raise(self, v: Coweight, max_steps: int) -> TitsConeAnswer:
        d = self.datum
        word = []
        cur = v
        steps = 0
        while True:
            for i in range(d.rank):
                if d.pair(i, cur) < 0:
                    break
            else:
                break
            if steps >= max_steps:
                return TitsConeAnswer("unknown", steps=steps)
            word.append(i)
            cur = d.reflect(i, cur)
            steps += 1
        w = self.min_coset_rep(self.from_word(word), cur)
        return TitsConeAnswer("inside", cur, w, steps)

    def dominant_rep(self, v: Sequence[int]) -> tuple[Coweight, WeylElt]:
        """(v^{++}, w_v) or raise NotInTitsCone / TitsConeUnknown."""
        return self.in_tits_cone(v).require(tuple(v))

    def min_coset_rep(self, w: WeylElt, dom: Coweight) -> WeylElt:
        d = self.datum
        if not d.is_dominant(dom):
            raise NotDominant(f"{dom} is not dominant")
        changed = True
        while changed:
            changed = False
            for j in range(d.rank):
                if d.pair(j, dom) == 0:
                    wj = self.rmul(w, j)
                    if wj.length < w.length:
                        w = wj
                        changed = True
                        break
        return w

    def orbit_upto(self, dom: Coweight, L: int) -> dict[Coweight, WeylElt]:
        """{w(dom): w} over minimal coset representatives w of length <= L."""
        d = self.datum
        dom = tuple(dom)
        if not d.is_dominant(dom):
            raise NotDominant(f"{dom} is not dominant")
        out = {dom: self.identity}
        frontier = [(dom, self.identity)]
        for _ in range(L):
            nxt = []
            for mu, w in frontier:
                for i in range(d.rank):
                    if d.pair(i, mu) > 0:
                        nu = d.reflect(i, mu)
                        if nu not in out:
                            out[nu] = self.lmul(i, w)
                            nxt.append((nu, out[nu]))
            frontier = nxt
        return out

    def is_centralizer_elt(self, w: WeylElt, i: int) -> bool:
        c = self.datum.coroots[i]
        img = self.act(w, c)
        return img == c or img == tuple(-x for x in c)


def weyl_group(datum: RootDatum) -> WeylGroup:
    """The (shared) Weyl group of a datum."""
    W = getattr(datum, "_weyl_group", None)
    if W is None:
        W = WeylGroup(datum)
        datum._weyl_group = W
    return W
