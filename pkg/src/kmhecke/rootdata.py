"""
Kac-Moody matrices, root data, heights and the dominance order on coweights.

Coweights are plain tuples of integers in a fixed basis of the cocharacter
lattice Y. Simple roots are stored as integer functionals on that basis, so
the pairing <lambda, alpha_i> is a dot product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from importlib import resources
from itertools import product
from math import lcm
from pathlib import Path
from typing import Iterable, Sequence

import sympy

from .errors import AsymmetricZero, DiagonalNotTwo, InvalidDatum, PositiveOffDiagonal

__all__ = [
    "Coweight", "KacMoodyMatrix", "RootDatum", "validate_matrix",
    "load_datum", "bundled_datum", "BUNDLED", "vadd", "vsub", "vscale",
]

Coweight = tuple[int, ...]

BUNDLED = ("finite_a1", "affine_a1", "hyperbolic_2_3", "affine_a1_third")

LINE_MODES = ("closed", "open-left", "open-right", "open")


def vadd(a: Coweight, b: Coweight) -> Coweight:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Coweight, b: Coweight) -> Coweight:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, a: Coweight) -> Coweight:
    return tuple(k * x for x in a)


@dataclass(frozen=True)
class KacMoodyMatrix:
    labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]


def validate_matrix(entries: Sequence[Sequence[int]],
                    labels: Sequence[str] | None = None) -> KacMoodyMatrix:
    """Check the three generalized Cartan matrix axioms."""
    size = len(entries)
    if any(len(row) != size for row in entries):
        raise ValueError("matrix must be square")
    if labels is None:
        labels = [str(i) for i in range(size)]
    if len(labels) != size:
        raise ValueError("one label per row is required")
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    for i in range(size):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(f"a[{i}][{i}] = {rows[i][i]}, expected 2", i, i)
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(f"a[{i}][{j}] = {rows[i][j]} is positive", i, j)
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZero(
                    f"a[{i}][{j}] = {rows[i][j]} but a[{j}][{i}] = {rows[j][i]}", i, j)
    return KacMoodyMatrix(tuple(str(x) for x in labels), rows)


def _fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class RootDatum:
    """
    A Kac-Moody root datum in coordinates.

    ``coroots[i]`` is the vector of the i-th simple coroot in Y = Z^n and
    ``roots[j]`` the functional alpha_j, with dot(coroots[i], roots[j]) equal
    to the matrix entry a[i][j]. ``kind`` is an optional type flag
    ("finite", "affine" or "indefinite") that unlocks exact Tits-cone tests.
    """

    def __init__(self, matrix: KacMoodyMatrix, coroots: Sequence[Sequence[int]],
                 roots: Sequence[Sequence[int]], ht_extension: Sequence,
                 kind: str | None = None, name: str = "datum"):
        self.matrix = matrix
        self.name = name
        self.kind = kind
        self.coroots: tuple[Coweight, ...] = tuple(tuple(int(x) for x in c) for c in coroots)
        self.roots: tuple[Coweight, ...] = tuple(tuple(int(x) for x in a) for a in roots)
        self.ht_extension: tuple[Fraction, ...] = tuple(_fraction(x) for x in ht_extension)
        r = matrix.size
        if len(self.coroots) != r or len(self.roots) != r:
            raise InvalidDatum("need one simple root and one simple coroot per matrix row")
        n = len(self.ht_extension)
        if any(len(v) != n for v in self.coroots + self.roots):
            raise InvalidDatum("all vectors must have length equal to the rank of Y")
        self.rank = r
        self.n = n
        for i in range(r):
            for j in range(r):
                if self.pair(j, self.coroots[i]) != matrix.entries[i][j]:
                    raise InvalidDatum(
                        f"<coroot {i}, root {j}> = {self.pair(j, self.coroots[i])},"
                        f" matrix entry is {matrix.entries[i][j]}")
        if sympy.Matrix(self.coroots).rank() != r:
            raise InvalidDatum("simple coroots are linearly dependent")
        if sympy.Matrix(self.roots).rank() != r:
            raise InvalidDatum("simple roots are linearly dependent")
        for i, c in enumerate(self.coroots):
            if self.ht(c) != 1:
                raise InvalidDatum(f"height extension gives ht(coroot {i}) = {self.ht(c)}")
        if kind not in (None, "finite", "affine", "indefinite"):
            raise InvalidDatum(f"unknown kind {kind!r}")
        self.N = lcm(*(h.denominator for h in self.ht_extension)) if n else 1
        # N * ht as an integer functional
        self._htN = tuple(int(h * self.N) for h in self.ht_extension)
        self._setup_coroot_solver()

    # basic linear algebra

    def pair(self, i: int, v: Sequence[int]) -> int:
        """alpha_i(v)."""
        return sum(a * x for a, x in zip(self.roots[i], v))

    def pairings(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * x for a, x in zip(root, v)) for root in self.roots)

    def reflect(self, i: int, v: Coweight) -> Coweight:
        """r_i(v) = v - alpha_i(v) alpha_i^vee."""
        a = self.pair(i, v)
        if not a:
            return tuple(v)
        return tuple(x - a * c for x, c in zip(v, self.coroots[i]))

    def ht(self, v: Sequence) -> Fraction:
        return sum((h * x for h, x in zip(self.ht_extension, v)), Fraction(0))

    def ht_N(self, v: Sequence[int]) -> int:
        """N * ht(v) for an integral coweight."""
        return sum(h * x for h, x in zip(self._htN, v))

    def is_dominant(self, v: Sequence[int]) -> bool:
        return all(self.pair(i, v) >= 0 for i in range(self.rank))

    def is_regular_dominant(self, v: Sequence[int]) -> bool:
        return all(self.pair(i, v) > 0 for i in range(self.rank))

    def _setup_coroot_solver(self) -> None:
        C = sympy.Matrix(self.coroots).T  # n x r, columns are coroots
        # rows of C (coordinates of Y) forming an invertible r x r block
        rows: list[int] = []
        for k in range(self.n):
            trial = rows + [k]
            if C.extract(trial, list(range(self.rank))).rank() == len(trial):
                rows = trial
            if len(rows) == self.rank:
                break
        block = C.extract(rows, list(range(self.rank)))
        det = int(block.det())
        adj = block.adjugate()
        self._solve_rows = tuple(rows)
        self._solve_det = det
        self._solve_adj = tuple(tuple(int(adj[i, j]) for j in range(self.rank))
                                for i in range(self.rank))

    def coroot_coords(self, v: Sequence[int]) -> tuple[int, ...] | None:
        """Integer coordinates of v in the simple coroots, or None if v is not in Q^vee."""
        vp = [v[k] for k in self._solve_rows]
        det = self._solve_det
        coords = []
        for row in self._solve_adj:
            num = sum(a * x for a, x in zip(row, vp))
            if num % det:
                return None
            coords.append(num // det)
        # the block solve ignores the other rows; confirm v really is in the span
        for k in range(self.n):
            if sum(c * cor[k] for c, cor in zip(coords, self.coroots)) != v[k]:
                return None
        return tuple(coords)

    def coroot_coords_rational(self, v: Sequence[int]) -> tuple[Fraction, ...] | None:
        vp = [v[k] for k in self._solve_rows]
        det = self._solve_det
        coords = tuple(Fraction(sum(a * x for a, x in zip(row, vp)), det)
                       for row in self._solve_adj)
        for k in range(self.n):
            if sum(c * cor[k] for c, cor in zip(coords, self.coroots)) != v[k]:
                return None
        return coords

    def from_coroot_coords(self, coords: Sequence[int]) -> Coweight:
        out = [0] * self.n
        for c, cor in zip(coords, self.coroots):
            if c:
                for k in range(self.n):
                    out[k] += c * cor[k]
        return tuple(out)

    # order and intervals

    def dominance_leq(self, a: Sequence[int], b: Sequence[int]) -> bool:
        """a <= b iff b - a is a nonnegative integer combination of simple coroots."""
        coords = self.coroot_coords(vsub(b, a))
        return coords is not None and all(c >= 0 for c in coords)

    def box_interval(self, a: Coweight, b: Coweight) -> list[Coweight]:
        """All c with a <= c <= b."""
        k = self.coroot_coords(vsub(b, a))
        if k is None or any(x < 0 for x in k):
            return []
        out = []
        for steps in product(*(range(x + 1) for x in k)):
            out.append(vadd(a, self.from_coroot_coords(steps)))
        return out

    def line_interval(self, v: Coweight, i: int, mode: str = "closed") -> list[Coweight]:
        """
        Lattice points of the segment from v to r_i(v) along alpha_i^vee, in
        order starting at v. ``open-left`` drops v, ``open-right`` drops
        r_i(v) and ``open`` drops both.
        """
        if mode not in LINE_MODES:
            raise ValueError(f"unknown mode {mode!r}")
        a = self.pair(i, v)
        if a == 0:
            return [tuple(v)] if mode == "closed" else []
        step = -1 if a > 0 else 1
        cor = self.coroots[i]
        pts = [tuple(x + step * k * c for x, c in zip(v, cor)) for k in range(abs(a) + 1)]
        if mode in ("open-left", "open"):
            pts = pts[1:]
        if mode in ("open-right", "open"):
            pts = pts[:-1]
        return pts

    # derived data used by the Weyl group

    @cached_property
    def rho(self) -> Coweight:
        """An integral vector strictly inside the fundamental chamber."""
        R = sympy.Matrix(self.roots)
        sol = R.pinv() * sympy.ones(self.rank, 1) if self.rank < self.n else R.inv() * sympy.ones(self.rank, 1)
        fr = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol]
        scale = lcm(*(f.denominator for f in fr))
        rho = tuple(int(f * scale) for f in fr)
        if not self.is_regular_dominant(rho):
            raise InvalidDatum("failed to find a regular dominant vector")
        return rho

    @cached_property
    def delta(self) -> Coweight | None:
        """For affine data: the W-invariant functional sum c_i alpha_i with A c = 0, c > 0."""
        if self.kind != "affine":
            return None
        A = sympy.Matrix(self.matrix.entries)
        null = A.nullspace()
        if len(null) != 1:
            raise InvalidDatum("affine flag set but the matrix has corank != 1")
        vec = null[0]
        denom = lcm(*(int(sympy.fraction(x)[1]) for x in vec))
        c = [int(x * denom) for x in vec]
        if all(x <= 0 for x in c):
            c = [-x for x in c]
        if any(x <= 0 for x in c):
            raise InvalidDatum("affine flag set but no positive null vector")
        return tuple(sum(ci * root[k] for ci, root in zip(c, self.roots)) for k in range(self.n))

    @cached_property
    def light_cone_form(self) -> tuple[tuple[int, ...], ...] | None:
        """
        For indefinite rank-2 data with Y spanned rationally by the coroots:
        an invariant symmetric form in coroot coordinates, with reflections
        orthogonal. None otherwise.
        """
        if self.kind != "indefinite" or self.rank != 2 or self.n != 2:
            return None
        a = self.matrix.entries
        if a[0][1] * a[1][0] <= 4:
            return None
        e = (abs(a[0][1]), abs(a[1][0]))
        return tuple(tuple(a[i][j] * e[j] for j in range(2)) for i in range(2))

    def form_value(self, u: Coweight, v: Coweight) -> Fraction:
        M = self.light_cone_form
        x = self.coroot_coords_rational(u)
        y = self.coroot_coords_rational(v)
        return sum((x[i] * M[i][j] * y[j] for i in range(2) for j in range(2)), Fraction(0))

    # serialization

    def to_config(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "labels": list(self.matrix.labels),
            "matrix": [list(r) for r in self.matrix.entries],
            "coroots": [list(c) for c in self.coroots],
            "roots": [list(a) for a in self.roots],
            "ht_extension": [str(h) for h in self.ht_extension],
        }

    def __repr__(self) -> str:
        return f"RootDatum({self.name!r}, matrix={[list(r) for r in self.matrix.entries]}, N={self.N})"


def datum_from_config(cfg: dict) -> RootDatum:
    matrix = validate_matrix(cfg["matrix"], cfg.get("labels"))
    return RootDatum(matrix, cfg["coroots"], cfg["roots"], cfg["ht_extension"],
                     kind=cfg.get("kind"), name=cfg.get("name", "datum"))


def load_datum(source: str | Path | dict) -> RootDatum:
    """Load a datum from a config dict, a JSON path, or the name of a bundled datum."""
    if isinstance(source, dict):
        return datum_from_config(source)
    text = str(source)
    if text in BUNDLED:
        return bundled_datum(text)
    stem = Path(text).stem
    if not Path(text).exists() and stem in BUNDLED:
        return bundled_datum(stem)
    return datum_from_config(json.loads(Path(text).read_text()))


_BUNDLED_CACHE: dict[str, RootDatum] = {}


def bundled_datum(name: str) -> RootDatum:
    if name not in _BUNDLED_CACHE:
        ref = resources.files("kmhecke") / "data" / f"{name}.json"
        _BUNDLED_CACHE[name] = datum_from_config(json.loads(ref.read_text()))
    return _BUNDLED_CACHE[name]
