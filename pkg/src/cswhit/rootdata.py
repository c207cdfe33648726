"""Root data, Weyl groups and the root combinatorics built on them.

A root datum is given in fixed bases: simple roots are integer vectors in the
character lattice X^*, simple coroots are integer vectors in the cocharacter
lattice X_*, and the pairing is the dot product.  Coweights are plain tuples
of ints (coordinates in the X_* basis).

Everything here is exact.  ``<2 rho, v>`` is always an integer and is what we
store; ``<rho, v>`` is only ever exposed as a :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence, Union

import sympy

from .errors import (
    InvalidCartan,
    NotDominant,
    NotQuasiMinuscule,
    NotSemisimple,
    RankCap,
    UnknownFixture,
    WeylCap,
)

Coweight = tuple  # tuple[int, ...]

DEFAULT_RANK_CAP = 4
DEFAULT_WEYL_CAP = 1152  # |W(F4)|

FIXTURE_ENV_VAR = "CSWHIT_FIXTURES"


def as_coweight(v: Iterable[int]) -> Coweight:
    out = tuple(int(x) for x in v)
    for x, y in zip(out, v):
        if x != y:
            raise ValueError(f"non-integral coweight coordinate {y!r}")
    return out


def vadd(a: Sequence[int], b: Sequence[int]) -> Coweight:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[int], b: Sequence[int]) -> Coweight:
    return tuple(x - y for x, y in zip(a, b))


def vscale(k: int, a: Sequence[int]) -> Coweight:
    return tuple(k * x for x in a)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _matmul_vec(m, v):
    return tuple(dot(row, v) for row in m)


def _matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _fraction_inverse(rows) -> tuple:
    inv = sympy.Matrix(rows).inv()
    n = inv.shape[0]
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n))
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# Cartan types
# ---------------------------------------------------------------------------


def cartan_matrix_of_type(kind: str, rank: int) -> tuple:
    """Cartan matrix ``A[i][j] = <alpha_i, alpha_j^vee>`` in Bourbaki labelling."""
    kind = kind.upper()
    n = rank
    if n < 1:
        raise InvalidCartan(f"rank must be positive, got {n}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind in ("A", "B", "C"):
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if kind == "B" and n >= 2:
            a[n - 2][n - 1] = -2
        if kind == "C" and n >= 2:
            a[n - 1][n - 2] = -2
        if kind in ("B", "C") and n < 2:
            raise InvalidCartan(f"type {kind}{n} needs rank >= 2")
    elif kind == "D":
        if n < 4:
            raise InvalidCartan("type D needs rank >= 4")
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif kind == "G" and n == 2:
        a = [[2, -1], [-3, 2]]
    elif kind == "F" and n == 4:
        a = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    else:
        raise InvalidCartan(f"unknown Cartan type {kind}{n}")
    return tuple(tuple(r) for r in a)


def check_finite_cartan(a) -> None:
    """Raise :class:`InvalidCartan` unless ``a`` is a finite-type Cartan matrix."""
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise InvalidCartan("Cartan matrix is not square")
        if a[i][i] != 2:
            raise InvalidCartan(f"diagonal entry ({i},{i}) is {a[i][i]}, not 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise InvalidCartan(f"off-diagonal entry ({i},{j}) = {a[i][j]} > 0")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise InvalidCartan(f"entries ({i},{j}) and ({j},{i}) not both zero")
    # finite type iff every principal minor is positive
    m = sympy.Matrix(a)
    for size in range(1, n + 1):
        for idx in _subsets(n, size):
            if m.extract(idx, idx).det() <= 0:
                raise InvalidCartan(f"principal minor on {idx} is not positive")


def _subsets(n, k):
    from itertools import combinations

    return [list(c) for c in combinations(range(n), k)]


@dataclass(frozen=True)
class CartanLabel:
    """A named split group: Cartan type plus isogeny variant.

    ``variant`` describes the *dual* group whose weight lattice is X_*:
    ``"adjoint"`` puts X_* equal to the coroot lattice, ``"simply_connected"``
    puts X_* equal to the coweight lattice.
    """

    type: str
    variant: str = "adjoint"

    def parse(self) -> tuple[str, int]:
        kind, rank = self.type[0], self.type[1:]
        if not rank.isdigit():
            raise InvalidCartan(f"cannot parse Cartan type {self.type!r}")
        return kind.upper(), int(rank)


# ---------------------------------------------------------------------------
# Roots, Weyl elements, root data
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Root:
    vector: tuple
    coroot: tuple
    positive: bool = field(compare=False)

    @property
    def sign(self) -> str:
        return "positive" if self.positive else "negative"

    def __neg__(self) -> "Root":
        return Root(vscale(-1, self.vector), vscale(-1, self.coroot), not self.positive)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element with its action on X_* (``matrix``) and X^* (``dual_matrix``)."""

    word: tuple
    matrix: tuple
    dual_matrix: tuple = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, v: Sequence[int]) -> Coweight:
        return _matmul_vec(self.matrix, v)

    def act_dual(self, x: Sequence[int]) -> tuple:
        return _matmul_vec(self.dual_matrix, x)

    def act_root(self, root: Root, rd: "RootDatum") -> Root:
        return rd.root_of(self.act_dual(root.vector))

    def __str__(self):
        return "e" if not self.word else "s" + "s".join(str(i + 1) for i in self.word)


@dataclass(frozen=True)
class RootDatum:
    simple_roots: tuple
    simple_coroots: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "simple_roots", tuple(as_coweight(r) for r in self.simple_roots))
        object.__setattr__(self, "simple_coroots", tuple(as_coweight(c) for c in self.simple_coroots))
        if len(self.simple_roots) != len(self.simple_coroots):
            raise InvalidCartan("numbers of simple roots and simple coroots differ")
        dims = {len(v) for v in self.simple_roots + self.simple_coroots}
        if len(dims) > 1:
            raise InvalidCartan(f"inconsistent lattice ranks {sorted(dims)}")
        if not self.simple_roots:
            raise InvalidCartan("at least one simple root is required")
        check_finite_cartan(self.cartan_matrix)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"RootDatum({label}rank={self.rank}, cartan={self.cartan_matrix})"

    # -- basic data ---------------------------------------------------------

    @property
    def rank(self) -> int:
        """Rank of X_* (equal to the rank of X^*)."""
        return len(self.simple_roots[0])

    rank_X = rank_Xco = rank

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def is_semisimple(self) -> bool:
        return self.rank == self.semisimple_rank

    @cached_property
    def cartan_matrix(self) -> tuple:
        return tuple(
            tuple(dot(a, c) for c in self.simple_coroots) for a in self.simple_roots
        )

    def pair(self, x: Sequence[int], v: Sequence[int]) -> int:
        return dot(x, v)

    def zero(self) -> Coweight:
        return (0,) * self.rank

    @cached_property
    def _cartan_inverse(self):
        return _fraction_inverse(self.cartan_matrix)

    @cached_property
    def _root_matrix_inverse(self):
        if not self.is_semisimple:
            raise NotSemisimple("operation needs a semisimple root datum")
        return _fraction_inverse(self.simple_roots)

    def coroot_coordinates(self, v: Sequence[int]) -> tuple | None:
        """Rational coordinates of ``v`` in the simple-coroot basis, or None if outside their span."""
        p = [dot(a, v) for a in self.simple_roots]
        c = tuple(sum(row[j] * p[j] for j in range(len(p))) for row in self._cartan_inverse)
        back = [sum(c[j] * self.simple_coroots[j][k] for j in range(len(c))) for k in range(self.rank)]
        if any(b != x for b, x in zip(back, v)):
            return None
        return c

    def root_coordinates(self, x: Sequence[int]) -> tuple | None:
        q = [dot(x, c) for c in self.simple_coroots]
        inv = self._cartan_inverse
        n = len(q)
        coeffs = tuple(sum(inv[j][i] * q[j] for j in range(n)) for i in range(n))
        back = [sum(coeffs[j] * self.simple_roots[j][k] for j in range(n)) for k in range(self.rank)]
        if any(b != y for b, y in zip(back, x)):
            return None
        return coeffs

    def coweight_from_pairings(self, a: Sequence[int]) -> Coweight | None:
        """The coweight v with <alpha_i, v> = a_i, or None if it is not in X_*."""
        v = _matmul_vec(self._root_matrix_inverse, a)
        if any(x.denominator != 1 for x in v):
            return None
        return tuple(int(x) for x in v)

    def is_dominant(self, v: Sequence[int]) -> bool:
        return all(dot(a, v) >= 0 for a in self.simple_roots)

    def reflect(self, i: int, v: Sequence[int]) -> Coweight:
        k = dot(self.simple_roots[i], v)
        return tuple(x - k * c for x, c in zip(v, self.simple_coroots[i]))

    def reflect_dual(self, i: int, x: Sequence[int]) -> tuple:
        k = dot(x, self.simple_coroots[i])
        return tuple(y - k * a for y, a in zip(x, self.simple_roots[i]))

    def to_dominant(self, v: Sequence[int]) -> Coweight:
        """Dominant W-conjugate of ``v`` by repeated simple reflections."""
        v = tuple(v)
        while True:
            for i, a in enumerate(self.simple_roots):
                if dot(a, v) < 0:
                    v = self.reflect(i, v)
                    break
            else:
                return v

    # -- roots --------------------------------------------------------------

    @cached_property
    def _roots(self) -> tuple:
        seen = {}
        frontier = list(zip(self.simple_roots, self.simple_coroots))
        for r, c in frontier:
            seen[r] = c
        while frontier:
            nxt = []
            for r, c in frontier:
                for i in range(self.semisimple_rank):
                    r2, c2 = self.reflect_dual(i, r), self.reflect(i, c)
                    if r2 not in seen:
                        seen[r2] = c2
                        nxt.append((r2, c2))
            frontier = nxt
        out = []
        for r, c in seen.items():
            coeffs = self.root_coordinates(r)
            positive = all(x >= 0 for x in coeffs)
            if not positive and not all(x <= 0 for x in coeffs):
                raise InvalidCartan(f"root {r} is neither positive nor negative")
            out.append((sum(coeffs) if positive else -sum(coeffs), Root(r, c, positive)))
        pos = sorted((h, r.vector, r) for h, r in out if r.positive)
        neg = sorted((h, r.vector, -r) for h, r in out if not r.positive)
        return tuple(r for _, _, r in pos) + tuple(-r for _, _, r in neg)

    @cached_property
    def positive_roots(self) -> tuple:
        return tuple(r for r in self._roots if r.positive)

    @cached_property
    def simple_root_objects(self) -> tuple:
        return tuple(Root(a, c, True) for a, c in zip(self.simple_roots, self.simple_coroots))

    @cached_property
    def _root_index(self) -> dict:
        return {r.vector: r for r in self._roots}

    def root_of(self, vector: Sequence[int]) -> Root:
        try:
            return self._root_index[tuple(vector)]
        except KeyError:
            raise ValueError(f"{tuple(vector)} is not a root") from None

    @cached_property
    def two_rho(self) -> tuple:
        """2 rho, the sum of positive roots, as a vector in X^*."""
        total = [0] * self.rank
        for r in self.positive_roots:
            total = [t + x for t, x in zip(total, r.vector)]
        return tuple(total)

    @cached_property
    def two_rho_check(self) -> tuple:
        """Sum of positive coroots (twice the dual group's rho) in X_*."""
        total = [0] * self.rank
        for r in self.positive_roots:
            total = [t + x for t, x in zip(total, r.coroot)]
        return tuple(total)

    # -- Weyl group ---------------------------------------------------------

    @cached_property
    def _weyl_cache(self) -> dict:
        return {}

    def simple_reflection_matrices(self):
        n = self.rank
        mats, duals = [], []
        for i in range(self.semisimple_rank):
            a, c = self.simple_roots[i], self.simple_coroots[i]
            mats.append(tuple(tuple(int(r == s) - c[r] * a[s] for s in range(n)) for r in range(n)))
            duals.append(tuple(tuple(int(r == s) - a[r] * c[s] for s in range(n)) for r in range(n)))
        return mats, duals


RootDatumSpec = Union[CartanLabel, RootDatum, dict, tuple]


def build_root_datum(spec: RootDatumSpec, *, rank_cap: int = DEFAULT_RANK_CAP,
                     weyl_cap: int = DEFAULT_WEYL_CAP, name: str | None = None) -> RootDatum:
    """Build and validate a root datum.

    ``spec`` is a :class:`CartanLabel`, a ``(simple_roots, simple_coroots)``
    pair, a dict with those two keys, or an existing :class:`RootDatum`.
    """
    if isinstance(spec, CartanLabel):
        kind, n = spec.parse()
        if n > rank_cap:
            raise RankCap(f"rank {n} exceeds cap {rank_cap}")
        a = cartan_matrix_of_type(kind, n)
        eye = _identity(n)
        if spec.variant == "adjoint":
            # X_* = coroot lattice, basis = simple coroots
            roots, coroots = a, eye
        elif spec.variant == "simply_connected":
            # X_* = coweight lattice, basis = fundamental coweights
            roots, coroots = eye, tuple(zip(*a))
        else:
            raise InvalidCartan(f"unknown variant {spec.variant!r}")
        rd = RootDatum(roots, coroots, name=name or f"{spec.type}-{spec.variant}")
    elif isinstance(spec, RootDatum):
        rd = spec
    else:
        if isinstance(spec, dict):
            roots, coroots = spec["simple_roots"], spec["simple_coroots"]
            name = name or spec.get("name")
        else:
            roots, coroots = spec
        rd = RootDatum(roots, coroots, name=name)
        if rd.semisimple_rank > rank_cap:
            raise RankCap(f"rank {rd.semisimple_rank} exceeds cap {rank_cap}")
    weyl_group(rd, cap=weyl_cap)
    return rd


def load_root_datum(source, **kwargs) -> RootDatum:
    """Load ``{"simple_roots": [...], "simple_coroots": [...]}`` from a path, string or dict."""
    if isinstance(source, dict):
        doc = source
    elif isinstance(source, (str, Path)) and Path(source).exists():
        doc = json.loads(Path(source).read_text())
        kwargs.setdefault("name", Path(source).stem)
    else:
        doc = json.loads(source)
    return build_root_datum(doc, **kwargs)


FIXTURES = {
    "SL2": CartanLabel("A1", "adjoint"),
    "PGL2": CartanLabel("A1", "simply_connected"),
    "A2adj": CartanLabel("A2", "adjoint"),
    "B2": CartanLabel("B2", "adjoint"),
    "C2": CartanLabel("C2", "simply_connected"),
    "G2": CartanLabel("G2", "adjoint"),
}

_fixture_cache: dict = {}


def fixture(key: str) -> RootDatum:
    """Look up a fixture by key; falls back to ``$CSWHIT_FIXTURES/<key>.json``."""
    if key in _fixture_cache:
        return _fixture_cache[key]
    if key in FIXTURES:
        rd = build_root_datum(FIXTURES[key], name=key)
    else:
        directory = os.environ.get(FIXTURE_ENV_VAR)
        path = Path(directory) / f"{key}.json" if directory else None
        if path is None or not path.is_file():
            raise UnknownFixture(f"unknown fixture {key!r}")
        rd = load_root_datum(path, name=key)
    _fixture_cache[key] = rd
    return rd


def fixture_keys() -> list:
    keys = list(FIXTURES)
    directory = os.environ.get(FIXTURE_ENV_VAR)
    if directory and Path(directory).is_dir():
        keys += sorted(p.stem for p in Path(directory).glob("*.json") if p.stem not in FIXTURES)
    return keys


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def roots(rd: RootDatum) -> list:
    """All roots: positive ones by height, then the negatives in the same order."""
    return list(rd._roots)


def weyl_group(rd: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> list:
    """Enumerate W breadth-first; sorted by length, then lexicographically by reduced word.

    Each element carries its shortlex-minimal reduced word.
    """
    cache = rd._weyl_cache
    if "elements" in cache:
        elems = cache["elements"]
        if len(elems) > cap:
            raise WeylCap(f"|W| = {len(elems)} exceeds cap {cap}")
        return list(elems)
    mats, duals = rd.simple_reflection_matrices()
    eye = _identity(rd.rank)
    identity = WeylElement((), eye, eye)
    seen = {eye}
    elems = [identity]
    level = [identity]
    while level:
        nxt = []
        for w in level:  # level is in lexicographic word order
            for i in range(rd.semisimple_rank):
                m = _matmul(w.matrix, mats[i])
                if m in seen:
                    continue
                seen.add(m)
                e = WeylElement(w.word + (i,), m, _matmul(w.dual_matrix, duals[i]))
                nxt.append(e)
                if len(seen) > cap:
                    raise WeylCap(f"|W| exceeds cap {cap}")
        elems.extend(nxt)
        level = nxt
    cache["elements"] = tuple(elems)
    return list(elems)


def longest_element(rd: RootDatum) -> WeylElement:
    return weyl_group(rd)[-1]


def height(rd: RootDatum, v: Sequence[int]) -> int:
    """``<2 rho, v>``; the size knob used for test boxes."""
    return dot(rd.two_rho, v)


def rho_pairing2(rd: RootDatum, v: Sequence[int]) -> int:
    """``<2 rho, v>`` as an exact integer."""
    return dot(rd.two_rho, v)


def rho_pairing(rd: RootDatum, v: Sequence[int]) -> Fraction:
    return Fraction(rho_pairing2(rd, v), 2)


def coweight_sort_key(rd: RootDatum, v: Sequence[int]):
    """Deterministic order: higher ``<2 rho, .>`` first, then by descending coordinates."""
    return (-rho_pairing2(rd, v), tuple(-x for x in v))


def sort_coweights(rd: RootDatum, vs: Iterable) -> list:
    return sorted(set(tuple(v) for v in vs), key=lambda v: coweight_sort_key(rd, v))


def dominance_leq(rd: RootDatum, a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``b - a`` is a nonnegative integer combination of simple coroots."""
    c = rd.coroot_coordinates(vsub(b, a))
    if c is None:
        return False
    return all(x.denominator == 1 and x >= 0 for x in c)


def in_coroot_lattice(rd: RootDatum, v: Sequence[int]) -> bool:
    c = rd.coroot_coordinates(v)
    return c is not None and all(x.denominator == 1 for x in c)


def dominant_representative(rd: RootDatum, v: Sequence[int]):
    """Return ``(v_plus, w)`` with ``w.act(v) == v_plus`` dominant and ``w`` shortest (then lex-least)."""
    v = tuple(v)
    for w in weyl_group(rd):
        u = w.act(v)
        if rd.is_dominant(u):
            return u, w
    raise AssertionError("no dominant conjugate found")  # unreachable for finite W


def weyl_orbit(rd: RootDatum, v: Sequence[int]) -> list:
    seen = {tuple(v)}
    frontier = [tuple(v)]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(rd.semisimple_rank):
                u2 = rd.reflect(i, u)
                if u2 not in seen:
                    seen.add(u2)
                    nxt.append(u2)
        frontier = nxt
    return sort_coweights(rd, seen)


def stabilizer(rd: RootDatum, v: Sequence[int]) -> list:
    v = tuple(v)
    return [w for w in weyl_group(rd) if w.act(v) == v]


def quasi_minuscule_root(rd: RootDatum, lam: Sequence[int]) -> Root:
    """The root ``lam^vee``: the unique root pairing to at least 2 with a quasi-minuscule ``lam``."""
    lam = tuple(lam)
    if not rd.is_dominant(lam):
        raise NotQuasiMinuscule(f"{lam} is not dominant")
    big = [r for r in rd._roots if dot(r.vector, lam) >= 2]
    if len(big) != 1 or big[0].coroot != lam:
        raise NotQuasiMinuscule(f"{lam} is not quasi-minuscule")
    return big[0]


def is_quasi_minuscule(rd: RootDatum, lam: Sequence[int]) -> bool:
    try:
        quasi_minuscule_root(rd, lam)
    except NotQuasiMinuscule:
        return False
    return True


def is_minuscule(rd: RootDatum, lam: Sequence[int]) -> bool:
    lam = tuple(lam)
    return (
        rd.is_dominant(lam)
        and any(lam)
        and all(dot(r.vector, lam) in (-1, 0, 1) for r in rd._roots)
    )


def delta_conjugates(rd: RootDatum, lam: Sequence[int]) -> list:
    """Simple roots that are W-conjugate to ``lam^vee``, in simple-root index order."""
    gamma = quasi_minuscule_root(rd, lam)
    orbit = {gamma.vector}
    frontier = [gamma.vector]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(rd.semisimple_rank):
                y = rd.reflect_dual(i, x)
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return [r for r in rd.simple_root_objects if r.vector in orbit]


def delta_mu(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> list:
    """Those roots of :func:`delta_conjugates` pairing to at least 1 with ``mu``."""
    return [r for r in delta_conjugates(rd, lam) if dot(r.vector, mu) >= 1]


def dominant_coweights(rd: RootDatum, max_height: int) -> list:
    """All dominant coweights with ``<2 rho, v> <= max_height``, sorted by height then coordinates."""
    if not rd.is_semisimple:
        raise NotSemisimple("dominant coweights form an infinite set for a non-semisimple datum")
    n = rd.rank
    inv = rd._root_matrix_inverse
    fund_heights = [dot(rd.two_rho, [inv[k][i] for k in range(n)]) for i in range(n)]
    bounds = [int(max_height // h) for h in fund_heights]
    out = []
    for a in product(*(range(b + 1) for b in bounds)):
        if dot(fund_heights, a) > max_height:
            continue
        v = rd.coweight_from_pairings(a)
        if v is not None:
            out.append(v)
    return sorted(out, key=lambda v: (height(rd, v), v))


def require_dominant(rd: RootDatum, *vs) -> None:
    for v in vs:
        if not rd.is_dominant(v):
            raise NotDominant(f"{tuple(v)} is not dominant")
