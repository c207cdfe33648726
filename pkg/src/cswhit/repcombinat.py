"""Representation combinatorics of the dual group.

The dual group's weights are coweights of ``rd``, its roots are our coroots
and its coroots are our roots.  So a highest-weight module ``V^lam`` is
indexed by a dominant coweight and its weights live in X_*.

Weight multiplicities come from Freudenthal's recursion; tensor products are
decomposed by Brauer--Klimyk (reflect each shifted weight into the dominant
chamber, cancel the ones stuck on a wall).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Sequence

from .errors import NotSemisimple, SearchExhausted
from .rootdata import (
    Coweight,
    Root,
    RootDatum,
    dominance_leq,
    dot,
    height,
    in_coroot_lattice,
    is_minuscule,
    quasi_minuscule_root,
    is_quasi_minuscule,
    require_dominant,
    sort_coweights,
    vadd,
    vsub,
    weyl_orbit,
)

MINUSCULE = "minuscule"
QUASI_MINUSCULE = "quasi_minuscule"


@dataclass(frozen=True)
class MinimalCocharacter:
    value: Coweight
    kind: str
    coroot_root: Root | None = None


class MultiplicityTable(dict):
    """Dominant coweight -> positive multiplicity."""

    def __missing__(self, key):
        return 0

    def sorted_items(self, rd: RootDatum):
        return [(k, self[k]) for k in sort_coweights(rd, self)]


# ---------------------------------------------------------------------------
# weights of V^lam
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def dominant_weights_below(rd: RootDatum, lam: Coweight) -> tuple:
    """Dominant ``mu <= lam``, highest first."""
    lam = tuple(lam)
    require_dominant(rd, lam)
    n = rd.semisimple_rank
    # mu = lam - sum c_j alpha_j^vee with mu dominant forces sum c_j <= <rho, lam>
    budget = height(rd, lam) // 2
    found = []
    for c in _compositions_upto(n, budget):
        mu = tuple(lam[k] - sum(c[j] * rd.simple_coroots[j][k] for j in range(n))
                   for k in range(rd.rank))
        if rd.is_dominant(mu):
            found.append(mu)
    return tuple(sort_coweights(rd, found))


def _compositions_upto(n, total):
    for c in product(range(total + 1), repeat=n):
        if sum(c) <= total:
            yield c


def omega_set(rd: RootDatum, lam: Sequence[int]) -> list:
    """Weights of ``V^lam``: the W-orbits of the dominant ``mu <= lam``."""
    lam = tuple(lam)
    out = []
    for mu in dominant_weights_below(rd, lam):
        out.extend(weyl_orbit(rd, mu))
    return sort_coweights(rd, out)


def in_omega(rd: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> bool:
    return rd.to_dominant(tuple(nu)) in dominant_weights_below(rd, tuple(lam))


def _killing(rd: RootDatum, u, v) -> int:
    # W-invariant form on X_* built from the roots; nondegenerate on the coroot span
    return sum(dot(r.vector, u) * dot(r.vector, v) for r in rd.positive_roots)


@lru_cache(maxsize=None)
def _freudenthal(rd: RootDatum, lam: Coweight) -> dict:
    """Multiplicities of the dominant weights of V^lam."""
    rho2 = rd.two_rho_check
    pos = [r.coroot for r in rd.positive_roots]  # positive roots of the dual group
    dom = dominant_weights_below(rd, lam)
    mult = {lam: 1}

    def m(v):
        return mult.get(rd.to_dominant(v), 0)

    def shifted_norm(v):  # |2v + 2rho|^2
        w = tuple(2 * x + r for x, r in zip(v, rho2))
        return _killing(rd, w, w)

    top = shifted_norm(lam)
    for mu in dom[1:]:
        acc = 0
        for beta in pos:
            k = 1
            while True:
                v = tuple(x + k * b for x, b in zip(mu, beta))
                mv = m(v)
                if mv == 0 and not dominance_leq(rd, v, lam):
                    break
                acc += mv * _killing(rd, v, beta)
                k += 1
        denom = top - shifted_norm(mu)
        value, rem = divmod(8 * acc, denom)
        if rem:
            raise ArithmeticError(f"Freudenthal recursion non-integral at {mu}")
        if value:
            mult[mu] = value
    return mult


def weight_multiplicity(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> int:
    lam = tuple(lam)
    require_dominant(rd, lam)
    return _freudenthal(rd, lam).get(rd.to_dominant(tuple(mu)), 0)


def character(rd: RootDatum, lam: Sequence[int]) -> dict:
    """Full formal character of ``V^lam`` as ``{weight: multiplicity}``."""
    lam = tuple(lam)
    require_dominant(rd, lam)
    mults = _freudenthal(rd, lam)
    out = {}
    for mu, k in mults.items():
        for v in weyl_orbit(rd, mu):
            out[v] = k
    return out


def weyl_dimension(rd: RootDatum, lam: Sequence[int]) -> int:
    """Weyl's dimension formula for ``V^lam``."""
    from fractions import Fraction

    require_dominant(rd, lam)
    shifted = tuple(2 * x + r for x, r in zip(lam, rd.two_rho_check))
    d = Fraction(1)
    for r in rd.positive_roots:
        d *= Fraction(dot(r.vector, shifted), dot(r.vector, rd.two_rho_check))
    assert d.denominator == 1
    return int(d)


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------


def _dot_to_dominant(rd: RootDatum, v: Coweight):
    """Reflect ``v + rho`` into the dominant chamber.

    Returns ``(sign, w.v)`` or ``(0, None)`` if ``v + rho`` lies on a wall.
    Works with doubled vectors so half-integral rho never leaves the integers.
    """
    d = tuple(2 * x + r for x, r in zip(v, rd.two_rho_check))
    sign = 1
    while True:
        for i, a in enumerate(rd.simple_roots):
            p = dot(a, d)
            if p == 0:
                return 0, None
            if p < 0:
                d = rd.reflect(i, d)
                sign = -sign
                break
        else:
            break
    return sign, tuple((x - r) // 2 for x, r in zip(d, rd.two_rho_check))


def tensor_with(rd: RootDatum, table: dict, lam: Coweight) -> MultiplicityTable:
    """Decompose ``(sum_xi table[xi] V^xi) (x) V^lam`` by Brauer--Klimyk."""
    chars = character(rd, lam)
    acc = Counter()
    for xi, c in table.items():
        for beta, m in chars.items():
            sign, top = _dot_to_dominant(rd, vadd(xi, beta))
            if sign:
                acc[top] += sign * c * m
    out = MultiplicityTable()
    for k, v in acc.items():
        if v < 0:
            raise ArithmeticError(f"negative multiplicity for {k}")
        if v:
            out[k] = v
    return out


@lru_cache(maxsize=None)
def _decompose(rd: RootDatum, lam_seq: tuple) -> MultiplicityTable:
    if not lam_seq:
        return MultiplicityTable({rd.zero(): 1})
    return tensor_with(rd, _decompose(rd, lam_seq[:-1]), lam_seq[-1])


def tensor_decomposition(rd: RootDatum, lam_seq: Sequence[Sequence[int]]) -> MultiplicityTable:
    """Multiplicity table of ``V^{lam_1} (x) ... (x) V^{lam_n}``."""
    lam_seq = tuple(tuple(x) for x in lam_seq)
    require_dominant(rd, *lam_seq)
    return MultiplicityTable(_decompose(rd, lam_seq))


def tensor_multiplicity(rd: RootDatum, lam_seq: Sequence[Sequence[int]], nu: Sequence[int]) -> int:
    nu = tuple(nu)
    require_dominant(rd, nu)
    return tensor_decomposition(rd, lam_seq)[nu]


def hom_multiplicity(rd: RootDatum, lam, mu, xi) -> int:
    """``dim Hom(V^lam (x) V^mu, V^xi)``."""
    return tensor_multiplicity(rd, [lam, mu], xi)


# ---------------------------------------------------------------------------
# minimal cocharacters
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _classify(rd: RootDatum) -> tuple:
    if not rd.is_semisimple:
        raise NotSemisimple("M is infinite when X_* has a central direction")
    # every element of M pairs to at most 2 with each root
    candidates = []
    for a in product(range(3), repeat=rd.semisimple_rank):
        if any(a):
            v = rd.coweight_from_pairings(a)
            if v is not None:
                candidates.append(v)
    minimal = [
        v for v in candidates
        if not any(u != v and dominance_leq(rd, u, v) for u in candidates)
    ]
    out = []
    for v in sort_coweights(rd, minimal):
        if is_minuscule(rd, v):
            out.append(MinimalCocharacter(v, MINUSCULE))
        elif is_quasi_minuscule(rd, v):
            out.append(MinimalCocharacter(v, QUASI_MINUSCULE, quasi_minuscule_root(rd, v)))
        else:
            raise ArithmeticError(f"minimal element {v} is neither minuscule nor quasi-minuscule")
    return tuple(sorted(out, key=lambda m: m.value))


def classify_minimal(rd: RootDatum) -> list:
    """The minimal nonzero dominant coweights, each tagged minuscule or quasi-minuscule."""
    return list(_classify(rd))


def minimal_set(rd: RootDatum) -> list:
    return [m.value for m in _classify(rd)]


def minimal_kind(rd: RootDatum, lam: Sequence[int]) -> str | None:
    lam = tuple(lam)
    for m in _classify(rd):
        if m.value == lam:
            return m.kind
    return None


def decompose_into_M(rd: RootDatum, lam: Sequence[int], max_length: int | None = None) -> list:
    """A shortest, lexicographically least sequence over M whose tensor product contains ``V^lam``.

    Sequences are searched as multisets (the tensor product is commutative)
    in increasing length; a sequence is accepted when ``lam <= |seq|`` and
    ``V^lam`` occurs in the product.  Raises :class:`SearchExhausted` past
    ``max_length`` (default ``<2 rho, lam>``).
    """
    lam = tuple(lam)
    require_dominant(rd, lam)
    if not any(lam):
        raise ValueError("decompose_into_M needs a nonzero coweight")
    M = sorted(minimal_set(rd))
    if max_length is None:
        max_length = max(1, height(rd, lam))
    for n in range(1, max_length + 1):
        for seq in combinations_with_replacement(M, n):
            total = rd.zero()
            for s in seq:
                total = vadd(total, s)
            if not in_coroot_lattice(rd, vsub(total, lam)):
                continue
            if not dominance_leq(rd, lam, total):
                continue
            if tensor_multiplicity(rd, seq, lam):
                return list(seq)
    raise SearchExhausted(f"no sequence over M of length <= {max_length} reaches {lam}")
