"""Spherical Hecke algebra in the Satake basis, and its action on Whittaker functions.

Structure constants come from the dual group: ``H_lam * H_mu`` decomposes
like ``V^lam (x) V^mu``, and ``phi_nu * H_lam`` like ``V^lam (x) V^nu``.
The geometric side recomputes the same action as a trace of Frobenius on
the conjectural cohomology, so the two can be compared term by term.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import NotDominant
from .graded import GradedSpace
from .laurent import LaurentHalf
from .mvgeom import conjectural_coh
from .repcombinat import dominant_weights_below, tensor_decomposition
from .rootdata import (
    RootDatum,
    require_dominant,
    rho_pairing2,
    sort_coweights,
    vadd,
    vsub,
)


class _BasisElt:
    basis = ""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for k, v in (terms or {}).items():
            k = tuple(k)
            v = v if isinstance(v, LaurentHalf) else LaurentHalf.const(v)
            v = clean.get(k, LaurentHalf()) + v
            if v:
                clean[k] = v
            else:
                clean.pop(k, None)
        self._terms = clean

    @classmethod
    def basis_vector(cls, rd: RootDatum, lam: Sequence[int]):
        lam = tuple(lam)
        require_dominant(rd, lam)
        return cls({lam: LaurentHalf.const(1)})

    def validate(self, rd: RootDatum):
        for k in self._terms:
            if not rd.is_dominant(k):
                raise NotDominant(f"basis index {k} is not dominant")
        return self

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, lam) -> LaurentHalf:
        return self._terms.get(tuple(lam), LaurentHalf())

    def support(self) -> list:
        return sorted(self._terms)

    def __eq__(self, other):
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, tuple(sorted(self._terms.items()))))

    def __add__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, LaurentHalf()) + v
        return type(self)(out)

    def scale(self, c) -> "_BasisElt":
        return type(self)({k: v * c for k, v in self._terms.items()})

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        body = " + ".join(f"({v}){self.basis}_{k}" for k, v in sorted(self._terms.items()))
        return body or "0"

    def to_json(self, rd: RootDatum | None = None) -> dict:
        keys = sort_coweights(rd, self._terms) if rd is not None else sorted(self._terms)
        return {
            "basis": self.basis,
            "terms": [{"coweight": list(k), "laurent": self._terms[k].to_json()} for k in keys],
        }

    @classmethod
    def from_json(cls, data: dict):
        if data.get("basis") != cls.basis:
            raise ValueError(f"expected basis {cls.basis!r}, got {data.get('basis')!r}")
        return cls({tuple(t["coweight"]): LaurentHalf.from_json(t["laurent"]) for t in data["terms"]})


class HeckeElt(_BasisElt):
    """Element of the spherical Hecke algebra, in the basis ``H_lam``."""

    basis = "H"
    __slots__ = ()


class WhittakerElt(_BasisElt):
    """Element of the Whittaker module, in the basis ``phi_nu`` (``nu`` dominant)."""

    basis = "phi"
    __slots__ = ()


def _structure(rd: RootDatum, lam, mu) -> dict:
    return tensor_decomposition(rd, [lam, mu])


def hecke_mult(rd: RootDatum, a: HeckeElt, b: HeckeElt) -> HeckeElt:
    a.validate(rd)
    b.validate(rd)
    out = {}
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            xy = x * y
            for xi, m in _structure(rd, lam, mu).items():
                out[xi] = out.get(xi, LaurentHalf()) + xy * m
    return HeckeElt(out)


def whittaker_action(rd: RootDatum, f: WhittakerElt, h: HeckeElt) -> WhittakerElt:
    """``f * h``, with ``phi_nu * H_lam = sum_mu dim Hom(V^lam (x) V^nu, V^mu) phi_mu``."""
    f.validate(rd)
    h.validate(rd)
    out = {}
    for nu, x in f.terms.items():
        for lam, y in h.terms.items():
            xy = x * y
            for mu, m in _structure(rd, lam, nu).items():
                out[mu] = out.get(mu, LaurentHalf()) + xy * m
    return WhittakerElt(out)


def trace_of_graded(V: GradedSpace) -> LaurentHalf:
    """Trace of Frobenius: a class in degree ``i`` with twist ``(-m)`` gives ``(-1)^i q^{-m}``."""
    out = LaurentHalf()
    for deg, (dim, half_twists) in V.entries.items():
        sign = -1 if deg % 2 else 1
        out = out + LaurentHalf.q_power(half_twists, sign * dim)
    return out


def geometric_coefficient(rd: RootDatum, nu, lam, mu) -> LaurentHalf:
    """``(-1)^{<2 rho, lam>} q^{<rho, mu - nu>} tr(conjectural cohomology)`` for the ``phi_mu`` slot."""
    shift = vsub(mu, nu)
    sign = -1 if rho_pairing2(rd, lam) % 2 else 1
    tr = trace_of_graded(conjectural_coh(rd, lam, shift, nu))
    return tr * LaurentHalf.q_power(rho_pairing2(rd, shift), sign)


def whittaker_action_geometric(rd: RootDatum, nu: Sequence[int], lam: Sequence[int]) -> WhittakerElt:
    """``phi_nu * H_lam`` recomputed from traces; support lies in the dominant ``mu <= lam + nu``."""
    nu, lam = tuple(nu), tuple(lam)
    require_dominant(rd, nu, lam)
    out = {}
    for mu in dominant_weights_below(rd, vadd(lam, nu)):
        c = geometric_coefficient(rd, nu, lam, mu)
        if c:
            out[mu] = c
    return WhittakerElt(out)


def verify_cs(rd: RootDatum, lam: Sequence[int]) -> bool:
    """Does ``phi_0 * H_lam = phi_lam`` hold on both the algebraic and the geometric side?"""
    lam = tuple(lam)
    require_dominant(rd, lam)
    target = WhittakerElt.basis_vector(rd, lam)
    phi0 = WhittakerElt.basis_vector(rd, rd.zero())
    algebraic = whittaker_action(rd, phi0, HeckeElt.basis_vector(rd, lam))
    geometric = whittaker_action_geometric(rd, rd.zero(), lam)
    return algebraic == target and geometric == target and algebraic == geometric
