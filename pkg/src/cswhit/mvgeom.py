"""Numerical shadows of the geometry: MV cycles, Schubert cells of G/P, and cohomology answers.

Nothing here builds a space.  Each function returns the degree / dimension /
twist bookkeeping that the geometric statements pin down, as a
:class:`~cswhit.graded.GradedSpace`.  Twists are stored in half-twists, so
the twist ``(-<rho, v>)`` is ``half_twists = -<2 rho, v>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ConsistencyFailure,
    EmptyMV,
    NonIntegralDimension,
    NotDominant,
    NotMinimal,
    NotQuasiMinuscule,
    PreconditionViolated,
)
from .graded import GradedSpace, direct_sum, spectral_collapse, tensor_all
from .paths import step_sequences
from .repcombinat import (
    MINUSCULE,
    QUASI_MINUSCULE,
    hom_multiplicity,
    in_omega,
    minimal_kind,
    weight_multiplicity,
)
from .rootdata import (
    Coweight,
    RootDatum,
    WeylElement,
    delta_conjugates,
    delta_mu,
    quasi_minuscule_root,
    require_dominant,
    rho_pairing2,
    vadd,
    weyl_group,
)

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class MVDescriptor:
    lam: Coweight
    nu: Coweight
    mu: Coweight

    def check(self, rd: RootDatum) -> "MVDescriptor":
        require_dominant(rd, self.lam)
        return self


@dataclass(frozen=True)
class SchubertCell:
    coset_rep: WeylElement
    dim: int
    side: str
    image: Coweight  # w(lam)

    def to_json(self) -> dict:
        return {"coset_rep": list(self.coset_rep.word), "image": list(self.image),
                "dim": self.dim, "side": self.side}


def _half(n: int, what: str) -> int:
    if n % 2:
        raise NonIntegralDimension(f"{what} = {n}/2 is not an integer")
    return n // 2


# ---------------------------------------------------------------------------
# MV cycles
# ---------------------------------------------------------------------------


def mv_nonempty(rd: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> bool:
    lam = tuple(lam)
    require_dominant(rd, lam)
    return in_omega(rd, lam, tuple(nu))


def mv_dimension(rd: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    """``<rho, nu + lam>``, the dimension of every component of MV_{lam, nu}."""
    lam, nu = tuple(lam), tuple(nu)
    if not mv_nonempty(rd, lam, nu):
        raise EmptyMV(f"MV cycle for lam={lam}, nu={nu} is empty")
    return _half(rho_pairing2(rd, vadd(nu, lam)), f"<rho, {vadd(nu, lam)}>")


def mv_component_count(rd: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> int:
    lam = tuple(lam)
    require_dominant(rd, lam)
    return weight_multiplicity(rd, lam, nu)


# ---------------------------------------------------------------------------
# G/P_lam for quasi-minuscule lam
# ---------------------------------------------------------------------------


def schubert_cells(rd: RootDatum, lam: Sequence[int]) -> list:
    """One cell per coset ``w Stab(lam)``, indexed by its minimal-length representative.

    A cell on the plus side (``w lam^vee`` positive) has dimension
    ``<rho, lam + w lam> - 1``, one on the minus side ``<rho, lam + w lam>``.
    """
    lam = tuple(lam)
    gamma = quasi_minuscule_root(rd, lam)
    seen = set()
    cells = []
    for w in weyl_group(rd):  # BFS order: the first hit per coset is the shortest
        image = w.act(lam)
        if image in seen:
            continue
        seen.add(image)
        positive = w.act_root(gamma, rd).positive
        d = _half(rho_pairing2(rd, vadd(lam, image)), f"<rho, {vadd(lam, image)}>")
        if positive:
            cells.append(SchubertCell(w, d - 1, PLUS, image))
        else:
            cells.append(SchubertCell(w, d, MINUS, image))
    return cells


def poincare_GP(rd: RootDatum, lam: Sequence[int]) -> GradedSpace:
    """Compactly supported cohomology of G/P_lam: each k-cell gives one class in degree 2k, twist (-k)."""
    cells = schubert_cells(rd, lam)
    return spectral_collapse(GradedSpace.point(2 * c.dim, -2 * c.dim) for c in cells)


# ---------------------------------------------------------------------------
# per-case cohomology
# ---------------------------------------------------------------------------


def _require_minimal(rd: RootDatum, lam) -> str:
    kind = minimal_kind(rd, lam)
    if kind is None:
        raise NotMinimal(f"{lam} is neither minuscule nor quasi-minuscule")
    return kind


def coh_weyl_orbit(rd: RootDatum, lam: Sequence[int], w: WeylElement, mu: Sequence[int]) -> GradedSpace:
    """One class in degree ``<2 rho, w lam>`` with twist ``(-<rho, w lam>)``."""
    lam, mu = tuple(lam), tuple(mu)
    _require_minimal(rd, lam)
    image = w.act(lam)
    if not rd.is_dominant(mu):
        raise PreconditionViolated(f"mu={mu} is not dominant; use coh_nondominant")
    if not rd.is_dominant(vadd(mu, image)):
        raise PreconditionViolated(f"mu + w lam = {vadd(mu, image)} is not dominant")
    k = rho_pairing2(rd, image)
    return GradedSpace.point(k, -k)


def coh_zero_orbit(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> GradedSpace:
    lam, mu = tuple(lam), tuple(mu)
    quasi_minuscule_root(rd, lam)
    require_dominant(rd, mu)
    n = len(delta_mu(rd, lam, mu))
    return GradedSpace.point(0, 0, dim=n) if n else GradedSpace()


def coh_nondominant(rd: RootDatum, lam: Sequence[int], nu: Sequence[int], mu: Sequence[int]) -> GradedSpace:
    """Total vanishing when ``mu`` is not dominant but ``mu + nu`` is."""
    lam, nu, mu = tuple(lam), tuple(nu), tuple(mu)
    require_dominant(rd, lam)
    if rd.is_dominant(mu):
        raise PreconditionViolated(f"mu={mu} is dominant")
    if not rd.is_dominant(vadd(mu, nu)):
        raise PreconditionViolated(f"mu + nu = {vadd(mu, nu)} is not dominant")
    return GradedSpace()


def _weyl_rep_sending(rd: RootDatum, lam, target) -> WeylElement:
    for w in weyl_group(rd):
        if w.act(lam) == target:
            return w
    raise AssertionError(f"{target} is not in the orbit of {lam}")


def breakdown_terms(rd: RootDatum, lambda_seq, nu) -> list:
    """``[(nu_bullet, factor spaces, tensor product)]`` for every step sequence summing to ``nu``."""
    lambda_seq = tuple(tuple(x) for x in lambda_seq)
    nu = tuple(nu)
    require_dominant(rd, nu)
    for lam in lambda_seq:
        _require_minimal(rd, lam)
    out = []
    for steps in step_sequences(rd, lambda_seq, nu):
        verts = [rd.zero()]
        for s in steps:
            verts.append(vadd(verts[-1], s))
        bad = [j for j in range(len(steps)) if not rd.is_dominant(verts[j])]
        if bad:
            # at the last non-dominant vertex the next vertex is dominant
            j = bad[-1]
            factors = [coh_nondominant(rd, lambda_seq[j], steps[j], verts[j])]
        else:
            factors = []
            for lam, step, mu in zip(lambda_seq, steps, verts):
                if any(step):
                    factors.append(coh_weyl_orbit(rd, lam, _weyl_rep_sending(rd, lam, step), mu))
                else:
                    factors.append(coh_zero_orbit(rd, lam, mu))
        out.append((steps, factors, tensor_all(factors)))
    return out


def breakdown(rd: RootDatum, lambda_seq, nu) -> GradedSpace:
    """Cohomology of the convolution fibre, summed over step sequences.

    The strata share one parity (every surviving term sits in degree
    ``<2 rho, nu>``), so the sum goes through :func:`spectral_collapse`.
    """
    return spectral_collapse(t for _, _, t in breakdown_terms(rd, lambda_seq, nu))


def main_theorem_coh(rd: RootDatum, lam: Sequence[int], nu: Sequence[int]) -> GradedSpace:
    lam, nu = tuple(lam), tuple(nu)
    require_dominant(rd, lam, nu)
    if lam != nu:
        return GradedSpace()
    k = rho_pairing2(rd, nu)
    return GradedSpace.point(k, -k)


def conjectural_coh(rd: RootDatum, lam: Sequence[int], nu: Sequence[int], mu: Sequence[int]) -> GradedSpace:
    """``Hom(V^lam (x) V^mu, V^{mu+nu})`` placed in degree ``<2 rho, nu>`` with twist ``(-<rho, nu>)``."""
    lam, nu, mu = tuple(lam), tuple(nu), tuple(mu)
    if not rd.is_dominant(lam):
        raise PreconditionViolated(f"lam={lam} is not dominant")
    if not rd.is_dominant(vadd(mu, nu)):
        raise PreconditionViolated(f"mu + nu = {vadd(mu, nu)} is not dominant")
    if not rd.is_dominant(mu):
        return GradedSpace()
    n = hom_multiplicity(rd, lam, mu, vadd(mu, nu))
    k = rho_pairing2(rd, nu)
    return GradedSpace.point(k, -k, dim=n) if n else GradedSpace()


# ---------------------------------------------------------------------------
# zero-orbit strata
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrataReport:
    lam: Coweight
    mu: Coweight
    d: int
    total: dict     # degree i -> dimension
    complement: dict
    difference: dict
    expected: dict

    @property
    def consistent(self) -> bool:
        return self.difference == self.expected

    def to_json(self) -> dict:
        def enc(m):
            return {str(k): v for k, v in sorted(m.items())}
        return {"lambda": list(self.lam), "mu": list(self.mu), "d": self.d,
                "total": enc(self.total), "complement": enc(self.complement),
                "difference": enc(self.difference), "expected": enc(self.expected)}


def zero_orbit_strata_report(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> StrataReport:
    """Cross-check the zero-orbit answer against the strata of the resolution.

    Dimensions only: the strata totals and the complement are both read off
    the Betti numbers of G/P_lam, and their difference must be the
    zero-orbit answer in every degree.
    """
    lam, mu = tuple(lam), tuple(mu)
    quasi_minuscule_root(rd, lam)
    if not rd.is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant")
    d = rho_pairing2(rd, lam)
    gp = poincare_GP(rd, lam)
    betti = {k: gp.dim(k) for k in gp.degrees()}
    n_delta = len(delta_conjugates(rd, lam))
    n_delta_mu = len(delta_mu(rd, lam, mu))

    total, comp = {}, {}
    for k, b in betti.items():
        # H^k(G/P) lands in degree k - d on the nonnegative side, k - d + 2 below zero
        i = k - d
        if i > 0:
            total[i] = total.get(i, 0) + b
        if i >= 0:
            comp[i] = comp.get(i, 0) + b
        i = k - d + 2
        if i < 0:
            total[i] = total.get(i, 0) + b
            comp[i] = comp.get(i, 0) + b
    total[0] = n_delta_mu + n_delta

    if betti.get(d, 0) != n_delta:
        raise ConsistencyFailure(f"dim H^{d}(G/P) = {betti.get(d, 0)} but |Delta| = {n_delta}")
    diff = {}
    for i in set(total) | set(comp):
        v = total.get(i, 0) - comp.get(i, 0)
        if v:
            diff[i] = v
    z = coh_zero_orbit(rd, lam, mu)
    expected = {k: z.dim(k) for k in z.degrees()}
    report = StrataReport(lam, mu, d, total, comp, diff, expected)
    if not report.consistent:
        raise ConsistencyFailure(f"strata difference {diff} != zero-orbit answer {expected}")
    return report


__all__ = [
    "GradedSpace", "MVDescriptor", "SchubertCell", "StrataReport", "PLUS", "MINUS",
    "MINUSCULE", "QUASI_MINUSCULE",
    "mv_nonempty", "mv_dimension", "mv_component_count", "schubert_cells", "poincare_GP",
    "coh_weyl_orbit", "coh_zero_orbit", "coh_nondominant", "breakdown", "breakdown_terms",
    "main_theorem_coh", "conjectural_coh", "zero_orbit_strata_report", "spectral_collapse",
    "direct_sum",
]
