"""Littelmann lambda-bullet paths over minimal coweights, kept purely discrete.

A path is its step sequence ``nu_1, ..., nu_n`` (``nu_i`` a weight of
``V^{lam_i}``), the vertices ``mu_i = nu_1 + ... + nu_i`` and, for every zero
step, the simple root ``alpha_i`` whose coroot the path bounces along.  The
piecewise-linear maps are never built: dominance of the whole path reduces to
dominance of the vertices plus ``<alpha_i, mu_{i-1}> >= 1`` at zero steps.

Step indices are 1-based, matching ``mu_0 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import MissingRootChoice, NotDominant, RootNotConjugate, StepNotInOmega
from .repcombinat import in_omega, minimal_set, omega_set
from .rootdata import Root, RootDatum, delta_conjugates, delta_mu, dot, vadd


@dataclass(frozen=True)
class PathSpec:
    lambda_seq: tuple
    nu_seq: tuple
    vertices: tuple
    zero_step_roots: Mapping[int, Root] = field(default_factory=dict, hash=False)

    def to_json(self) -> dict:
        return {
            "lambda_seq": [list(x) for x in self.lambda_seq],
            "nu_seq": [list(x) for x in self.nu_seq],
            "vertices": [list(x) for x in self.vertices],
            "zero_step_roots": {str(i): list(r.vector) for i, r in sorted(self.zero_step_roots.items())},
        }


def _check_minimal(rd: RootDatum, lambda_seq):
    M = set(minimal_set(rd))
    for lam in lambda_seq:
        if lam not in M:
            raise ValueError(f"{lam} is not a minimal coweight")


def _vertices(rd: RootDatum, nu_seq) -> tuple:
    mu = rd.zero()
    out = [mu]
    for nu in nu_seq:
        mu = vadd(mu, nu)
        out.append(mu)
    return tuple(out)


def make_path(rd: RootDatum, lambda_seq, nu_seq, zero_step_roots=None) -> PathSpec:
    lambda_seq = tuple(tuple(x) for x in lambda_seq)
    nu_seq = tuple(tuple(x) for x in nu_seq)
    if len(lambda_seq) != len(nu_seq):
        raise ValueError("lambda_seq and nu_seq have different lengths")
    _check_minimal(rd, lambda_seq)
    given = dict(zero_step_roots or {})
    roots = {}
    for i, (lam, nu) in enumerate(zip(lambda_seq, nu_seq), start=1):
        if not in_omega(rd, lam, nu):
            raise StepNotInOmega(f"step {i}: {nu} is not a weight of V^{lam}")
        if any(nu):
            continue
        if i not in given:
            raise MissingRootChoice(f"zero step {i} has no simple root attached")
        alpha = given[i]
        if not isinstance(alpha, Root):
            alpha = rd.root_of(alpha)
        if alpha not in delta_conjugates(rd, lam):
            raise RootNotConjugate(f"step {i}: {alpha.vector} is not a simple root conjugate to {lam}^vee")
        roots[i] = alpha
    return PathSpec(lambda_seq, nu_seq, _vertices(rd, nu_seq), roots)


def is_dominant_path(rd: RootDatum, p: PathSpec) -> bool:
    if not all(rd.is_dominant(mu) for mu in p.vertices):
        return False
    return all(dot(alpha.vector, p.vertices[i - 1]) >= 1 for i, alpha in p.zero_step_roots.items())


def enumerate_dominant_paths(rd: RootDatum, lambda_seq, nu, check_zero_steps: bool = True) -> list:
    """All dominant lambda-bullet paths from 0 to ``nu``, by depth-first search.

    ``check_zero_steps=False`` drops the ``<alpha_i, mu_{i-1}> >= 1`` test;
    only useful to show that test is doing something.
    """
    lambda_seq = tuple(tuple(x) for x in lambda_seq)
    nu = tuple(nu)
    if not rd.is_dominant(nu):
        raise NotDominant(f"{nu} is not dominant")
    _check_minimal(rd, lambda_seq)
    n = len(lambda_seq)
    steps = [omega_set(rd, lam) for lam in lambda_seq]
    conj = [delta_conjugates(rd, lam) if any(not any(s) for s in steps[i]) else []
            for i, lam in enumerate(lambda_seq)]
    out = []

    def rec(i, mu, nus, roots):
        if i == n:
            if mu == nu:
                out.append(PathSpec(lambda_seq, tuple(nus), _vertices(rd, nus), dict(roots)))
            return
        for step in steps[i]:
            nxt = vadd(mu, step)
            if not rd.is_dominant(nxt):
                continue
            if any(step):
                rec(i + 1, nxt, nus + [step], roots)
                continue
            for alpha in conj[i]:
                if check_zero_steps and dot(alpha.vector, mu) < 1:
                    continue
                roots[i + 1] = alpha
                rec(i + 1, nxt, nus + [step], roots)
                del roots[i + 1]

    rec(0, rd.zero(), [], {})
    return out


def count_paths_product(rd: RootDatum, lambda_seq, nu_seq) -> int:
    """Number of dominant paths with the given steps, as a product over zero steps."""
    lambda_seq = tuple(tuple(x) for x in lambda_seq)
    nu_seq = tuple(tuple(x) for x in nu_seq)
    if len(lambda_seq) != len(nu_seq):
        raise ValueError("lambda_seq and nu_seq have different lengths")
    _check_minimal(rd, lambda_seq)
    for i, (lam, step) in enumerate(zip(lambda_seq, nu_seq), start=1):
        if not in_omega(rd, lam, step):
            raise StepNotInOmega(f"step {i}: {step} is not a weight of V^{lam}")
    verts = _vertices(rd, nu_seq)
    if not all(rd.is_dominant(mu) for mu in verts):
        return 0
    count = 1
    for i, (lam, step) in enumerate(zip(lambda_seq, nu_seq), start=1):
        if not any(step):
            count *= len(delta_mu(rd, lam, verts[i - 1]))
    return count


def step_sequences(rd: RootDatum, lambda_seq, nu) -> list:
    """Every ``nu_bullet`` with ``nu_i`` a weight of ``V^{lam_i}`` and ``|nu_bullet| = nu``."""
    lambda_seq = tuple(tuple(x) for x in lambda_seq)
    nu = tuple(nu)
    steps = [omega_set(rd, lam) for lam in lambda_seq]
    out = []

    def rec(i, mu, acc):
        if i == len(steps):
            if mu == nu:
                out.append(tuple(acc))
            return
        for s in steps[i]:
            rec(i + 1, vadd(mu, s), acc + [s])

    rec(0, rd.zero(), [])
    return out
