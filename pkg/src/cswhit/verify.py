"""The verification matrix: every exact identity the library is meant to satisfy, per fixture.

``run_verification(rd, max_height=H)`` sizes each family of checks off
one height bound: paths and breakdown use sequences of length <= 3 over
M, the Casselman-Shalika and zero-orbit checks use ``<2 rho, .> <= 2H``,
and the algebra laws use height ``<= min(3, H)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .errors import ParityViolation
from .graded import GradedSpace, spectral_collapse
from .hecke import (
    HeckeElt,
    WhittakerElt,
    hecke_mult,
    verify_cs,
    whittaker_action,
    whittaker_action_geometric,
)
from .mvgeom import (
    MINUS,
    breakdown_terms,
    poincare_GP,
    schubert_cells,
    zero_orbit_strata_report,
)
from .paths import count_paths_product, enumerate_dominant_paths, step_sequences
from .repcombinat import (
    character,
    dominant_weights_below,
    minimal_set,
    tensor_multiplicity,
    weyl_dimension,
)
from .rootdata import (
    RootDatum,
    delta_conjugates,
    dominance_leq,
    dominant_coweights,
    is_quasi_minuscule,
    quasi_minuscule_root,
    rho_pairing2,
    stabilizer,
    vadd,
    weyl_group,
)

MAX_SEQ_LENGTH = 3
DOMINANCE_SAMPLES = 10_000


@dataclass
class Check:
    name: str
    inputs: dict
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"name": self.name, "inputs": self.inputs, "expected": self.expected,
                "actual": self.actual, "pass": self.passed}


@dataclass
class VerificationReport:
    fixture: str
    max_height: int
    checks: list = field(default_factory=list)

    def add(self, name, inputs, expected, actual):
        self.checks.append(Check(name, inputs, expected, actual))

    @property
    def n_passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def n_failed(self) -> int:
        return len(self.checks) - self.n_passed

    @property
    def ok(self) -> bool:
        return self.n_failed == 0

    def summary(self) -> dict:
        by_name = {}
        for c in self.checks:
            s = by_name.setdefault(c.name, {"total": 0, "passed": 0})
            s["total"] += 1
            s["passed"] += c.passed
        return {"total": len(self.checks), "passed": self.n_passed,
                "failed": self.n_failed, "by_check": dict(sorted(by_name.items()))}

    def to_json(self) -> dict:
        return {"fixture": self.fixture, "max_height": self.max_height,
                "checks": [c.to_json() for c in self.checks], "summary": self.summary()}

    def to_text(self) -> str:
        lines = [f"fixture {self.fixture} (max height {self.max_height})"]
        for name, s in self.summary()["by_check"].items():
            flag = "PASS" if s["passed"] == s["total"] else "FAIL"
            lines.append(f"  {flag} {name}: {s['passed']}/{s['total']}")
        for c in self.checks:
            if not c.passed:
                lines.append(f"    failed {c.name} {c.inputs}: expected {c.expected}, got {c.actual}")
        return "\n".join(lines)


def _seqs(rd: RootDatum, max_len: int = MAX_SEQ_LENGTH):
    M = minimal_set(rd)
    for n in range(1, max_len + 1):
        yield from product(M, repeat=n)


def _ls(vs):
    return [list(v) for v in vs]


def _check_paths_and_breakdown(rd: RootDatum, rep: VerificationReport, strata: list):
    for seq in _seqs(rd):
        top = tuple(map(sum, zip(*seq)))
        for nu in dominant_weights_below(rd, top):
            inputs = {"lambda_seq": _ls(seq), "nu": list(nu)}
            mult = tensor_multiplicity(rd, seq, nu)
            n_paths = len(enumerate_dominant_paths(rd, seq, nu))
            n_prod = sum(count_paths_product(rd, seq, s) for s in step_sequences(rd, seq, nu))
            rep.add("paths.identity", inputs, [mult, mult], [n_paths, n_prod])

            terms = breakdown_terms(rd, seq, nu)
            pieces = [t for _, _, t in terms if t]
            strata.append(pieces)
            h = rho_pairing2(rd, nu)
            expected = GradedSpace.point(h, -h, dim=mult) if mult else GradedSpace()
            try:
                actual = spectral_collapse(pieces)
            except ParityViolation as exc:
                rep.add("breakdown.degree_twist_dim", inputs, expected.to_json(), f"ParityViolation: {exc}")
                continue
            rep.add("breakdown.degree_twist_dim", inputs, expected.to_json(), actual.to_json())


def _check_cs(rd: RootDatum, rep: VerificationReport, bound: int):
    for lam in dominant_coweights(rd, bound):
        rep.add("hecke.casselman_shalika", {"lambda": list(lam)}, True, verify_cs(rd, lam))


def _check_strata(rd: RootDatum, rep: VerificationReport, bound: int, strata: list):
    for lam in minimal_set(rd):
        if not is_quasi_minuscule(rd, lam):
            continue
        n_delta = len(delta_conjugates(rd, lam))
        for mu in dominant_coweights(rd, bound):
            inputs = {"lambda": list(lam), "mu": list(mu)}
            try:
                r = zero_orbit_strata_report(rd, lam, mu)
            except AssertionError as exc:
                rep.add("strata.consistency", inputs, "consistent", f"ConsistencyFailure: {exc}")
                continue
            n_mu = r.expected.get(0, 0)
            enc = r.to_json()
            rep.add("strata.consistency", inputs, [n_mu + n_delta, enc["expected"]],
                    [r.total.get(0, 0), enc["difference"]])
        strata.append([GradedSpace.point(2 * c.dim, -2 * c.dim) for c in schubert_cells(rd, lam)])


def _check_schubert(rd: RootDatum, rep: VerificationReport):
    order = len(weyl_group(rd))
    simple = {r.vector for r in rd.simple_root_objects}
    for lam in minimal_set(rd):
        if not is_quasi_minuscule(rd, lam):
            continue
        inputs = {"lambda": list(lam)}
        gp = poincare_GP(rd, lam)
        rep.add("schubert.total_dim", inputs, order // len(stabilizer(rd, lam)), gp.total_dim())
        d = rho_pairing2(rd, lam)
        gamma = quasi_minuscule_root(rd, lam)
        bad = []
        for c in schubert_cells(rd, lam):
            img = c.coset_rep.act_root(gamma, rd).vector
            if c.side == MINUS:
                ok = 2 * c.dim <= d - 2 and ((2 * c.dim == d - 2) == (tuple(-x for x in img) in simple))
            else:
                ok = 2 * c.dim >= d and ((2 * c.dim == d) == (img in simple))
            if not ok:
                bad.append(list(c.coset_rep.word))
        rep.add("schubert.cell_bounds", inputs, [], bad)
        rep.add("schubert.top_degree_even", inputs, 0, max(gp.degrees()) % 2)


def _check_algebra(rd: RootDatum, rep: VerificationReport, bound: int, seed: int):
    box = dominant_coweights(rd, bound)
    H = {lam: HeckeElt.basis_vector(rd, lam) for lam in box}
    phi = {lam: WhittakerElt.basis_vector(rd, lam) for lam in box}
    comm_bad, assoc_bad, mod_bad, geo_bad = [], [], [], []
    for a, b in product(box, repeat=2):
        if hecke_mult(rd, H[a], H[b]) != hecke_mult(rd, H[b], H[a]):
            comm_bad.append(_ls([a, b]))
        if whittaker_action_geometric(rd, a, b) != whittaker_action(rd, phi[a], H[b]):
            geo_bad.append(_ls([a, b]))
    for a, b, c in product(box, repeat=3):
        if hecke_mult(rd, hecke_mult(rd, H[a], H[b]), H[c]) != hecke_mult(rd, H[a], hecke_mult(rd, H[b], H[c])):
            assoc_bad.append(_ls([a, b, c]))
        lhs = whittaker_action(rd, whittaker_action(rd, phi[a], H[b]), H[c])
        rhs = whittaker_action(rd, phi[a], hecke_mult(rd, H[b], H[c]))
        if lhs != rhs:
            mod_bad.append(_ls([a, b, c]))
    inputs = {"height_bound": bound}
    rep.add("algebra.hecke_commutative", inputs, [], comm_bad)
    rep.add("algebra.hecke_associative", inputs, [], assoc_bad)
    rep.add("algebra.module_associative", inputs, [], mod_bad)
    rep.add("algebra.geometric_equals_algebraic", inputs, [], geo_bad)

    # Freudenthal multiplicities summed over the full character against Weyl's formula
    dim_bad = []
    for lam in dominant_coweights(rd, max(bound, 4)):
        if sum(character(rd, lam).values()) != weyl_dimension(rd, lam):
            dim_bad.append(list(lam))
    rep.add("algebra.freudenthal_dimension", {"height_bound": max(bound, 4)}, [], dim_bad)

    rng = random.Random(seed)
    coroots = [r.coroot for r in rd.positive_roots]
    laws = 0
    n = DOMINANCE_SAMPLES
    for _ in range(n):
        base = tuple(rng.randint(-3, 3) for _ in range(rd.rank))
        x, y, z = (_random_shift(rng, base, coroots) for _ in range(3))
        ok = dominance_leq(rd, x, x)
        if dominance_leq(rd, x, y) and dominance_leq(rd, y, x):
            ok = ok and x == y
        if dominance_leq(rd, x, y) and dominance_leq(rd, y, z):
            ok = ok and dominance_leq(rd, x, z)
        laws += ok
    rep.add("algebra.dominance_order_laws", {"samples": n, "seed": seed}, n, laws)


def _random_shift(rng, base, coroots):
    v = base
    for c in coroots:
        v = vadd(v, tuple(rng.randint(0, 2) * x for x in c))
    return v


def _check_collapse(rep: VerificationReport, strata: list):
    rejected = []
    for pieces in strata:
        try:
            spectral_collapse(pieces)
        except ParityViolation:
            rejected.append(len(pieces))
    rep.add("collapse.accepts_generated", {"stratifications": len(strata)}, 0, len(rejected))
    mix = [GradedSpace.point(0), GradedSpace.point(1)]
    try:
        spectral_collapse(mix)
        outcome = "accepted"
    except ParityViolation:
        outcome = "ParityViolation"
    rep.add("collapse.rejects_mixed_parity", {"strata": [m.to_json() for m in mix]}, "ParityViolation", outcome)


def run_verification(rd: RootDatum, fixture: str | None = None, max_height: int = 4,
                     seed: int = 0) -> VerificationReport:
    rep = VerificationReport(fixture or rd.name, max_height)
    strata = []
    _check_paths_and_breakdown(rd, rep, strata)
    _check_cs(rd, rep, 2 * max_height)
    _check_strata(rd, rep, 2 * max_height, strata)
    _check_schubert(rd, rep)
    _check_algebra(rd, rep, min(3, max_height), seed)
    _check_collapse(rep, strata)
    return rep
