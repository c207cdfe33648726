"""Graded vector spaces with Tate twists, recorded numerically.

A :class:`GradedSpace` maps a cohomological degree to ``(dim, half_twists)``;
``half_twists = -2m`` stands for the twist ``(-m)``.  Twists are never merged
silently: a direct sum mixing two twists in one degree raises
:class:`~cswhit.errors.TwistClash`.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ParityViolation, TwistClash


class GradedSpace:
    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, tuple] | None = None):
        clean = {}
        for deg, (dim, tw) in (entries or {}).items():
            if dim < 0:
                raise ValueError(f"negative dimension in degree {deg}")
            if dim:
                clean[int(deg)] = (int(dim), int(tw))
        self._entries = clean

    @classmethod
    def point(cls, degree: int = 0, half_twists: int = 0, dim: int = 1) -> "GradedSpace":
        return cls({degree: (dim, half_twists)})

    @classmethod
    def zero(cls) -> "GradedSpace":
        return cls()

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def degrees(self) -> list:
        return sorted(self._entries)

    def dim(self, degree: int) -> int:
        return self._entries.get(degree, (0, 0))[0]

    def twist(self, degree: int) -> int | None:
        e = self._entries.get(degree)
        return None if e is None else e[1]

    def total_dim(self) -> int:
        return sum(d for d, _ in self._entries.values())

    def is_zero(self) -> bool:
        return not self._entries

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self._entries == other._entries

    def __hash__(self):
        return hash(tuple(sorted(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"{d}: (dim={n}, half_twists={t})" for d, (n, t) in sorted(self._entries.items()))
        return f"GradedSpace({{{body}}})"

    def __add__(self, other: "GradedSpace") -> "GradedSpace":
        out = dict(self._entries)
        for deg, (dim, tw) in other._entries.items():
            if deg in out:
                d0, t0 = out[deg]
                if t0 != tw:
                    raise TwistClash(f"degree {deg}: half-twists {t0} and {tw}")
                out[deg] = (d0 + dim, tw)
            else:
                out[deg] = (dim, tw)
        return GradedSpace(out)

    def __matmul__(self, other: "GradedSpace") -> "GradedSpace":
        """Tensor product: degrees and twists add, dimensions multiply."""
        out = GradedSpace()
        for d1, (n1, t1) in self._entries.items():
            for d2, (n2, t2) in other._entries.items():
                out = out + GradedSpace({d1 + d2: (n1 * n2, t1 + t2)})
        return out

    tensor = __matmul__

    def shift(self, k: int) -> "GradedSpace":
        """``V[k]``: the class in degree ``d`` moves to ``d - k``."""
        return GradedSpace({d - k: e for d, e in self._entries.items()})

    def parities(self) -> set:
        return {d % 2 for d in self._entries}

    def to_json(self) -> list:
        return [
            {"degree": d, "dim": n, "half_twists": t}
            for d, (n, t) in sorted(self._entries.items())
        ]

    def to_mapping(self) -> dict:
        return {str(d): {"dim": n, "half_twists": t} for d, (n, t) in sorted(self._entries.items())}

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "GradedSpace":
        out = cls()
        for item in data:
            out = out + cls({item["degree"]: (item["dim"], item["half_twists"])})
        return out


def direct_sum(parts: Iterable[GradedSpace]) -> GradedSpace:
    out = GradedSpace()
    for p in parts:
        out = out + p
    return out


def tensor_all(parts: Iterable[GradedSpace]) -> GradedSpace:
    out = GradedSpace.point()
    for p in parts:
        out = out @ p
    return out


def spectral_collapse(strata: Iterable[GradedSpace]) -> GradedSpace:
    """Total compactly supported cohomology of a stratified space whose strata share one parity.

    When every stratum is concentrated in degrees of a single common parity
    the stratification spectral sequence degenerates and the answer is the
    degree-wise direct sum.  Otherwise raises :class:`ParityViolation`.
    """
    strata = list(strata)
    parities = set()
    for s in strata:
        parities |= s.parities()
    if len(parities) > 1:
        raise ParityViolation("strata are not concentrated in degrees of one parity")
    return direct_sum(strata)
