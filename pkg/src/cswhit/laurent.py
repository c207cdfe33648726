"""Sparse Laurent polynomials in ``q^{1/2}`` with integer coefficients.

``LaurentHalf({-1: 3, 2: 1})`` is ``3 q^{-1/2} + q``: keys are exponents of
``q^{1/2}``.  Zero coefficients are never stored, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentHalf:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if int(e) != e or int(v) != v:
                raise ValueError(f"non-integer term {v} q^({e}/2)")
            if v:
                c[int(e)] = c.get(int(e), 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def const(cls, n: int) -> "LaurentHalf":
        return cls({0: n})

    @classmethod
    def q_power(cls, half_exponent: int, coeff: int = 1) -> "LaurentHalf":
        """``coeff * q^{half_exponent / 2}``."""
        return cls({half_exponent: coeff})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def terms(self) -> list:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_constant(self) -> bool:
        return set(self._c) <= {0}

    def constant_term(self) -> int:
        return self._c.get(0, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentHalf.const(other)
        return isinstance(other, LaurentHalf) and self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentHalf(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentHalf({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentHalf(out)

    __rmul__ = __mul__

    def evaluate(self, q) -> Fraction | float:
        """Value at a perfect-square ``q`` (exact) or any positive number (float)."""
        q = Fraction(q)
        root = _exact_sqrt(q)
        if root is None:
            return sum(v * float(q) ** (e / 2) for e, v in self._c.items())
        return sum((v * root ** e for e, v in self._c.items()), Fraction(0))

    def __repr__(self):
        return f"LaurentHalf({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            exp = str(e // 2) if e % 2 == 0 else f"{e}/2"
            mono = "" if e == 0 else ("q" if e == 2 else f"q^({exp})")
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [[e, v] for e, v in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentHalf":
        return cls({int(e): int(v) for e, v in data})


def _coerce(x) -> LaurentHalf:
    if isinstance(x, LaurentHalf):
        return x
    if isinstance(x, int):
        return LaurentHalf.const(x)
    raise TypeError(f"cannot combine LaurentHalf with {type(x).__name__}")


def _exact_sqrt(q: Fraction):
    from math import isqrt

    if q <= 0:
        raise ValueError("q must be positive")
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None
