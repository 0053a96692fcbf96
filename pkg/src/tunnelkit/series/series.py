"""Power series in ``z`` truncated at a fixed order.

Coefficients are :class:`MultiPoly` values.  Every binary operation keeps the
smaller of the two orders, so a result is exact through its own order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence

from ..errors import ConstantTermNotOne, NonInvertibleConstantTerm, NotDivisible, SeriesError
from .poly import MultiPoly

__all__ = ["TruncatedSeries", "Z"]

_ZERO = MultiPoly()
_ONE = MultiPoly.const(1)


def _poly(c) -> MultiPoly:
    return c if isinstance(c, MultiPoly) else MultiPoly.const(c)


def _mul_coeffs(a: Sequence[MultiPoly], b: Sequence[MultiPoly], order: int) -> list[MultiPoly]:
    out = []
    for k in range(order + 1):
        acc = _ZERO
        for i in range(max(0, k - len(b) + 1), min(k, len(a) - 1) + 1):
            ai, bj = a[i], b[k - i]
            if ai.is_zero() or bj.is_zero():
                continue
            acc = acc + ai * bj
        out.append(acc)
    return out


class TruncatedSeries:
    """``c_0 + c_1 z + ... + c_N z^N + O(z^(N+1))``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [_poly(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [_ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    # construction

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([_ONE], order)

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls([_poly(c)], order)

    @classmethod
    def z(cls, order: int, power: int = 1, coeff=1) -> TruncatedSeries:
        coeffs = [_ZERO] * power + [_poly(coeff)]
        return cls(coeffs, order)

    @classmethod
    def geometric(cls, ratio, order: int) -> TruncatedSeries:
        """``1 / (1 - ratio*z)`` as ``sum ratio^k z^k``."""
        r = _poly(ratio)
        coeffs = [_ONE]
        for _ in range(order):
            coeffs.append(coeffs[-1] * r)
        return cls(coeffs, order)

    @classmethod
    def from_polys(cls, *coeffs, order: int) -> TruncatedSeries:
        return cls(list(coeffs), order)

    # coercion helpers

    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (MultiPoly, Rational)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k]

    def coefficient(self, k: int) -> MultiPoly:
        if k > self.order:
            raise SeriesError(f"coefficient z^{k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend a series known through z^{self.order} to z^{order}")
        return TruncatedSeries(self.coeffs, order)

    # ring operations

    def __add__(self, other) -> TruncatedSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs)], order)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> TruncatedSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (MultiPoly, Rational)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(_mul_coeffs(self.coeffs, other.coeffs, order), order)

    __rmul__ = __mul__

    def scale(self, m) -> TruncatedSeries:
        m = _poly(m)
        return TruncatedSeries([c * m for c in self.coeffs], self.order)

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            return self.reciprocal() ** (-e)
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, Rational):
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, MultiPoly):
            return self.divide_exact(other)
        return self.divide(other)

    def divide(self, other: TruncatedSeries) -> TruncatedSeries:
        return self * other.reciprocal()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def agrees_with(self, other: TruncatedSeries, order: int | None = None) -> bool:
        """Coefficient equality through ``order`` (default: common order)."""
        n = min(self.order, other.order) if order is None else order
        if n > min(self.order, other.order):
            raise SeriesError("comparison order exceeds the known coefficients")
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    # z-structure

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by ``z^k``; the result is exact through ``order + k``."""
        return TruncatedSeries([_ZERO] * k + list(self.coeffs), self.order + k)

    def div_z(self, k: int = 1) -> TruncatedSeries:
        """Divide by ``z^k`` after checking the low coefficients vanish."""
        for j in range(k):
            if not self.coeffs[j].is_zero():
                raise NotDivisible(f"coefficient of z^{j} is {self.coeffs[j]}, cannot divide by z^{k}")
        if k > self.order:
            raise SeriesError("division by z leaves no known coefficients")
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def divide_exact(self, m: MultiPoly) -> TruncatedSeries:
        """Divide every coefficient by the monomial ``m``; must be exact."""
        return TruncatedSeries([c.divide_exact(m) for c in self.coeffs], self.order)

    def scale_z(self, m) -> TruncatedSeries:
        """Substitute ``z -> m*z`` for a polynomial ``m``."""
        m = _poly(m)
        out = []
        power = _ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * m
        return TruncatedSeries(out, self.order)

    def subs(self, mapping: Mapping[str, object]) -> TruncatedSeries:
        return TruncatedSeries([c.subs(mapping) for c in self.coeffs], self.order)

    def swap(self, a: str, b: str) -> TruncatedSeries:
        return TruncatedSeries([c.swap(a, b) for c in self.coeffs], self.order)

    # inverses and roots

    def reciprocal(self) -> TruncatedSeries:
        """Newton iteration ``g <- g (2 - a g)``, doubling precision per step."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise NonInvertibleConstantTerm(f"constant term {c0} is not a nonzero rational")
        g = TruncatedSeries.constant(Fraction(1) / c0.constant_term(), 0)
        prec = 1
        while prec < self.order + 1:
            prec = min(2 * prec, self.order + 1)
            a = self.truncate(prec - 1)
            g = TruncatedSeries(g.coeffs, prec - 1)
            g = g * (2 - a * g)
        g = TruncatedSeries(g.coeffs, self.order)
        if not (self * g).agrees_with(TruncatedSeries.one(self.order)):
            raise SeriesError("reciprocal residual is not zero")
        return g

    def sqrt1p(self) -> TruncatedSeries:
        """Square root of a series with constant term 1.

        Newton iteration for ``a^(-1/2)`` via ``y <- y + y (1 - a y^2) / 2``,
        then ``sqrt(a) = a y``; the square is checked against ``a``.
        """
        if self.coeffs[0] != _ONE:
            raise ConstantTermNotOne(f"constant term is {self.coeffs[0]}, expected 1")
        half = Fraction(1, 2)
        y = TruncatedSeries.one(0)
        prec = 1
        while prec < self.order + 1:
            prec = min(2 * prec, self.order + 1)
            a = self.truncate(prec - 1)
            y = TruncatedSeries(y.coeffs, prec - 1)
            y = y + (y * (1 - a * y * y)).scale(half)
        root = self * TruncatedSeries(y.coeffs, self.order)
        if not (root * root).agrees_with(self):
            raise SeriesError("square root residual is not zero")
        return root

    # output

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            body = str(c)
            if k == 0:
                parts.append(body)
                continue
            zk = "z" if k == 1 else f"z^{k}"
            parts.append(f"({body})*{zk}" if len(c) > 1 or body.startswith("-") else (zk if body == "1" else f"{body}*{zk}"))
        return (" + ".join(parts) or "0") + f" + O(z^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({str(self)!r})"

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json_terms() for c in self.coeffs]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping) -> TruncatedSeries:
        coeffs = []
        for terms in data["coeffs"]:
            poly = MultiPoly()
            for term in terms:
                value = Fraction(term["value"])
                mono = term["monomial"]
                poly = poly + (MultiPoly.parse(mono) * value if mono != "1" else MultiPoly.const(value))
            coeffs.append(poly)
        return cls(coeffs, data["order"])


def Z(order: int) -> TruncatedSeries:
    """The series ``z`` truncated at ``order``."""
    return TruncatedSeries.z(order)
