"""Sparse multivariate polynomials with exact rational coefficients.

The variable alphabet is closed: only the marker letters in :data:`ALPHABET`
exist.  Exponent vectors are packed into one integer with a 16-bit field per
variable, so monomial multiplication is integer addition.  The top bit of
every field is a guard; a product that sets it has overflowed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

from ..errors import NotDivisible, UnknownVariable

__all__ = ["ALPHABET", "MultiPoly", "Coefficient"]

ALPHABET = ("t", "u", "v", "w", "x", "y", "p", "q", "s")
_INDEX = {name: i for i, name in enumerate(ALPHABET)}
_BITS = 16
_FIELD = (1 << _BITS) - 1
_GUARD = sum(1 << (_BITS * i + _BITS - 1) for i in range(len(ALPHABET)))
MAX_EXPONENT = (1 << (_BITS - 1)) - 1

Coefficient = Union[int, Fraction]


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _pack(exps) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} outside 0..{MAX_EXPONENT}")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _FIELD for i in range(len(ALPHABET)))


def _var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise UnknownVariable(f"unknown variable {name!r}; alphabet is {', '.join(ALPHABET)}") from None


class MultiPoly:
    """Polynomial in the fixed alphabet; immutable once built."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coefficient] | None = None):
        # packed exponent -> nonzero rational
        self._terms = {k: _norm(c) for k, c in (terms or {}).items() if c != 0}
        self._hash = None

    # construction

    @classmethod
    def const(cls, c) -> MultiPoly:
        if isinstance(c, MultiPoly):
            return c
        if not isinstance(c, Rational):
            raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
        return cls({0: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        idx = _var_index(name)
        exps = [0] * len(ALPHABET)
        exps[idx] = power
        return cls({_pack(exps): 1})

    @classmethod
    def monomial(cls, coeff=1, **powers: int) -> MultiPoly:
        exps = [0] * len(ALPHABET)
        for name, e in powers.items():
            exps[_var_index(name)] = e
        return cls({_pack(exps): coeff})

    @classmethod
    def from_exponents(cls, mapping: Mapping[tuple, Coefficient]) -> MultiPoly:
        """Build from ``{(e_t, e_u, ..., e_s): c}`` or ``{(("u", 2), ...): c}``."""
        terms: dict[int, Coefficient] = {}
        for exps, c in mapping.items():
            if exps and isinstance(exps[0], tuple):
                vec = [0] * len(ALPHABET)
                for name, e in exps:
                    vec[_var_index(name)] += e
                exps = vec
            key = _pack(exps)
            terms[key] = terms.get(key, 0) + c
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> MultiPoly:
        """Parse sums like ``"v^2p^2 + x v p^3 - 3/2 u*w"``.

        Variables are single letters, so juxtaposition is multiplication.
        """
        src = text.replace(" ", "").replace("*", "")
        if not src:
            raise ValueError("empty polynomial text")
        if src[0] not in "+-":
            src = "+" + src
        term_re = re.compile(r"([+-])(\d+(?:/\d+)?)?((?:[a-z](?:\^\d+)?)*)")
        pos = 0
        out = cls()
        while pos < len(src):
            m = term_re.match(src, pos)
            if not m or m.end() == pos or (m.group(2) is None and not m.group(3)):
                raise ValueError(f"cannot parse polynomial near {src[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            powers: dict[str, int] = {}
            for name, e in re.findall(r"([a-z])(?:\^(\d+))?", m.group(3)):
                powers[name] = powers.get(name, 0) + (int(e) if e else 1)
            out = out + cls.monomial(sign * coeff, **powers)
            pos = m.end()
        return out

    @staticmethod
    def _coerce(other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other)

    # inspection

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return {_unpack(k): Fraction(c) for k, c in self._terms.items()}

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get(0, 0))

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def coefficient(self, **powers: int) -> Fraction:
        key = MultiPoly.monomial(1, **powers)._terms.popitem()[0]
        return Fraction(self._terms.get(key, 0))

    def degree(self, name: str) -> int:
        shift = _BITS * _var_index(name)
        return max(((k >> shift) & _FIELD for k in self._terms), default=0)

    def variables(self) -> set[str]:
        used = set()
        for k in self._terms:
            for name, e in zip(ALPHABET, _unpack(k)):
                if e:
                    used.add(name)
        return used

    # arithmetic

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly()
            other = _norm(Fraction(other)) if not isinstance(other, int) else other
            return MultiPoly({k: c * other for k, c in self._terms.items()})
        terms: dict[int, Coefficient] = {}
        get = terms.get
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                terms[k] = get(k, 0) + c1 * c2
        if any(k & _GUARD for k in terms):
            raise OverflowError(f"exponent exceeded {MAX_EXPONENT}")
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return self.divide_exact(other)
        c = Fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, e: int) -> MultiPoly:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def divide_exact(self, other: MultiPoly) -> MultiPoly:
        """Exact division by a monomial (or a nonzero constant)."""
        if len(other._terms) != 1:
            raise NotDivisible("only division by a single monomial is supported")
        (kd, cd), = other._terms.items()
        fields_d = _unpack(kd)
        out = {}
        for k, c in self._terms.items():
            fk = _unpack(k)
            if any(a < b for a, b in zip(fk, fields_d)):
                raise NotDivisible(f"term {MultiPoly({k: c})} is not divisible by {other}")
            out[k - kd] = Fraction(c) / cd
        return MultiPoly(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            if isinstance(other, Rational):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution

    def subs(self, mapping: Mapping[str, object]) -> MultiPoly:
        """Simultaneously replace variables by polynomials or rationals."""
        images = {_var_index(name): self._coerce(val) for name, val in mapping.items()}
        if not images:
            return self
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(idx, e):
            key = (idx, e)
            if key not in powers:
                powers[key] = images[idx] ** e
            return powers[key]

        out = MultiPoly()
        acc: dict[int, Coefficient] = {}
        for k, c in self._terms.items():
            exps = list(_unpack(k))
            factor = None
            for idx in images:
                e = exps[idx]
                if e:
                    exps[idx] = 0
                    pe = power(idx, e)
                    factor = pe if factor is None else factor * pe
            rest = _pack(exps)
            if factor is None:
                acc[rest] = acc.get(rest, 0) + c
            else:
                for kf, cf in factor._terms.items():
                    kk = rest + kf
                    acc[kk] = acc.get(kk, 0) + c * cf
        out = MultiPoly(acc)
        if any(k & _GUARD for k in out._terms):
            raise OverflowError(f"exponent exceeded {MAX_EXPONENT}")
        return out

    def swap(self, a: str, b: str) -> MultiPoly:
        return self.subs({a: MultiPoly.var(b), b: MultiPoly.var(a)})

    # printing

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms by descending total degree, then descending exponent vector."""
        items = [(_unpack(k), Fraction(c)) for k, c in self._terms.items()]
        items.sort(key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))
        return items

    @staticmethod
    def monomial_str(exps: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(ALPHABET, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = self.monomial_str(exps)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, body))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"

    def to_json_terms(self) -> list[dict[str, str]]:
        out = []
        for exps, c in self.sorted_terms():
            out.append({"monomial": self.monomial_str(exps), "value": f"{c.numerator}/{c.denominator}"})
        return out
