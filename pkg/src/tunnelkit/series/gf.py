"""Closed-form generating functions for tunnel, rise and permutation statistics.

Each function expands a closed form to a :class:`TruncatedSeries`
through ``z^N``.  Divisions by ``z`` (or by a monomial marker) are checked
shifts, so a few functions compute at a slightly higher working order.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import FixedPointDivergence
from .poly import MultiPoly
from .series import TruncatedSeries

__all__ = [
    "gf_catalan",
    "catalan_of",
    "tunnel_radical",
    "gf_G",
    "gf_G1",
    "gf_H1",
    "gf_H1_closed",
    "gf_G_tilde",
    "gf_F",
    "gf_F_closed",
    "gf_fpexc132",
    "f1",
    "gf_L",
    "gf_L_via_K1",
    "solve_K",
    "gf_J",
]

_V = {c: MultiPoly.var(c) for c in "tuvwxypqs"}


def _z(N, coeff=1, power=1):
    return TruncatedSeries.z(N, power, coeff)


def _series(N, *coeffs):
    return TruncatedSeries(list(coeffs), N)


def gf_catalan(N: int) -> TruncatedSeries:
    """``(1 - sqrt(1 - 4z)) / (2z)``."""
    root = _series(N + 1, 1, -4).sqrt1p()
    return (1 - root).div_z().scale(Fraction(1, 2))


def catalan_of(m: MultiPoly, N: int) -> TruncatedSeries:
    """``C(m z)`` for a polynomial marker ``m``."""
    return gf_catalan(N).scale_z(m)


def tunnel_radical(N: int) -> TruncatedSeries:
    """``sqrt(1 - 2(u+v) z + (u-v)^2 z^2)``."""
    u, v = _V["u"], _V["v"]
    return _series(N, 1, -2 * (u + v), (u - v) ** 2).sqrt1p()


def gf_G(N: int) -> TruncatedSeries:
    """Hills, odd rises, even rises, returns: variables ``t, u, v, w``."""
    t, u, v, w = _V["t"], _V["u"], _V["v"], _V["w"]
    R = tunnel_radical(N)
    den = _series(N, 2 - w, (v + u - 2 * t * u) * w) + R.scale(w)
    return den.reciprocal().scale(2)


def gf_G1(N: int) -> TruncatedSeries:
    """``G(1, u, v, 1, z)``."""
    return gf_G(N).subs({"t": 1, "w": 1})


def gf_H1(N: int) -> TruncatedSeries:
    """``G(1, v, u, 1, z)``."""
    return gf_G1(N).swap("u", "v")


def gf_H1_closed(N: int) -> TruncatedSeries:
    """``(1 + (u-v) z - sqrt(1 - 2(v+u) z + (v-u)^2 z^2)) / (2 u z)``."""
    u, v = _V["u"], _V["v"]
    num = _series(N + 1, 1, u - v) - tunnel_radical(N + 1)
    return num.div_z().divide_exact(2 * u)


def gf_G_tilde(N: int) -> TruncatedSeries:
    """Centered, left, right tunnels and centered multitunnels: ``x, u, v, w``."""
    x, u, v, w = _V["x"], _V["u"], _V["v"], _V["w"]
    R = tunnel_radical(N)
    den = _series(N, 2 - w, (v + u - 2 * x) * w) + R.scale(w)
    return den.reciprocal().scale(2)


def gf_F(N: int) -> TruncatedSeries:
    """Tunnels classified against ``x = n + r``, summed over ``r``; ``y`` marks ``r``.

    ``C(uyz) G / (1 - y u^2 z^2 C(uyz)^2 G(1,u,v,1,z) G(1,v,u,1,z))``.
    """
    u, y = _V["u"], _V["y"]
    C = catalan_of(u * y, N)
    G = gf_G(N)
    G1 = G.subs({"t": 1, "w": 1})
    H1 = G1.swap("u", "v")
    den = 1 - (C * C * G1 * H1).shift(2).truncate(N).scale(y * u * u)
    return C * G * den.reciprocal()


def gf_F_closed(N: int) -> TruncatedSeries:
    """The radical form of ``F`` with ``A = sqrt(...) - 1``, ``B = sqrt(1 - 4uyz) - 1``.

    ``B`` and the second denominator factor both carry a factor ``u y z``,
    which is cancelled exactly before inverting.
    """
    t, u, v, w, y = _V["t"], _V["u"], _V["v"], _V["w"], _V["y"]
    M = N + 1
    A = tunnel_radical(M) - 1
    uyz = u * y
    B = _series(M, 1, -4 * uyz).sqrt1p() - 1
    B_red = B.div_z().divide_exact(uyz)
    A = A.truncate(N)
    vu_z = _z(N, v - u)
    num = B_red * (2 + vu_z + A) * 2
    den1 = 2 + _z(N, (u + v - 2 * t * u) * w) + A.scale(w)
    den2 = (A + vu_z) * B_red - 4
    return num * (den1 * den2).reciprocal()


def gf_fpexc132(N: int) -> TruncatedSeries:
    """Fixed points (``x``) and excedances (``v``) over 132-avoiders."""
    x, v = _V["x"], _V["v"]
    root = _series(N, 1, -2 * (1 + v), (1 - v) ** 2).sqrt1p()
    den = _series(N, 1, 1 + v - 2 * x) + root
    return den.reciprocal().scale(2)


def f1(N: int) -> TruncatedSeries:
    v, p = _V["v"], _V["p"]
    pm = p - 1
    return _series(
        N,
        1,
        -2 * (1 + v),
        (1 - v) ** 2 - 2 * v * pm * (p + 3),
        -2 * v * (1 + v) * pm ** 2,
        v ** 2 * pm ** 4,
    )


def gf_L(N: int) -> TruncatedSeries:
    """Fixed points, excedances and descents+1 (``x, v, p``) over 132-avoiders."""
    x, v, p = _V["x"], _V["v"], _V["p"]
    num = _series(N, 2, 2 * x * (p - 1))
    den = _series(N, 1, 1 + v - 2 * x, -v * (p - 1) ** 2) + f1(N).sqrt1p()
    return num * den.reciprocal()


def _fixed_point(update, N: int, what: str) -> TruncatedSeries:
    current = TruncatedSeries.zero(N)
    # each pass fixes at least one more coefficient
    for _ in range(N + 2):
        nxt = update(current)
        if nxt == current:
            return current
        current = nxt
    raise FixedPointDivergence(f"{what} did not stabilise within {N + 2} iterations")


def solve_K(N: int) -> TruncatedSeries:
    """Root with ``K(0) = 0`` of ``uz K^2 - [1 - (u+v) z + uv(1-q)^2 z^2] K + q^2 v z = 0``."""
    u, v, q = _V["u"], _V["v"], _V["q"]
    lin = _series(N, 1, -(u + v), u * v * (1 - q) ** 2)
    inv = lin.reciprocal()
    src = _z(N, q * q * v)

    def update(K):
        return (src + (K * K).shift(1).truncate(N).scale(u)) * inv

    return _fixed_point(update, N, "K")


def gf_J(N: int, K: TruncatedSeries | None = None) -> TruncatedSeries:
    """Nonempty paths by hills, initial and final hill, odd and even rises and u*d.

    Variables ``x, t, s, u, v, q``.
    """
    x, t, s, u = _V["x"], _V["t"], _V["s"], _V["u"]
    if K is None:
        K = solve_K(N)
    inner = _series(N, x * t * s) + K - (K.shift(1).truncate(N)).scale(x * u * (1 - t) * (1 - s))
    num = inner.shift(1).truncate(N).scale(u)
    den = _series(N, 1, -x * u) - K.shift(1).truncate(N).scale(u)
    return num * den.reciprocal()


def gf_L_via_K1(N: int) -> TruncatedSeries:
    """``(1 - xz + xpz) / (1 - xz - z K1)`` with ``K1`` the specialised ``K``."""
    x, p = _V["x"], _V["p"]
    K1 = solve_K(N).subs({"u": 1, "q": p})
    num = _series(N, 1, -x + x * p)
    den = _series(N, 1, -x) - K1.shift(1).truncate(N)
    return num * den.reciprocal()
