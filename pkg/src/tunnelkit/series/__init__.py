"""Exact truncated power series and the closed-form generating functions."""

from .brute import brute_force_gf
from .gf import (
    gf_catalan,
    gf_F,
    gf_F_closed,
    gf_fpexc132,
    gf_G,
    gf_G_tilde,
    gf_H1,
    gf_H1_closed,
    gf_J,
    gf_L,
    solve_K,
)
from .poly import ALPHABET, MultiPoly
from .series import TruncatedSeries

__all__ = [
    "ALPHABET",
    "MultiPoly",
    "TruncatedSeries",
    "brute_force_gf",
    "gf_catalan",
    "gf_G",
    "gf_G_tilde",
    "gf_H1",
    "gf_H1_closed",
    "gf_F",
    "gf_F_closed",
    "gf_fpexc132",
    "gf_L",
    "gf_J",
    "solve_K",
]
