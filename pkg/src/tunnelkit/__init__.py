"""tunnelkit: tunnel statistics of Dyck paths, zigzag bijections, and exact
generating-function verification."""

from .dyck import DyckPath, Step, catalan, concat, enumerate_paths, first_return_decompose, match_steps, parse, render
from .perms import Permutation, composite, contains, kra, kra_inverse, parse_perm, rs, rs_inverse
from .stats import StatProfile, profile, region_stats, tunnel_counts_at, tunnels
from .zigzag import build_labeled_word, phi, phi_inverse, phi_r, phi_r_inverse, sigma_r

__version__ = "0.1.0"

__all__ = [
    "DyckPath",
    "Step",
    "Permutation",
    "StatProfile",
    "parse",
    "render",
    "catalan",
    "concat",
    "enumerate_paths",
    "first_return_decompose",
    "match_steps",
    "profile",
    "region_stats",
    "tunnel_counts_at",
    "tunnels",
    "phi",
    "phi_r",
    "phi_inverse",
    "phi_r_inverse",
    "sigma_r",
    "build_labeled_word",
    "parse_perm",
    "contains",
    "rs",
    "rs_inverse",
    "kra",
    "kra_inverse",
    "composite",
]
