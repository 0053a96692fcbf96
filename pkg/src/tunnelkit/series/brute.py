"""Enumeration oracle: generating functions summed object by object.

A statistic spec maps marker variables to statistics, given either as a
registered name or as a callable on the enumerated object.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Mapping

from ..dyck import DyckPath, enumerate_paths
from ..errors import CapExceeded
from .. import perms as _perms
from .. import stats as _stats
from .poly import ALPHABET, MultiPoly, _pack
from .series import TruncatedSeries

__all__ = ["brute_force_gf", "OBJECT_CLASSES", "DYCK_STATISTICS", "PERM_STATISTICS", "REGION_STATISTICS"]


def _fh(D):
    return _stats.u_star_d(D)[3]


DYCK_STATISTICS: dict[str, Callable[[DyckPath], int]] = {
    "one": lambda D: 0,
    "n": lambda D: D.n,
    "hills": _stats.hills,
    "peaks": _stats.peaks,
    "valleys": _stats.valleys,
    "returns": _stats.returns_and_arches,
    "odr": lambda D: _stats.odd_even_rises(D)[0],
    "er": lambda D: _stats.odd_even_rises(D)[1],
    "ct": lambda D: _stats.tunnel_counts_at(D, 0)[0],
    "lt": lambda D: (lambda c: c[1] - c[0])(_stats.tunnel_counts_at(D, 0)),
    "rt": lambda D: _stats.tunnel_counts_at(D, 0)[2],
    "cmt": lambda D: _stats.cmt_at(D, 0),
    "mu": lambda D: _stats.u_star_d(D)[0],
    "oc": lambda D: _stats.u_star_d(D)[1],
    "ih": lambda D: _stats.u_star_d(D)[2],
    "fh": _fh,
}

# objects are (D, r) pairs with 0 <= r <= n
REGION_STATISTICS: dict[str, Callable[[tuple[DyckPath, int]], int]] = {
    "r": lambda Dr: Dr[1],
    "tunnels_at": lambda Dr: _stats.tunnel_counts_at(*Dr)[0],
    "tunnels_le": lambda Dr: _stats.tunnel_counts_at(*Dr)[1],
    "tunnels_gt": lambda Dr: _stats.tunnel_counts_at(*Dr)[2],
    "cmt_at": lambda Dr: _stats.cmt_at(*Dr),
    "hills_gt_2r": lambda Dr: _stats.region_stats(*Dr).hills_gt_2r,
    "even_rises_gt_2r": lambda Dr: _stats.region_stats(*Dr).even_rises_gt_2r,
    "odd_rises_gt_2r": lambda Dr: _stats.region_stats(*Dr).odd_rises_gt_2r,
    "upsteps_le_2r": lambda Dr: _stats.region_stats(*Dr).upsteps_le_2r,
    "arches_ge_2r": lambda Dr: _stats.region_stats(*Dr).arches_ge_2r,
}

PERM_STATISTICS: dict[str, Callable] = {
    "fp": lambda pi: _perms.stats(pi).fp,
    "exc": lambda pi: _perms.stats(pi).exc,
    "des": lambda pi: _perms.stats(pi).des,
    # des + 1 on nonempty permutations, 0 on the empty one
    "des1": lambda pi: _perms.stats(pi).des + 1 if len(pi) else 0,
}


def _dyck(n):
    return enumerate_paths(n, override=True)


def _dyck_nonempty(n):
    return _dyck(n) if n else iter(())


def _dyck_r(n):
    for D in _dyck(n):
        for r in range(n + 1):
            yield (D, r)


def _avoiders(pattern):
    def gen(n):
        return iter(_perms.avoiders(n, pattern, override=True))

    return gen


OBJECT_CLASSES = {
    "dyck": (_dyck, DYCK_STATISTICS),
    "dyck_nonempty": (_dyck_nonempty, DYCK_STATISTICS),
    "dyck_r": (_dyck_r, REGION_STATISTICS),
    "s132": (_avoiders((1, 3, 2)), PERM_STATISTICS),
    "s321": (_avoiders((3, 2, 1)), PERM_STATISTICS),
}

_CAPS = {"dyck": 14, "dyck_nonempty": 14, "dyck_r": 12, "s132": 10, "s321": 10}


def brute_force_gf(
    object_class: str,
    statistic_spec: Mapping[str, str | Callable],
    N: int,
    cap: int | None = None,
) -> TruncatedSeries:
    """Sum ``prod var^stat(obj) z^size`` over every object of size ``<= N``."""
    try:
        generate, registry = OBJECT_CLASSES[object_class]
    except KeyError:
        raise ValueError(f"unknown object class {object_class!r}; choose from {sorted(OBJECT_CLASSES)}") from None
    limit = _CAPS[object_class] if cap is None else cap
    if N > limit:
        raise CapExceeded(f"order {N} exceeds the enumeration cap {limit} for {object_class}")
    fns = []
    for var, stat in statistic_spec.items():
        if var not in ALPHABET:
            MultiPoly.var(var)  # raises UnknownVariable
        fn = registry[stat] if isinstance(stat, str) else stat
        fns.append((ALPHABET.index(var), fn))
    coeffs = []
    for n in range(N + 1):
        counts: Counter = Counter()
        for obj in generate(n):
            exps = [0] * len(ALPHABET)
            for idx, fn in fns:
                exps[idx] += fn(obj)
            counts[tuple(exps)] += 1
        coeffs.append(MultiPoly({_pack(e): c for e, c in counts.items()}))
    return TruncatedSeries(coeffs, N)


def distribution(objects: Iterable, fn: Callable) -> Counter:
    """Multiset of ``fn`` values over ``objects``."""
    return Counter(fn(o) for o in objects)
