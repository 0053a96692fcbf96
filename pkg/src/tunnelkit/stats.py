"""Per-path statistics: hills, rises, returns, tunnels, multitunnels, u*d.

Coordinates follow :mod:`tunnelkit.dyck`: a peak sits at the x-coordinate of
its top, a rise at the right end of its up-step, an arch at its leftmost
point.  Tunnel midpoints are integers because every tunnel has even length.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from .dyck import DyckPath, partners
from .errors import ROutOfRange

__all__ = [
    "Tunnel",
    "Multitunnel",
    "StatProfile",
    "RegionStats",
    "hills",
    "peaks",
    "valleys",
    "odd_even_rises",
    "returns_and_arches",
    "tunnels",
    "tunnel_counts_at",
    "multitunnels",
    "cmt_at",
    "region_stats",
    "u_star_d",
    "profile",
    "profiles_to_csv",
]


@dataclass(frozen=True)
class Tunnel:
    up_position: int
    down_position: int

    @property
    def start_x(self) -> int:
        return self.up_position - 1

    @property
    def end_x(self) -> int:
        return self.down_position

    @property
    def midpoint_x(self) -> int:
        return (self.start_x + self.end_x) // 2


@dataclass(frozen=True)
class Multitunnel:
    start_x: int
    end_x: int

    @property
    def midpoint_x(self) -> int:
        return (self.start_x + self.end_x) // 2


@dataclass(frozen=True)
class RegionStats:
    hills_gt_2r: int
    even_rises_gt_2r: int
    odd_rises_gt_2r: int
    upsteps_le_2r: int
    arches_ge_2r: int


@dataclass(frozen=True)
class StatProfile:
    n: int
    hills: int
    peaks: int
    valleys: int
    returns: int
    odd_rises: int
    even_rises: int
    ct: int
    lt: int
    rt: int
    cmt: int
    mu: int
    oc: int
    initial_hill: int
    final_hill: int

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def csv_header(cls) -> list[str]:
        return [f.name for f in fields(cls)]


def _peak_tops(word: str) -> list[tuple[int, int]]:
    """(x, height) of the top of every peak."""
    out = []
    h = 0
    for i, c in enumerate(word):
        h += 1 if c == "u" else -1
        if c == "u" and i + 1 < len(word) and word[i + 1] == "d":
            out.append((i + 1, h))
    return out


def hills(path: DyckPath) -> int:
    return sum(1 for _, h in _peak_tops(path.word) if h == 1)


def peaks(path: DyckPath) -> int:
    return path.word.count("ud")


def valleys(path: DyckPath) -> int:
    return path.word.count("du")


def odd_even_rises(path: DyckPath) -> tuple[int, int]:
    w = path.word
    odd = sum(1 for i in range(0, len(w), 2) if w[i] == "u")
    return odd, w.count("u") - odd


def returns_and_arches(path: DyckPath) -> int:
    h = 0
    count = 0
    for c in path.word:
        h += 1 if c == "u" else -1
        if h == 0:
            count += 1
    return count


def tunnels(path: DyckPath) -> list[Tunnel]:
    p = partners(path.word)
    return [Tunnel(i, p[i]) for i in range(1, len(p)) if i < p[i]]


def _check_r(path: DyckPath, r: int) -> None:
    if not 0 <= r <= path.n:
        raise ROutOfRange(f"r={r} outside 0..{path.n}")


def tunnel_counts_at(path: DyckPath, r: int) -> tuple[int, int, int]:
    """Return ``(at, left_le, right)`` for tunnel midpoints against ``x = n + r``.

    ``left_le`` counts midpoints ``<= n + r`` and therefore includes ``at``.
    At ``r = 0``: ``ct = at``, ``rt = right``, ``lt = left_le - at``.
    """
    _check_r(path, r)
    line = path.n + r
    at = le = right = 0
    w = path.word
    p = partners(w)
    for i in range(1, len(p)):
        j = p[i]
        if i < j:
            mid2 = i - 1 + j
            if mid2 == 2 * line:
                at += 1
                le += 1
            elif mid2 < 2 * line:
                le += 1
            else:
                right += 1
    return at, le, right


def multitunnels(path: DyckPath) -> list[Multitunnel]:
    """Every factor ``D = ABC`` with ``B`` a nonempty Dyck word."""
    h = path.heights()
    out = []
    for a in range(len(h)):
        base = h[a]
        for b in range(a + 1, len(h)):
            if h[b] < base:
                break
            if h[b] == base:
                out.append(Multitunnel(a, b))
    return out


def cmt_at(path: DyckPath, r: int = 0) -> int:
    _check_r(path, r)
    target = 2 * (path.n + r)
    return sum(1 for m in multitunnels(path) if m.start_x + m.end_x == target)


def region_stats(path: DyckPath, r: int) -> RegionStats:
    """Statistics restricted to the regions left and right of ``x = 2r``.

    Hills and rises use the strict bound ``x > 2r``; arches use ``x >= 2r``.
    """
    _check_r(path, r)
    cut = 2 * r
    w = path.word
    hill_count = sum(1 for x, ht in _peak_tops(w) if ht == 1 and x > cut)
    even = odd = up_le = 0
    for x, c in enumerate(w, start=1):
        if c != "u":
            continue
        if x <= cut:
            up_le += 1
        elif x % 2:
            odd += 1
        else:
            even += 1
    arches = 0
    h = 0
    left = 0
    for x, c in enumerate(w, start=1):
        h += 1 if c == "u" else -1
        if h == 0:
            if left >= cut:
                arches += 1
            left = x
    return RegionStats(hill_count, even, odd, up_le, arches)


def u_star_d(path: DyckPath) -> tuple[int, int, int, int]:
    """Return ``(mu, oc, ih, fh)``.

    ``mu`` counts windows ``u ? d`` in the word (overlaps included) and ``oc``
    counts them in the word followed by one extra down-step.
    """
    w = path.word
    mu = sum(1 for i in range(len(w) - 2) if w[i] == "u" and w[i + 2] == "d")
    tail = w[-2:] if len(w) >= 2 else ""
    oc = mu + (1 if tail and tail[0] == "u" else 0)
    ih = 1 if w.startswith("ud") else 0
    fh = 1 if w.endswith("ud") and w.count("u", 0, -2) == w.count("d", 0, -2) else 0
    return mu, oc, ih, fh


def profile(path: DyckPath) -> StatProfile:
    """All statistics of ``path`` in one record."""
    odr, er = odd_even_rises(path)
    at, le, right = tunnel_counts_at(path, 0)
    mu, oc, ih, fh = u_star_d(path)
    return StatProfile(
        n=path.n,
        hills=hills(path),
        peaks=peaks(path),
        valleys=valleys(path),
        returns=returns_and_arches(path),
        odd_rises=odr,
        even_rises=er,
        ct=at,
        lt=le - at,
        rt=right,
        cmt=cmt_at(path, 0),
        mu=mu,
        oc=oc,
        initial_hill=ih,
        final_hill=fh,
    )


def profiles_to_csv(rows, word_column=True) -> str:
    """CSV dump of ``(path, StatProfile)`` rows with a fixed header."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = StatProfile.csv_header()
    writer.writerow((["word"] if word_column else []) + header)
    for path, prof in rows:
        values = [getattr(prof, k) for k in header]
        writer.writerow(([path.word] if word_column else []) + values)
    return buf.getvalue()
