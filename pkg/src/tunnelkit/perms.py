"""Pattern-avoiding permutations and their bijections to Dyck paths.

Permutations are drawn as an n x n array with a cross in row ``i``, column
``pi_i``.  ``rs`` walks the array of a 321-avoider from the upper-left corner
(row 1 on top); ``kra`` walks the array of a 132-avoider from the lower-left
corner (row ``n`` at the bottom).  In both walks the path keeps every cross
to its right and hugs the diagonal, so in row ``i`` the vertical edge sits at
column ``min(pi_j) - 1`` over the rows already or still to be passed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from .config import check_cap, limits
from .dyck import DyckPath, enumerate_paths
from .errors import NotAvoiding132, NotAvoiding321, PatternTooLong, PermutationError
from .zigzag import phi_r

__all__ = [
    "Permutation",
    "PermStats",
    "parse_perm",
    "contains",
    "avoids",
    "avoiders",
    "stats",
    "alpha",
    "beta",
    "rs",
    "rs_inverse",
    "kra",
    "kra_inverse",
    "composite",
]


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise PermutationError(f"{self.values!r} is not a permutation of 1..{len(self.values)}")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """1-based entry ``pi_i``."""
        return self.values[i - 1]

    def __str__(self) -> str:
        if len(self.values) <= 9:
            return "".join(map(str, self.values))
        return ",".join(map(str, self.values))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


def parse_perm(text: str) -> Permutation:
    """Parse one-line notation: ``"67435281"`` or ``"10,2,3,..."``."""
    text = text.strip()
    if "," in text:
        vals = tuple(int(t) for t in text.split(","))
    else:
        vals = tuple(int(c) for c in text)
    return Permutation(vals)


def _as_tuple(pi) -> tuple[int, ...]:
    if isinstance(pi, Permutation):
        return pi.values
    if isinstance(pi, str):
        return parse_perm(pi).values
    return tuple(pi)


@dataclass(frozen=True)
class PermStats:
    fp: int
    exc: int
    des: int
    r: int
    alpha_r: int
    beta_r: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def contains(pi, sigma) -> bool:
    """True iff some subsequence of ``pi`` is order-isomorphic to ``sigma``."""
    p = _as_tuple(pi)
    s = _as_tuple(sigma)
    m = len(s)
    if m > len(p):
        raise PatternTooLong(f"pattern of length {m} longer than permutation of length {len(p)}")
    if m == 0:
        return True
    n = len(p)
    chosen: list[int] = []

    def consistent(val: int) -> bool:
        k = len(chosen)
        for j, prev in enumerate(chosen):
            if (prev < val) != (s[j] < s[k]):
                return False
        return True

    def search(start: int) -> bool:
        k = len(chosen)
        if k == m:
            return True
        # leave room for the remaining pattern letters
        for i in range(start, n - (m - k) + 1):
            if consistent(p[i]):
                chosen.append(p[i])
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def avoids(pi, sigma) -> bool:
    return not contains(pi, sigma)


def _naive_avoiders(n: int, pattern: tuple[int, ...]) -> Iterator[Permutation]:
    for vals in itertools.permutations(range(1, n + 1)):
        if len(pattern) > n or not contains(vals, pattern):
            yield Permutation(vals)


def avoiders(n: int, pattern, method: str = "naive", cap: int | None = None, override: bool = False) -> list[Permutation]:
    """All permutations of size ``n`` avoiding ``pattern``.

    ``method="fast"`` is available for 321 and 132 and maps every Dyck path
    of semilength ``n`` through ``rs_inverse`` or ``kra_inverse``.
    """
    s = _as_tuple(pattern)
    if not override:
        check_cap(n, limits().perm_cap if cap is None else cap)
    if method == "naive":
        return list(_naive_avoiders(n, s))
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    if s == (3, 2, 1):
        inv = rs_inverse
    elif s == (1, 3, 2):
        inv = kra_inverse
    else:
        raise ValueError("fast generation exists only for 321 and 132")
    return sorted((inv(D) for D in enumerate_paths(n, override=True)), key=lambda p: p.values)


def alpha(pi, r: int) -> int:
    p = _as_tuple(pi)
    return sum(1 for i, v in enumerate(p, start=1) if v == i + r)


def beta(pi, r: int) -> int:
    p = _as_tuple(pi)
    return sum(1 for i, v in enumerate(p, start=1) if i > r and v == i)


def stats(pi, r: int = 0) -> PermStats:
    p = _as_tuple(pi)
    fp = sum(1 for i, v in enumerate(p, start=1) if v == i)
    exc = sum(1 for i, v in enumerate(p, start=1) if v > i)
    des = sum(1 for a, b in zip(p, p[1:]) if a > b)
    return PermStats(fp, exc, des, r, alpha(p, r), beta(p, r))


def _is_321_avoiding(p: Sequence[int]) -> bool:
    # a middle entry with a larger one before it and a smaller one after it
    n = len(p)
    best = 0
    suffix_min = [n + 1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(p[i], suffix_min[i + 1])
    for j in range(n):
        if best > p[j] and suffix_min[j + 1] < p[j]:
            return False
        best = max(best, p[j])
    return True


def _is_132_avoiding(p: Sequence[int]) -> bool:
    n = len(p)
    low = n + 1
    for j in range(n):
        if low < p[j] and any(low < p[k] < p[j] for k in range(j + 1, n)):
            return False
        low = min(low, p[j])
    return True


def _walk_word(columns: Iterable[int], n: int) -> str:
    """Dyck word for a staircase walk crossing row after row at ``columns``."""
    out = []
    col = 0
    for c in columns:
        out.append("d" * (c - col) + "u")
        col = c
    out.append("d" * (n - col))
    return "".join(out)


def _up_columns(word: str) -> list[int]:
    """Number of down-steps before each up-step."""
    cols = []
    downs = 0
    for c in word:
        if c == "u":
            cols.append(downs)
        else:
            downs += 1
    return cols


def rs(pi) -> DyckPath:
    """321-avoider to Dyck path; fixed point ``i`` becomes a hill at ``x = 2i - 1``."""
    p = _as_tuple(pi)
    if not _is_321_avoiding(p):
        raise NotAvoiding321(f"{Permutation(p)} contains 321")
    n = len(p)
    cols = []
    low = n + 1
    for v in reversed(p):
        low = min(low, v)
        cols.append(low - 1)
    return DyckPath(_walk_word(reversed(cols), n))


def rs_inverse(path: DyckPath) -> Permutation:
    """Rebuild the 321-avoider from its right-to-left minima.

    Row ``i`` is crossed at column ``m_i - 1`` where ``m_i`` is the minimum
    of ``pi_i..pi_n``; ``m`` jumps exactly after a right-to-left minimum, and
    the other entries fill the remaining values in increasing order.
    """
    n = path.n
    m = [c + 1 for c in _up_columns(path.word)]
    vals = [0] * n
    used = set()
    for i in range(n):
        if i == n - 1 or m[i] < m[i + 1]:
            vals[i] = m[i]
            used.add(m[i])
    rest = iter(v for v in range(1, n + 1) if v not in used)
    for i in range(n):
        if not vals[i]:
            vals[i] = next(rest)
    return Permutation(tuple(vals))


def kra(pi) -> DyckPath:
    """132-avoider to Dyck path.

    Sends fixed points to centered tunnels, excedances to right tunnels and
    descents to valleys.
    """
    p = _as_tuple(pi)
    if not _is_132_avoiding(p):
        raise NotAvoiding132(f"{Permutation(p)} contains 132")
    n = len(p)
    cols = []
    low = n + 1
    for v in p:
        low = min(low, v)
        cols.append(low - 1)
    # the walk meets row n first
    return DyckPath(_walk_word(reversed(cols), n))


def kra_inverse(path: DyckPath) -> Permutation:
    """Row by row from the top, cross the leftmost free column right of the path."""
    n = path.n
    cols = _up_columns(path.word)[::-1]
    free = list(range(1, n + 1))
    vals = []
    for c in cols:
        for idx, v in enumerate(free):
            if v > c:
                vals.append(free.pop(idx))
                break
        else:
            raise AssertionError("no free column to the right of the path")
    return Permutation(tuple(vals))


def composite(pi, r: int) -> Permutation:
    """``rs_inverse(phi_r(kra(pi), r))``; carries ``alpha_r`` to ``beta_r``."""
    return rs_inverse(phi_r(kra(pi), r))
