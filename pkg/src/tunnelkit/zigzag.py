"""The zigzag bijections ``phi_r`` on Dyck paths and their inverses.

``phi_r`` reads the steps of a path in the order given by :func:`sigma_r`
(first ``2r`` steps left to right, the rest alternately from both ends) and
writes an up-step whenever the step read opens a tunnel, a down-step when it
closes one.  ``phi`` is the case ``r = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyck import DyckPath, partners
from .errors import ROutOfRange

__all__ = [
    "ZigzagOrder",
    "LabeledWord",
    "sigma_r",
    "phi",
    "phi_r",
    "phi_inverse",
    "phi_r_inverse",
    "build_labeled_word",
    "trace_phi_r",
]


@dataclass(frozen=True)
class ZigzagOrder:
    n: int
    r: int
    order: tuple[int, ...]

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i: int) -> int:
        """1-based access matching ``sigma_i``."""
        return self.order[i - 1]


@dataclass(frozen=True)
class LabeledWord:
    """The o/c word of a path together with its tunnel labels.

    ``symbols[k-1]`` and ``labels[k-1]`` describe position ``k``; positions
    ``<= split`` form the left half.
    """

    symbols: str
    labels: tuple[int, ...]
    split: int

    def pairs(self) -> list[tuple[int, int]]:
        """Positions sharing a label, as sorted 1-based pairs."""
        seen = {}
        out = []
        for pos, lab in enumerate(self.labels, start=1):
            if lab in seen:
                out.append((seen[lab], pos))
            else:
                seen[lab] = pos
        return sorted(out)


def _check(n: int, r: int) -> None:
    if not 0 <= r <= n:
        raise ROutOfRange(f"r={r} outside 0..{n}")


def _sigma(n: int, r: int) -> list[int]:
    out = []
    for i in range(1, 2 * n + 1):
        if i <= 2 * r:
            out.append(i)
        elif i % 2:
            out.append((i + 1) // 2 + r)
        else:
            # reading order 2r+1, 2n, 2r+2, 2n-1, ...
            out.append(2 * n + 1 - i // 2 + r)
    return out


def sigma_r(n: int, r: int = 0) -> ZigzagOrder:
    _check(n, r)
    return ZigzagOrder(n, r, tuple(_sigma(n, r)))


def _phi_word(word: str, r: int) -> str:
    n = len(word) // 2
    p = partners(word)
    seen = [False] * (2 * n + 1)
    out = []
    for k in _sigma(n, r):
        out.append("d" if seen[p[k]] else "u")
        seen[k] = True
    return "".join(out)


def phi_r(path: DyckPath, r: int) -> DyckPath:
    _check(path.n, r)
    return DyckPath(_phi_word(path.word, r))


def phi(path: DyckPath) -> DyckPath:
    return DyckPath(_phi_word(path.word, 0))


def build_labeled_word(image: DyckPath, r: int = 0) -> LabeledWord:
    """Place o/c symbols along ``sigma_r`` and label matched pairs.

    An ``o`` takes the smallest unused label.  A ``c`` takes the largest
    unmatched label among the ``o``'s in its own half, or failing that the
    smallest unmatched label in the other half.  The halves split at
    position ``n + r``; the copied prefix lies in the left half.
    """
    n = image.n
    _check(n, r)
    split = n + r
    order = _sigma(n, r)
    symbols = [""] * (2 * n)
    labels = [0] * (2 * n)
    # unmatched o labels per half; label order equals insertion order
    open_left: list[int] = []
    open_right: list[int] = []
    next_label = 1
    for step, k in zip(image.word, order):
        left = k <= split
        if step == "u":
            symbols[k - 1] = "o"
            labels[k - 1] = next_label
            (open_left if left else open_right).append(next_label)
            next_label += 1
        else:
            symbols[k - 1] = "c"
            same, other = (open_left, open_right) if left else (open_right, open_left)
            if same:
                labels[k - 1] = same.pop()
            else:
                labels[k - 1] = other.pop(0)
    return LabeledWord("".join(symbols), tuple(labels), split)


def phi_r_inverse(image: DyckPath, r: int) -> DyckPath:
    lw = build_labeled_word(image, r)
    seen = set()
    out = []
    for lab in lw.labels:
        if lab in seen:
            out.append("d")
        else:
            seen.add(lab)
            out.append("u")
    return DyckPath("".join(out))


def phi_inverse(image: DyckPath) -> DyckPath:
    return phi_r_inverse(image, 0)


def trace_phi_r(path: DyckPath, r: int = 0) -> list[tuple[int, int, str]]:
    """Visit log ``(i, sigma_i, 'open' | 'close')`` of ``phi_r``."""
    _check(path.n, r)
    p = partners(path.word)
    seen = set()
    log = []
    for i, k in enumerate(_sigma(path.n, r), start=1):
        log.append((i, k, "close" if p[k] in seen else "open"))
        seen.add(k)
    return log
