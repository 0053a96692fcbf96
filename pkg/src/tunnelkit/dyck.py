"""Dyck paths: representation, parsing, enumeration and decomposition.

A path is stored as its canonical Dyck word over ``u``/``d``.  Step positions
are 1-based and step ``k`` spans the lattice segment from ``x = k - 1`` to
``x = k``; every x-coordinate statistic in the package follows from this.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterator

from .config import check_cap, limits
from .errors import BadSymbol, EmptyPath, NegativePrefix, UnbalancedWord

__all__ = [
    "Step",
    "DyckPath",
    "StepMatching",
    "parse",
    "render",
    "enumerate_paths",
    "match_steps",
    "partners",
    "first_return_decompose",
    "concat",
    "catalan",
]

_ALPHABET = {"u": "u", "d": "d", "U": "u", "D": "d", "1": "u", "0": "d"}


class Step(enum.Enum):
    UP = "u"
    DOWN = "d"


@dataclass(frozen=True, slots=True)
class DyckPath:
    """A Dyck path given by its canonical word.

    Construct through :func:`parse` unless the word is known to be valid.
    """

    word: str = ""

    @property
    def n(self) -> int:
        return len(self.word) // 2

    semilength = n

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step.UP if c == "u" else Step.DOWN for c in self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    def __add__(self, other: DyckPath) -> DyckPath:
        return concat(self, other)

    def heights(self) -> list[int]:
        """Heights at ``x = 0, 1, ..., 2n``."""
        h = [0]
        for c in self.word:
            h.append(h[-1] + (1 if c == "u" else -1))
        return h

    def to_json(self) -> str:
        return json.dumps({"word": self.word, "n": self.n})

    @classmethod
    def from_json(cls, text: str) -> DyckPath:
        data = json.loads(text)
        path = parse(data["word"])
        if path.n != data.get("n", path.n):
            raise UnbalancedWord(f"declared n={data['n']} but word has semilength {path.n}")
        return path


@dataclass(frozen=True)
class StepMatching:
    """Non-crossing matching of up-steps with down-steps (1-based pairs)."""

    pairs: tuple[tuple[int, int], ...]

    def as_set(self) -> set[tuple[int, int]]:
        return set(self.pairs)

    def partner(self) -> dict[int, int]:
        out = {}
        for i, j in self.pairs:
            out[i] = j
            out[j] = i
        return out


def parse(word: str) -> DyckPath:
    """Parse a Dyck word; ``u/d``, ``U/D`` and ``1/0`` are all accepted."""
    canon = []
    height = 0
    for pos, ch in enumerate(word, start=1):
        try:
            c = _ALPHABET[ch]
        except KeyError:
            raise BadSymbol(f"unexpected symbol {ch!r} at position {pos}", pos) from None
        height += 1 if c == "u" else -1
        if height < 0:
            raise NegativePrefix(f"prefix of length {pos} goes below the x-axis", pos)
        canon.append(c)
    if height != 0:
        raise UnbalancedWord(f"word ends at height {height}, not 0", len(word))
    return DyckPath("".join(canon))


def render(path: DyckPath) -> str:
    return path.word


def catalan(n: int) -> int:
    """Catalan number via the convolution recurrence."""
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def _words(n: int) -> Iterator[str]:
    # lexicographic with u < d: try an up-step first whenever one is allowed
    buf = []

    def rec(ups, downs):
        if downs == n:
            yield "".join(buf)
            return
        if ups < n:
            buf.append("u")
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append("d")
            yield from rec(ups, downs + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_paths(n: int, cap: int | None = None, override: bool = False) -> Iterator[DyckPath]:
    """Yield every Dyck path of semilength ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if not override:
        check_cap(n, limits().dyck_cap if cap is None else cap)
    for w in _words(n):
        yield DyckPath(w)


def partners(word: str) -> list[int]:
    """1-based partner table: ``p[i]`` is the step matched with step ``i``.

    ``p[0]`` is unused.
    """
    p = [0] * (len(word) + 1)
    stack = []
    for i, c in enumerate(word, start=1):
        if c == "u":
            stack.append(i)
        else:
            j = stack.pop()
            p[i] = j
            p[j] = i
    return p


def match_steps(path: DyckPath) -> StepMatching:
    p = partners(path.word)
    pairs = tuple((i, p[i]) for i in range(1, len(p)) if i < p[i])
    return StepMatching(pairs)


def first_return_decompose(path: DyckPath) -> tuple[DyckPath, DyckPath]:
    """Split ``D = u A d B`` at the first return to the x-axis."""
    w = path.word
    if not w:
        raise EmptyPath("the empty path has no first return")
    height = 0
    for i, c in enumerate(w):
        height += 1 if c == "u" else -1
        if height == 0:
            return DyckPath(w[1:i]), DyckPath(w[i + 1:])
    raise AssertionError("unreachable for a valid Dyck path")


def concat(first: DyckPath, second: DyckPath) -> DyckPath:
    return DyckPath(first.word + second.word)
