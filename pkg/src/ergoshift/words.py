"""Reduced-word arithmetic in free groups with integer-indexed generators.

Group elements are reduced words over the alphabet {g_i, g_i^-1 : i in Z}.
Everything here is exact integer combinatorics; no floating point enters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple, Sequence


class Letter(NamedTuple):
    """One generator occurrence: g_index if sign=+1, its inverse if sign=-1."""

    index: int
    sign: int


def _check_letter(letter: Letter) -> Letter:
    if letter.sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {letter.sign!r}")
    if not isinstance(letter.index, int) or isinstance(letter.index, bool):
        raise ValueError(f"letter index must be an int, got {letter.index!r}")
    return letter


class Word:
    """An immutable reduced word; the empty word is the group identity.

    Words are hashable and totally ordered by (length, letter sequence), which
    is the canonical order used for deterministic iteration elsewhere.
    """

    __slots__ = ("letters", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(Letter(*l) for l in letters)
        for l in letters:
            _check_letter(l)
        for a, b in zip(letters, letters[1:]):
            if a.index == b.index and a.sign == -b.sign:
                raise ValueError(f"word is not reduced at {a}, {b}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_hash", hash(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def length(self) -> int:
        """The word length L(w)."""
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def inverse(self) -> "Word":
        return Word(Letter(l.index, -l.sign) for l in reversed(self.letters))

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r})"


IDENTITY = Word()


def reduce_letters(letters: Sequence[Letter]) -> Word:
    """Free reduction: cancel adjacent g_i g_i^-1 pairs until none remain."""
    stack: list[Letter] = []
    for raw in letters:
        l = _check_letter(Letter(*raw))
        if stack and stack[-1].index == l.index and stack[-1].sign == -l.sign:
            stack.pop()
        else:
            stack.append(l)
    return Word(stack)


def multiply(w1: Word, w2: Word) -> Word:
    """Group law: reduced concatenation."""
    left = list(w1.letters)
    i = 0
    right = w2.letters
    while left and i < len(right) and left[-1].index == right[i].index and left[-1].sign == -right[i].sign:
        left.pop()
        i += 1
    return Word(left + list(right[i:]))


def invert(w: Word) -> Word:
    return w.inverse()


@dataclass(frozen=True)
class GeneratorMap:
    """A bijection of generator indices inducing a length-preserving automorphism.

    Supported kinds:

    * ``pure_shift(step)``      -- i -> i + step
    * ``anchored_shift(fixed)`` -- indices in the finite set stay put; the
      remaining indices carry a unit shift transported through the rank map
      r(i) = i - #{f in fixed : f < i} (an order isomorphism Z\\fixed -> Z),
      so every non-fixed orbit is a single bi-infinite chain.
    * ``explicit(table)``       -- finite table, identity elsewhere.  A finite
      table that is a bijection of Z can only permute its own domain, so any
      entry that moves an index creates a finite cycle and is rejected; valid
      tables therefore fix every listed index (the identity automorphism).

    ``flow=-1`` selects the inverse bijection.
    """

    kind: str
    step: int = 0
    fixed: frozenset = frozenset()
    flow: int = 1

    @classmethod
    def pure_shift(cls, step: int) -> "GeneratorMap":
        if not isinstance(step, int):
            raise ValueError("pure_shift step must be an int")
        return cls(kind="pure_shift", step=step)

    @classmethod
    def anchored_shift(cls, fixed_set: Iterable[int]) -> "GeneratorMap":
        fixed = frozenset(int(i) for i in fixed_set)
        return cls(kind="anchored_shift", fixed=fixed)

    @classmethod
    def explicit(cls, table: dict) -> "GeneratorMap":
        keys = set(table)
        values = set(table.values())
        if len(values) != len(table) or values != keys:
            raise ValueError("explicit table must be a bijection of Z: its image must equal its domain")
        movers = [i for i, j in table.items() if i != j]
        if movers:
            raise ValueError(
                f"explicit table moves indices {sorted(movers)}: a finite table produces finite "
                "cycles, which violates the singleton-or-infinite orbit requirement"
            )
        return cls(kind="explicit")

    @classmethod
    def identity(cls) -> "GeneratorMap":
        return cls(kind="explicit")

    def inverse(self) -> "GeneratorMap":
        if self.kind == "pure_shift":
            return GeneratorMap(kind="pure_shift", step=-self.step)
        return GeneratorMap(kind=self.kind, step=self.step, fixed=self.fixed, flow=-self.flow)

    def is_identity(self) -> bool:
        return self.kind == "explicit" or (self.kind == "pure_shift" and self.step == 0)

    def is_fixed_index(self, i: int) -> bool:
        if self.kind == "pure_shift":
            return self.step == 0
        if self.kind == "anchored_shift":
            return i in self.fixed
        return True

    # rank map r and its inverse for the anchored kind
    def _rank(self, i: int) -> int:
        return i - sum(1 for f in self.fixed if f < i)

    def _unrank(self, v: int) -> int:
        for t in range(len(self.fixed) + 1):
            i = v + t
            if i not in self.fixed and self._rank(i) == v:
                return i
        raise AssertionError("rank inversion failed")  # unreachable for finite fixed sets

    def apply_index(self, i: int, power: int = 1) -> int:
        if power == 0 or self.is_fixed_index(i):
            return i
        k = power * self.flow
        if self.kind == "pure_shift":
            return i + self.step * k
        return self._unrank(self._rank(i) + k)

    def apply_word(self, w: Word, power: int = 1) -> Word:
        if power == 0 or self.is_identity():
            return w
        return Word(Letter(self.apply_index(l.index, power), l.sign) for l in w.letters)


def apply_generator_map(sigma: GeneratorMap, w: Word, power: int = 1) -> Word:
    """Relabel every letter index through sigma^power; length is preserved."""
    return sigma.apply_word(w, power)


def orbit_class(sigma: GeneratorMap, w: Word) -> Literal["fixed", "moving"]:
    """'fixed' iff sigma fixes every letter index (equivalently sigma(w) = w)."""
    if all(sigma.is_fixed_index(l.index) for l in w.letters):
        return "fixed"
    return "moving"


# --- text syntax: `e`, or letters `g<i>` / `g<i>'` joined by `.` ---------

import re

_LETTER_RE = re.compile(r"^g(-?\d+)('?)$")


def render_word(w: Word) -> str:
    if w.is_identity():
        return "e"
    return ".".join(f"g{l.index}" + ("'" if l.sign < 0 else "") for l in w.letters)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "e":
        return IDENTITY
    letters = []
    for part in text.split("."):
        m = _LETTER_RE.match(part.strip())
        if m is None:
            raise ValueError(f"cannot parse letter {part!r} in word {text!r}")
        letters.append(Letter(int(m.group(1)), -1 if m.group(2) else 1))
    return reduce_letters(letters)
