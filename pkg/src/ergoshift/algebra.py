"""The dense group algebra of the free group on integer-indexed generators.

Elements are finite complex combinations of group words.  Word-level structure
is exact; coefficients are complex doubles.  Convolution and Cesaro sums
accumulate in the canonical word order so results are bit-reproducible.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .words import IDENTITY, GeneratorMap, Letter, Word, parse_word, render_word


class AlgebraElement:
    """A finitely supported coefficient function Word -> complex.

    Exactly-zero coefficients are never stored, so ``support()`` is exact.
    Instances are immutable; arithmetic returns new elements.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, complex] = ()):
        clean: dict[Word, complex] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if not isinstance(w, Word):
                raise TypeError(f"support keys must be Word, got {type(w).__name__}")
            c = complex(c)
            if c != 0:
                clean[w] = clean.get(w, 0) + c
                if clean[w] == 0:
                    del clean[w]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # --- constructors ----------------------------------------------------
    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls({})

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls({IDENTITY: 1.0})

    @classmethod
    def from_word(cls, w: Word, coeff: complex = 1.0) -> "AlgebraElement":
        return cls({w: coeff})

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "AlgebraElement":
        return cls({Word([Letter(index, sign)]): 1.0})

    # --- views ------------------------------------------------------------
    def coeff(self, w: Word) -> complex:
        return self._terms.get(w, 0j)

    def support(self) -> list[Word]:
        return sorted(self._terms, key=Word.sort_key)

    def sorted_items(self) -> list[tuple[Word, complex]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def support_size(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def generator_indices(self) -> set[int]:
        return {l.index for w in self._terms for l in w.letters}

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self._terms == other._terms

    def __repr__(self) -> str:
        return f"AlgebraElement({render_element(self)!r})"

    # --- star-algebra arithmetic -------------------------------------------
    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return AlgebraElement(terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1.0) * other

    def __neg__(self) -> "AlgebraElement":
        return (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return convolve(self, other)
        return AlgebraElement({w: complex(other) * c for w, c in self._terms.items()})

    def __rmul__(self, scalar) -> "AlgebraElement":
        return AlgebraElement({w: complex(scalar) * c for w, c in self._terms.items()})

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement({w.inverse(): c.conjugate() for w, c in self._terms.items()})

    def l2_norm(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for _, c in self.sorted_items()))

    def trace(self) -> complex:
        """The canonical trace: the coefficient at the identity word."""
        return self._terms.get(IDENTITY, 0j)


def convolve(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Group-ring product; terms accumulate in canonical word order."""
    acc: dict[Word, complex] = {}
    for w1, c1 in x.sorted_items():
        for w2, c2 in y.sorted_items():
            w = w1 * w2
            acc[w] = acc.get(w, 0) + c1 * c2
    return AlgebraElement(acc)


def trace(x: AlgebraElement) -> complex:
    return x.trace()


def l2_norm(x: AlgebraElement) -> float:
    return x.l2_norm()


def adjoint(x: AlgebraElement) -> AlgebraElement:
    return x.adjoint()


def shift(sigma: GeneratorMap, x: AlgebraElement, power: int = 1) -> AlgebraElement:
    """The automorphism induced by a generator-index bijection, iterated `power` times."""
    if power == 0 or sigma.is_identity():
        return x
    return AlgebraElement({sigma.apply_word(w, power): c for w, c in x._terms.items()})


def conditional_expectation(sigma: GeneratorMap, x: AlgebraElement) -> AlgebraElement:
    """Restrict the coefficient function to words fixed by the automorphism.

    The fixed words form a subgroup, so this is the trace-preserving
    conditional expectation onto the fixed-point subalgebra; for a pure shift
    with nonzero step only the identity word survives.
    """
    return AlgebraElement({w: c for w, c in x._terms.items()
                           if all(sigma.is_fixed_index(l.index) for l in w.letters)})


def time_reversal(x: AlgebraElement) -> AlgebraElement:
    """The involutive automorphism g_k -> g_{-k}; intertwines a pure shift with its inverse."""
    return AlgebraElement({
        Word(Letter(-l.index, l.sign) for l in w.letters): c for w, c in x._terms.items()
    })


# --- subsequences -----------------------------------------------------------

@dataclass(frozen=True)
class SubsequenceSpec:
    """A strictly increasing sequence of nonnegative integers k_1 < k_2 < ...

    Kinds: arithmetic(start, step), geometric(base) with k_j = base**(j-1),
    explicit(list), random(seed, mean_gap) with i.i.d. geometric gaps.
    """

    kind: str
    start: int = 0
    step: int = 1
    base: int = 2
    values: tuple = ()
    seed: int = 0
    mean_gap: int = 3

    @classmethod
    def arithmetic(cls, start: int, step: int) -> "SubsequenceSpec":
        if start < 0 or step < 1:
            raise ValueError("arithmetic subsequence needs start >= 0 and step >= 1")
        return cls(kind="arithmetic", start=start, step=step)

    @classmethod
    def geometric(cls, base: int) -> "SubsequenceSpec":
        if base < 2:
            raise ValueError("geometric subsequence needs base >= 2")
        return cls(kind="geometric", base=base)

    @classmethod
    def explicit(cls, values: Iterable[int]) -> "SubsequenceSpec":
        vals = tuple(int(v) for v in values)
        if not vals or vals[0] < 0 or any(b <= a for a, b in zip(vals, vals[1:])):
            raise ValueError("explicit subsequence must be nonempty, nonnegative, strictly increasing")
        return cls(kind="explicit", values=vals)

    @classmethod
    def random(cls, seed: int, mean_gap: int = 3) -> "SubsequenceSpec":
        if mean_gap < 1:
            raise ValueError("random subsequence needs mean_gap >= 1")
        return cls(kind="random", seed=int(seed), mean_gap=int(mean_gap))

    def prefix(self, n: int) -> list[int]:
        """The first n terms k_1 .. k_n."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if self.kind == "arithmetic":
            return [self.start + j * self.step for j in range(n)]
        if self.kind == "geometric":
            return [self.base ** j for j in range(n)]
        if self.kind == "explicit":
            if n > len(self.values):
                raise ValueError(f"explicit subsequence has only {len(self.values)} terms, {n} requested")
            return list(self.values[:n])
        rng = np.random.default_rng(self.seed)
        gaps = rng.geometric(1.0 / self.mean_gap, size=n)
        return [int(v) for v in np.cumsum(gaps)]

    def lower_density(self, n: int) -> float:
        """Empirical density n / (k_n + 1) of the first n terms."""
        return n / (self.prefix(n)[-1] + 1)

    def render(self) -> str:
        if self.kind == "arithmetic":
            return f"arith:{self.start},{self.step}"
        if self.kind == "geometric":
            return f"geom:{self.base}"
        if self.kind == "explicit":
            return "explicit:" + ",".join(str(v) for v in self.values)
        return f"random:seed={self.seed},gap={self.mean_gap}"


def parse_subseq(text: str) -> SubsequenceSpec:
    text = text.strip()
    head, _, rest = text.partition(":")
    try:
        if head == "arith":
            start, step = (int(v) for v in rest.split(","))
            return SubsequenceSpec.arithmetic(start, step)
        if head == "geom":
            return SubsequenceSpec.geometric(int(rest))
        if head == "explicit":
            return SubsequenceSpec.explicit(int(v) for v in rest.split(","))
        if head == "random":
            kv = dict(pair.split("=") for pair in rest.split(",") if pair)
            extra = set(kv) - {"seed", "gap"}
            if extra or "seed" not in kv:
                raise ValueError(f"random spec takes seed=<int>[,gap=<int>], got {rest!r}")
            return SubsequenceSpec.random(int(kv["seed"]), int(kv.get("gap", 3)))
    except ValueError as exc:
        raise ValueError(f"cannot parse subsequence spec {text!r}: {exc}") from None
    raise ValueError(f"unknown subsequence kind {head!r} in {text!r}")


def cesaro_mean(sigma: GeneratorMap, x: AlgebraElement, seq: SubsequenceSpec, n: int) -> AlgebraElement:
    """(1/n) * sum of the automorphism iterated along the first n subsequence terms."""
    if n < 1:
        raise ValueError("n must be >= 1")
    acc: dict[Word, complex] = {}
    for k in seq.prefix(n):
        for w, c in shift(sigma, x, power=k).sorted_items():
            acc[w] = acc.get(w, 0) + c
    return AlgebraElement({w: c / n for w, c in acc.items()})


# --- element expression grammar ---------------------------------------------
#   expr ::= term (('+'|'-') term)*
#   term ::= coeff '*' word | word
#   coeff: decimal, or i-suffixed complex like `1.5+0.5i` / `0.5i`

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*"
    rf"(?:(?P<coeff>{_NUM}(?:[+-]{_NUM})?i?)\s*\*\s*)?"
    rf"(?P<word>e|g-?\d+'?(?:\.g-?\d+'?)*)"
)


def _parse_coeff(text: str) -> complex:
    if not text.endswith("i"):
        return complex(float(text))
    body = text[:-1]
    m = re.fullmatch(rf"(?P<re>{_NUM})(?P<im>[+-]{_NUM})", body)
    if m:
        return complex(float(m.group("re")), float(m.group("im")))
    return complex(0.0, float(body))


def render_coeff(c: complex) -> str:
    if c.imag == 0:
        return repr(c.real)
    if c.real == 0:
        return f"{c.imag!r}i"
    return f"{c.real!r}{'+' if c.imag >= 0 else ''}{c.imag!r}i"


def parse_element(text: str) -> AlgebraElement:
    pos = 0
    terms: list[tuple[Word, complex]] = []
    text = text.rstrip()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse element expression at {text[pos:]!r}")
        if terms and m.group("sign") is None:
            raise ValueError(f"missing '+'/'-' before term at {text[pos:]!r}")
        sign = -1.0 if m.group("sign") == "-" else 1.0
        coeff = _parse_coeff(m.group("coeff")) if m.group("coeff") else 1.0
        terms.append((parse_word(m.group("word")), sign * coeff))
        pos = m.end()
    return AlgebraElement(terms)


def render_element(x: AlgebraElement) -> str:
    if x.is_zero():
        return "0*e"
    parts = []
    for i, (w, c) in enumerate(x.sorted_items()):
        # pull the leading sign out so the rendered coefficient re-parses
        neg = c.real < 0 or (c.real == 0 and c.imag < 0)
        body = f"{render_coeff(-c if neg else c)}*{render_word(w)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
