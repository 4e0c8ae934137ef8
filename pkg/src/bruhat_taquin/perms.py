"""
Permutations of {1..n} in one-line notation, Bruhat and k-Bruhat covers,
the Grassmannian/partition dictionary, and conjugation by the longest element.

Positions and values are 1-indexed.  Chain labels are *value* transpositions
applied on the left: ``t * p`` swaps the positions holding the values ``t.a``
and ``t.b``.

>>> p = Permutation.parse("2143")
>>> str(p.left_multiply(ValueTransposition(1, 4)))
'2413'
>>> sorted(str(e.values) for e in bruhat_up_covers(p, 2))
['1_3', '1_4', '2_3', '2_4']
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

__all__ = [
    "Permutation", "ValueTransposition", "CoverEdge",
    "SizeMismatch", "NotGrassmannian",
    "length", "descents", "bruhat_up_covers", "bruhat_down_covers",
    "cover_edge", "is_cover", "apply_value_transposition",
    "grassmannian_to_partition", "partition_to_grassmannian",
    "is_k_semi_shuffle", "has_no_descents_before", "is_grassmannian",
    "conjugate_by_w0", "all_permutations",
]


class SizeMismatch(ValueError):
    """Two permutations (or a permutation and a label) live in different S_n."""


class NotGrassmannian(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.word)}: {self.word}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accept ``"2413"`` (n <= 9) or a comma/space separated word."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation string")
        if "," in text or " " in text:
            parts = text.replace(",", " ").split()
            return cls(tuple(int(x) for x in parts))
        if not text.isdigit():
            raise ValueError(f"malformed permutation: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition s_i in S_n."""
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    @cached_property
    def positions(self) -> tuple[int, ...]:
        # positions[v] = w^{-1}(v); index 0 unused
        pos = [0] * (self.n + 1)
        for i, v in enumerate(self.word, 1):
            pos[v] = i
        return tuple(pos)

    def position_of(self, value: int) -> int:
        return self.positions[value]

    def inverse(self) -> "Permutation":
        return Permutation(self.positions[1:])

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self * other)(i) = self(other(i))``."""
        _check_same_size(self, other)
        return Permutation(tuple(self.word[j - 1] for j in other.word))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, 1))

    def swap_positions(self, a: int, b: int) -> "Permutation":
        """Right multiplication by the position transposition (a, b)."""
        w = list(self.word)
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Permutation(tuple(w))

    def left_multiply(self, t: "ValueTransposition") -> "Permutation":
        if t.b > self.n:
            raise SizeMismatch(f"{t} does not act on S_{self.n}")
        pos = self.positions
        return self.swap_positions(pos[t.a], pos[t.b])

    def embed(self, m: int) -> "Permutation":
        """The image of this permutation under S_n -> S_m, m >= n."""
        if m < self.n:
            raise SizeMismatch(f"cannot embed S_{self.n} into S_{m}")
        return Permutation(self.word + tuple(range(self.n + 1, m + 1)))

    def trimmed(self) -> "Permutation":
        """Drop trailing fixed points (the smallest S_m containing this)."""
        w = self.word
        m = len(w)
        while m > 1 and w[m - 1] == m:
            m -= 1
        return Permutation(w[:m])

    def length(self) -> int:
        return length(self)

    def descents(self) -> frozenset[int]:
        return descents(self)

    def lehmer_code(self) -> tuple[int, ...]:
        w = self.word
        return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i])
                     for i in range(len(w)))

    @classmethod
    def from_lehmer_code(cls, code: Sequence[int]) -> "Permutation":
        n = len(code)
        avail = list(range(1, n + 1))
        word = []
        for i, c in enumerate(code):
            if c > n - 1 - i:
                raise ValueError(f"invalid Lehmer code {tuple(code)}")
            word.append(avail.pop(c))
        return cls(tuple(word))


@dataclass(frozen=True, order=True)
class ValueTransposition:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got ({self.a}, {self.b})")

    @classmethod
    def of(cls, x: int, y: int) -> "ValueTransposition":
        return cls(min(x, y), max(x, y))

    @classmethod
    def parse(cls, text: str) -> "ValueTransposition":
        try:
            a, b = text.strip().split("_")
            return cls(int(a), int(b))
        except ValueError as exc:
            raise ValueError(f"malformed transposition {text!r}; expected 'a_b'") from exc

    def __str__(self) -> str:
        return f"{self.a}_{self.b}"

    def __repr__(self) -> str:
        return f"ValueTransposition({self.a}, {self.b})"

    def support(self) -> frozenset[int]:
        return frozenset((self.a, self.b))


@dataclass(frozen=True)
class CoverEdge:
    source: Permutation
    target: Permutation
    positions: tuple[int, int]
    values: ValueTransposition
    column: Optional[int] = None


def _check_same_size(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise SizeMismatch(f"S_{p.n} vs S_{q.n}")


def all_permutations(n: int) -> list[Permutation]:
    from itertools import permutations
    return [Permutation(w) for w in permutations(range(1, n + 1))]


def length(p: Permutation) -> int:
    w = p.word
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descents(p: Permutation) -> frozenset[int]:
    w = p.word
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def _satisfies_cover_condition(w: tuple[int, ...], a: int, b: int) -> bool:
    lo, hi = w[a - 1], w[b - 1]
    if lo > hi:
        return False
    return all(not lo < w[c - 1] < hi for c in range(a + 1, b))


def bruhat_up_covers(p: Permutation, k: Optional[int] = None) -> list[CoverEdge]:
    """All Bruhat covers p < p(a,b); with ``k``, only those with a <= k < b."""
    n = p.n
    w = p.word
    if k is not None and not 1 <= k < n:
        raise ValueError(f"column k={k} out of range for S_{n}")
    edges = []
    a_range = range(1, n) if k is None else range(1, k + 1)
    for a in a_range:
        b_start = a + 1 if k is None else k + 1
        for b in range(b_start, n + 1):
            if _satisfies_cover_condition(w, a, b):
                edges.append(CoverEdge(p, p.swap_positions(a, b), (a, b),
                                       ValueTransposition(w[a - 1], w[b - 1]), k))
    return edges


def bruhat_down_covers(p: Permutation, k: Optional[int] = None) -> list[CoverEdge]:
    """All covers q < p (optionally restricted to column k), as edges q -> p."""
    n = p.n
    w = p.word
    edges = []
    a_range = range(1, n) if k is None else range(1, k + 1)
    for a in a_range:
        b_start = a + 1 if k is None else k + 1
        for b in range(b_start, n + 1):
            if w[a - 1] > w[b - 1]:
                q = p.swap_positions(a, b)
                if _satisfies_cover_condition(q.word, a, b):
                    edges.append(CoverEdge(q, p, (a, b),
                                           ValueTransposition(w[b - 1], w[a - 1]), k))
    return edges


def cover_edge(p: Permutation, t: ValueTransposition,
               k: Optional[int] = None) -> Optional[CoverEdge]:
    """The edge p -> t*p if it is a (k-)Bruhat cover, else None."""
    if t.b > p.n:
        return None
    a, b = p.positions[t.a], p.positions[t.b]
    if a > b:
        return None
    if k is not None and not a <= k < b:
        return None
    if not _satisfies_cover_condition(p.word, a, b):
        return None
    return CoverEdge(p, p.swap_positions(a, b), (a, b), t, k)


def is_cover(p: Permutation, q: Permutation, k: Optional[int] = None) -> bool:
    """True iff p is covered by q in (k-)Bruhat order."""
    _check_same_size(p, q)
    diff = [i for i in range(1, p.n + 1) if p(i) != q(i)]
    if len(diff) != 2:
        return False
    a, b = diff
    if p(a) != q(b) or p(b) != q(a):
        return False
    return cover_edge(p, ValueTransposition.of(p(a), p(b)), k) is not None


def apply_value_transposition(p: Permutation, t: ValueTransposition) -> Permutation:
    return p.left_multiply(t)


def is_grassmannian(p: Permutation, k: int) -> bool:
    return descents(p) <= {k}


def grassmannian_to_partition(p: Permutation, k: int) -> tuple[int, ...]:
    """``(p(k)-k, ..., p(1)-1)`` with zeros stripped."""
    if not is_grassmannian(p, k):
        raise NotGrassmannian(f"{p} has descents {sorted(descents(p))}, not only at {k}")
    parts = [p(i) - i for i in range(k, 0, -1)]
    return tuple(x for x in parts if x > 0)


def partition_to_grassmannian(lam: Sequence[int], k: int, n: int) -> Permutation:
    """The unique permutation of S_n with descents only at k whose partition is ``lam``."""
    lam = tuple(x for x in lam if x > 0)
    if len(lam) > k or (lam and lam[0] > n - k):
        raise ValueError(f"partition {lam} does not fit in a {k} x {n - k} box")
    padded = lam + (0,) * (k - len(lam))
    head = [padded[k - i] + i for i in range(1, k + 1)]
    used = set(head)
    tail = [x for x in range(1, n + 1) if x not in used]
    return Permutation(tuple(head + tail))


def is_k_semi_shuffle(p: Permutation, k: int) -> bool:
    """No descent at any position strictly greater than k."""
    return all(d <= k for d in descents(p))


def has_no_descents_before(p: Permutation, k: int) -> bool:
    return all(d >= k for d in descents(p))


def conjugate_by_w0(p: Permutation) -> Permutation:
    n = p.n
    return Permutation(tuple(n + 1 - p(n + 1 - i) for i in range(1, n + 1)))


def conjugate_transposition(t: ValueTransposition, n: int) -> ValueTransposition:
    return ValueTransposition(n + 1 - t.b, n + 1 - t.a)


def iter_k_up_set(v: Permutation, k: int) -> Iterator[Permutation]:
    """Every w with v <=_k w (breadth-first by length)."""
    seen = {v}
    frontier = [v]
    while frontier:
        yield from frontier
        nxt = []
        for p in frontier:
            for e in bruhat_up_covers(p, k):
                if e.target not in seen:
                    seen.add(e.target)
                    nxt.append(e.target)
        frontier = sorted(nxt)
