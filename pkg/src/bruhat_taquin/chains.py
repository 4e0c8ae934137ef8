"""
Chain words in (mixed) k-Bruhat order and the intervals ``[v, w]_k``.

A :class:`ChainWord` is a base permutation plus a list of steps
``(t, column)``: step i left-multiplies by the value transposition ``t`` and
must be a Bruhat cover whose swapped positions straddle ``column``.  A pure
k-chain uses the same column throughout; a mixed chain may change it.

The module also builds and checks the auxiliary chains used as the left
boundary of a growth diagram:

* PL chains: every member has no descent after k, and each step swaps the
  smallest non-fixed point ``l`` of its target with something to the right,
  in column ``l``;
* PR chains: every member has no descent before k, and each step swaps the
  largest non-fixed point ``l`` of its target with something to the left,
  in column ``l - 1``;
* PLR chains: a PL (resp. PR) prefix followed by a tail of restricted steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .perms import (
    CoverEdge, Permutation, SizeMismatch, ValueTransposition,
    bruhat_down_covers, bruhat_up_covers, cover_edge, descents,
    has_no_descents_before, is_k_semi_shuffle,
)

__all__ = [
    "ChainWord", "BruhatInterval", "InvalidChain", "NoChainFound",
    "PreconditionViolated",
    "k_up_set", "k_down_set", "k_bruhat_le", "interval_elements",
    "enumerate_maximal_chains", "count_maximal_chains", "is_nesting_pair",
    "has_nesting", "nonnesting_criteria", "simplelem_holds", "check_simplelem",
    "consecutive_label_pairs",
    "build_PL_chain", "build_PR_chain", "build_PLR_chain", "plr_sides",
    "enumerate_PL_chains", "enumerate_PR_chains", "enumerate_PLR_chains",
    "has_property_PL", "has_property_PR", "has_property_PLR",
]


class InvalidChain(ValueError):
    """A step of a chain word is not a cover in its stated column."""


class NoChainFound(RuntimeError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class ChainWord:
    base: Permutation
    steps: tuple[tuple[ValueTransposition, int], ...] = ()
    perms: tuple[Permutation, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        seq = [self.base]
        for i, (t, col) in enumerate(self.steps, 1):
            edge = cover_edge(seq[-1], t, col)
            if edge is None:
                raise InvalidChain(
                    f"step {i} ({t}@{col}) is not a column-{col} cover of {seq[-1]}")
            seq.append(edge.target)
        object.__setattr__(self, "perms", tuple(seq))

    @classmethod
    def pure(cls, base: Permutation, labels: Sequence[ValueTransposition], k: int) -> "ChainWord":
        return cls(base, tuple((t, k) for t in labels))

    @classmethod
    def from_perms(cls, perms: Sequence[Permutation], columns: Sequence[int] | int) -> "ChainWord":
        """Rebuild a chain from its permutations; ``columns`` may be one int."""
        if isinstance(columns, int):
            columns = [columns] * (len(perms) - 1)
        steps = []
        for x, y, col in zip(perms, perms[1:], columns):
            moved = [i for i in range(1, x.n + 1) if x(i) != y(i)]
            if len(moved) != 2:
                raise InvalidChain(f"{x} -> {y} is not a transposition")
            steps.append((ValueTransposition.of(x(moved[0]), x(moved[1])), col))
        return cls(perms[0], tuple(steps))

    @classmethod
    def parse(cls, base: Permutation | str, text: str, k: Optional[int] = None) -> "ChainWord":
        """Parse ``"1_2 2_3"`` (with ``k``) or ``"2_4@1 1_3@2"``."""
        if isinstance(base, str):
            base = Permutation.parse(base)
        steps = []
        for token in text.replace(",", " ").split():
            if "@" in token:
                t, col = token.split("@")
                steps.append((ValueTransposition.parse(t), int(col)))
            elif k is None:
                raise InvalidChain(f"step {token!r} has no column and no default k")
            else:
                steps.append((ValueTransposition.parse(token), k))
        return cls(base, tuple(steps))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> Permutation:
        return self.perms[-1]

    @property
    def labels(self) -> tuple[ValueTransposition, ...]:
        return tuple(t for t, _ in self.steps)

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.steps)

    def is_pure(self, k: Optional[int] = None) -> bool:
        cols = set(self.columns)
        if k is None:
            return len(cols) <= 1
        return cols <= {k}

    def edges(self) -> list[CoverEdge]:
        return [cover_edge(self.perms[i], t, c) for i, (t, c) in enumerate(self.steps)]

    def prefix(self, m: int) -> "ChainWord":
        return ChainWord(self.base, self.steps[:m])

    def suffix_from(self, m: int) -> "ChainWord":
        return ChainWord(self.perms[m], self.steps[m:])

    def concat(self, other: "ChainWord") -> "ChainWord":
        if other.base != self.end:
            raise InvalidChain(f"cannot append a chain starting at {other.base} to one ending at {self.end}")
        return ChainWord(self.base, self.steps + other.steps)

    def with_labels(self, labels: Sequence[ValueTransposition]) -> "ChainWord":
        """Same base and columns, new labels (validated)."""
        return ChainWord(self.base, tuple(zip(labels, self.columns)))

    def word(self, show_columns: bool = False) -> str:
        if show_columns:
            return " ".join(f"{t}@{c}" for t, c in self.steps)
        return " ".join(str(t) for t in self.labels)

    def __str__(self) -> str:
        return f"{self.base}: {self.word(show_columns=not self.is_pure())}" if self.steps else f"{self.base}: (empty)"

    def to_json(self) -> dict:
        return {"base": str(self.base),
                "steps": [{"t": str(t), "k": c} for t, c in self.steps]}

    @classmethod
    def from_json(cls, data: dict) -> "ChainWord":
        return cls(Permutation.parse(data["base"]),
                   tuple((ValueTransposition.parse(s["t"]), int(s["k"])) for s in data["steps"]))


@dataclass(frozen=True, order=True)
class BruhatInterval:
    v: Permutation
    w: Permutation
    k: int

    def __post_init__(self):
        if self.v.n != self.w.n:
            raise SizeMismatch(f"S_{self.v.n} vs S_{self.w.n}")
        if not 1 <= self.k < self.v.n:
            raise ValueError(f"column k={self.k} out of range for S_{self.v.n}")

    @property
    def n(self) -> int:
        return self.v.n

    def rank(self) -> int:
        return self.w.length() - self.v.length()

    def is_empty(self) -> bool:
        return not k_bruhat_le(self.v, self.w, self.k)

    def __str__(self) -> str:
        return f"[{self.v},{self.w}]_{self.k}"


# --- order ideals and Hasse diagrams ----------------------------------------

@lru_cache(maxsize=4096)
def k_up_set(v: Permutation, k: int) -> frozenset[Permutation]:
    seen = {v}
    stack = [v]
    while stack:
        p = stack.pop()
        for e in bruhat_up_covers(p, k):
            if e.target not in seen:
                seen.add(e.target)
                stack.append(e.target)
    return frozenset(seen)


@lru_cache(maxsize=4096)
def k_down_set(w: Permutation, k: int) -> frozenset[Permutation]:
    seen = {w}
    stack = [w]
    while stack:
        p = stack.pop()
        for e in bruhat_down_covers(p, k):
            if e.source not in seen:
                seen.add(e.source)
                stack.append(e.source)
    return frozenset(seen)


def k_bruhat_le(v: Permutation, w: Permutation, k: int) -> bool:
    return w in k_up_set(v, k)


@lru_cache(maxsize=4096)
def interval_elements(interval: BruhatInterval) -> frozenset[Permutation]:
    if interval.is_empty():
        return frozenset()
    return k_up_set(interval.v, interval.k) & k_down_set(interval.w, interval.k)


def _up_edges(interval: BruhatInterval, p: Permutation) -> list[CoverEdge]:
    inside = interval_elements(interval)
    return [e for e in bruhat_up_covers(p, interval.k) if e.target in inside]


def enumerate_maximal_chains(interval: BruhatInterval) -> list[ChainWord]:
    """All saturated k-chains from v to w, in a deterministic order."""
    if interval.is_empty():
        return []
    k = interval.k
    out: list[ChainWord] = []
    labels: list[ValueTransposition] = []

    def walk(p: Permutation):
        if p == interval.w:
            out.append(ChainWord.pure(interval.v, labels, k))
            return
        for e in _up_edges(interval, p):
            labels.append(e.values)
            walk(e.target)
            labels.pop()

    walk(interval.v)
    return out


def count_maximal_chains(interval: BruhatInterval) -> int:
    if interval.is_empty():
        return 0
    memo: dict[Permutation, int] = {interval.w: 1}

    def count(p: Permutation) -> int:
        if p not in memo:
            memo[p] = sum(count(e.target) for e in _up_edges(interval, p))
        return memo[p]

    return count(interval.v)


def consecutive_label_pairs(interval: BruhatInterval) -> Iterator[tuple[Permutation, ValueTransposition, ValueTransposition]]:
    """Every ``(x, s, t)`` such that ``x -s-> y -t-> z`` lies inside the interval.

    Any two consecutive covers inside a graded interval extend to a maximal
    chain, so these are exactly the length-2 segments of maximal chains.
    """
    for x in sorted(interval_elements(interval)):
        for e1 in _up_edges(interval, x):
            for e2 in _up_edges(interval, e1.target):
                yield x, e1.values, e2.values


def is_nesting_pair(s: ValueTransposition, t: ValueTransposition) -> bool:
    """``a_d b_c`` or ``b_c a_d`` with a < b < c < d."""
    return (s.a < t.a and t.b < s.b) or (t.a < s.a and s.b < t.b)


def has_nesting(interval: BruhatInterval) -> bool:
    return any(is_nesting_pair(s, t) for _, s, t in consecutive_label_pairs(interval))


def nonnesting_criteria(interval: BruhatInterval) -> frozenset[int]:
    """Which of the four one-sided sufficient conditions hold.

    1. v has no descent after k;  2. v has no descent before k;
    3. w has no ascent after k;   4. w has no ascent before k.
    """
    v, w, k = interval.v, interval.w, interval.k
    ascents_w = {i for i in range(1, w.n) if w(i) < w(i + 1)}
    out = set()
    if is_k_semi_shuffle(v, k):
        out.add(1)
    if has_no_descents_before(v, k):
        out.add(2)
    if all(i <= k for i in ascents_w):
        out.add(3)
    if all(i >= k for i in ascents_w):
        out.add(4)
    return frozenset(out)


def simplelem_holds(s: ValueTransposition, t: ValueTransposition) -> bool:
    """For consecutive labels ``s = a_b``, ``t = c_d``: a<c, b<d and b<=c agree."""
    return (s.a < t.a) == (s.b < t.b) == (s.b <= t.a)


def check_simplelem(interval: BruhatInterval) -> bool:
    if has_nesting(interval):
        raise PreconditionViolated(f"{interval} contains a nesting")
    return all(simplelem_holds(s, t) for _, s, t in consecutive_label_pairs(interval))


# --- PL / PR / PLR chains ----------------------------------------------------

def _non_fixed(p: Permutation) -> list[int]:
    return [i for i in range(1, p.n + 1) if p(i) != i]


def _step_down(x: Permutation, a: int, b: int, column: int) -> Optional[tuple[Permutation, ValueTransposition, int]]:
    """The y with ``y -> x`` a column cover swapping positions a < b, if any."""
    if x(a) < x(b):
        return None
    y = x.swap_positions(a, b)
    edge = cover_edge(y, ValueTransposition(y(a), y(b)), column)
    if edge is None:
        return None
    return y, edge.values, column


def _pl_moves(x: Permutation, k: int) -> list[tuple[Permutation, ValueTransposition, int]]:
    l = _non_fixed(x)[0]
    out = []
    for m in range(l + 1, x.n + 1):
        got = _step_down(x, l, m, l)
        if got and is_k_semi_shuffle(got[0], k):
            out.append(got)
    return out


def _pr_moves(x: Permutation, k: int) -> list[tuple[Permutation, ValueTransposition, int]]:
    l = _non_fixed(x)[-1]
    out = []
    for m in range(l - 1, 0, -1):
        got = _step_down(x, m, l, l - 1)
        if got and has_no_descents_before(got[0], k):
            out.append(got)
    return out


def _descend_to_identity(v: Permutation, k: int, moves) -> Iterator[ChainWord]:
    """All chains identity -> v built backwards from ``moves``."""
    steps: list[tuple[ValueTransposition, int]] = []

    def walk(x: Permutation):
        if x.is_identity():
            yield ChainWord(x, tuple(reversed(steps)))
            return
        for y, t, col in moves(x, k):
            steps.append((t, col))
            yield from walk(y)
            steps.pop()

    yield from walk(v)


def enumerate_PL_chains(v: Permutation, k: int) -> Iterator[ChainWord]:
    if not is_k_semi_shuffle(v, k):
        return iter(())
    return _descend_to_identity(v, k, _pl_moves)


def enumerate_PR_chains(v: Permutation, k: int) -> Iterator[ChainWord]:
    if not has_no_descents_before(v, k):
        return iter(())
    return _descend_to_identity(v, k, _pr_moves)


def build_PL_chain(v: Permutation, k: int) -> ChainWord:
    if not is_k_semi_shuffle(v, k):
        raise PreconditionViolated(f"{v} has a descent after {k}")
    for chain in enumerate_PL_chains(v, k):
        return chain
    raise NoChainFound(f"no PL chain from the identity to {v} (k={k})")


def build_PR_chain(v: Permutation, k: int) -> ChainWord:
    if not has_no_descents_before(v, k):
        raise PreconditionViolated(f"{v} has a descent before {k}")
    for chain in enumerate_PR_chains(v, k):
        return chain
    raise NoChainFound(f"no PR chain from the identity to {v} (k={k})")


def _tail_moves_left(x: Permutation, k: int, max_col: int):
    """Reverse steps of a tail in columns k+1..n-1 swapping (m, col+1)."""
    for col in range(min(max_col, x.n - 1), k, -1):
        for m in range(col, 0, -1):
            got = _step_down(x, m, col + 1, col)
            if got:
                yield got


def _tail_moves_right(x: Permutation, k: int, min_col: int):
    """Reverse steps of a tail in columns 1..k swapping (col, m)."""
    for col in range(max(min_col, 1), k + 1):
        for m in range(col + 1, x.n + 1):
            got = _step_down(x, col, m, col)
            if got:
                yield got


def _enumerate_plr_side(v: Permutation, k: int, side: str) -> Iterator[ChainWord]:
    if side == "L":
        at_junction, head, tail_moves, bound = is_k_semi_shuffle, enumerate_PL_chains, _tail_moves_left, v.n
    else:
        at_junction, head, tail_moves, bound = has_no_descents_before, enumerate_PR_chains, _tail_moves_right, 1
    tail: list[tuple[ValueTransposition, int]] = []

    def walk(x: Permutation, limit: int):
        if at_junction(x, k):
            t = ChainWord(x, tuple(reversed(tail)))
            for h in head(x, k):
                yield h.concat(t)
        for y, lab, col in tail_moves(x, k, limit):
            tail.append((lab, col))
            yield from walk(y, col)
            tail.pop()

    yield from walk(v, bound)


def enumerate_PLR_chains(v: Permutation, k: int) -> Iterator[ChainWord]:
    """Every PLR chain to v, each once (the PL-side ones first)."""
    seen = set()
    for side in ("L", "R"):
        for chain in _enumerate_plr_side(v, k, side):
            if chain not in seen:
                seen.add(chain)
                yield chain


def plr_sides(v: Permutation, k: int) -> frozenset[str]:
    """Which of the two PLR decompositions admit at least one chain to v."""
    return frozenset(s for s in ("L", "R")
                     if next(iter(_enumerate_plr_side(v, k, s)), None) is not None)


def build_PLR_chain(v: Permutation, k: int, prefer: str = "L") -> ChainWord:
    order = ("L", "R") if prefer == "L" else ("R", "L")
    for side in order:
        for chain in _enumerate_plr_side(v, k, side):
            return chain
    raise NoChainFound(f"no PLR chain from the identity to {v} (k={k})")


def _is_pl_step(x: Permutation, y: Permutation, t: ValueTransposition, col: int, k: int) -> bool:
    a, b = sorted((y.position_of(t.a), y.position_of(t.b)))
    nf = _non_fixed(y)
    return (is_k_semi_shuffle(y, k) and is_k_semi_shuffle(x, k)
            and bool(nf) and a == nf[0] and col == a)


def _is_pr_step(x: Permutation, y: Permutation, t: ValueTransposition, col: int, k: int) -> bool:
    a, b = sorted((y.position_of(t.a), y.position_of(t.b)))
    nf = _non_fixed(y)
    return (has_no_descents_before(y, k) and has_no_descents_before(x, k)
            and bool(nf) and b == nf[-1] and col == b - 1)


def _all_steps(chain: ChainWord, k: int, pred, lo: int = 0, hi: Optional[int] = None) -> bool:
    hi = len(chain) if hi is None else hi
    p = chain.perms
    return all(pred(p[i], p[i + 1], *chain.steps[i], k) for i in range(lo, hi))


def has_property_PL(chain: ChainWord, k: int) -> bool:
    if not chain.base.is_identity():
        return False
    return is_k_semi_shuffle(chain.base, k) and _all_steps(chain, k, _is_pl_step)


def has_property_PR(chain: ChainWord, k: int) -> bool:
    if not chain.base.is_identity():
        return False
    return has_no_descents_before(chain.base, k) and _all_steps(chain, k, _is_pr_step)


def _left_tail_ok(chain: ChainWord, k: int, start: int) -> bool:
    n = chain.base.n
    prev = k + 1
    for i in range(start, len(chain)):
        t, col = chain.steps[i]
        y = chain.perms[i + 1]
        b = max(y.position_of(t.a), y.position_of(t.b))
        if not (prev <= col <= n - 1 and b == col + 1):
            return False
        prev = col
    return True


def _right_tail_ok(chain: ChainWord, k: int, start: int) -> bool:
    prev = k
    for i in range(start, len(chain)):
        t, col = chain.steps[i]
        y = chain.perms[i + 1]
        a = min(y.position_of(t.a), y.position_of(t.b))
        if not (1 <= col <= prev and a == col):
            return False
        prev = col
    return True


def has_property_PLR(chain: ChainWord, k: int) -> bool:
    if not chain.base.is_identity():
        return False
    for split in range(len(chain) + 1):
        head = chain.prefix(split)
        if has_property_PL(head, k) and _left_tail_ok(chain, k, split):
            return True
        if has_property_PR(head, k) and _right_tail_ok(chain, k, split):
            return True
    return False
