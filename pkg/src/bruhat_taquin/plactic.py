"""
Plactic rewriting of maximal chains in k-Bruhat order.

Four families of three-letter relations act on chain words (with
a < b < c < d in the first two and a < b <= c < d <= e < f in the last two):

    KB1   a_c c_d b_c   ~   b_c a_b b_d
    KB2   b_c c_d a_c   ~   b_d a_b b_c
    KB3   a_b e_f c_d   ~   e_f a_b c_d
    KB4   c_d e_f a_b   ~   c_d a_b e_f

Equivalence classes are computed by closure.  In an interval without
nesting, each class holds exactly one row word of a strict tableau of
transpositions (first entries strictly increasing along rows and columns),
which gives the insertion tableau ``P``; the recording tableau ``Q`` is read
off from the shapes of ``P`` along the prefixes of the chain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .chains import (
    BruhatInterval, ChainWord, InvalidChain, enumerate_maximal_chains,
    has_nesting,
)
from .perms import Permutation, ValueTransposition
from .young import Partition, Tableau, add_box, box_difference, normalize

__all__ = [
    "InvalidWindow", "InvalidRewrite", "NoCanonical", "MultipleCanonical",
    "PrefixShapeAnomaly", "NestingPresent",
    "Rewrite", "TranspositionTableau", "PlacticClass",
    "match_kb", "kb_rewrites", "all_kb_rewrites", "plactic_class",
    "plactic_classes", "canonical_P", "recording_Q", "beligan_count",
    "beligan_tableaux", "ruleoutkb_holds", "split_into_rows",
]


class InvalidWindow(IndexError):
    pass


class InvalidRewrite(ValueError):
    """A relation matched but its other side is not a chain from the same base."""


class NoCanonical(RuntimeError):
    pass


class MultipleCanonical(RuntimeError):
    pass


class PrefixShapeAnomaly(RuntimeError):
    pass


class NestingPresent(ValueError):
    pass


T = ValueTransposition


@dataclass(frozen=True)
class Rewrite:
    chain: ChainWord
    rule: str          # "KB1".."KB4"
    forward: bool      # True: left side replaced by right side
    pos: int

    @property
    def tag(self) -> str:
        return self.rule if self.forward else self.rule + "^-1"


def match_kb(x: T, y: T, z: T) -> list[tuple[str, bool, tuple[T, T, T]]]:
    """Every relation side matched by the word ``x y z``; returns
    ``(rule, forward, replacement)`` triples."""
    out = []
    # KB1 left: a_c c_d b_c
    if y.a == x.b and z.b == x.b and x.a < z.a < x.b < y.b:
        a, b, c, d = x.a, z.a, x.b, y.b
        out.append(("KB1", True, (T(b, c), T(a, b), T(b, d))))
    # KB1 right: b_c a_b b_d
    if y.b == x.a and z.a == x.a and y.a < x.a < x.b < z.b:
        a, b, c, d = y.a, x.a, x.b, z.b
        out.append(("KB1", False, (T(a, c), T(c, d), T(b, c))))
    # KB2 left: b_c c_d a_c
    if y.a == x.b and z.b == x.b and z.a < x.a < x.b < y.b:
        a, b, c, d = z.a, x.a, x.b, y.b
        out.append(("KB2", True, (T(b, d), T(a, b), T(b, c))))
    # KB2 right: b_d a_b b_c
    if y.b == x.a and z.a == x.a and y.a < x.a < z.b < x.b:
        a, b, c, d = y.a, x.a, z.b, x.b
        out.append(("KB2", False, (T(b, c), T(c, d), T(a, c))))
    # KB3 left: a_b e_f c_d   right: e_f a_b c_d
    if x.b <= z.a and z.b <= y.a:
        out.append(("KB3", True, (y, x, z)))
    if y.b <= z.a and z.b <= x.a:
        out.append(("KB3", False, (y, x, z)))
    # KB4 left: c_d e_f a_b   right: c_d a_b e_f
    if z.b <= x.a and x.b <= y.a:
        out.append(("KB4", True, (x, z, y)))
    if y.b <= x.a and x.b <= z.a:
        out.append(("KB4", False, (x, z, y)))
    return out


def kb_rewrites(chain: ChainWord, pos: int, strict: bool = True) -> list[Rewrite]:
    """All single relation applications on steps ``pos, pos+1, pos+2`` (0-based).

    With ``strict``, a match whose replacement is not a chain raises
    :class:`InvalidRewrite`; otherwise such matches are dropped.
    """
    if not 0 <= pos <= len(chain) - 3:
        raise InvalidWindow(f"window at {pos} does not fit a chain of length {len(chain)}")
    labels = list(chain.labels)
    out = []
    for rule, forward, repl in match_kb(*labels[pos:pos + 3]):
        new = labels[:pos] + list(repl) + labels[pos + 3:]
        try:
            out.append(Rewrite(chain.with_labels(new), rule, forward, pos))
        except InvalidChain as exc:
            if strict:
                raise InvalidRewrite(f"{rule} at {pos} of {chain.word()}: {exc}") from exc
    return out


def all_kb_rewrites(chain: ChainWord, strict: bool = True) -> list[Rewrite]:
    out = []
    for pos in range(len(chain) - 2):
        out.extend(kb_rewrites(chain, pos, strict))
    return out


def _kb_values(rule: str, forward_side: bool, x: T, y: T, z: T) -> dict[str, int]:
    if rule == "KB1":
        if forward_side:
            return {"a": x.a, "b": z.a, "c": x.b, "d": y.b}
        return {"a": y.a, "b": x.a, "c": x.b, "d": z.b}
    if forward_side:
        return {"a": z.a, "b": x.a, "c": x.b, "d": y.b}
    return {"a": y.a, "b": x.a, "c": z.b, "d": x.b}


def ruleoutkb_holds(base: Permutation, window: Sequence[T], rule: str,
                    left_side: bool, k: int) -> bool:
    """Position constraint for a KB1/KB2 window read from ``base``.

    KB1 needs b before a, both in positions 1..k; KB2 needs d before c,
    both in positions after k.
    """
    vals = _kb_values(rule, left_side, *window)
    pos = base.positions
    if rule == "KB1":
        return pos[vals["b"]] < pos[vals["a"]] <= k
    return k < pos[vals["d"]] < pos[vals["c"]]


# --- tableaux of transpositions ---------------------------------------------

@dataclass(frozen=True)
class TranspositionTableau:
    rows: tuple[tuple[T, ...], ...]

    def __post_init__(self):
        lengths = [len(r) for r in self.rows]
        if any(x == 0 for x in lengths) or lengths != sorted(lengths, reverse=True):
            raise ValueError(f"row lengths {lengths} are not a partition")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def cells(self) -> dict[tuple[int, int], T]:
        return {(r, c): t for r, row in enumerate(self.rows, 1) for c, t in enumerate(row, 1)}

    def is_strict(self) -> bool:
        cells = self.cells()
        for (r, c), t in cells.items():
            if (r, c + 1) in cells and not t.a < cells[(r, c + 1)].a:
                return False
            if (r + 1, c) in cells and not t.a < cells[(r + 1, c)].a:
                return False
        return True

    def row_word(self) -> list[T]:
        return [t for row in reversed(self.rows) for t in row]

    @classmethod
    def from_row_word(cls, word: Sequence[T], shape: Partition) -> "TranspositionTableau":
        if len(word) != sum(shape):
            raise ValueError(f"word of length {len(word)} vs shape {shape}")
        rows, i = [], 0
        for length in reversed(shape):
            rows.append(tuple(word[i:i + length]))
            i += length
        return cls(tuple(reversed(rows)))

    def to_json(self) -> list[list[str]]:
        return [[str(t) for t in row] for row in self.rows]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[str]]) -> "TranspositionTableau":
        return cls(tuple(tuple(T.parse(s) for s in row) for row in rows))

    def render(self) -> str:
        width = max((len(str(t)) for row in self.rows for t in row), default=1)
        return "\n".join(" ".join(str(t).rjust(width) for t in row) for row in self.rows)


def split_into_rows(word: Sequence[T]) -> Optional[TranspositionTableau]:
    """The strict tableau whose row word is ``word``, if any.

    Rows of a strict tableau have increasing first entries and every row
    boundary is a non-increase, so the split points are forced.
    """
    if not word:
        return TranspositionTableau(())
    pieces, cur = [], [word[0]]
    for t in word[1:]:
        if t.a > cur[-1].a:
            cur.append(t)
        else:
            pieces.append(tuple(cur))
            cur = [t]
    pieces.append(tuple(cur))
    rows = tuple(reversed(pieces))
    lengths = [len(r) for r in rows]
    if lengths != sorted(lengths, reverse=True):
        return None
    tab = TranspositionTableau(rows)
    return tab if tab.is_strict() else None


# --- classes ------------------------------------------------------------------

@dataclass(frozen=True)
class PlacticClass:
    interval: BruhatInterval
    members: tuple[ChainWord, ...]
    canonical: Optional[TranspositionTableau]

    def __len__(self) -> int:
        return len(self.members)


_P_CACHE: dict[ChainWord, TranspositionTableau] = {}


def _closure(chain: ChainWord) -> list[ChainWord]:
    seen = {chain}
    queue = deque([chain])
    while queue:
        g = queue.popleft()
        for rw in all_kb_rewrites(g):
            if rw.chain not in seen:
                seen.add(rw.chain)
                queue.append(rw.chain)
    return sorted(seen, key=lambda c: [(t.a, t.b) for t in c.labels])


def _interval_of(chain: ChainWord) -> BruhatInterval:
    if not chain.is_pure():
        raise ValueError("plactic classes are defined for pure k-chains")
    k = chain.columns[0] if chain.steps else 1
    return BruhatInterval(chain.base, chain.end, k)


def _canonical_among(members: Iterable[ChainWord]) -> list[TranspositionTableau]:
    found = []
    for m in members:
        tab = split_into_rows(m.labels)
        if tab is not None:
            found.append(tab)
    return found


def plactic_class(chain: ChainWord) -> PlacticClass:
    members = _closure(chain)
    found = _canonical_among(members)
    return PlacticClass(_interval_of(chain), tuple(members), found[0] if len(found) == 1 else None)


def plactic_classes(interval: BruhatInterval) -> list[PlacticClass]:
    """Partition of the maximal chains of the interval into classes."""
    remaining = enumerate_maximal_chains(interval)
    done: set[ChainWord] = set()
    out = []
    for g in remaining:
        if g in done:
            continue
        cls = plactic_class(g)
        done.update(cls.members)
        out.append(cls)
    return out


def canonical_P(chain: ChainWord) -> TranspositionTableau:
    """The strict tableau whose row word lies in the class of ``chain``."""
    if chain in _P_CACHE:
        return _P_CACHE[chain]
    members = _closure(chain)
    found = _canonical_among(members)
    if not found:
        raise NoCanonical(f"class of {chain.word()} has no strict-tableau row word")
    if len(found) > 1:
        raise MultipleCanonical(
            f"class of {chain.word()} has {len(found)} strict-tableau row words: "
            + "; ".join(" ".join(map(str, t.row_word())) for t in found))
    for m in members:
        _P_CACHE[m] = found[0]
    return found[0]


def recording_Q(chain: ChainWord) -> Tableau:
    """Entry m sits in the box by which shape(P) grows from prefix m-1 to m."""
    cells = {}
    prev: Partition = ()
    for m in range(1, len(chain) + 1):
        shape = normalize(canonical_P(chain.prefix(m)).shape)
        diff = box_difference(shape, prev)
        if sum(shape) != sum(prev) + 1 or len(diff) != 1 or add_box(prev, diff[0]) != shape:
            raise PrefixShapeAnomaly(
                f"prefix {m} of {chain.word()}: shape {prev} -> {shape}")
        cells[diff[0]] = m
        prev = shape
    return Tableau.from_cells(cells)


def beligan_tableaux(v: Permutation, w: Permutation, k: int,
                     lam: Partition) -> list[TranspositionTableau]:
    interval = BruhatInterval(v, w, k)
    if has_nesting(interval):
        raise NestingPresent(f"{interval} contains a nesting")
    lam = normalize(lam)
    if sum(lam) != interval.rank():
        return []
    out = []
    for g in enumerate_maximal_chains(interval):
        tab = TranspositionTableau.from_row_word(g.labels, lam)
        if tab.is_strict():
            out.append(tab)
    return out


def beligan_count(v: Permutation, w: Permutation, k: int, lam: Partition) -> int:
    """Strict tableaux of shape ``lam`` whose row word is a maximal chain of [v,w]_k."""
    return len(beligan_tableaux(v, w, k, lam))
