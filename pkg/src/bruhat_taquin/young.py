"""
Partitions, skew standard tableaux and the classical Littlewood-Richardson
machinery: jeu de taquin slides, rectification, Fomin's growth rule, the two
special straight tableaux P1/P2, content words and LR tableaux.

Conventions: English notation, row 1 on top, boxes are ``(row, column)``
pairs, content is ``column - row``.  The row word of a tableau reads rows
from bottom to top, each left to right.

A partition is a plain tuple of positive integers, weakly decreasing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]

__all__ = [
    "Partition", "Box", "Tableau", "SkewShape",
    "InvalidBox", "ShapeMismatch", "BoundaryMismatch",
    "partitions", "partitions_in_box", "conjugate", "contains", "skew_boxes",
    "num_syt", "standard_tableaux", "straight_syt", "tableau_to_chain",
    "chain_to_tableau", "inner_corners", "jdt_slide", "rectify",
    "special_tableau_P1", "special_tableau_P2", "content_word", "row_word",
    "split_row_word", "is_row_and_column_strict", "lr_count_via_rectification",
    "lr_count_via_content_word", "lr_witnesses_via_content_word",
    "lr_tableau_from_syt", "is_lr_tableau",
    "companion_tableau", "fomin_fill", "semistandard_tableaux",
]


class InvalidBox(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


class BoundaryMismatch(ValueError):
    pass


def normalize(parts: Iterable[int]) -> Partition:
    return tuple(x for x in parts if x > 0)


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_box(rows: int, cols: int, size: Optional[int] = None) -> list[Partition]:
    sizes = range(rows * cols + 1) if size is None else [size]
    return [lam for s in sizes for lam in partitions(s)
            if len(lam) <= rows and (not lam or lam[0] <= cols)]


def skew_boxes(outer: Partition, inner: Partition = ()) -> list[Box]:
    if not contains(outer, inner):
        raise ShapeMismatch(f"{inner} is not contained in {outer}")
    inner_pad = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(r + 1, c + 1) for r in range(len(outer))
            for c in range(inner_pad[r], outer[r])]


def addable_boxes(lam: Partition) -> list[Box]:
    out = []
    for r in range(len(lam) + 1):
        row_len = lam[r] if r < len(lam) else 0
        above = lam[r - 1] if r > 0 else float("inf")
        if row_len < above:
            out.append((r + 1, row_len + 1))
    return out


def add_box(lam: Partition, box: Box) -> Partition:
    r, c = box
    parts = list(lam) + [0]
    if parts[r - 1] != c - 1:
        raise InvalidBox(f"{box} is not addable to {lam}")
    parts[r - 1] += 1
    out = normalize(parts)
    if not is_partition(out):
        raise InvalidBox(f"{box} is not addable to {lam}")
    return out


def remove_box(lam: Partition, box: Box) -> Partition:
    r, c = box
    parts = list(lam)
    if r > len(parts) or parts[r - 1] != c:
        raise InvalidBox(f"{box} is not removable from {lam}")
    parts[r - 1] -= 1
    out = normalize(parts)
    if not is_partition(out):
        raise InvalidBox(f"{box} is not removable from {lam}")
    return out


def box_difference(big: Partition, small: Partition) -> list[Box]:
    return skew_boxes(big, small)


def hook_lengths_product(lam: Partition) -> int:
    conj = conjugate(lam)
    prod = 1
    for r, row_len in enumerate(lam):
        for c in range(row_len):
            prod *= (row_len - c - 1) + (conj[c] - r - 1) + 1
    return prod


def num_syt(lam: Partition) -> int:
    """f^lambda by the hook length formula."""
    return factorial(sum(lam)) // hook_lengths_product(tuple(lam))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ShapeMismatch(f"{self.inner} is not contained in {self.outer}")

    def boxes(self) -> list[Box]:
        return skew_boxes(self.outer, self.inner)

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


@dataclass(frozen=True)
class Tableau:
    """A filling of the skew shape ``outer/inner``.

    ``rows[r]`` lists the entries of row r+1 that lie outside ``inner``,
    left to right.  Entries are arbitrary comparable values (integers for
    SYT/SSYT); the shape is recovered from ``inner`` and the row lengths.
    """
    rows: tuple[tuple[Any, ...], ...]
    inner: Partition = ()

    def __post_init__(self):
        while self.rows and not self.rows[-1] and len(self.rows) > len(self.inner):
            object.__setattr__(self, "rows", self.rows[:-1])
        outer = self.outer
        if not is_partition(outer):
            raise ShapeMismatch(f"rows {self.rows} over {self.inner} do not form a skew shape")
        if not contains(outer, self.inner):
            raise ShapeMismatch(f"{self.inner} is not contained in {outer}")

    @classmethod
    def from_cells(cls, cells: dict[Box, Any], inner: Partition = ()) -> "Tableau":
        nrows = max([r for r, _ in cells] + [len(inner)] + [0])
        inner_pad = tuple(inner) + (0,) * (nrows - len(inner))
        rows = []
        for r in range(1, nrows + 1):
            row = []
            c = inner_pad[r - 1] + 1
            while (r, c) in cells:
                row.append(cells[(r, c)])
                c += 1
            rows.append(tuple(row))
        t = cls(tuple(rows), normalize(inner))
        if len(t.cells()) != len(cells):
            raise ShapeMismatch("cells do not form a skew shape over the inner partition")
        return t

    @property
    def outer(self) -> Partition:
        nrows = max(len(self.rows), len(self.inner))
        inner_pad = tuple(self.inner) + (0,) * (nrows - len(self.inner))
        rows = tuple(self.rows) + ((),) * (nrows - len(self.rows))
        return normalize(inner_pad[r] + len(rows[r]) for r in range(nrows))

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, normalize(self.inner))

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> dict[Box, Any]:
        out = {}
        for r, row in enumerate(self.rows, 1):
            start = self.inner[r - 1] if r <= len(self.inner) else 0
            for j, x in enumerate(row):
                out[(r, start + j + 1)] = x
        return out

    def is_straight(self) -> bool:
        return not normalize(self.inner)

    def entries(self) -> list[Any]:
        return [x for row in self.rows for x in row]

    def box_of(self, entry: Any) -> Box:
        for box, x in self.cells().items():
            if x == entry:
                return box
        raise KeyError(entry)

    def is_standard(self) -> bool:
        vals = self.entries()
        if sorted(vals) != list(range(1, len(vals) + 1)):
            return False
        return is_row_and_column_strict(self)

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (r, c), x in cells.items():
            if (r, c + 1) in cells and not x <= cells[(r, c + 1)]:
                return False
            if (r + 1, c) in cells and not x < cells[(r + 1, c)]:
                return False
        return True

    def to_json(self) -> list[list[Any]]:
        """Rows as lists, inner boxes as ``None``."""
        out = []
        for r, row in enumerate(self.rows, 1):
            start = self.inner[r - 1] if r <= len(self.inner) else 0
            out.append([None] * start + [x if isinstance(x, int) else str(x) for x in row])
        for r in range(len(self.rows) + 1, len(self.inner) + 1):
            out.append([None] * self.inner[r - 1])
        return out

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[Any]]) -> "Tableau":
        inner = []
        body = []
        for row in rows:
            skip = 0
            while skip < len(row) and row[skip] is None:
                skip += 1
            inner.append(skip)
            body.append(tuple(row[skip:]))
        return cls(tuple(body), normalize(inner))

    def render(self) -> str:
        rows = self.to_json()
        width = max([len(str(x)) for row in rows for x in row if x is not None] + [1])
        lines = []
        for row in rows:
            lines.append(" ".join(("." * width if x is None else str(x).rjust(width))
                                  for x in row))
        return "\n".join(lines)


def is_row_and_column_strict(t: Tableau, key: Callable[[Any], Any] = lambda x: x) -> bool:
    cells = t.cells()
    for (r, c), x in cells.items():
        if (r, c + 1) in cells and not key(x) < key(cells[(r, c + 1)]):
            return False
        if (r + 1, c) in cells and not key(x) < key(cells[(r + 1, c)]):
            return False
    return True


# --- chains in Young's lattice ----------------------------------------------

def tableau_to_chain(t: Tableau) -> list[Partition]:
    """The chain inner = mu_0 < mu_1 < ... < outer; entry i labels step i."""
    cells = t.cells()
    order = sorted(cells, key=lambda b: cells[b])
    lam = normalize(t.inner)
    chain = [lam]
    for box in order:
        lam = add_box(lam, box)
        chain.append(lam)
    return chain


def chain_to_tableau(chain: Sequence[Partition]) -> Tableau:
    cells = {}
    for i in range(1, len(chain)):
        diff = box_difference(chain[i], chain[i - 1])
        if len(diff) != 1 or sum(chain[i]) != sum(chain[i - 1]) + 1:
            raise ShapeMismatch(f"{chain[i - 1]} -> {chain[i]} is not a one-box step")
        cells[diff[0]] = i
    return Tableau.from_cells(cells, normalize(chain[0]))


def standard_tableaux(outer: Partition, inner: Partition = ()) -> list[Tableau]:
    """All SYT of shape outer/inner, in a deterministic order."""
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        raise ShapeMismatch(f"{inner} is not contained in {outer}")
    out = []

    def grow(lam: Partition, cells: dict[Box, int], i: int):
        if lam == outer:
            out.append(Tableau.from_cells(dict(cells), inner))
            return
        for box in addable_boxes(lam):
            r, c = box
            if r <= len(outer) and c <= outer[r - 1]:
                cells[box] = i
                grow(add_box(lam, box), cells, i + 1)
                del cells[box]

    grow(inner, {}, 1)
    return out


def straight_syt(lam: Partition) -> list[Tableau]:
    return standard_tableaux(lam)


# --- jeu de taquin ----------------------------------------------------------

def inner_corners(t: Tableau, touching: bool = True) -> list[Box]:
    """Removable boxes of the inner shape.  With ``touching``, only those
    sharing an edge with a filled box (the legal targets of ``jdt_slide``)."""
    inner = normalize(t.inner)
    cells = t.cells()
    out = []
    for r, row_len in enumerate(inner, 1):
        below = inner[r] if r < len(inner) else 0
        if row_len > below:
            b = (r, row_len)
            if not touching or (r, row_len + 1) in cells or (r + 1, row_len) in cells:
                out.append(b)
    return out


def _slide(t: Tableau, box: Box) -> Tableau:
    inner = normalize(t.inner)
    cells = t.cells()
    try:
        new_inner = remove_box(inner, box)
    except InvalidBox:
        raise InvalidBox(f"{box} is not a corner of the inner shape {inner}") from None
    hole = box
    while True:
        r, c = hole
        right = cells.get((r, c + 1))
        down = cells.get((r + 1, c))
        if right is None and down is None:
            break
        if down is None or (right is not None and right < down):
            src = (r, c + 1)
        else:
            src = (r + 1, c)
        cells[hole] = cells.pop(src)
        hole = src
    return Tableau.from_cells(cells, new_inner)


def jdt_slide(t: Tableau, box: Box) -> Tableau:
    """Slide the entries of ``t`` into the inner corner ``box``, which must
    share its lower or right edge with the skew shape."""
    r, c = box
    cells = t.cells()
    if box not in inner_corners(t, touching=False):
        raise InvalidBox(f"{box} is not a corner of the inner shape {normalize(t.inner)}")
    if (r, c + 1) not in cells and (r + 1, c) not in cells:
        raise InvalidBox(f"{box} does not touch the skew shape")
    return _slide(t, box)


def rectify(t: Tableau, rng: Optional[random.Random] = None) -> Tableau:
    """Slide until straight.  With ``rng``, the corner order is randomized.

    Inner corners that do not touch the filling are simply dropped; that is
    the degenerate slide in which nothing moves.
    """
    while normalize(t.inner):
        corners = inner_corners(t) or inner_corners(t, touching=False)
        box = rng.choice(corners) if rng is not None else corners[-1]
        t = _slide(t, box)
    return t


# --- the special tableaux P1, P2 --------------------------------------------

def special_tableau_P1(lam: Partition) -> Tableau:
    """Entries 1..|lam| row by row, starting with the top row."""
    rows, i = [], 1
    for row_len in lam:
        rows.append(tuple(range(i, i + row_len)))
        i += row_len
    return Tableau(tuple(rows))


def special_tableau_P2(lam: Partition) -> Tableau:
    """Entries |lam|, |lam|-1, ..., 1 placed one per column, sweeping from the
    rightmost unfilled column to the first, each time into the lowest empty box
    of the column."""
    lam = normalize(lam)
    heights = list(conjugate(lam))  # unfilled boxes left in each column
    cells = {}
    entry = sum(lam)
    while entry > 0:
        right = max(j for j, h in enumerate(heights) if h > 0)
        for j in range(right, -1, -1):
            cells[(heights[j], j + 1)] = entry
            heights[j] -= 1
            entry -= 1
    return Tableau.from_cells(cells)


# --- content words and the two LR rules -------------------------------------

def content_word(t: Tableau, shift: Optional[int] = None) -> list[int]:
    """j_i = content(box of i) + shift, with shift defaulting to the number
    of rows of the outer shape."""
    if shift is None:
        shift = len(t.outer)
    cells = t.cells()
    by_entry = sorted((x, box) for box, x in cells.items())
    return [c - r + shift for _, (r, c) in by_entry]


def row_word(t: Tableau) -> list[Any]:
    return [x for row in reversed(t.rows) for x in row]


def split_row_word(word: Sequence[Any], shape: Partition) -> Tableau:
    """The straight tableau of ``shape`` whose row word is ``word``."""
    if len(word) != sum(shape):
        raise ShapeMismatch(f"word of length {len(word)} vs shape {shape}")
    rows = []
    i = 0
    for row_len in reversed(shape):
        rows.append(tuple(word[i:i + row_len]))
        i += row_len
    return Tableau(tuple(reversed(rows)))


def _check_lr_shapes(lam: Partition, mu: Partition, nu: Partition) -> None:
    if sum(nu) != sum(lam) + sum(mu):
        raise ShapeMismatch(f"|{nu}| != |{lam}| + |{mu}|")
    if not contains(nu, mu):
        raise ShapeMismatch(f"{mu} is not contained in {nu}")


def lr_count_via_rectification(lam: Partition, mu: Partition, nu: Partition,
                               p: Optional[Tableau] = None) -> int:
    """Number of SYT of shape nu/mu rectifying to the straight SYT ``p``."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    _check_lr_shapes(lam, mu, nu)
    if p is None:
        p = special_tableau_P2(lam) if lam else Tableau(())
    if p.outer != lam or not p.is_straight():
        raise ShapeMismatch(f"P must be a straight SYT of shape {lam}")
    return sum(1 for t in standard_tableaux(nu, mu) if rectify(t) == p)


def lr_witnesses_via_content_word(lam: Partition, mu: Partition,
                                  nu: Partition) -> list[tuple[Tableau, Tableau]]:
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    _check_lr_shapes(lam, mu, nu)
    out = []
    for t in standard_tableaux(nu, mu):
        t_prime = split_row_word(content_word(t), lam)
        if is_row_and_column_strict(t_prime):
            out.append((t, t_prime))
    return out


def lr_count_via_content_word(lam: Partition, mu: Partition, nu: Partition) -> int:
    return len(lr_witnesses_via_content_word(lam, mu, nu))


def lr_tableau_from_syt(t: Tableau, p: Tableau) -> Tableau:
    """Replace each entry i of ``t`` by the row number of i in ``p``."""
    row_of = {x: r for (r, _), x in p.cells().items()}
    return Tableau(tuple(tuple(row_of[x] for x in row) for row in t.rows), t.inner)


def is_lattice_word(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def is_lr_tableau(t: Tableau) -> bool:
    """Semistandard with reverse row word a lattice permutation."""
    return t.is_semistandard() and is_lattice_word(list(reversed(row_word(t))))


def companion_tableau(t: Tableau) -> Tableau:
    """Entry j goes to row i of the companion for every entry i in row j of ``t``."""
    by_row: dict[int, list[int]] = {}
    for r, row in enumerate(t.rows, 1):
        for i in row:
            by_row.setdefault(i, []).append(r)
    nrows = max(by_row) if by_row else 0
    return Tableau(tuple(tuple(sorted(by_row.get(i, []))) for i in range(1, nrows + 1)))


def semistandard_tableaux(lam: Partition, max_entry: int) -> Iterator[Tableau]:
    """SSYT of straight shape ``lam`` with entries in 1..max_entry."""
    lam = normalize(lam)
    boxes = skew_boxes(lam)
    cells: dict[Box, int] = {}

    def fill(idx: int):
        if idx == len(boxes):
            yield Tableau.from_cells(dict(cells))
            return
        r, c = boxes[idx]
        lo = 1
        if (r, c - 1) in cells:
            lo = max(lo, cells[(r, c - 1)])
        if (r - 1, c) in cells:
            lo = max(lo, cells[(r - 1, c)] + 1)
        for x in range(lo, max_entry + 1):
            cells[(r, c)] = x
            yield from fill(idx + 1)
        cells.pop((r, c), None)

    yield from fill(0)


# --- Fomin's growth rule ----------------------------------------------------

def _adjacent(b1: Box, b2: Box) -> bool:
    return abs(b1[0] - b2[0]) + abs(b1[1] - b2[1]) == 1


def fomin_fill(s_chain: Sequence[Partition],
               t_chain: Sequence[Partition]) -> list[list[Partition]]:
    """Fill ``grid[i][j]`` (i along T, j along S) from the left column ``s_chain``
    (empty -> mu) and the top row ``t_chain`` (mu -> nu).  The bottom row
    ``[grid[i][0] for i]`` is the chain of the rectification of T."""
    s_chain = [normalize(x) for x in s_chain]
    t_chain = [normalize(x) for x in t_chain]
    if not s_chain or not t_chain or s_chain[-1] != t_chain[0]:
        raise BoundaryMismatch("S must end where T starts")
    if s_chain[0] != ():
        raise BoundaryMismatch("S must start at the empty partition")
    p, q = len(t_chain) - 1, len(s_chain) - 1
    grid: list[list[Optional[Partition]]] = [[None] * (q + 1) for _ in range(p + 1)]
    for j in range(q + 1):
        grid[0][j] = s_chain[j]
    for i in range(p + 1):
        grid[i][q] = t_chain[i]
    for i in range(p):
        for j in range(q - 1, -1, -1):
            lo, tl, tr = grid[i][j], grid[i][j + 1], grid[i + 1][j + 1]
            (tau_box,) = box_difference(tl, lo)
            (sigma_box,) = box_difference(tr, tl)
            if _adjacent(tau_box, sigma_box):
                grid[i + 1][j] = tl
            else:
                grid[i + 1][j] = add_box(lo, sigma_box)
    return grid  # type: ignore[return-value]
