"""
Growth diagrams for jeu de taquin on chains in k-Bruhat order.

A diagram is a grid ``w[i][j]`` with ``0 <= i <= p`` (horizontal, along
Gamma) and ``0 <= j <= q`` (vertical, along Delta).  The left column is the
chain Delta, the top row is Gamma; the bottom row is the output
``jdt_Delta(Gamma)`` and the right column the transformed Delta.  Horizontal
edges in column i are covers in column ``k_seq[i]``; vertical edges in row j
are covers in column ``l_seq[j]``.

Each cell is filled from its bottom-left, top-left and top-right corners.
Writing ``tau`` for the label of the left edge and ``sigma'`` for the label
of the top edge, the thirteen cases below give the label ``sigma`` of the
bottom edge and ``tau'`` of the right edge (a < b < c; ``pos`` is the
position in the bottom-left permutation; "keep" means sigma = tau and
tau' = sigma')::

    J0   tau, sigma' disjoint         -> sigma', tau
    J1   a_b a_c                      -> b_c a_b
    J2   a_c a_b                      -> a_b b_c
    J3   b_c a_c                      -> a_b b_c
    J4   a_c b_c                      -> b_c a_b
    J5   a_b b_c, pos b <= k < pos c  -> b_c a_c
    J5'  a_b b_c, k < pos b < pos c   -> keep
    J6   a_b b_c, pos c <= l < pos b  -> a_c a_b
    J6'  a_b b_c, l < pos c < pos b   -> keep
    J7   b_c a_b, pos a <= k < pos b  -> a_b a_c
    J7'  b_c a_b, pos a < pos b <= k  -> keep
    J8   b_c a_b, pos b <= l < pos a  -> a_c b_c
    J8'  b_c a_b, pos b < pos a <= l  -> keep

An independent search-based rule (:func:`abstract_local_rule`) picks the
bottom-right corner among the two atoms of the cell's Bruhat interval and is
cross-checked against the table on every cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chains import ChainWord, InvalidChain
from .perms import (
    Permutation, ValueTransposition, bruhat_up_covers, conjugate_by_w0,
    conjugate_transposition, cover_edge, is_cover,
)

__all__ = [
    "TAGS", "PL_EXCLUDED", "PR_EXCLUDED", "W0_PARTNER",
    "NoCaseMatches", "MultipleCasesMatch", "NoValidChoice", "RuleMismatch",
    "InvalidDiagram",
    "local_rule", "abstract_local_rule", "GrowthDiagram", "fill_growth_diagram",
    "fill_from_boundary", "jdt_chain", "jdt_symmetry_check", "transpose_diagram",
    "conjugate_diagram", "conjugated_grid_matches", "conjugate_chain",
    "transposition_between", "recheck_cells",
]

T = ValueTransposition

TAGS = ("J0", "J1", "J2", "J3", "J4", "J5", "J5'", "J6", "J6'",
        "J7", "J7'", "J8", "J8'")

# cases that cannot fire when the left boundary is a PL chain
PL_EXCLUDED = frozenset({"J3", "J4", "J6", "J6'", "J7", "J8'"})

W0_PARTNER = {"J0": "J0", "J1": "J3", "J3": "J1", "J2": "J4", "J4": "J2",
              "J5": "J7", "J7": "J5", "J5'": "J7'", "J7'": "J5'",
              "J6": "J8", "J8": "J6", "J6'": "J8'", "J8'": "J6'"}

# conjugating by w0 swaps PL and PR boundaries, so the PR exclusions are the partners
PR_EXCLUDED = frozenset(W0_PARTNER[t] for t in PL_EXCLUDED)


class NoCaseMatches(RuntimeError):
    pass


class MultipleCasesMatch(RuntimeError):
    pass


class NoValidChoice(RuntimeError):
    pass


class RuleMismatch(RuntimeError):
    """The case table and the atom search disagree on a cell."""


class InvalidDiagram(ValueError):
    pass


def transposition_between(x: Permutation, y: Permutation) -> T:
    """The value transposition t with ``y = t * x``."""
    moved = [i for i in range(1, x.n + 1) if x(i) != y(i)]
    if len(moved) != 2 or x(moved[0]) != y(moved[1]):
        raise InvalidDiagram(f"{x} and {y} do not differ by a transposition")
    return T.of(x(moved[0]), x(moved[1]))


def local_rule(w: Permutation, tau: T, sigma_top: T, k: int, l: int) -> tuple[T, T, str]:
    """Return ``(sigma, tau', tag)`` for the cell with bottom-left corner w."""
    pos = w.positions
    if not tau.support() & sigma_top.support():
        return sigma_top, tau, "J0"
    vals = sorted(tau.support() | sigma_top.support())
    if len(vals) != 3:
        raise NoCaseMatches(f"labels {tau} and {sigma_top} coincide")
    a, b, c = vals
    keep = (tau, sigma_top)
    hits: list[tuple[T, T, str]] = []
    if (tau, sigma_top) == (T(a, b), T(a, c)):
        hits.append((T(b, c), T(a, b), "J1"))
    if (tau, sigma_top) == (T(a, c), T(a, b)):
        hits.append((T(a, b), T(b, c), "J2"))
    if (tau, sigma_top) == (T(b, c), T(a, c)):
        hits.append((T(a, b), T(b, c), "J3"))
    if (tau, sigma_top) == (T(a, c), T(b, c)):
        hits.append((T(b, c), T(a, b), "J4"))
    if (tau, sigma_top) == (T(a, b), T(b, c)):
        if pos[b] <= k < pos[c]:
            hits.append((T(b, c), T(a, c), "J5"))
        if k < pos[b] < pos[c]:
            hits.append((*keep, "J5'"))
        if pos[c] <= l < pos[b]:
            hits.append((T(a, c), T(a, b), "J6"))
        if l < pos[c] < pos[b]:
            hits.append((*keep, "J6'"))
    if (tau, sigma_top) == (T(b, c), T(a, b)):
        if pos[a] <= k < pos[b]:
            hits.append((T(a, b), T(a, c), "J7"))
        if pos[a] < pos[b] <= k:
            hits.append((*keep, "J7'"))
        if pos[b] <= l < pos[a]:
            hits.append((T(a, c), T(b, c), "J8"))
        if pos[b] < pos[a] <= l:
            hits.append((*keep, "J8'"))
    if not hits:
        raise NoCaseMatches(f"w={w} tau={tau} sigma'={sigma_top} k={k} l={l}")
    if len(hits) > 1:
        raise MultipleCasesMatch(
            f"w={w} tau={tau} sigma'={sigma_top} k={k} l={l}: {[h[2] for h in hits]}")
    return hits[0]


def abstract_local_rule(w: Permutation, tau: T, sigma_top: T, k: int, l: int) -> tuple[T, T]:
    """Pick the bottom-right corner by search over the atoms of [w, top-right].

    The candidate other than the top-left corner is preferred whenever it
    is a column-k cover of w covered in column l by the top-right corner.
    """
    tl = w.left_multiply(tau)
    tr = tl.left_multiply(sigma_top)
    atoms = [e.target for e in bruhat_up_covers(w) if is_cover(e.target, tr)]
    others = [x for x in atoms if x != tl]
    if len(others) > 1:
        raise NoValidChoice(f"[{w},{tr}] has {len(atoms)} atoms")

    def works(x: Permutation) -> bool:
        return is_cover(w, x, k) and is_cover(x, tr, l)

    for x in others + [tl]:
        if works(x):
            return transposition_between(w, x), transposition_between(x, tr)
    raise NoValidChoice(f"no valid corner for w={w} tau={tau} sigma'={sigma_top} k={k} l={l}")


@dataclass(frozen=True)
class GrowthDiagram:
    """``grid[i][j]`` with i along the horizontal chain and j along the vertical one."""
    grid: tuple[tuple[Permutation, ...], ...]
    k_seq: tuple[int, ...]
    l_seq: tuple[int, ...]
    fired: tuple[tuple[tuple[int, int], str], ...] = field(default=())

    @property
    def p(self) -> int:
        return len(self.grid) - 1

    @property
    def q(self) -> int:
        return len(self.grid[0]) - 1

    @property
    def k(self) -> Optional[int]:
        ks = set(self.k_seq)
        return ks.pop() if len(ks) == 1 else None

    def tags(self) -> dict[tuple[int, int], str]:
        return dict(self.fired)

    def tag_sequence(self) -> list[str]:
        """Tags in fill order (i ascending, j descending)."""
        return [t for _, t in self.fired]

    def sigma(self, i: int, j: int) -> T:
        return transposition_between(self.grid[i][j], self.grid[i + 1][j])

    def tau(self, i: int, j: int) -> T:
        return transposition_between(self.grid[i][j], self.grid[i][j + 1])

    def row_chain(self, j: int) -> ChainWord:
        return ChainWord(self.grid[0][j],
                         tuple((self.sigma(i, j), self.k_seq[i]) for i in range(self.p)))

    def column_chain(self, i: int) -> ChainWord:
        return ChainWord(self.grid[i][0],
                         tuple((self.tau(i, j), self.l_seq[j]) for j in range(self.q)))

    @property
    def delta(self) -> ChainWord:
        return self.column_chain(0)

    @property
    def gamma(self) -> ChainWord:
        return self.row_chain(self.q)

    @property
    def output(self) -> ChainWord:
        return self.row_chain(0)

    @property
    def delta_out(self) -> ChainWord:
        return self.column_chain(self.p)

    def validate(self) -> None:
        for i in range(self.p + 1):
            for j in range(self.q + 1):
                x = self.grid[i][j]
                if i < self.p and not is_cover(x, self.grid[i + 1][j], self.k_seq[i]):
                    raise InvalidDiagram(f"horizontal edge at ({i},{j}) is not a column-{self.k_seq[i]} cover")
                if j < self.q and not is_cover(x, self.grid[i][j + 1], self.l_seq[j]):
                    raise InvalidDiagram(f"vertical edge at ({i},{j}) is not a column-{self.l_seq[j]} cover")

    def to_json(self) -> dict:
        """``grid[j]`` is the row at height j (bottom row first)."""
        return {
            "grid": [[str(self.grid[i][j]) for i in range(self.p + 1)] for j in range(self.q + 1)],
            "k_seq": list(self.k_seq),
            "l_seq": list(self.l_seq),
            "fired": [{"i": i, "j": j, "tag": t} for (i, j), t in self.fired],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GrowthDiagram":
        rows = [[Permutation.parse(s) for s in row] for row in data["grid"]]
        q, p = len(rows) - 1, len(rows[0]) - 1
        grid = tuple(tuple(rows[j][i] for j in range(q + 1)) for i in range(p + 1))
        fired = tuple(((int(f["i"]), int(f["j"])), f["tag"]) for f in data["fired"])
        return cls(grid, tuple(data["k_seq"]), tuple(data["l_seq"]), fired)


def fill_from_boundary(left: Sequence[Permutation], top: Sequence[Permutation],
                       k_seq: Sequence[int], l_seq: Sequence[int],
                       cross_check: bool = True) -> GrowthDiagram:
    """Fill a grid from its left column (bottom to top) and top row."""
    q, p = len(left) - 1, len(top) - 1
    if left[-1] != top[0]:
        raise InvalidDiagram(f"left column ends at {left[-1]} but top row starts at {top[0]}")
    if len(k_seq) != p or len(l_seq) != q:
        raise InvalidDiagram("column sequences do not match the boundary lengths")
    grid: list[list[Optional[Permutation]]] = [[None] * (q + 1) for _ in range(p + 1)]
    for j in range(q + 1):
        grid[0][j] = left[j]
    for i in range(p + 1):
        grid[i][q] = top[i]
    fired = []
    for i in range(p):
        for j in range(q - 1, -1, -1):
            w, tl, tr = grid[i][j], grid[i][j + 1], grid[i + 1][j + 1]
            tau = transposition_between(w, tl)
            sigma_top = transposition_between(tl, tr)
            k, l = k_seq[i], l_seq[j]
            sigma, tau_out, tag = local_rule(w, tau, sigma_top, k, l)
            if cross_check:
                other = abstract_local_rule(w, tau, sigma_top, k, l)
                if other != (sigma, tau_out):
                    raise RuleMismatch(
                        f"cell ({i},{j}) w={w}: table {tag} gives {sigma},{tau_out}; "
                        f"search gives {other[0]},{other[1]}")
            br = w.left_multiply(sigma)
            if br.left_multiply(tau_out) != tr:
                raise InvalidDiagram(f"cell ({i},{j}): {tag} does not close the square")
            if cover_edge(w, sigma, k) is None or cover_edge(br, tau_out, l) is None:
                raise InvalidDiagram(f"cell ({i},{j}): {tag} output edges are not covers")
            grid[i + 1][j] = br
            fired.append(((i, j), tag))
    return GrowthDiagram(tuple(tuple(col) for col in grid),  # type: ignore[arg-type]
                         tuple(k_seq), tuple(l_seq), tuple(fired))


def fill_growth_diagram(delta: ChainWord, gamma: ChainWord, k: Optional[int] = None,
                        cross_check: bool = True) -> GrowthDiagram:
    """Fill the diagram with left boundary ``delta`` and top boundary ``gamma``.

    ``gamma`` should be a pure k-chain; mixed chains are accepted (each
    column keeps its own index) so that the transposed fill is available.
    """
    if delta.end != gamma.base:
        raise InvalidChain(f"Delta ends at {delta.end} but Gamma starts at {gamma.base}")
    if k is not None and not gamma.is_pure(k):
        raise InvalidChain(f"Gamma is not a chain in column {k}")
    return fill_from_boundary(delta.perms, gamma.perms, gamma.columns, delta.columns, cross_check)


def recheck_cells(d: GrowthDiagram) -> int:
    """Re-derive every cell of a filled diagram with both rules; returns the
    number of cells checked and raises :class:`RuleMismatch` on disagreement."""
    for i in range(d.p):
        for j in range(d.q):
            w, tau, top = d.grid[i][j], d.tau(i, j), d.sigma(i, j + 1)
            k, l = d.k_seq[i], d.l_seq[j]
            sigma, tau_out, tag = local_rule(w, tau, top, k, l)
            if abstract_local_rule(w, tau, top, k, l) != (sigma, tau_out):
                raise RuleMismatch(f"cell ({i},{j}) w={w}: table {tag} disagrees with search")
            if (sigma, tau_out) != (d.sigma(i, j), d.tau(i + 1, j)):
                raise RuleMismatch(f"cell ({i},{j}) w={w}: stored edges differ from {tag}")
    return d.p * d.q


def jdt_chain(delta: ChainWord, gamma: ChainWord, k: Optional[int] = None) -> ChainWord:
    return fill_growth_diagram(delta, gamma, k).output


def transpose_diagram(d: GrowthDiagram) -> GrowthDiagram:
    grid = tuple(tuple(d.grid[i][j] for i in range(d.p + 1)) for j in range(d.q + 1))
    return GrowthDiagram(grid, d.l_seq, d.k_seq, ())


def jdt_symmetry_check(delta: ChainWord, gamma: ChainWord, k: Optional[int] = None) -> bool:
    """Feed (output, transformed Delta) back in; it must return (Delta, Gamma)."""
    d = fill_growth_diagram(delta, gamma, k)
    back = fill_growth_diagram(d.output, d.delta_out)
    return (back.output == delta and back.delta_out == gamma
            and back.grid == transpose_diagram(d).grid)


def conjugate_diagram(d: GrowthDiagram) -> GrowthDiagram:
    """Conjugate every permutation by w0 and refill from the new boundary."""
    n = d.grid[0][0].n
    left = [conjugate_by_w0(x) for x in (d.grid[0][j] for j in range(d.q + 1))]
    top = [conjugate_by_w0(d.grid[i][d.q]) for i in range(d.p + 1)]
    return fill_from_boundary(left, top, [n - k for k in d.k_seq], [n - l for l in d.l_seq])


def conjugated_grid_matches(d: GrowthDiagram, c: GrowthDiagram) -> bool:
    return all(c.grid[i][j] == conjugate_by_w0(d.grid[i][j])
               for i in range(d.p + 1) for j in range(d.q + 1))


def conjugate_chain(chain: ChainWord) -> ChainWord:
    n = chain.base.n
    return ChainWord(conjugate_by_w0(chain.base),
                     tuple((conjugate_transposition(t, n), n - c) for t, c in chain.steps))
