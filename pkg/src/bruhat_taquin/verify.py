"""
Checks built on growth diagrams: the jdt count against the Schubert oracle,
independence from the boundary chain, the PLR existence question,
preservation of recording tableaux, and per-diagram structural lemmas.

Theorem-style checks return plain results that tests assert on.  The PLR
search returns a :class:`ConjectureResult`; a failure there is data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .chains import (
    BruhatInterval, ChainWord, enumerate_maximal_chains, enumerate_PL_chains,
    enumerate_PLR_chains, enumerate_PR_chains, has_nesting, has_property_PL,
    has_property_PR, k_up_set,
)
from .growth import (
    PL_EXCLUDED, PR_EXCLUDED, W0_PARTNER, GrowthDiagram, conjugate_diagram,
    conjugated_grid_matches, fill_from_boundary, fill_growth_diagram,
)
from .perms import (
    Permutation, grassmannian_to_partition, has_no_descents_before,
    is_grassmannian, is_k_semi_shuffle, partition_to_grassmannian,
)
from .plactic import (
    PrefixShapeAnomaly, canonical_P, match_kb, recording_Q,
)
from .schubert import grassmannian_coefficient
from .young import Partition, normalize, partitions

__all__ = [
    "PropertyViolation", "SpeclrrResult", "ConjectureResult", "LemmaReport",
    "eligible_sides", "boundary_chain", "boundary_chains", "jdt_outputs",
    "identity_chains", "verify_speclrr", "speclrr_interval",
    "delta_independence_check", "verify_conjecture_plr", "corpres_check",
    "presq_check", "lemma_report", "lemma_suite", "GrassmannianReport",
    "grassmannian_reduction", "young_chain_to_chainword", "CorpresResult",
]


class PropertyViolation(ValueError):
    pass


def eligible_sides(v: Permutation, k: int) -> tuple[str, ...]:
    out = []
    if is_k_semi_shuffle(v, k):
        out.append("PL")
    if has_no_descents_before(v, k):
        out.append("PR")
    return tuple(out)


def boundary_chains(v: Permutation, k: int, side: str) -> Iterable[ChainWord]:
    if side == "PL":
        return enumerate_PL_chains(v, k)
    if side == "PR":
        return enumerate_PR_chains(v, k)
    if side == "PLR":
        return enumerate_PLR_chains(v, k)
    raise ValueError(f"unknown side {side!r}")


def boundary_chain(v: Permutation, k: int, side: str) -> ChainWord:
    for chain in boundary_chains(v, k, side):
        return chain
    raise PropertyViolation(f"{v} admits no {side} chain for k={k}")


def _check_property(delta: ChainWord, k: int) -> str:
    if has_property_PL(delta, k):
        return "PL"
    if has_property_PR(delta, k):
        return "PR"
    raise PropertyViolation(f"{delta} has neither property PL nor PR for k={k}")


def identity_chains(lam: Partition, k: int, n: int) -> list[ChainWord]:
    """All maximal k-chains from the identity to the Grassmannian of ``lam``."""
    u = partition_to_grassmannian(lam, k, n)
    return enumerate_maximal_chains(BruhatInterval(Permutation.identity(n), u, k))


def _fits(lam: Partition, k: int, n: int) -> bool:
    return len(lam) <= k and (not lam or lam[0] <= n - k)


def jdt_outputs(delta: ChainWord, v: Permutation, w: Permutation, k: int,
                cross_check: bool = True) -> dict[ChainWord, GrowthDiagram]:
    """The filled diagram for every maximal chain of [v,w]_k."""
    out = {}
    for gamma in enumerate_maximal_chains(BruhatInterval(v, w, k)):
        out[gamma] = fill_growth_diagram(delta, gamma, k, cross_check)
    return out


@dataclass(frozen=True)
class SpeclrrResult:
    lam: Partition
    gamma_prime: Optional[ChainWord]
    count: int
    oracle: int

    @property
    def passed(self) -> bool:
        return self.count == self.oracle


def verify_speclrr(v: Permutation, w: Permutation, k: int, lam: Partition,
                   gamma_prime: ChainWord, delta: ChainWord) -> SpeclrrResult:
    """Count chains of [v,w]_k sent to ``gamma_prime`` by jdt along ``delta``."""
    _check_property(delta, k)
    if delta.end != v:
        raise PropertyViolation(f"Delta ends at {delta.end}, not at {v}")
    lam = normalize(lam)
    outputs = jdt_outputs(delta, v, w, k)
    count = sum(1 for d in outputs.values() if d.output == gamma_prime)
    return SpeclrrResult(lam, gamma_prime, count, grassmannian_coefficient(lam, k, v, w))


def speclrr_interval(v: Permutation, w: Permutation, k: int, delta: ChainWord,
                     outputs: Optional[dict[ChainWord, GrowthDiagram]] = None) -> list[SpeclrrResult]:
    """Every (lambda, Gamma') check for one interval and one boundary chain.

    Partitions that do not fit the k x (n-k) box have no Gamma' in S_n; for
    them the count of chains landing on that shape is compared with the
    (necessarily zero) oracle value.
    """
    n = v.n
    if outputs is None:
        outputs = jdt_outputs(delta, v, w, k)
    tally = Counter(d.output for d in outputs.values())
    rank = w.length() - v.length()
    results = []
    for lam in partitions(rank):
        oracle = grassmannian_coefficient(lam, k, v, w)
        if _fits(lam, k, n):
            for gp in identity_chains(lam, k, n):
                results.append(SpeclrrResult(lam, gp, tally.get(gp, 0), oracle))
        else:
            landed = sum(c for g, c in tally.items()
                         if is_grassmannian(g.end, k) and grassmannian_to_partition(g.end, k) == lam)
            results.append(SpeclrrResult(lam, None, landed, oracle))
    return results


def delta_independence_check(v: Permutation, w: Permutation, k: int,
                             sides: Optional[Sequence[str]] = None) -> bool:
    """jdt(Gamma) is the same for every admissible boundary chain."""
    sides = eligible_sides(v, k) if sides is None else sides
    reference: Optional[dict[ChainWord, ChainWord]] = None
    for side in sides:
        for delta in boundary_chains(v, k, side):
            got = {g: d.output for g, d in jdt_outputs(delta, v, w, k).items()}
            if reference is None:
                reference = got
            elif got != reference:
                return False
    return True


@dataclass(frozen=True)
class ConjectureResult:
    v: Permutation
    w: Permutation
    k: int
    lam: Partition
    witness: Optional[ChainWord]
    candidates: int
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.witness is not None


def verify_conjecture_plr(v: Permutation, w: Permutation, k: int, lam: Partition,
                          limit: Optional[int] = None) -> ConjectureResult:
    """Search the PLR chains to v for one whose jdt count matches the oracle
    for every Gamma' of shape ``lam``."""
    lam = normalize(lam)
    n = v.n
    oracle = grassmannian_coefficient(lam, k, v, w)
    targets = identity_chains(lam, k, n) if _fits(lam, k, n) else []
    tried = 0
    failures = []
    for delta in enumerate_PLR_chains(v, k):
        if limit is not None and tried >= limit:
            break
        tried += 1
        tally = Counter(d.output for d in jdt_outputs(delta, v, w, k).values())
        if targets:
            bad = [gp for gp in targets if tally.get(gp, 0) != oracle]
        else:
            landed = sum(c for g, c in tally.items()
                         if is_grassmannian(g.end, k) and grassmannian_to_partition(g.end, k) == lam)
            bad = [] if landed == oracle else ["shape outside the box"]
        if not bad:
            return ConjectureResult(v, w, k, lam, delta, tried)
        if len(failures) < 3:
            failures.append(f"{delta.word(show_columns=True)}: {len(bad)} mismatched targets")
    return ConjectureResult(v, w, k, lam, None, tried, tuple(failures))


# --- recording tableaux ---------------------------------------------------------

@dataclass(frozen=True)
class CorpresResult:
    status: str                 # "pass", "fail" or "skipped"
    reason: str = ""
    strong: Optional[bool] = None   # jdt(row word of P) is itself the row word of P(Gamma')

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _plactic_ready(chain: ChainWord, k: int) -> Optional[str]:
    if not chain.steps:
        return None
    if has_nesting(BruhatInterval(chain.base, chain.end, k)):
        return f"interval [{chain.base},{chain.end}]_{k} contains a nesting"
    return None


def corpres_check(delta: ChainWord, gamma: ChainWord, k: int) -> CorpresResult:
    """P(jdt of the row word of P(Gamma)) = P(Gamma') and Q(Gamma) = Q(Gamma')."""
    if not delta.steps:
        return CorpresResult("pass", strong=True)
    d = fill_growth_diagram(delta, gamma, k)
    out = d.output
    for chain in (gamma, out):
        why = _plactic_ready(chain, k)
        if why:
            return CorpresResult("skipped", why)
    if not gamma.steps:
        return CorpresResult("pass", strong=True)
    try:
        p_gamma = canonical_P(gamma)
        row = ChainWord.pure(gamma.base, p_gamma.row_word(), k)
        moved = fill_growth_diagram(delta, row, k).output
        p_out = canonical_P(out)
        same_p = canonical_P(moved) == p_out
        same_q = recording_Q(gamma) == recording_Q(out)
    except PrefixShapeAnomaly as exc:
        return CorpresResult("skipped", f"prefix shape anomaly: {exc}")
    strong = list(moved.labels) == p_out.row_word()
    if same_p and same_q:
        return CorpresResult("pass", strong=strong)
    return CorpresResult("fail", f"P equal: {same_p}, Q equal: {same_q}", strong)


def presq_check(v: Permutation, w: Permutation, k: int, delta: ChainWord) -> bool:
    """Q(jdt(Gamma)) = Q(Gamma) for every maximal chain Gamma of [v,w]_k."""
    for gamma, d in jdt_outputs(delta, v, w, k).items():
        if not gamma.steps:
            continue
        if recording_Q(gamma) != recording_Q(d.output):
            return False
    return True


# --- structural lemmas on filled diagrams ---------------------------------------

@dataclass
class LemmaReport:
    diagrams: int = 0
    cells: int = 0
    excluded_fired: list[str] = field(default_factory=list)
    fragments: int = 0
    fragment_violations: list[str] = field(default_factory=list)
    monotone_pairs: int = 0
    monotone_violations: list[str] = field(default_factory=list)
    duality_checked: int = 0
    duality_violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.excluded_fired or self.fragment_violations
                    or self.monotone_violations or self.duality_violations)

    def merge(self, other: "LemmaReport") -> None:
        for name in ("diagrams", "cells", "fragments", "monotone_pairs", "duality_checked"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        for name in ("excluded_fired", "fragment_violations", "monotone_violations",
                     "duality_violations"):
            getattr(self, name).extend(getattr(other, name))

    def summary(self) -> dict:
        return {
            "diagrams": self.diagrams, "cells": self.cells,
            "excluded_fired": len(self.excluded_fired),
            "fragments": self.fragments, "fragment_violations": len(self.fragment_violations),
            "monotone_pairs": self.monotone_pairs,
            "monotone_violations": len(self.monotone_violations),
            "duality_checked": self.duality_checked,
            "duality_violations": len(self.duality_violations),
        }


def _fragment_check(d: GrowthDiagram, i: int, j: int) -> Optional[str]:
    """Height-1, width-3 fragment with bottom-left corner (i, j)."""
    top = [d.sigma(i + t, j + 1) for t in range(3)]
    bottom = [d.sigma(i + t, j) for t in range(3)]
    lhs = [m for m in match_kb(*top) if m[1]]
    if not lhs:
        return None
    _, _, top_r = lhs[0]
    bottom_lhs = [m for m in match_kb(*bottom) if m[1]]
    where = f"fragment at ({i},{j}) of {d.gamma}"
    if not bottom_lhs:
        return f"{where}: bottom {' '.join(map(str, bottom))} is not a left-hand side"
    _, _, bottom_r = bottom_lhs[0]
    perms = [d.grid[i][j + 1]]
    for t in top_r:
        perms.append(perms[-1].left_multiply(t))
    try:
        frag = fill_from_boundary([d.grid[i][j], d.grid[i][j + 1]], perms,
                                  d.k_seq[i:i + 3], [d.l_seq[j]])
    except Exception as exc:  # a rewrite that is not a chain is itself a violation
        return f"{where}: refill failed ({exc})"
    got = [frag.sigma(t, 0) for t in range(3)]
    if got != list(bottom_r) or frag.grid[3][0] != d.grid[i + 3][j]:
        return (f"{where}: rewritten top gives {' '.join(map(str, got))}, "
                f"expected {' '.join(map(str, bottom_r))}")
    return None


def lemma_report(d: GrowthDiagram, side: str, duality: bool = True) -> LemmaReport:
    rep = LemmaReport(diagrams=1, cells=len(d.fired))
    excluded = PL_EXCLUDED if side == "PL" else PR_EXCLUDED
    for (i, j), tag in d.fired:
        if tag in excluded:
            rep.excluded_fired.append(f"{tag} at ({i},{j}) of {d.gamma} over {d.delta}")
    for j in range(d.q):
        for i in range(d.p - 1):
            rep.monotone_pairs += 1
            s1, s2 = d.sigma(i, j + 1), d.sigma(i + 1, j + 1)
            b1, b2 = d.sigma(i, j), d.sigma(i + 1, j)
            if (s1.a < s2.a) != (b1.a < b2.a):
                rep.monotone_violations.append(
                    f"({i},{j}) of {d.gamma}: {s1} {s2} -> {b1} {b2}")
        if side == "PL":
            for i in range(d.p - 2):
                msg = _fragment_check(d, i, j)
                if msg is not None:
                    rep.fragment_violations.append(msg)
                if match_kb(d.sigma(i, j + 1), d.sigma(i + 1, j + 1), d.sigma(i + 2, j + 1)):
                    rep.fragments += 1
    if duality and d.fired:
        rep.duality_checked += 1
        c = conjugate_diagram(d)
        partner = [(pos, W0_PARTNER[t]) for pos, t in d.fired]
        if not conjugated_grid_matches(d, c) or list(c.fired) != partner:
            rep.duality_violations.append(
                f"{d.gamma} over {d.delta}: {d.tag_sequence()} vs conjugate {c.tag_sequence()}")
    return rep


def lemma_suite(n: int, ks: Optional[Sequence[int]] = None,
                sides: Sequence[str] = ("PL",)) -> LemmaReport:
    """Run :func:`lemma_report` on every diagram of the full S_n sweep."""
    from .perms import all_permutations
    total = LemmaReport()
    for v in all_permutations(n):
        for k in (ks or range(1, n)):
            for side in sides:
                if side not in eligible_sides(v, k):
                    continue
                delta = boundary_chain(v, k, side)
                for w in sorted(k_up_set(v, k)):
                    for d in jdt_outputs(delta, v, w, k).values():
                        total.merge(lemma_report(d, side))
    return total


# --- Grassmannian reduction -------------------------------------------------------

GRASSMANNIAN_TAGS = frozenset({"J0", "J5'", "J7'"})


@dataclass
class GrassmannianReport:
    instances: int = 0
    bad_tags: list[str] = field(default_factory=list)
    fomin_mismatches: list[str] = field(default_factory=list)
    rectify_mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.bad_tags or self.fomin_mismatches or self.rectify_mismatches)


def young_chain_to_chainword(chain: Sequence[Partition], k: int, n: int) -> ChainWord:
    perms = [partition_to_grassmannian(lam, k, n) for lam in chain]
    return ChainWord.from_perms(perms, k)


def grassmannian_reduction(n: int, max_size: int) -> GrassmannianReport:
    """Compare the generalized fill with Fomin's rule and with rectification
    on every Grassmannian instance with k = l in S_n and |nu| <= max_size."""
    from .young import (
        chain_to_tableau, fomin_fill, partitions_in_box, rectify,
        standard_tableaux, tableau_to_chain,
    )
    rep = GrassmannianReport()
    for k in range(1, n):
        for size in range(max_size + 1):
            for nu in partitions_in_box(k, n - k, size):
                for msize in range(size + 1):
                    for mu in partitions_in_box(k, n - k, msize):
                        if any(m > x for m, x in zip(mu, nu)) or len(mu) > len(nu):
                            continue
                        for s in standard_tableaux(mu):
                            s_chain = tableau_to_chain(s)
                            delta = young_chain_to_chainword(s_chain, k, n)
                            for t in standard_tableaux(nu, mu):
                                t_chain = tableau_to_chain(t)
                                gamma = young_chain_to_chainword(t_chain, k, n)
                                d = fill_growth_diagram(delta, gamma, k)
                                rep.instances += 1
                                key = f"k={k} nu={nu} mu={mu} S={s.rows} T={t.rows}"
                                stray = {tag for _, tag in d.fired} - GRASSMANNIAN_TAGS
                                if stray:
                                    rep.bad_tags.append(f"{key}: {sorted(stray)}")
                                grid = fomin_fill(s_chain, t_chain)
                                ours = [[grassmannian_to_partition(x, k) for x in col] for col in d.grid]
                                if ours != [[normalize(x) for x in col] for col in grid]:
                                    rep.fomin_mismatches.append(key)
                                rect = tableau_to_chain(rectify(t))
                                if [grassmannian_to_partition(x, k) for x in d.output.perms] != rect:
                                    rep.rectify_mismatches.append(key)
    return rep
