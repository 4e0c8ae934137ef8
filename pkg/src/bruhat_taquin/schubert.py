"""
Schubert polynomials by divided differences over exact sparse integer
polynomials, and the structure constants c_{uv}^w.

Two independent routes to a structure constant are offered:

* :func:`structure_constants` multiplies and expands greedily in the
  Schubert basis (lex-smallest monomial read as a Lehmer code);
* :func:`structure_constant` extracts one coefficient by applying the
  divided difference operator of w to the product, which leaves exactly the
  constant c_{uv}^w when the degrees match.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .perms import Permutation, partition_to_grassmannian
from .young import Partition, normalize, semistandard_tableaux

__all__ = [
    "Polynomial", "NegativeCoefficient", "SchubertStore", "default_store",
    "divided_difference", "schubert_polynomial", "expand_in_schubert_basis",
    "structure_constants", "structure_constant", "schur_polynomial",
    "schur_vs_schubert_check", "schubert_product", "grassmannian_coefficient",
]

Exponent = tuple[int, ...]


class NegativeCoefficient(ArithmeticError):
    """The greedy Schubert expansion met a negative coefficient."""


class Polynomial:
    """Sparse polynomial in x_1..x_nvars with integer coefficients.

    Treated as immutable.  Zero coefficients are never stored.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != nvars:
                    e = _resize(e, nvars)
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, c: int, nvars: int = 1) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "Polynomial":
        e = tuple(exponent)
        return cls({e: coeff}, len(e))

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        e = [0] * nvars
        e[i - 1] = 1
        return cls({tuple(e): 1}, nvars)

    def with_nvars(self, nvars: int) -> "Polynomial":
        if nvars == self.nvars:
            return self
        return Polynomial({_resize(e, nvars): c for e, c in self.terms.items()}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        m = max(self.nvars, other.nvars)
        return self.with_nvars(m).terms == other.with_nvars(m).terms

    def __hash__(self):
        return hash(frozenset(self.trimmed_terms().items()))

    def trimmed_terms(self) -> dict[Exponent, int]:
        out = {}
        for e, c in self.terms.items():
            k = len(e)
            while k and e[k - 1] == 0:
                k -= 1
            out[e[:k]] = c
        return out

    def _align(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        m = max(self.nvars, other.nvars)
        return self.with_nvars(m), other.with_nvars(m)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(terms, a.nvars)

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial({e: c * x for e, x in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self._align(other)
        terms: dict[Exponent, int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(terms, a.nvars)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_exponent(self) -> Exponent:
        """Lex-smallest exponent vector, x_1 heaviest.

        For a Schubert polynomial this is the Lehmer-code monomial, which is
        why the greedy expansion peels terms off from this end.
        """
        return min(self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i}" if p == 1 else f"x{i}^{p}"
                            for i, p in enumerate(e, 1) if p)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c} for e, c in sorted(self.terms.items(), reverse=True)]

    @classmethod
    def from_json(cls, data: list[dict], nvars: Optional[int] = None) -> "Polynomial":
        if nvars is None:
            nvars = max((len(t["exponents"]) for t in data), default=1)
        return cls({tuple(t["exponents"]): int(t["coeff"]) for t in data}, nvars)


def _resize(e: Exponent, nvars: int) -> Exponent:
    if len(e) <= nvars:
        return e + (0,) * (nvars - len(e))
    if any(e[nvars:]):
        raise ValueError(f"exponent {e} uses more than {nvars} variables")
    return e[:nvars]


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    nvars = max(f.nvars, i + 1)
    f = f.with_nvars(nvars)
    out: dict[Exponent, int] = {}
    for e, c in f.terms.items():
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        # x_i^p x_{i+1}^q - x_i^q x_{i+1}^p over x_i - x_{i+1}
        sign = 1 if p > q else -1
        hi, lo = max(p, q), min(p, q)
        base = list(e)
        for j in range(hi - lo):
            base[i - 1] = lo + j
            base[i] = hi - 1 - j
            t = tuple(base)
            out[t] = out.get(t, 0) + sign * c
    return Polynomial(out, nvars)


def _trim(word: tuple[int, ...]) -> tuple[int, ...]:
    m = len(word)
    while m > 1 and word[m - 1] == m:
        m -= 1
    return word[:m]


class SchubertStore:
    """Memo of Schubert polynomials keyed by trimmed one-line word.

    Values are stable under S_n -> S_m, so one entry serves every ambient
    size.  Reads and writes are guarded by a lock; a lost race only costs a
    recomputation of an identical value.
    """

    def __init__(self):
        self._polys: dict[tuple[int, ...], Polynomial] = {}
        self._new: dict[tuple[int, ...], Polynomial] = {}
        self._lock = threading.Lock()
        self.dirty = False

    def __len__(self) -> int:
        return len(self._polys)

    def items(self):
        with self._lock:
            return list(self._polys.items())

    def put(self, word: tuple[int, ...], poly: Polynomial) -> None:
        with self._lock:
            if word not in self._polys:
                self._new[word] = poly
            self._polys[word] = poly
            self.dirty = True

    def load(self, entries: Iterable[tuple[tuple[int, ...], Polynomial]]) -> None:
        """Bulk insert known-good entries without marking them new."""
        with self._lock:
            for word, poly in entries:
                self._polys[word] = poly

    def drain_new(self) -> list[tuple[tuple[int, ...], Polynomial]]:
        """Entries computed since the last drain (used to ship worker results)."""
        with self._lock:
            out = sorted(self._new.items())
            self._new.clear()
            return out

    def get(self, w: Permutation) -> Polynomial:
        key = w.trimmed().word
        with self._lock:
            hit = self._polys.get(key)
        if hit is not None:
            return hit
        return self._compute(key)

    def _compute(self, key: tuple[int, ...]) -> Polynomial:
        n = len(key)
        stack = [key]
        # walk up by ascents towards w0, then come back down
        path = []
        cur = key
        while True:
            with self._lock:
                hit = self._polys.get(cur)
            if hit is not None:
                poly = hit
                break
            if cur == tuple(range(n, 0, -1)):
                poly = Polynomial.monomial(tuple(range(n - 1, -1, -1)))
                self.put(_trim(cur), poly)
                break
            i = next(j for j in range(n - 1, 0, -1) if cur[j - 1] < cur[j])
            path.append(i)
            w = list(cur)
            w[i - 1], w[i] = w[i], w[i - 1]
            cur = tuple(w)
            stack.append(cur)
        # stack[-1] is cur; unwind applying the recorded divided differences
        for idx in range(len(path) - 1, -1, -1):
            poly = divided_difference(poly, path[idx])
            self.put(_trim(stack[idx]), poly)
        return poly


default_store = SchubertStore()


def schubert_polynomial(w: Permutation, m: Optional[int] = None,
                        store: Optional[SchubertStore] = None) -> Polynomial:
    """The Schubert polynomial of w, over ``m`` variables (default w.n)."""
    store = default_store if store is None else store
    m = w.n if m is None else m
    if m < w.trimmed().n:
        raise ValueError(f"{w} needs at least {w.trimmed().n} variables")
    return store.get(w).with_nvars(m)


@dataclass(frozen=True)
class SchubertExpansion:
    coeffs: tuple[tuple[Permutation, int], ...]

    def as_dict(self) -> dict[Permutation, int]:
        return dict(self.coeffs)

    def get(self, w: Permutation, default: int = 0) -> int:
        key = w.trimmed()
        for p, c in self.coeffs:
            if p.trimmed() == key:
                return c
        return default

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> list[dict]:
        return [{"perm": str(p), "coeff": c} for p, c in self.coeffs]

    def reconstruct(self, nvars: int, store: Optional[SchubertStore] = None) -> Polynomial:
        total = Polynomial({}, nvars)
        for p, c in self.coeffs:
            total = total + schubert_polynomial(p, max(nvars, p.n), store).scale(c)
        return total


def expand_in_schubert_basis(f: Polynomial, ambient: int = 1,
                             store: Optional[SchubertStore] = None) -> SchubertExpansion:
    """Greedy expansion: peel off the Schubert polynomial named by the
    lex-smallest exponent vector until nothing is left.  Input must be
    homogeneous so that the smallest monomial of a combination cannot cancel.

    Permutations are reported in S_max(ambient, natural size).
    """
    m = f.nvars
    out: dict[Permutation, int] = {}
    rest = f
    while rest:
        lead = rest.leading_exponent()
        c = rest.terms[lead]
        if c < 0:
            raise NegativeCoefficient(f"coefficient {c} at exponent {lead}")
        code = lead + (0,) * (len(lead) + 1)
        w = Permutation.from_lehmer_code(code).trimmed()
        out[w] = out.get(w, 0) + c
        poly = schubert_polynomial(w, max(w.n, m), store)
        rest = rest.with_nvars(poly.nvars) - poly.scale(c)
    items = sorted(((w.embed(max(ambient, w.n)), c) for w, c in out.items()),
                   key=lambda pc: (pc[0].length(), pc[0].word))
    return SchubertExpansion(tuple(items))


def schubert_product(u: Permutation, v: Permutation,
                     store: Optional[SchubertStore] = None) -> Polynomial:
    n = max(u.n, v.n)
    m = 2 * n - 1
    return schubert_polynomial(u, m, store) * schubert_polynomial(v, m, store)


def structure_constants(u: Permutation, v: Permutation,
                        store: Optional[SchubertStore] = None) -> SchubertExpansion:
    """Expansion of S_u * S_v in the Schubert basis, in 2n-1 variables."""
    n = max(u.n, v.n)
    return expand_in_schubert_basis(schubert_product(u, v, store), n, store)


def structure_constant(u: Permutation, v: Permutation, w: Permutation,
                       store: Optional[SchubertStore] = None) -> int:
    """c_{uv}^w as the constant left by the divided difference operator of w."""
    if u.length() + v.length() != w.length():
        return 0
    m = max(u.trimmed().n, v.trimmed().n, w.trimmed().n)
    f = schubert_polynomial(u, m, store) * schubert_polynomial(v, m, store)
    cur = list(w.embed(max(w.n, m)).word)
    while True:
        i = next((j for j in range(1, len(cur)) if cur[j - 1] > cur[j]), None)
        if i is None:
            break
        f = divided_difference(f, i)
        if not f:
            return 0
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    if f.degree() > 0:
        raise ArithmeticError("divided differences left a non-constant polynomial")
    return f.constant_term()


def grassmannian_coefficient(lam: Partition, k: int, v: Permutation, w: Permutation,
                             store: Optional[SchubertStore] = None) -> int:
    """c_{u,v}^w for the Grassmannian u with descent at k and partition ``lam``.

    A partition with more than k parts has no such u; the matching Schur
    polynomial in k variables vanishes, so the coefficient is 0.  A first
    part wider than n-k is handled by embedding u in a larger symmetric group.
    """
    lam = normalize(lam)
    if len(lam) > k:
        return 0
    m = max(v.n, w.n, k + (lam[0] if lam else 0), k + 1)
    u = partition_to_grassmannian(lam, k, m)
    return structure_constant(u, v, w, store)


def schur_polynomial(lam: Partition, k: int) -> Polynomial:
    """s_lambda(x_1..x_k) as the generating function of SSYT."""
    lam = normalize(lam)
    terms: dict[Exponent, int] = {}
    for t in semistandard_tableaux(lam, k):
        e = [0] * k
        for x in t.entries():
            e[x - 1] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    if not lam:
        terms = {(0,) * k: 1}
    return Polynomial(terms, max(k, 1))


def schur_vs_schubert_check(lam: Partition, k: int, m: Optional[int] = None,
                            store: Optional[SchubertStore] = None) -> bool:
    lam = normalize(lam)
    if m is None:
        m = k + (lam[0] if lam else 0)
    v = partition_to_grassmannian(lam, k, max(m, k + 1))
    return schubert_polynomial(v, store=store) == schur_polynomial(lam, k)
