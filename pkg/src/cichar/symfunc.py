"""Monomial symmetric polynomials, their elementary-basis expressions, and
the count tuples that index characteristic classes.

A count tuple (a_1, ..., a_n) prescribes a monomial shape: a_1 variables to
the power 1, a_2 variables to the power 2 and so on.  The symmetric
polynomial with exactly those monomials, each with coefficient 1, has a
unique expression in the elementary symmetric functions; computing that
expression is what :func:`to_elementary` does.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError, StructureError
from .poly import GradedPoly, PolyRing

FORMAL_ROOTS = "formal-roots"
ELEMENTARY = "elementary"


@dataclass(frozen=True)
class AlphaTuple:
    """Exponent-count tuple; entry j counts variables raised to the power j.

    Trailing zeros are trimmed on construction, so (0, 1) and (0, 1, 0)
    denote the same class.  No ordering constraint is imposed on the
    counts.
    """

    counts: tuple[int, ...] = ()

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise StructureError(f"negative count in {counts!r}")
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    @classmethod
    def single_row(cls, degree: int) -> "AlphaTuple":
        """The tuple (0, ..., 0, 1) of the given weighted degree."""
        if degree < 0:
            raise StructureError("degree must be >= 0")
        if degree == 0:
            return cls(())
        return cls((0,) * (degree - 1) + (1,))

    @classmethod
    def from_partition(cls, parts) -> "AlphaTuple":
        parts = [int(p) for p in parts]
        if any(p < 1 for p in parts):
            raise StructureError("partition parts must be >= 1")
        counts = [0] * (max(parts) if parts else 0)
        for p in parts:
            counts[p - 1] += 1
        return cls(tuple(counts))

    @classmethod
    def parse(cls, text: str) -> "AlphaTuple":
        """Parse a comma-separated count list such as "0,1"."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))

    @property
    def weighted_degree(self) -> int:
        return sum(j * c for j, c in enumerate(self.counts, start=1))

    @property
    def parts_total(self) -> int:
        return sum(self.counts)

    def partition(self) -> tuple[int, ...]:
        """The exponent multiset as a weakly decreasing tuple."""
        out = []
        for j in range(len(self.counts), 0, -1):
            out.extend([j] * self.counts[j - 1])
        return tuple(out)

    def is_single_row(self) -> bool:
        return sum(self.counts) == 1 and self.counts[-1] == 1

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.counts) + ")"


@dataclass(frozen=True)
class SymPoly:
    """A symmetric polynomial tagged with the basis its body is written in.

    In the formal-roots basis the body lives in weight-1 root variables;
    in the elementary basis variable j carries weight j.
    """

    basis: str
    body: GradedPoly

    def __post_init__(self):
        if self.basis not in (FORMAL_ROOTS, ELEMENTARY):
            raise StructureError(f"unknown basis {self.basis!r}")


def _partitions(m, cap=None):
    if m == 0:
        yield ()
        return
    if cap is None or cap > m:
        cap = m
    for first in range(cap, 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def enumerate_alpha(m: int) -> list[AlphaTuple]:
    """All count tuples of weighted degree m, in descending lex order.

    The number of tuples equals the number of integer partitions of m.
    """
    if m < 0:
        raise StructureError("weighted degree must be >= 0")
    alphas = [AlphaTuple.from_partition(p) for p in _partitions(m)]
    alphas.sort(key=lambda a: a.counts + (0,) * (m - len(a.counts)), reverse=True)
    return alphas


@lru_cache(maxsize=None)
def _root_ring(z, truncation):
    return PolyRing(tuple(f"t{i}" for i in range(1, z + 1)), None, truncation)


@lru_cache(maxsize=None)
def _elementary_ring(m):
    return PolyRing(
        tuple(f"e{j}" for j in range(1, m + 1)), tuple(range(1, m + 1)), m
    )


def _arrangements(values, z):
    """Distinct ways to assign the exponent multiset to z positions."""
    counts = Counter(values)
    counts[0] += z - len(values)
    distinct = sorted(counts)

    def rec(length):
        if length == 0:
            yield ()
            return
        for v in distinct:
            if counts[v]:
                counts[v] -= 1
                for rest in rec(length - 1):
                    yield (v,) + rest
                counts[v] += 1

    return rec(z)


@lru_cache(maxsize=None)
def _monomial_symmetric_cached(counts, z):
    alpha = AlphaTuple(counts)
    m = alpha.weighted_degree
    ring = _root_ring(z, m)
    terms = {exps: 1 for exps in _arrangements(alpha.partition(), z)}
    return SymPoly(FORMAL_ROOTS, ring.from_terms(terms))


def monomial_symmetric(alpha: AlphaTuple, z: int) -> SymPoly:
    """The symmetric polynomial of the prescribed monomial shape in z roots.

    Each distinct monomial appears with coefficient exactly 1; z must be at
    least the total number of prescribed exponents.
    """
    if z < alpha.parts_total:
        raise StructureError(
            f"need at least {alpha.parts_total} roots for {alpha}, got {z}"
        )
    return _monomial_symmetric_cached(alpha.counts, z)


# -- raw-dict helpers for the basis change ------------------------------
#
# The elimination below works on plain {exponent tuple: int} dicts instead
# of GradedPoly: the polynomials are homogeneous with integer coefficients
# and the inner loops dominate the cost of every m <= 8 sweep.


def _dict_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(key, 0) + ca * cb
            if s:
                out[key] = s
            else:
                del out[key]
    return out


@lru_cache(maxsize=None)
def _elementary_monomials(j, z):
    one_hot = {}
    for combo in itertools.combinations(range(z), j):
        exps = [0] * z
        for i in combo:
            exps[i] = 1
        one_hot[tuple(exps)] = 1
    return one_hot


@lru_cache(maxsize=None)
def _eprod_expansion(mu, z):
    """Expansion over z roots of the product of elementary functions e_j^mu_j."""
    if not any(mu):
        return {(0,) * z: 1}
    j = next(i for i, e in enumerate(mu) if e)
    smaller = mu[:j] + (mu[j] - 1,) + mu[j + 1 :]
    if j + 1 > z:
        return {}
    return _dict_mul(_eprod_expansion(smaller, z), _elementary_monomials(j + 1, z))


def _trim(exps):
    exps = tuple(exps)
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


def _eliminate(alpha):
    """Leading-term elimination of the monomial shape against e-products.

    Repeatedly subtracts the elementary-function product whose expansion
    has the same lex-leading monomial; the leading term strictly decreases,
    so the loop terminates with the elementary-basis coefficients.
    """
    m = alpha.weighted_degree
    z = m
    target = {exps: 1 for exps in _arrangements(alpha.partition(), z)}
    result = {}
    prev_lead = None
    while target:
        lam = max(target)
        if any(lam[i] < lam[i + 1] for i in range(z - 1)):
            raise ConsistencyError(f"remainder lost symmetry at {lam}")
        if prev_lead is not None and lam >= prev_lead:
            raise ConsistencyError(f"leading term failed to decrease at {lam}")
        prev_lead = lam
        mu = tuple(lam[i] - lam[i + 1] for i in range(z - 1)) + (lam[-1],)
        c = target[lam]
        mu_key = _trim(mu)
        result[mu_key] = result.get(mu_key, 0) + c
        for exps, q in _eprod_expansion(mu_key, z).items():
            s = target.get(exps, 0) - c * q
            if s:
                target[exps] = s
            else:
                target.pop(exps, None)
    return {k + (0,) * (m - len(k)): v for k, v in result.items() if v}


def _power_sum_elementary(i):
    """The i-th power sum in elementary functions via the Newton recurrence.

    p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-2} e_{k-1} p_1
          + (-1)^{k-1} k e_k
    """
    ps = [None] * (i + 1)
    for k in range(1, i + 1):
        acc = {}
        for j in range(1, k):
            sign = 1 if j % 2 else -1
            for exps, c in ps[k - j].items():
                key = exps[:j - 1] + (exps[j - 1] + 1,) + exps[j:]
                s = acc.get(key, 0) + sign * c
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        ek = (0,) * (k - 1) + (1,) + (0,) * (i - k)
        s = acc.get(ek, 0) + (k if k % 2 else -k)
        if s:
            acc[ek] = s
        else:
            acc.pop(ek, None)
        ps[k] = acc
    return ps[i]


_F_ALPHA_CACHE: dict[tuple[int, ...], SymPoly] = {}


def to_elementary(alpha: AlphaTuple) -> SymPoly:
    """Express the monomial shape of alpha in the elementary basis.

    The result f satisfies f(e_1(t), ..., e_n(t)) = monomial_symmetric(alpha, z)
    for every admissible number of roots z.  Single-row tuples use the
    Newton power-sum recurrence (the generic elimination is hopeless at the
    degrees the quadric chain needs); everything else goes through
    leading-term elimination.
    """
    cached = _F_ALPHA_CACHE.get(alpha.counts)
    if cached is not None:
        return cached
    m = alpha.weighted_degree
    ring = _elementary_ring(m)
    if m == 0:
        body = ring.one()
    elif alpha.is_single_row():
        body = ring.from_terms(_power_sum_elementary(m))
    else:
        body = ring.from_terms(_eliminate(alpha))
    result = SymPoly(ELEMENTARY, body)
    _F_ALPHA_CACHE[alpha.counts] = result
    return result


def elementary_expansion(f: SymPoly, z: int) -> GradedPoly:
    """Substitute the elementary functions of z roots into an elementary-basis
    polynomial, landing back in the formal-roots ring.

    Elementary functions of index above z vanish, matching their behaviour
    in z variables.
    """
    if f.basis != ELEMENTARY:
        raise StructureError("expected an elementary-basis polynomial")
    m = f.body.ring.truncation
    ring = _root_ring(z, m)
    total = {}
    for exps, coeff in f.body.items():
        expansion = _eprod_expansion(_trim(exps), z)
        for e, q in expansion.items():
            s = total.get(e, 0) + coeff * q
            if s:
                total[e] = s
            else:
                del total[e]
    return ring.from_terms(total)
