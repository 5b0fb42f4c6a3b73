"""Splitting-principle oracle: evaluates characteristic classes of explicit
sums of line bundles by direct monomial substitution.

This path deliberately bypasses the elementary-basis conversion so the two
pipelines can certify each other; it shares only the polynomial substrate
and the monomial enumeration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bundles import line_bundle, s_alpha_class, whitney
from .chow import AmbientSpace, ChowClass, ambient_ring
from .errors import StructureError
from .symfunc import AlphaTuple, enumerate_alpha, monomial_symmetric

DEFAULT_ROOT_COEFFS = (1, 2, 3, -1)


@dataclass(frozen=True)
class SplitBundle:
    """A bundle presented by its formal Chern roots (codimension-1 classes)."""

    roots: tuple[ChowClass, ...]

    def __post_init__(self):
        if not self.roots:
            raise StructureError("a split bundle needs at least one root")
        ambient = self.roots[0].ambient
        for r in self.roots:
            if r.ambient != ambient:
                raise StructureError("all roots must share one ambient")
            if not r.is_homogeneous_of(1):
                raise StructureError("roots must be homogeneous of codimension 1")

    @property
    def ambient(self) -> AmbientSpace:
        return self.roots[0].ambient

    def total_class(self):
        """Whitney product of the line bundles of the roots."""
        v = line_bundle(self.roots[0])
        for r in self.roots[1:]:
            v = whitney(v, line_bundle(r))
        return v


def s_alpha_split(bundle: SplitBundle, alpha: AlphaTuple) -> ChowClass:
    """Evaluate the monomial shape of alpha directly at the Chern roots."""
    z = len(bundle.roots)
    if z < alpha.parts_total:
        raise StructureError(
            f"{alpha} needs at least {alpha.parts_total} roots, bundle has {z}"
        )
    ring = ambient_ring(bundle.ambient)
    g = monomial_symmetric(alpha, z)
    if len(bundle.ambient.factors) == 1:
        return _substitute_univariate(ring, bundle.roots, g, alpha.weighted_degree)
    powers = [dict() for _ in range(z)]

    def root_power(i, e):
        got = powers[i].get(e)
        if got is None:
            got = bundle.roots[i] ** e
            powers[i][e] = got
        return got

    total = ring.zero()
    for exps, coeff in g.body.items():
        term = ring.constant(coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * root_power(i, e)
        total = total + term
    return total


def _substitute_univariate(ring, roots, g, degree):
    # On a single projective space every root is c * h, so the whole sum
    # collapses to scalar arithmetic times h^degree.  Integer scalars stay
    # plain ints; Fraction arithmetic is an order of magnitude slower.
    if degree > ring.ambient.total:
        return ring.zero()
    scalars = [
        int(c) if c.denominator == 1 else c
        for c in (r.coefficient((1,)) for r in roots)
    ]
    pow_tables = [[c**e for e in range(degree + 1)] for c in scalars]
    total = 0
    for exps, coeff in g.body.items():
        prod = int(coeff) if coeff.denominator == 1 else coeff
        for table, e in zip(pow_tables, exps):
            if e:
                prod *= table[e]
        total += prod
    exps = (degree,)
    return ring.from_terms({exps: total}) if total else ring.zero()


def oracle_equivalence(bundle: SplitBundle, alpha: AlphaTuple) -> bool:
    """True when direct substitution matches the elementary-basis pipeline."""
    direct = s_alpha_split(bundle, alpha)
    via_pipeline = s_alpha_class(bundle.total_class(), alpha)
    return direct == via_pipeline


@dataclass(frozen=True)
class SweepCase:
    alpha: AlphaTuple
    coefficients: tuple
    ok: bool

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha.counts),
            "roots": [str(c) for c in self.coefficients],
            "pass": self.ok,
        }


@dataclass(frozen=True)
class OracleReport:
    max_degree: int
    cases: tuple[SweepCase, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def checked(self) -> int:
        return len(self.cases)

    def to_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "checked": self.checked,
            "failures": [c.to_json() for c in self.cases if not c.ok],
            "pass": self.all_ok,
        }


def _scaled_hyperplane_bundles(coeff_lists, ambient):
    h = ambient_ring(ambient).hyperplane(0)
    for coeffs in coeff_lists:
        yield coeffs, SplitBundle(tuple(c * h for c in coeffs))


def _exhaustive_coeffs(root_coeffs, max_roots):
    import itertools

    for size in range(1, max_roots + 1):
        yield from itertools.combinations_with_replacement(root_coeffs, size)


def _sampled_coeffs(root_coeffs, size, samples, seed):
    rng = random.Random(seed)
    for _ in range(samples):
        yield tuple(rng.choice(root_coeffs) for _ in range(size))


def equivalence_sweep(
    max_degree: int = 8,
    root_coeffs=DEFAULT_ROOT_COEFFS,
    max_roots: int | None = None,
    samples: int | None = None,
    seed: int = 0,
) -> OracleReport:
    """Compare the two evaluation paths over a battery of split bundles.

    Exhaustive mode (samples=None) walks every multiset of up to max_roots
    root coefficients; sampled mode draws the given number of random
    bundles with exactly max_roots roots.  Bundles with fewer roots than a
    shape requires are skipped for that shape.
    """
    if max_roots is None:
        max_roots = max_degree
    ambient = AmbientSpace((max(max_degree, 1),))
    alphas = [
        alpha for m in range(max_degree + 1) for alpha in enumerate_alpha(m)
    ]
    if samples is None:
        coeff_lists = _exhaustive_coeffs(tuple(root_coeffs), max_roots)
    else:
        coeff_lists = _sampled_coeffs(tuple(root_coeffs), max_roots, samples, seed)
    cases = []
    for coeffs, bundle in _scaled_hyperplane_bundles(coeff_lists, ambient):
        total = bundle.total_class()
        for alpha in alphas:
            if alpha.parts_total > len(coeffs):
                continue
            ok = s_alpha_split(bundle, alpha) == s_alpha_class(total, alpha)
            cases.append(SweepCase(alpha, coeffs, ok))
    return OracleReport(max_degree, tuple(cases))
