"""Chern-class calculus for virtual bundles over a complete intersection.

Total Chern classes are computed on the ambient product of projective
spaces and implicitly restricted; the pairing with the variety happens in
:func:`cichar.chow.degree_of_class`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chow import AmbientSpace, ChowClass, VarietyDescriptor, ambient_ring
from .errors import StructureError
from .symfunc import AlphaTuple, to_elementary


@dataclass(frozen=True)
class TotalChernClass:
    """A degree-truncated unit series plus a virtual rank.

    ``unit`` is 1 + c_1 + c_2 + ...; the rank may be negative for formal
    differences of bundles.
    """

    unit: ChowClass
    virtual_rank: int

    def __post_init__(self):
        if self.unit.constant_term() != 1:
            raise StructureError("total Chern class must have constant term 1")

    @property
    def ambient(self) -> AmbientSpace:
        return self.unit.ambient

    def chern(self, j: int) -> ChowClass:
        """The codimension-j component c_j."""
        return self.unit.homogeneous_part(j)


def line_bundle(first_chern: ChowClass) -> TotalChernClass:
    """Rank-1 bundle with the given first Chern class (zero gives the
    trivial line bundle)."""
    if not first_chern.is_homogeneous_of(1):
        raise StructureError("first Chern class must be homogeneous of codimension 1")
    one = first_chern.ring.one()
    return TotalChernClass(one + first_chern, 1)


def trivial_bundle(ambient: AmbientSpace, rank: int = 1) -> TotalChernClass:
    return TotalChernClass(ambient_ring(ambient).one(), rank)


def whitney(a: TotalChernClass, b: TotalChernClass) -> TotalChernClass:
    """Direct sum: units multiply, ranks add."""
    if a.ambient != b.ambient:
        raise StructureError(f"ambient mismatch: {a.ambient} vs {b.ambient}")
    return TotalChernClass(a.unit * b.unit, a.virtual_rank + b.virtual_rank)


def virtual_difference(a: TotalChernClass, b: TotalChernClass) -> TotalChernClass:
    """Formal difference a - b in the Grothendieck group."""
    if a.ambient != b.ambient:
        raise StructureError(f"ambient mismatch: {a.ambient} vs {b.ambient}")
    return TotalChernClass(
        a.unit * b.unit.invert_unit(), a.virtual_rank - b.virtual_rank
    )


def opposite(v: TotalChernClass) -> TotalChernClass:
    """The opposite virtual bundle -V."""
    return virtual_difference(trivial_bundle(v.ambient, 0), v)


def tangent_class(X: VarietyDescriptor) -> TotalChernClass:
    """Total Chern class of the tangent bundle of X, on the ambient.

    Combines the Euler sequence of each projective factor with the
    adjunction sequence of each defining hypersurface:
    prod (1 + h_i)^{n_i + 1} / prod (1 + sum_i d_{r,i} h_i).
    """
    ring = X.chow_ring()
    unit = ring.one()
    for i, n in enumerate(X.ambient.factors):
        unit = unit * (ring.one() + ring.hyperplane(i)) ** (n + 1)
    for h in X.hypersurface_classes():
        unit = unit * (ring.one() + h).invert_unit()
    return TotalChernClass(unit, X.dimension)


def _power_sum_class(v: TotalChernClass, degree: int) -> ChowClass:
    # Newton recurrence run directly on the Chern classes; equivalent to
    # substituting them into the elementary-basis power sum, but cheap
    # enough for the dimension-31 quadric chain.
    ring = ambient_ring(v.ambient)
    cs = [v.chern(j) for j in range(degree + 1)]
    ps: list[ChowClass] = [ring.constant(v.virtual_rank)]
    for k in range(1, degree + 1):
        acc = cs[k] * (k if k % 2 else -k)
        for j in range(1, k):
            term = cs[j] * ps[k - j]
            acc = acc + (term if j % 2 else -term)
        ps.append(acc)
    return ps[degree]


def s_alpha_class(v: TotalChernClass, alpha: AlphaTuple) -> ChowClass:
    """The characteristic class of shape alpha, evaluated on Chern classes.

    Substitutes c_j(V) for the j-th elementary variable in the
    elementary-basis expression of alpha's monomial shape.
    """
    m = alpha.weighted_degree
    ring = ambient_ring(v.ambient)
    if m > v.ambient.total:
        raise StructureError(
            f"weighted degree {m} exceeds ambient top degree {v.ambient.total}"
        )
    if m == 0:
        return ring.one()
    if alpha.is_single_row():
        return _power_sum_class(v, m)
    f = to_elementary(alpha)
    powers: dict[tuple[int, int], ChowClass] = {}

    def chern_power(j, e):
        got = powers.get((j, e))
        if got is None:
            got = v.chern(j) ** e
            powers[(j, e)] = got
        return got

    total = ring.zero()
    for exps, coeff in f.body.items():
        term = ring.constant(coeff)
        for j, e in enumerate(exps, start=1):
            if e:
                term = term * chern_power(j, e)
        total = total + term
    return total
