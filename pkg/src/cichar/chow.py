"""Chow rings of products of projective spaces, complete-intersection
descriptors, and the degree (pushforward-to-point) pairing.

The ring of P^{n_1} x ... x P^{n_k} is the rational polynomial ring on the
hyperplane classes h_1, ..., h_k subject to h_i^{n_i + 1} = 0.  A complete
intersection is carried as its ambient data; restriction and pushforward
happen at degree time by multiplying with the hypersurface classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, StructureError
from .poly import GradedPoly, PolyRing, poly_invert_unit


@dataclass(frozen=True)
class AmbientSpace:
    """A product of projective spaces, recorded by the list of dimensions."""

    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if not factors:
            raise StructureError("ambient needs at least one factor")
        if any(n < 1 for n in factors):
            raise StructureError("each projective factor must have dimension >= 1")
        object.__setattr__(self, "factors", factors)

    @property
    def total(self) -> int:
        return sum(self.factors)

    def __str__(self):
        return " x ".join(f"P^{n}" for n in self.factors)


class ChowRing:
    """Ring handle for :class:`ChowClass` arithmetic over a fixed ambient."""

    def __init__(self, ambient: AmbientSpace):
        self.ambient = ambient
        k = len(ambient.factors)
        names = ("h",) if k == 1 else tuple(f"h{i}" for i in range(1, k + 1))
        self.poly_ring = PolyRing(names, None, ambient.total)

    def __eq__(self, other):
        return isinstance(other, ChowRing) and self.ambient == other.ambient

    def __hash__(self):
        return hash(self.ambient)

    def __repr__(self):
        return f"ChowRing({self.ambient})"

    def _reduce(self, poly: GradedPoly) -> GradedPoly:
        """Apply the relations h_i^{n_i + 1} = 0."""
        caps = self.ambient.factors
        kept = {
            e: c
            for e, c in poly.items()
            if all(x <= n for x, n in zip(e, caps))
        }
        return self.poly_ring.from_terms(kept)

    def from_poly(self, poly: GradedPoly) -> "ChowClass":
        if poly.ring != self.poly_ring:
            raise StructureError("polynomial from a different ring")
        return ChowClass(self, self._reduce(poly))

    def from_terms(self, terms) -> "ChowClass":
        return self.from_poly(self.poly_ring.from_terms(terms))

    def zero(self) -> "ChowClass":
        return ChowClass(self, self.poly_ring.zero())

    def one(self) -> "ChowClass":
        return ChowClass(self, self.poly_ring.one())

    def constant(self, c) -> "ChowClass":
        return ChowClass(self, self.poly_ring.constant(c))

    def hyperplane(self, factor: int = 0) -> "ChowClass":
        """The hyperplane class of the given projective factor."""
        return ChowClass(self, self.poly_ring.gen(factor))

    def top_exponents(self) -> tuple[int, ...]:
        return self.ambient.factors


@lru_cache(maxsize=None)
def ambient_ring(ambient: AmbientSpace) -> ChowRing:
    """The (cached) Chow ring of a product of projective spaces."""
    return ChowRing(ambient)


class ChowClass:
    """A cycle class with rational coefficients on a fixed ambient.

    Immutable; multiplication enforces the nilpotency relations.
    """

    __slots__ = ("ring", "poly")

    def __init__(self, ring: ChowRing, poly: GradedPoly):
        self.ring = ring
        self.poly = poly

    @property
    def ambient(self) -> AmbientSpace:
        return self.ring.ambient

    def _check_same(self, other):
        if self.ring != other.ring:
            raise StructureError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}"
            )

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_same(other)
        return ChowClass(self.ring, self.poly + other.poly)

    def __sub__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_same(other)
        return ChowClass(self.ring, self.poly - other.poly)

    def __neg__(self):
        return ChowClass(self.ring, -self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ring, self.poly * other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_same(other)
        return self.ring.from_poly(self.poly * other.poly)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ring, self.poly * other)
        return NotImplemented

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise StructureError("negative powers need invert_unit")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert_unit(self) -> "ChowClass":
        return self.ring.from_poly(poly_invert_unit(self.poly))

    def __eq__(self, other):
        return (
            isinstance(other, ChowClass)
            and self.ring == other.ring
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.ring, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def coefficient(self, exps) -> Fraction:
        return self.poly.coefficient(exps)

    def constant_term(self) -> Fraction:
        return self.poly.constant_term()

    def top_coefficient(self) -> Fraction:
        """Coefficient of the point class h_1^{n_1} ... h_k^{n_k}."""
        return self.poly.coefficient(self.ring.top_exponents())

    def homogeneous_part(self, degree: int) -> "ChowClass":
        return ChowClass(self.ring, self.poly.homogeneous_part(degree))

    def is_homogeneous_of(self, degree: int) -> bool:
        return self.poly.is_homogeneous_of(degree)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"ChowClass({self.poly} on {self.ambient})"


@dataclass(frozen=True)
class VarietyDescriptor:
    """A complete intersection of given multidegrees in a product of
    projective spaces.

    Smoothness and genericity of the defining hypersurfaces are the
    caller's responsibility; only the multidegree data enters any
    computation here.
    """

    ambient: AmbientSpace
    multidegrees: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        mds = tuple(tuple(int(d) for d in row) for row in self.multidegrees)
        k = len(self.ambient.factors)
        for row in mds:
            if len(row) != k:
                raise StructureError(
                    f"multidegree {row} must have {k} entries for {self.ambient}"
                )
            if any(d < 0 for d in row):
                raise StructureError(f"negative degree in {row}")
            if not any(row):
                raise StructureError("each multidegree vector must be nonzero")
        if self.ambient.total - len(mds) < 0:
            raise StructureError("more hypersurfaces than ambient dimensions")
        object.__setattr__(self, "multidegrees", mds)

    @property
    def dimension(self) -> int:
        return self.ambient.total - len(self.multidegrees)

    def chow_ring(self) -> ChowRing:
        return ambient_ring(self.ambient)

    def hypersurface_classes(self) -> list[ChowClass]:
        ring = self.chow_ring()
        hs = ring.poly_ring.gens()
        return [
            ring.from_poly(sum((d * h for d, h in zip(row, hs)), ring.poly_ring.zero()))
            for row in self.multidegrees
        ]

    def sort_key(self):
        return (self.ambient.factors, self.multidegrees)

    def to_json(self) -> dict:
        return {
            "ambient": list(self.ambient.factors),
            "multidegrees": [list(row) for row in self.multidegrees],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VarietyDescriptor":
        try:
            ambient = AmbientSpace(tuple(data["ambient"]))
            mds = tuple(tuple(row) for row in data.get("multidegrees", ()))
        except (KeyError, TypeError) as exc:
            raise StructureError(f"bad descriptor JSON: {exc}") from exc
        return cls(ambient, mds)

    def __str__(self):
        if not self.multidegrees:
            return str(self.ambient)
        degs = "; ".join(
            ",".join(str(d) for d in row) for row in self.multidegrees
        )
        return f"{self.ambient} cut by degrees [{degs}]"


def degree_of_class(c: ChowClass, X: VarietyDescriptor) -> Fraction:
    """Degree of a cycle class of pure codimension dim(X) restricted to X.

    Multiplies by the hypersurface classes of X and reads off the
    coefficient of the ambient point class, which is the pushforward to a
    point of the restriction.
    """
    if c.ambient != X.ambient:
        raise StructureError(
            f"class lives on {c.ambient}, variety on {X.ambient}"
        )
    if not c.is_homogeneous_of(X.dimension):
        raise StructureError(
            f"class is not of pure codimension {X.dimension}"
        )
    acc = c
    for h in X.hypersurface_classes():
        acc = acc * h
    return acc.top_coefficient()


def integer_degree(c: ChowClass, X: VarietyDescriptor) -> int:
    """degree_of_class, asserted to be an integer."""
    val = degree_of_class(c, X)
    if val.denominator != 1:
        raise ConsistencyError(f"degree {val} is not an integer")
    return int(val)


@dataclass(frozen=True)
class ZeroCycle:
    """Formal combination of closed points: (multiplicity, extension degree)."""

    points: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pts = tuple((int(m), int(d)) for m, d in self.points)
        if any(d < 1 for _, d in pts):
            raise StructureError("extension degrees must be >= 1")
        object.__setattr__(self, "points", pts)


def zero_cycle_degree(z: ZeroCycle) -> int:
    """Sum of multiplicity times field-extension degree."""
    return sum(m * d for m, d in z.points)
