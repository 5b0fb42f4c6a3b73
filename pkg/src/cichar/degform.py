"""Degree-formula verdict machinery: the obstruction ideal, the congruence
check between t-invariants of source and target, and the quadric chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charnum import Residue, hypersurface_s_top, is_prime, s_number, t_number
from .chow import AmbientSpace, VarietyDescriptor, degree_of_class
from .errors import PropertyViolation, StructureError
from .symfunc import AlphaTuple

HOLDS = "holds"
HOLDS_TRIVIALLY = "holds-trivially"
VIOLATED = "violated"

MORPHISM_IMPOSSIBLE = "morphism-impossible"
REVERSE_MAP = "reverse-map"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ObstructionIdeal:
    """The ideal of Z/q generated by the degrees of closed points.

    Z/q is a field, so the ideal is either everything (some point degree
    is prime to q) or zero.
    """

    modulus: int
    full: bool

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise StructureError(f"modulus {self.modulus} is not prime")

    def __str__(self):
        return f"I = {'(1)' if self.full else '(0)'} in Z/{self.modulus}"


def obstruction_ideal(point_degrees, q: int) -> ObstructionIdeal:
    """Full exactly when some supplied point degree is not divisible by q.

    Closed points cannot be enumerated from multidegree data alone, so the
    generating degrees are caller-supplied; an empty list gives the zero
    ideal.
    """
    if not is_prime(q):
        raise StructureError(f"modulus {q} is not prime")
    degrees = [int(d) for d in point_degrees]
    if any(d < 1 for d in degrees):
        raise StructureError("point degrees must be >= 1")
    return ObstructionIdeal(q, any(d % q for d in degrees))


def preset_point_degrees(name: str) -> list[int]:
    """Named presets for the generating point degrees.

    "algebraically-closed" has a rational point; "anisotropic-quadric"
    models a quadric with no odd-degree point over the base field (q = 2).
    """
    presets = {
        "algebraically-closed": [1],
        "anisotropic-quadric": [2],
    }
    if name not in presets:
        raise StructureError(
            f"unknown preset {name!r}; choose from {sorted(presets)}"
        )
    return presets[name]


@dataclass(frozen=True)
class DegreeFormulaVerdict:
    """Outcome of comparing t(Y) with deg(f) * t(X) in (Z/q)/I(X)."""

    lhs: Residue
    rhs: Residue
    ideal: ObstructionIdeal
    status: str

    def to_json(self) -> dict:
        return {
            "lhs": self.lhs.value,
            "rhs": self.rhs.value,
            "q": self.lhs.modulus,
            "ideal_full": self.ideal.full,
            "status": self.status,
        }


def degree_formula_check(
    Y: VarietyDescriptor,
    X_t: Residue,
    deg_f: int,
    ideal: ObstructionIdeal,
    q: int,
    t: int,
) -> DegreeFormulaVerdict:
    """Check t(Y) = deg(f) * t(X) in (Z/q)/I(X).

    A full ideal collapses the quotient ring to zero, and so does a source
    dimension other than q^t - 1 (both invariants vanish there); either
    way the congruence holds trivially.  A genuine mismatch with zero
    ideal is reported as violated: no morphism with those invariants can
    exist unless X has a point of degree prime to q.
    """
    if not is_prime(q):
        raise StructureError(f"modulus {q} is not prime")
    if ideal.modulus != q:
        raise StructureError(
            f"ideal modulus {ideal.modulus} does not match q = {q}"
        )
    if X_t.modulus != q:
        raise StructureError(
            f"target residue modulus {X_t.modulus} does not match q = {q}"
        )
    lhs = t_number(Y, q, t)
    rhs = Residue.reduce(deg_f * X_t.value, q)
    if Y.dimension != q**t - 1:
        status = HOLDS_TRIVIALLY
    elif ideal.full:
        status = HOLDS_TRIVIALLY
    elif lhs == rhs:
        status = HOLDS
    else:
        status = VIOLATED
    return DegreeFormulaVerdict(lhs, rhs, ideal, status)


QUADRIC_MAX_M = 5


@dataclass(frozen=True)
class QuadricComputation:
    """Intermediate values of the quadric chain in P^{2^m}."""

    m: int
    descriptor: VarietyDescriptor
    hyperplane_section_degree: int
    s_top: int
    closed_form: int
    t: Residue

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "descriptor": self.descriptor.to_json(),
            "hyperplane_section_degree": self.hyperplane_section_degree,
            "s_top": str(self.s_top),
            "closed_form": str(self.closed_form),
            "t": self.t.value,
            "q": 2,
        }


def quadric_chain(m: int) -> QuadricComputation:
    """Run the whole symbolic pipeline on the quadric of dimension 2^m - 1.

    Exposes the hyperplane-section degree, the top single-row number with
    its closed form 2(2^m + 1) - 2^{2^m}, and the resulting mod-2
    invariant.
    """
    if m < 1:
        raise StructureError("m must be >= 1")
    if m > QUADRIC_MAX_M:
        raise StructureError(
            f"m = {m} exceeds the desk-scale bound {QUADRIC_MAX_M}"
        )
    big_n = 2**m
    X = VarietyDescriptor(AmbientSpace((big_n,)), ((2,),))
    n = big_n - 1
    ring = X.chow_ring()
    hyper_power = ring.hyperplane(0) ** n
    section = degree_of_class(hyper_power, X)
    if section.denominator != 1:
        raise PropertyViolation("hyperplane section degree is not an integer")
    s_top = s_number(X, AlphaTuple.single_row(n))
    closed = hypersurface_s_top(n, 2)
    t = t_number(X, 2, m)
    return QuadricComputation(m, X, int(section), s_top, closed, t)


def quadric_t(m: int) -> Residue:
    """The mod-2 invariant of the dimension 2^m - 1 quadric; always 1.

    Anything other than 1 mod 2 falsifies the computation chain and is
    raised as a violation.
    """
    chain = quadric_chain(m)
    if chain.t.value != 1:
        raise PropertyViolation(
            f"quadric invariant is {chain.t}, expected 1 (mod 2)",
            value=chain.s_top,
        )
    return chain.t


@dataclass(frozen=True)
class HoffmannVerdict:
    """Dimension-comparison verdict for a rational map from a quadric."""

    dim_quadric: int
    dim_target: int
    m: int
    threshold: int
    status: str
    message: str

    def to_json(self) -> dict:
        return {
            "dim_quadric": self.dim_quadric,
            "dim_target": self.dim_target,
            "m": self.m,
            "threshold": self.threshold,
            "status": self.status,
            "message": self.message,
        }


def hoffmann_verdict(
    dim_quadric: int, dim_target: int, ideal_target: ObstructionIdeal
) -> HoffmannVerdict:
    """Numeric skeleton of the quadric comparison at q = 2.

    With m maximal such that 2^m - 1 <= dim(Q): a target with zero ideal
    and dimension below 2^m - 1 admits no rational map from Q (pad the
    target with projective factors and the degree formula forces a
    contradiction); equality of dimensions reverses the map through
    Springer's theorem on odd-degree isotropy.  A full ideal makes the
    obstruction vanish.
    """
    if dim_quadric < 1:
        raise StructureError("quadric dimension must be >= 1")
    if dim_target < 0:
        raise StructureError("target dimension must be >= 0")
    if ideal_target.modulus != 2:
        raise StructureError("this verdict works at q = 2")
    m = (dim_quadric + 1).bit_length() - 1
    threshold = 2**m - 1
    if ideal_target.full:
        status = INCONCLUSIVE
        message = (
            "target has a point of odd degree; the obstruction vanishes"
        )
    elif dim_target < threshold:
        status = MORPHISM_IMPOSSIBLE
        message = (
            f"no rational map from the quadric can exist: target dimension "
            f"{dim_target} < {threshold} and every point degree is even"
        )
    elif dim_target == threshold:
        status = REVERSE_MAP
        message = (
            "if a rational map exists, a rational map back to the quadric "
            "exists as well (odd-degree isotropy descends)"
        )
    else:
        status = INCONCLUSIVE
        message = "target dimension exceeds the critical dimension; no verdict"
    return HoffmannVerdict(dim_quadric, dim_target, m, threshold, status, message)
