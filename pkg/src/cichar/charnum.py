"""The characteristic-number pipeline: s-numbers, the Hurewicz vector, the
t-invariant, the lambda family for surfaces, and divisibility sweeps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bundles import opposite, s_alpha_class, tangent_class
from .chow import AmbientSpace, VarietyDescriptor, degree_of_class
from .errors import ConsistencyError, PropertyViolation, StructureError
from .symfunc import AlphaTuple, enumerate_alpha


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _require_prime(q):
    if not is_prime(q):
        raise StructureError(f"modulus {q} is not prime")


@dataclass(frozen=True)
class Residue:
    """An integer reduced into [0, q) for a prime modulus q."""

    value: int
    modulus: int

    def __post_init__(self):
        _require_prime(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise StructureError(
                f"residue {self.value} out of range for modulus {self.modulus}"
            )

    @classmethod
    def reduce(cls, value: int, modulus: int) -> "Residue":
        _require_prime(modulus)
        return cls(value % modulus, modulus)

    def signed(self) -> int:
        """Representative in (-q/2, q/2], for human-readable output."""
        if self.value > self.modulus // 2:
            return self.value - self.modulus
        return self.value

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def _integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {value}")
    return int(value)


def s_number(X: VarietyDescriptor, alpha: AlphaTuple) -> int:
    """Degree of the alpha characteristic class of the tangent bundle."""
    if alpha.weighted_degree != X.dimension:
        raise StructureError(
            f"alpha has weighted degree {alpha.weighted_degree}, "
            f"variety has dimension {X.dimension}"
        )
    cls = s_alpha_class(tangent_class(X), alpha)
    return _integer(degree_of_class(cls, X), f"s_{alpha}({X})")


def hypersurface_s_top(n: int, d: int) -> int:
    """Closed form for the top single-row number of a degree-d hypersurface
    in P^{n+1}: ((n + 2) - d^n) * d.

    Must agree with :func:`s_number` on the matching descriptor; the test
    suite enforces that.
    """
    if n < 1 or d < 1:
        raise StructureError("need n >= 1 and d >= 1")
    return ((n + 2) - d**n) * d


def variety_degree(X: VarietyDescriptor) -> int:
    """Degree of a zero-dimensional complete intersection."""
    if X.dimension != 0:
        raise StructureError("degree in this sense needs a 0-dimensional variety")
    return _integer(degree_of_class(X.chow_ring().one(), X), f"deg({X})")


@dataclass(frozen=True)
class HurewiczVector:
    """Integer coefficients deg s_alpha(-T_X) over all alpha of the
    variety's dimension."""

    dimension: int
    entries: tuple[tuple[AlphaTuple, int], ...]

    def as_dict(self) -> dict[AlphaTuple, int]:
        return dict(self.entries)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "entries": [
                {"alpha": list(a.counts), "value": str(v)} for a, v in self.entries
            ],
        }


def hurewicz_vector(X: VarietyDescriptor) -> HurewiczVector:
    """All degrees deg s_alpha(-T_X) in dimension dim(X)."""
    n = X.dimension
    minus_t = opposite(tangent_class(X))
    entries = []
    for alpha in enumerate_alpha(n):
        val = degree_of_class(s_alpha_class(minus_t, alpha), X)
        entries.append((alpha, _integer(val, f"Hurewicz entry {alpha}")))
    return HurewiczVector(n, tuple(entries))


def t_number(X: VarietyDescriptor, q: int, t: int) -> Residue:
    """The mod-q invariant: deg(X) in dimension 0, the exactly divided top
    single-row number in dimension q^t - 1, zero otherwise.

    Raises :class:`PropertyViolation` if the middle case is not divisible
    by q, since that would falsify the divisibility the construction
    guarantees.
    """
    _require_prime(q)
    if t < 1:
        raise StructureError("t must be >= 1")
    n = X.dimension
    if n == 0:
        return Residue.reduce(variety_degree(X), q)
    if n == q**t - 1:
        s = s_number(X, AlphaTuple.single_row(n))
        if s % q:
            raise PropertyViolation(
                f"{q} does not divide deg s_{n}(T_X) = {s} for {X}", value=s
            )
        return Residue.reduce(-(s // q), q)
    return Residue.reduce(0, q)


def _surface_invariants(X: VarietyDescriptor) -> tuple[int, int]:
    """S = deg s_(0,1)(T_X) and C = deg(s_(1)^2(T_X) - s_(2)(T_X))."""
    if X.dimension != 2:
        raise StructureError(f"{X} is not a surface")
    T = tangent_class(X)
    s1 = s_alpha_class(T, AlphaTuple((1,)))
    s2 = s_alpha_class(T, AlphaTuple((2,)))
    p2 = s_alpha_class(T, AlphaTuple((0, 1)))
    S = _integer(degree_of_class(p2, X), "deg s_(0,1)")
    C = _integer(degree_of_class(s1 * s1 - s2, X), "deg(s_(1)^2 - s_(2))")
    return S, C


def surface_e1_value(X: VarietyDescriptor, lam: int) -> Fraction:
    """Exact rational value of the lambda-parameterized surface expression
    -(1/3 - lam/2) * S + (lam/4) * C."""
    S, C = _surface_invariants(X)
    return -(Fraction(1, 3) - Fraction(lam, 2)) * S + Fraction(lam, 4) * C


def surface_e1_number(X: VarietyDescriptor, lam: int) -> Residue:
    """The surface expression reduced mod 3, after asserting integrality."""
    value = surface_e1_value(X, lam)
    if value.denominator != 1:
        raise PropertyViolation(
            f"surface expression is not an integer for {X}, lambda={lam}: {value}",
            value=value,
        )
    return Residue.reduce(int(value), 3)


@dataclass(frozen=True)
class LambdaEntry:
    lam: int
    value: Fraction
    integral: bool

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "value": str(self.value),
            "integral": self.integral,
        }


@dataclass(frozen=True)
class LambdaReport:
    descriptor: VarietyDescriptor
    s_invariant: int
    combo_invariant: int
    entries: tuple[LambdaEntry, ...]
    s_divisible_by_3: bool
    combo_divisible_by_4: bool

    @property
    def all_integral(self) -> bool:
        return all(e.integral for e in self.entries)

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor.to_json(),
            "S": str(self.s_invariant),
            "C": str(self.combo_invariant),
            "entries": [e.to_json() for e in self.entries],
            "3_divides_S": self.s_divisible_by_3,
            "4_divides_2S_plus_C": self.combo_divisible_by_4,
            "pass": self.all_integral,
        }


def lambda_integrality(X: VarietyDescriptor, lam_set) -> LambdaReport:
    """Evaluate the surface expression for each lambda and flag integrality.

    The expression equals -S/3 + lam * (2S + C)/4, so it is integral for
    every integer lambda exactly when 3 | S and 4 | (2S + C); both
    divisibilities are reported alongside the per-lambda values.
    """
    S, C = _surface_invariants(X)
    entries = []
    for lam in lam_set:
        value = -(Fraction(1, 3) - Fraction(lam, 2)) * S + Fraction(lam, 4) * C
        entries.append(LambdaEntry(lam, value, value.denominator == 1))
    return LambdaReport(
        descriptor=X,
        s_invariant=S,
        combo_invariant=C,
        entries=tuple(entries),
        s_divisible_by_3=S % 3 == 0,
        combo_divisible_by_4=(2 * S + C) % 4 == 0,
    )


@dataclass(frozen=True)
class SweepEntry:
    descriptor: VarietyDescriptor
    alpha: AlphaTuple
    value: int
    modulus: int

    @property
    def residue(self) -> int:
        return self.value % self.modulus

    @property
    def divisible(self) -> bool:
        return self.residue == 0

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor.to_json(),
            "alpha": list(self.alpha.counts),
            "value": str(self.value),
            "modulus": self.modulus,
            "residue": self.residue,
            "pass": self.divisible,
        }


@dataclass(frozen=True)
class SweepReport:
    modulus: int
    power: int
    entries: tuple[SweepEntry, ...]

    @property
    def all_divisible(self) -> bool:
        return all(e.divisible for e in self.entries)

    def to_json(self) -> dict:
        return {
            "q": self.modulus,
            "t": self.power,
            "entries": [e.to_json() for e in self.entries],
            "pass": self.all_divisible,
        }


def divisibility_sweep(family, q: int, t: int) -> SweepReport:
    """Check q | deg s_{q^t-1}(T_X) over a family of dimension q^t - 1.

    Members are evaluated independently and reported sorted by descriptor,
    so the report is deterministic regardless of input order.
    """
    _require_prime(q)
    n = q**t - 1
    alpha = AlphaTuple.single_row(n)
    members = sorted(family, key=VarietyDescriptor.sort_key)
    for X in members:
        if X.dimension != n:
            raise StructureError(
                f"{X} has dimension {X.dimension}, sweep needs {n}"
            )
    entries = tuple(
        SweepEntry(X, alpha, s_number(X, alpha), q) for X in members
    )
    return SweepReport(q, t, entries)


def _multidegree_rows(k: int, max_entry: int):
    for row in itertools.product(range(max_entry + 1), repeat=k):
        if any(row):
            yield row


def complete_intersection_family(
    dimension: int,
    max_entry: int = 5,
    max_hypersurfaces: int = 2,
    ambients=None,
) -> list[VarietyDescriptor]:
    """All bounded-multidegree complete intersections of a given dimension.

    Defaults follow the desk-scale sweep family: every ambient P^N with
    N <= 6, at most two hypersurfaces, each multidegree entry at most 5.
    Hypersurface order is irrelevant, so multidegree rows are kept sorted
    and deduplicated.
    """
    if ambients is None:
        ambients = [(n,) for n in range(1, 7)]
    seen = set()
    out = []
    for factors in ambients:
        total = sum(factors)
        r = total - dimension
        if r < 0 or r > max_hypersurfaces:
            continue
        k = len(factors)
        rows = list(_multidegree_rows(k, max_entry))
        for combo in itertools.combinations_with_replacement(rows, r):
            X = VarietyDescriptor(AmbientSpace(tuple(factors)), tuple(sorted(combo)))
            key = X.sort_key()
            if key not in seen:
                seen.add(key)
                out.append(X)
    out.sort(key=VarietyDescriptor.sort_key)
    return out


def surface_family(
    max_entry: int = 5,
    max_hypersurfaces: int = 2,
    ambients=((3,), (4,), (2, 1)),
) -> list[VarietyDescriptor]:
    """The dimension-2 sweep family used by the mod-3 and lambda checks."""
    return complete_intersection_family(
        2, max_entry=max_entry, max_hypersurfaces=max_hypersurfaces, ambients=ambients
    )
