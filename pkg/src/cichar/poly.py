"""Exact graded polynomial arithmetic truncated at a fixed weighted degree.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``);
nothing in this module ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonUnitError, StructureError


class PolyRing:
    """Polynomial ring with named, weighted variables and a degree cutoff.

    Every operation discards terms of weighted degree above ``truncation``,
    so the ring behaves as a quotient and truncation commutes with the
    arithmetic.
    """

    __slots__ = ("names", "weights", "truncation")

    def __init__(self, names, weights=None, truncation=0):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise StructureError("variable names must be distinct")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise StructureError("need exactly one weight per variable")
        if any(w < 1 for w in weights):
            raise StructureError("variable weights must be >= 1")
        truncation = int(truncation)
        if truncation < 0:
            raise StructureError("truncation degree must be >= 0")
        self.names = names
        self.weights = weights
        self.truncation = truncation

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
            and self.truncation == other.truncation
        )

    def __hash__(self):
        return hash((self.names, self.weights, self.truncation))

    def __repr__(self):
        vs = ", ".join(
            f"{n}:{w}" if w != 1 else n for n, w in zip(self.names, self.weights)
        )
        return f"PolyRing([{vs}], truncation={self.truncation})"

    @property
    def nvars(self):
        return len(self.names)

    def weighted_degree(self, exps):
        return sum(w * e for w, e in zip(self.weights, exps))

    def from_terms(self, terms) -> "GradedPoly":
        """Build an element from an exponent-vector -> coefficient mapping."""
        return GradedPoly(self, terms)

    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {}, _clean=True)

    def one(self) -> "GradedPoly":
        return self.constant(1)

    def constant(self, c) -> "GradedPoly":
        return GradedPoly(self, {(0,) * self.nvars: c})

    def monomial(self, exps, coeff=1) -> "GradedPoly":
        return GradedPoly(self, {tuple(exps): coeff})

    def gen(self, which=0) -> "GradedPoly":
        """The variable given by index or name, as an element."""
        if isinstance(which, str):
            which = self.names.index(which)
        exps = tuple(1 if i == which else 0 for i in range(self.nvars))
        return self.monomial(exps)

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))


class GradedPoly:
    """Immutable sparse polynomial in a :class:`PolyRing`.

    Terms map exponent vectors to nonzero ``Fraction`` coefficients; no
    stored term exceeds the ring's truncation degree.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms, _clean=False):
        self.ring = ring
        if _clean:
            self._terms = terms
            return
        cleaned = {}
        nvars = ring.nvars
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise StructureError(f"bad exponent vector {exps!r}")
            if ring.weighted_degree(exps) > ring.truncation:
                continue
            c = Fraction(c)
            if c:
                cleaned[exps] = c
        self._terms = cleaned

    # -- inspection ----------------------------------------------------

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, exps) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def homogeneous_part(self, degree) -> "GradedPoly":
        wd = self.ring.weighted_degree
        part = {e: c for e, c in self._terms.items() if wd(e) == degree}
        return GradedPoly(self.ring, part, _clean=True)

    def is_homogeneous_of(self, degree) -> bool:
        wd = self.ring.weighted_degree
        return all(wd(e) == degree for e in self._terms)

    # -- arithmetic ----------------------------------------------------

    def _check_same_ring(self, other):
        if self.ring != other.ring:
            raise StructureError(
                f"ring mismatch: {self.ring!r} vs {other.ring!r}"
            )

    def __add__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_same_ring(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return GradedPoly(self.ring, out, _clean=True)

    def __neg__(self):
        return GradedPoly(
            self.ring, {e: -c for e, c in self._terms.items()}, _clean=True
        )

    def __sub__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_same_ring(other)
        ring = self.ring
        wd = ring.weighted_degree
        cutoff = ring.truncation
        out = {}
        for ea, ca in self._terms.items():
            da = wd(ea)
            for eb, cb in other._terms.items():
                if da + wd(eb) > cutoff:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return GradedPoly(ring, out, _clean=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def _scale(self, c):
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return GradedPoly(
            self.ring, {e: c * v for e, v in self._terms.items()}, _clean=True
        )

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self._scale(Fraction(1, 1) / Fraction(c))
        return NotImplemented

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise StructureError("negative powers need poly_invert_unit")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, GradedPoly)
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    # -- display -------------------------------------------------------

    def _monomial_str(self, exps):
        parts = []
        for name, e in zip(self.ring.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        wd = self.ring.weighted_degree
        pieces = []
        for exps in sorted(self._terms, key=lambda e: (wd(e), e)):
            c = self._terms[exps]
            mono = self._monomial_str(exps)
            if not mono:
                text = str(abs(c))
            elif abs(c) == 1:
                text = mono
            else:
                text = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"GradedPoly({self})"


def poly_add(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """Exact coefficient-wise sum; zero terms are dropped."""
    return a + b


def poly_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """Exact product, re-truncated at the ring's degree bound."""
    return a * b


def poly_invert_unit(a: GradedPoly) -> GradedPoly:
    """Multiplicative inverse of a unit, up to the truncation degree.

    Uses the geometric series on the positive-degree part, which
    terminates because that part is nilpotent in the truncated ring.
    """
    c0 = a.constant_term()
    if not c0:
        raise NonUnitError("cannot invert: constant term is zero")
    ring = a.ring
    inv_c = 1 / c0
    tail = a - ring.constant(c0)
    result = ring.constant(inv_c)
    power = result
    for _ in range(ring.truncation):
        power = (power * tail) * (-inv_c)
        if power.is_zero():
            break
        result = result + power
    return result
