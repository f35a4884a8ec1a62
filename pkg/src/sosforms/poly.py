"""Exact sparse multivariate polynomials over a coefficient ring.

A polynomial is a map from monomials to nonzero coefficients.  Monomials are
sorted tuples of (variable id, exponent) pairs with positive exponents, so
the zero polynomial has an empty term map and equality of polynomials is
equality of term maps.  Variable ids are plain ints; display names come from
an optional registry.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .rings import CoeffRing, IntegerRing, gaussian_ext

# Monomial: tuple of (var, exp) pairs, sorted by var, all exps > 0.
Monomial = tuple

_ONE_MONOMIAL: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


class SparsePoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: CoeffRing, terms: Mapping[Monomial, object] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if not ring.is_zero(coeff):
                    clean[mono] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoeffRing) -> "SparsePoly":
        return cls(ring)

    @classmethod
    def constant(cls, ring: CoeffRing, value) -> "SparsePoly":
        return cls(ring, {_ONE_MONOMIAL: ring.coerce(value)})

    @classmethod
    def variable(cls, ring: CoeffRing, var: int, exp: int = 1, coeff=1) -> "SparsePoly":
        if exp < 0:
            raise ValueError("negative exponent")
        mono = ((var, exp),) if exp > 0 else _ONE_MONOMIAL
        return cls(ring, {mono: ring.coerce(coeff)})

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((_mono_degree(m) for m in self.terms), default=0)

    def variables(self) -> set[int]:
        return {v for mono in self.terms for v, _ in mono}

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "SparsePoly"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        other = self._coerce_operand(other)
        self._check_ring(other)
        ring = self.ring
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in terms:
                terms[mono] = ring.add(terms[mono], coeff)
            else:
                terms[mono] = coeff
        return SparsePoly(ring, terms)

    __radd__ = __add__

    def __neg__(self):
        ring = self.ring
        return SparsePoly(ring, {m: ring.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other):
        return self._coerce_operand(other) - self

    def __mul__(self, other):
        other = self._coerce_operand(other)
        self._check_ring(other)
        ring = self.ring
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                c = ring.mul(c1, c2)
                if mono in terms:
                    terms[mono] = ring.add(terms[mono], c)
                else:
                    terms[mono] = c
        return SparsePoly(ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = SparsePoly.constant(self.ring, 1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def _coerce_operand(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            return other
        return SparsePoly.constant(self.ring, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None  # mutable term map; polynomials are not dict keys

    # -- substitution ---------------------------------------------------------

    def substitute(self, mapping: Mapping[int, "SparsePoly"]) -> "SparsePoly":
        """Apply the ring homomorphism sending each mapped variable to the
        given polynomial; unmapped variables pass through unchanged."""
        for p in mapping.values():
            if isinstance(p, SparsePoly) and p.ring != self.ring:
                raise ValueError("substituted polynomial over a different ring")
        result = SparsePoly.zero(self.ring)
        for mono, coeff in self.terms.items():
            term = SparsePoly.constant(self.ring, coeff)
            for v, e in mono:
                if v in mapping:
                    image = mapping[v]
                    if not isinstance(image, SparsePoly):
                        image = SparsePoly.constant(self.ring, image)
                    term = term * image ** e
                else:
                    term = term * SparsePoly.variable(self.ring, v, e)
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[int, object]):
        """Evaluate at ring elements; every variable must be assigned."""
        ring = self.ring
        total = ring.zero()
        for mono, coeff in self.terms.items():
            value = coeff
            for v, e in mono:
                if v not in assignment:
                    raise ValueError(f"no value for variable {v}")
                unit = ring.coerce(assignment[v])
                for _ in range(e):
                    value = ring.mul(value, unit)
            total = ring.add(total, value)
        return total

    # -- display ---------------------------------------------------------------

    def to_text(self, names: Callable[[int], str] | Mapping[int, str] | None = None) -> str:
        """Canonical text form ``coeff*v3^2*v7 + ...`` in graded-lex order."""
        if not self.terms:
            return "0"
        if names is None:
            name = lambda v: f"v{v}"
        elif callable(names):
            name = names
        else:
            name = lambda v: names.get(v, f"v{v}")

        def word(mono):
            return tuple(v for v, e in mono for _ in range(e))

        parts = []
        for mono in sorted(self.terms, key=lambda m: (-_mono_degree(m), word(m))):
            coeff = self.terms[mono]
            factors = [f"{name(v)}^{e}" if e > 1 else name(v) for v, e in mono]
            coeff_str = self.ring.format_element(coeff)
            if factors and coeff == self.ring.one():
                parts.append("*".join(factors))
            elif factors:
                parts.append("*".join([coeff_str] + factors))
            else:
                parts.append(coeff_str)
        return " + ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self.to_text()})"


def poly_sum(polys: Iterable[SparsePoly], ring: CoeffRing) -> SparsePoly:
    total = SparsePoly.zero(ring)
    for p in polys:
        total = total + p
    return total


def hyperbolic_coordinate_change(n: int, ring: CoeffRing | None = None) -> bool:
    """Check that the split (hyperbolic) quadratic form in n+2 variables turns
    into the standard sum of squares under the substitution

        a_j = w_{2j-1} + i*w_{2j},   b_j = w_{2j-1} - i*w_{2j}

    (with the odd leftover coordinate c = w_{n+2} kept as a square), where i
    is a square root of -1.  Returns True when the expansion is exactly
    w_1^2 + ... + w_{n+2}^2.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if ring is None:
        ring = gaussian_ext(IntegerRing())
    i_elt = ring.sqrt_minus_one()
    if i_elt is None:
        raise ValueError("ring has no square root of -1")

    # variables w_1..w_{n+2} get ids 0..n+1
    w = [SparsePoly.variable(ring, m) for m in range(n + 2)]
    i_const = SparsePoly.constant(ring, i_elt)

    pairs = n // 2 + 1
    total = SparsePoly.zero(ring)
    for j in range(pairs):
        a_j = w[2 * j] + i_const * w[2 * j + 1]
        b_j = w[2 * j] - i_const * w[2 * j + 1]
        total = total + a_j * b_j
    if n % 2 == 1:
        total = total + w[n + 1] * w[n + 1]

    squares = poly_sum((wm * wm for wm in w), ring)
    return total == squares
