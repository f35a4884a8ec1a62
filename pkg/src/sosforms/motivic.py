"""Exact arithmetic in the mod-2 motivic cohomology rings of deleted quadrics.

The ring attached to the deleted quadric DQ_n is presented over the
coefficient model Z/2[tau, rho] (tau in bidegree (0,1), rho in (1,1)) as

    n = 2k+1:  [a, b] / (a^2 = rho*a + tau*b,  b^(k+1))
    n = 2k:    [a, b] / (a^2 = rho*a + tau*b,  b^(k+1),  a*b^k = eps*b^k)

with a in bidegree (1,1) and b in (2,1).  Setting rho = 0 models a base
field in which every element is a square (then eps = 0 as well); keeping
rho formal models the real numbers.  The classes a^e b^j with e in {0,1},
0 <= j <= k -- excluding (e, j) = (1, k) when n is even -- are a free basis,
one per bidegree (i, ceil(i/2)) for 0 <= i <= n.

The Bockstein is the derivation with beta(tau) = rho, beta(rho) = 0,
beta(a) = b, beta(b) = 0.  In the rho = 0 model the powers of a close up as
a^(2m) = tau^m b^m and a^(2m+1) = tau^m a b^m, so a^i vanishes exactly for
i > n; squaring that vanishing through a Kunneth tensor product of two such
rings is what turns binomial parities into ring identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import BiDegree
from .hopf import hopf_admissible


class M2Poly:
    """A polynomial in tau and rho over Z/2: a set of (t, m) exponent pairs.

    Addition is symmetric difference; the class is immutable and hashable.
    tau^t rho^m sits in bidegree (m, t + m).
    """

    __slots__ = ("monos",)

    def __init__(self, monos=()):
        self.monos = frozenset(monos)

    @staticmethod
    def monomial(t: int, m: int) -> "M2Poly":
        return M2Poly(((t, m),))

    @staticmethod
    def tau_power(t: int) -> "M2Poly":
        return M2Poly(((t, 0),))

    @property
    def is_zero(self) -> bool:
        return not self.monos

    def __add__(self, other: "M2Poly") -> "M2Poly":
        return M2Poly(self.monos ^ other.monos)

    def __mul__(self, other: "M2Poly") -> "M2Poly":
        acc: set = set()
        for t1, m1 in self.monos:
            for t2, m2 in other.monos:
                key = (t1 + t2, m1 + m2)
                if key in acc:
                    acc.discard(key)
                else:
                    acc.add(key)
        return M2Poly(acc)

    def strip_rho(self) -> "M2Poly":
        """Image under rho -> 0."""
        return M2Poly((t, m) for t, m in self.monos if m == 0)

    def bidegrees(self) -> set[BiDegree]:
        return {BiDegree(m, t + m) for t, m in self.monos}

    def __eq__(self, other) -> bool:
        return isinstance(other, M2Poly) and self.monos == other.monos

    def __hash__(self):
        return hash(self.monos)

    def to_text(self) -> str:
        if not self.monos:
            return "0"
        return " + ".join(_m2_mono_text(t, m) or "1" for t, m in sorted(self.monos))

    def __repr__(self):
        return f"M2Poly({self.to_text()})"


def _m2_mono_text(t: int, m: int) -> str:
    parts = []
    if t:
        parts.append("t" if t == 1 else f"t^{t}")
    if m:
        parts.append("r" if m == 1 else f"r^{m}")
    return "*".join(parts)


M2_ZERO = M2Poly()
M2_ONE = M2Poly.monomial(0, 0)
M2_TAU = M2Poly.monomial(1, 0)
M2_RHO = M2Poly.monomial(0, 1)


@dataclass(frozen=True)
class DQRingSpec:
    """Presentation parameters for the ring of DQ_n.

    ``rho`` keeps rho as a formal class (the model for F = R); with
    ``rho=False`` every rho is reduced to 0 (all-squares model).  ``eps_is_rho``
    picks eps = rho in the even-case relation a*b^k = eps*b^k; the only
    representable values of eps are 0 and rho, and with rho disabled both
    collapse to 0.  n = 0 is the point (a = b = 0), n = 1 is the punctured
    line (b = 0).
    """

    n: int
    rho: bool = False
    eps_is_rho: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.eps_is_rho and (self.n % 2 == 1 or not self.rho):
            # eps only exists in even rings, and eps = rho = 0 when rho is off
            object.__setattr__(self, "eps_is_rho", False)

    @property
    def k(self) -> int:
        return (self.n - 1) // 2 if self.n % 2 else self.n // 2

    @property
    def is_even(self) -> bool:
        return self.n % 2 == 0

    def basis_monomials(self) -> tuple:
        """The (e, j) pairs of the free basis a^e b^j, in increasing bidegree."""
        out = []
        for i in range(self.n + 1):
            e, j = i % 2, i // 2
            out.append((e, j))
        return tuple(out)

    def basis_bidegrees(self) -> list[BiDegree]:
        return [BiDegree(e + 2 * j, e + j) for e, j in self.basis_monomials()]


def _coeff_for_spec(spec: DQRingSpec, coeff: M2Poly) -> M2Poly:
    return coeff if spec.rho else coeff.strip_rho()


def _normalize_monomial(spec: DQRingSpec, e: int, j: int, coeff: M2Poly):
    """Rewrite coeff * a^e b^j into basis terms [((e', j'), coeff'), ...]."""
    coeff = _coeff_for_spec(spec, coeff)
    if coeff.is_zero:
        return []
    if e >= 2:
        # a^2 = rho*a + tau*b
        out = []
        out += _normalize_monomial(spec, e - 1, j, coeff * M2_RHO)
        out += _normalize_monomial(spec, e - 2, j + 1, coeff * M2_TAU)
        return out
    if j > spec.k:
        return []
    if spec.is_even and e == 1 and j == spec.k:
        # a*b^k = eps*b^k
        if spec.eps_is_rho:
            return _normalize_monomial(spec, 0, j, coeff * M2_RHO)
        return []
    return [((e, j), coeff)]


def _accumulate(terms: dict, key, coeff: M2Poly):
    merged = terms.get(key, M2_ZERO) + coeff
    if merged.is_zero:
        terms.pop(key, None)
    else:
        terms[key] = merged


class DQClass:
    """A normal-form element: M2Poly coefficients on the basis monomials."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: DQRingSpec, terms=None):
        self.spec = spec
        clean: dict = {}
        if terms:
            for (e, j), coeff in terms.items():
                if not isinstance(coeff, M2Poly):
                    raise TypeError("coefficients must be M2Poly")
                for key, c in _normalize_monomial(spec, e, j, coeff):
                    _accumulate(clean, key, c)
        self.terms = clean

    @classmethod
    def zero(cls, spec: DQRingSpec) -> "DQClass":
        return cls(spec)

    @classmethod
    def one(cls, spec: DQRingSpec) -> "DQClass":
        return cls(spec, {(0, 0): M2_ONE})

    @classmethod
    def gen_a(cls, spec: DQRingSpec) -> "DQClass":
        return cls(spec, {(1, 0): M2_ONE})

    @classmethod
    def gen_b(cls, spec: DQRingSpec) -> "DQClass":
        return cls(spec, {(0, 1): M2_ONE})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_spec(self, other: "DQClass"):
        if self.spec != other.spec:
            raise ValueError(f"spec mismatch: {self.spec} vs {other.spec}")

    def __add__(self, other: "DQClass") -> "DQClass":
        self._check_spec(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            _accumulate(terms, key, coeff)
        out = DQClass.__new__(DQClass)
        out.spec, out.terms = self.spec, terms
        return out

    def __mul__(self, other: "DQClass") -> "DQClass":
        self._check_spec(other)
        spec = self.spec
        terms: dict = {}
        for (e1, j1), c1 in self.terms.items():
            for (e2, j2), c2 in other.terms.items():
                for key, c in _normalize_monomial(spec, e1 + e2, j1 + j2, c1 * c2):
                    _accumulate(terms, key, c)
        out = DQClass.__new__(DQClass)
        out.spec, out.terms = spec, terms
        return out

    def __pow__(self, exp: int) -> "DQClass":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = DQClass.one(self.spec)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            if exp > 1:
                base = base * base
            exp >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, DQClass):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    __hash__ = None

    def bidegree(self) -> BiDegree | None:
        """The common bidegree of all terms, or None if inhomogeneous/zero."""
        degrees = set()
        for (e, j), coeff in self.terms.items():
            base = BiDegree(e + 2 * j, e + j)
            degrees |= {base + d for d in coeff.bidegrees()}
        return degrees.pop() if len(degrees) == 1 else None

    def bockstein(self) -> "DQClass":
        """The derivation with beta(tau) = rho, beta(a) = b, beta(rho) =
        beta(b) = 0, extended by the Leibniz rule (characteristic 2)."""
        spec = self.spec
        terms: dict = {}
        for (e, j), coeff in self.terms.items():
            for t, m in coeff.monos:
                if t % 2 == 1:
                    # beta(tau^t) = t tau^(t-1) rho
                    for key, c in _normalize_monomial(spec, e, j, M2Poly.monomial(t - 1, m + 1)):
                        _accumulate(terms, key, c)
                if e == 1:
                    # beta(a b^j) = b^(j+1)
                    for key, c in _normalize_monomial(spec, 0, j + 1, M2Poly.monomial(t, m)):
                        _accumulate(terms, key, c)
        out = DQClass.__new__(DQClass)
        out.spec, out.terms = spec, terms
        return out

    def restrict(self, *, eps_is_rho: bool = False) -> "DQClass":
        """Image in the ring of DQ_(n-1) under a -> a, b -> b, renormalized
        against the smaller ring's relations."""
        if self.spec.n < 1:
            raise ValueError("no smaller ring to restrict to")
        target = DQRingSpec(self.spec.n - 1, rho=self.spec.rho, eps_is_rho=eps_is_rho)
        return DQClass(target, self.terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e, j) in sorted(self.terms, reverse=True):
            coeff = self.terms[(e, j)]
            basis = []
            if e:
                basis.append("a")
            if j:
                basis.append("b" if j == 1 else f"b^{j}")
            basis_str = "*".join(basis)
            for t, m in sorted(coeff.monos):
                coeff_str = _m2_mono_text(t, m)
                if coeff_str and basis_str:
                    parts.append(f"{coeff_str}*{basis_str}")
                elif basis_str:
                    parts.append(basis_str)
                else:
                    parts.append(coeff_str or "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"DQClass(n={self.spec.n}: {self.to_text()})"


def dq_mul(x: DQClass, y: DQClass) -> DQClass:
    return x * y


def dq_power_a(spec: DQRingSpec, m: int) -> DQClass:
    """Normal form of a^m.  In the rho = 0 model this is tau^(m//2) b^(m//2)
    (m even) or tau^((m-1)/2) a b^((m-1)/2) (m odd), hence zero iff m > n."""
    return DQClass.gen_a(spec) ** m


def bockstein(x: DQClass) -> DQClass:
    return x.bockstein()


def restrict_class(x: DQClass, *, eps_is_rho: bool = False) -> DQClass:
    return x.restrict(eps_is_rho=eps_is_rho)


def ring_additive_basis(spec_or_n) -> list[BiDegree]:
    """Bidegrees of the free basis: exactly (i, ceil(i/2)) for 0 <= i <= n."""
    spec = spec_or_n if isinstance(spec_or_n, DQRingSpec) else DQRingSpec(spec_or_n)
    return sorted(spec.basis_bidegrees())


# -- Kunneth tensor products -------------------------------------------------------


class TensorClass:
    """An element of the tensor product of two deleted-quadric rings over the
    coefficient model, on the product basis a1^e1 b1^j1 (x) a2^e2 b2^j2."""

    __slots__ = ("left_spec", "right_spec", "terms")

    def __init__(self, left_spec: DQRingSpec, right_spec: DQRingSpec, terms=None):
        if left_spec.rho != right_spec.rho:
            raise ValueError("tensor factors must share the coefficient model")
        self.left_spec = left_spec
        self.right_spec = right_spec
        clean: dict = {}
        if terms:
            for (e1, j1, e2, j2), coeff in terms.items():
                for (le, lj), lc in _normalize_monomial(left_spec, e1, j1, coeff):
                    for (re, rj), rc in _normalize_monomial(right_spec, e2, j2, lc):
                        _accumulate(clean, (le, lj, re, rj), rc)
        self.terms = clean

    @classmethod
    def zero(cls, left_spec, right_spec) -> "TensorClass":
        return cls(left_spec, right_spec)

    @classmethod
    def one(cls, left_spec, right_spec) -> "TensorClass":
        return cls(left_spec, right_spec, {(0, 0, 0, 0): M2_ONE})

    @classmethod
    def a_left(cls, left_spec, right_spec) -> "TensorClass":
        return cls(left_spec, right_spec, {(1, 0, 0, 0): M2_ONE})

    @classmethod
    def a_right(cls, left_spec, right_spec) -> "TensorClass":
        return cls(left_spec, right_spec, {(0, 0, 1, 0): M2_ONE})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_spec(self, other: "TensorClass"):
        if self.left_spec != other.left_spec or self.right_spec != other.right_spec:
            raise ValueError("spec mismatch")

    def __add__(self, other: "TensorClass") -> "TensorClass":
        self._check_spec(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            _accumulate(terms, key, coeff)
        return self._raw(terms)

    def __mul__(self, other: "TensorClass") -> "TensorClass":
        self._check_spec(other)
        terms: dict = {}
        for (e1, j1, e2, j2), c1 in self.terms.items():
            for (f1, i1, f2, i2), c2 in other.terms.items():
                left_parts = _normalize_monomial(self.left_spec, e1 + f1, j1 + i1, c1 * c2)
                for (le, lj), lc in left_parts:
                    for (re, rj), rc in _normalize_monomial(self.right_spec, e2 + f2, j2 + i2, lc):
                        _accumulate(terms, (le, lj, re, rj), rc)
        return self._raw(terms)

    def __pow__(self, exp: int) -> "TensorClass":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = TensorClass.one(self.left_spec, self.right_spec)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            if exp > 1:
                base = base * base
            exp >>= 1
        return result

    def _raw(self, terms: dict) -> "TensorClass":
        out = TensorClass.__new__(TensorClass)
        out.left_spec, out.right_spec, out.terms = self.left_spec, self.right_spec, terms
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorClass):
            return NotImplemented
        return (
            self.left_spec == other.left_spec
            and self.right_spec == other.right_spec
            and self.terms == other.terms
        )

    __hash__ = None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e1, j1, e2, j2) in sorted(self.terms, reverse=True):
            coeff = self.terms[(e1, j1, e2, j2)]
            basis = []
            if e1:
                basis.append("a1")
            if j1:
                basis.append("b1" if j1 == 1 else f"b1^{j1}")
            if e2:
                basis.append("a2")
            if j2:
                basis.append("b2" if j2 == 1 else f"b2^{j2}")
            basis_str = "*".join(basis)
            for t, m in sorted(coeff.monos):
                coeff_str = _m2_mono_text(t, m)
                if coeff_str and basis_str:
                    parts.append(f"{coeff_str}*{basis_str}")
                elif basis_str:
                    parts.append(basis_str)
                else:
                    parts.append(coeff_str or "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorClass({self.to_text()})"


def tensor_mul(x: TensorClass, y: TensorClass) -> TensorClass:
    return x * y


def diagonal_power(r: int, s: int, n: int) -> TensorClass:
    """Normal form of (a1 (x) 1 + 1 (x) a2)^n in the tensor product of the
    rings for DQ_(r-1) and DQ_(s-1), in the all-squares model (rho = eps = 0).

    The surviving monomials correspond exactly to the i with C(n, i) odd,
    i <= r-1 and n-i <= s-1.
    """
    if min(r, s) < 1 or n < 0:
        raise ValueError("need r, s >= 1 and n >= 0")
    left = DQRingSpec(r - 1, rho=False)
    right = DQRingSpec(s - 1, rho=False)
    x = TensorClass.a_left(left, right) + TensorClass.a_right(left, right)
    return x ** n


def hopf_via_motivic(r: int, s: int, n: int) -> bool:
    """The ring-theoretic Hopf verdict: (a1 + a2)^n = 0.  Agrees with the
    binomial-parity condition on every input."""
    return diagonal_power(r, s, n).is_zero


def motivic_binomial_mismatches(rmax: int, smax: int, nmax: int) -> list[tuple]:
    """Exhaustively compare the ring engine against binomial parity for all
    1 <= r <= rmax, 1 <= s <= smax, max(r, s) <= n <= nmax.  Returns the list
    of disagreeing (r, s, n, ring_verdict, parity_verdict); empty means the
    two engines agree.  Powers are built incrementally per (r, s)."""
    mismatches = []
    for r in range(1, rmax + 1):
        for s in range(1, smax + 1):
            left = DQRingSpec(r - 1, rho=False)
            right = DQRingSpec(s - 1, rho=False)
            x = TensorClass.a_left(left, right) + TensorClass.a_right(left, right)
            power = TensorClass.one(left, right)
            for n in range(1, nmax + 1):
                power = power * x
                if n < max(r, s):
                    continue
                ring_verdict = power.is_zero
                parity_verdict = hopf_admissible(r, s, n)
                if ring_verdict != parity_verdict:
                    mismatches.append((r, s, n, ring_verdict, parity_verdict))
    return mismatches
