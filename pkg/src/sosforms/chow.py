"""Chow rings of split quadrics, Gysin tables, and the localization
bookkeeping that recovers the additive basis of the deleted-quadric ring.

For the m-dimensional split quadric Q_m inside P^(m+1), the Chow ring is
(grading by codimension, x the hyperplane section, y the extra generator):

    m = 2k+1:          Z[x, y] / (x^(k+1) - 2y,  y^2)            deg y = k+1
    m = 2k,  k odd:    Z[x, y] / (x^(k+1) - 2xy, y^2)            deg y = k
    m = 2k,  k even:   Z[x, y] / (x^(k+1) - 2xy, x^(k+1)y, y^2 - x^k y)

Classes are kept in normal form on the monomial basis {x^i, x^i y : 0 <= i
<= k}.  In the even case the two middle-dimensional plane classes are
alpha = y and beta = x^k - y, with intersection pairing

    k odd:   alpha^2 = beta^2 = 0,    alpha.beta = [*]
    k even:  alpha^2 = beta^2 = [*],  alpha.beta = 0

where [*] = x^k y is the point class.  For the conic Q_1 (k = 0) the
degree-1 generator in this basis is the point class y, with x = 2y; the
hyperplane-class presentation Z[x]/x^2 of P^1 names a different degree-1
element, and both descriptions are kept.

The Gysin pushforward j_* : CH^i(Q_(n-1)) -> CH^(i+1)(P^n) is multiplication
by 2 below the middle codimension, an isomorphism above it, and the fold map
(1 1) on (alpha, beta) at the middle when n is odd; the pullback is the ring
map t -> x.  Reducing the integer tables mod 2 and walking the localization
sequence yields one generator in bidegree (i, ceil(i/2)) for the deleted
quadric, the kernel contribution shifted by (1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grading import BiDegree


def _k_of(m: int) -> int:
    return (m - 1) // 2 if m % 2 else m // 2


def y_codim(m: int) -> int:
    """Codimension of the generator y in CH*(Q_m)."""
    return _k_of(m) + 1 if m % 2 else _k_of(m)


def _reduce_monomial(m: int, i: int, j: int) -> dict:
    """Normal form of x^i y^j in CH*(Q_m) as {(i', ybit): int coeff}."""
    k = _k_of(m)
    odd = m % 2 == 1
    if j >= 2:
        if odd or k % 2 == 1:
            return {}  # y^2 = 0
        # k even: y^2 = x^k y
        return _reduce_monomial(m, i + k, j - 1)
    if j == 1:
        if i <= k:
            return {(i, 1): 1}
        return {}  # x^(k+1) y = 0 in every case
    if i <= k:
        return {(i, 0): 1}
    # x^(k+1) = 2y (odd) or 2xy (even)
    shift = i - k - 1 if odd else i - k
    out = {}
    for key, c in _reduce_monomial(m, shift, 1).items():
        out[key] = out.get(key, 0) + 2 * c
    return out


def basis_monomials(m: int) -> list[tuple[int, int]]:
    if m < 0:
        raise ValueError("quadric dimension must be >= 0")
    k = _k_of(m)
    return [(i, 0) for i in range(k + 1)] + [(i, 1) for i in range(k + 1)]


class ChowClass:
    """Integer combination of the normal-form monomials of CH*(Q_m)."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        if m < 0:
            raise ValueError("quadric dimension must be >= 0")
        self.m = m
        clean: dict = {}
        if terms:
            for (i, j), coeff in terms.items():
                if coeff == 0:
                    continue
                for key, c in _reduce_monomial(m, i, j).items():
                    merged = clean.get(key, 0) + c * coeff
                    if merged:
                        clean[key] = merged
                    else:
                        clean.pop(key, None)
        self.terms = clean

    @classmethod
    def zero(cls, m: int) -> "ChowClass":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "ChowClass":
        return cls(m, {(0, 0): 1})

    @classmethod
    def x(cls, m: int) -> "ChowClass":
        return cls(m, {(1, 0): 1})

    @classmethod
    def y(cls, m: int) -> "ChowClass":
        return cls(m, {(0, 1): 1})

    @classmethod
    def monomial(cls, m: int, i: int, ybit: int, coeff: int = 1) -> "ChowClass":
        return cls(m, {(i, ybit): coeff})

    @classmethod
    def alpha(cls, m: int) -> "ChowClass":
        if m % 2:
            raise ValueError("middle plane classes live on even quadrics")
        return cls.y(m)

    @classmethod
    def beta(cls, m: int) -> "ChowClass":
        if m % 2:
            raise ValueError("middle plane classes live on even quadrics")
        return cls(m, {(_k_of(m), 0): 1, (0, 1): -1})

    @classmethod
    def point(cls, m: int) -> "ChowClass":
        """The class [*] of a rational point (top codimension)."""
        return cls(m, {(_k_of(m), 1): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "ChowClass"):
        if self.m != other.m:
            raise ValueError("dimension mismatch")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            merged = terms.get(key, 0) + c
            if merged:
                terms[key] = merged
            else:
                terms.pop(key, None)
        out = ChowClass.__new__(ChowClass)
        out.m, out.terms = self.m, terms
        return out

    def __neg__(self) -> "ChowClass":
        out = ChowClass.__new__(ChowClass)
        out.m, out.terms = self.m, {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ChowClass.zero(self.m)
            out = ChowClass.__new__(ChowClass)
            out.m, out.terms = self.m, {k: other * c for k, c in self.terms.items()}
            return out
        self._check(other)
        terms: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                for key, c in _reduce_monomial(self.m, i1 + i2, j1 + j2).items():
                    merged = terms.get(key, 0) + c * c1 * c2
                    if merged:
                        terms[key] = merged
                    else:
                        terms.pop(key, None)
        out = ChowClass.__new__(ChowClass)
        out.m, out.terms = self.m, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "ChowClass":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ChowClass.one(self.m)
        for _ in range(exp):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    __hash__ = None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        def mono_text(i, ybit):
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if ybit:
                factors.append("y")
            return "*".join(factors) or "1"

        parts = []
        for (i, ybit) in sorted(self.terms, key=lambda t: (t[0] + t[1] * y_codim(self.m), t[1])):
            c = self.terms[(i, ybit)]
            mono = mono_text(i, ybit)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ChowClass(Q_{self.m}: {self.to_text()})"


def chow_mul(u: ChowClass, v: ChowClass) -> ChowClass:
    return u * v


def presentation_text(m: int) -> str:
    k = _k_of(m)
    if m % 2:
        return f"Z[x,y]/(x^{k + 1} - 2y, y^2), deg x = 1, deg y = {k + 1}"
    if k % 2:
        return f"Z[x,y]/(x^{k + 1} - 2xy, y^2), deg x = 1, deg y = {k}"
    return f"Z[x,y]/(x^{k + 1} - 2xy, x^{k + 1}y, y^2 - x^{k}y), deg x = 1, deg y = {k}"


def additive_ranks(m: int) -> dict[int, int]:
    """Rank of CH^i(Q_m) for each codimension, read off the basis."""
    ranks: dict[int, int] = {}
    for (i, ybit) in basis_monomials(m):
        codim = i + ybit * y_codim(m)
        ranks[codim] = ranks.get(codim, 0) + 1
    return ranks


# -- Gysin tables -------------------------------------------------------------


def gysin_pushforward(n: int, i: int):
    """Matrix of j_* : CH^i(Q_(n-1)) -> CH^(i+1)(P^n).

    Returns (2,) below the middle, (1,) above it, and the fold (1, 1) -- in
    the (alpha, beta) basis -- at i = (n-1)/2 when n is odd.
    """
    if not 0 <= i <= n - 1:
        raise ValueError("codimension out of range")
    if 2 * i < n - 1:
        return ((2,),)
    if 2 * i > n - 1:
        return ((1,),)
    return ((1, 1),)


def gysin_pullback(n: int, i: int) -> ChowClass:
    """Image of the generator t^i under j^* : CH^i(P^n) -> CH^i(Q_(n-1)),
    i.e. the normal form of x^i.  At the even middle this is alpha + beta."""
    if not 0 <= i <= n:
        raise ValueError("codimension out of range")
    return ChowClass.monomial(n - 1, i, 0)


def pushforward_class(n: int, cls: ChowClass) -> dict[int, int]:
    """j_* on a normal-form class, as {codim d: coefficient of t^d} in P^n.

    A basis monomial in codim c maps to t^(c+1) with coefficient 2 when the
    monomial is a pure power of x and 1 when it involves y; this encodes the
    multiplication-by-2 range, the isomorphism range, and the fold.
    """
    if cls.m != n - 1:
        raise ValueError("class does not live on Q_(n-1)")
    out: dict[int, int] = {}
    for (i, ybit), c in cls.terms.items():
        codim = i + ybit * y_codim(cls.m)
        coeff = c * (1 if ybit else 2)
        d = codim + 1
        merged = out.get(d, 0) + coeff
        if merged:
            out[d] = merged
        else:
            out.pop(d, None)
    return out


def projection_formula_check(n: int) -> bool:
    """Verify j_*(g . j^* t^d) = (j_* g) . t^d for every basis class g of
    CH*(Q_(n-1)) and every generator t^d of CH*(P^n), and re-derive that
    j_* j^* is multiplication by 2 in every codimension."""
    m = n - 1
    for d in range(0, n + 1):
        xd = gysin_pullback(n, d)
        for (i, ybit) in basis_monomials(m):
            g = ChowClass.monomial(m, i, ybit)
            lhs = pushforward_class(n, g * xd)
            rhs = {}
            for deg, c in pushforward_class(n, g).items():
                if deg + d <= n:
                    rhs[deg + d] = c
            if lhs != rhs:
                return False
        # projection formula with g = [Q]: j_* j^* = x2
        composite = pushforward_class(n, xd)
        expected = {d + 1: 2} if d + 1 <= n else {}
        if composite != expected:
            return False
    return True


def even_intersection_table(k: int):
    """The 2x2 intersection matrix of (alpha, beta) on Q_2k, as integer
    multiples of the point class [*]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    m = 2 * k
    classes = (ChowClass.alpha(m), ChowClass.beta(m))
    point = ChowClass.point(m)
    table = []
    for u in classes:
        row = []
        for v in classes:
            prod = u * v
            for mult in range(0, 3):
                if prod == point * mult:
                    row.append(mult)
                    break
            else:
                raise AssertionError("middle product is not a multiple of the point class")
        table.append(tuple(row))
    return tuple(table)


def quadric_generator_degrees(m: int) -> list[BiDegree]:
    """Bidegrees of the free module generators of the motivic cohomology of
    Q_m: (0,0), (2,1), ..., (2m,m), plus an extra (m, m/2) when m is even."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = [BiDegree(2 * i, i) for i in range(m + 1)]
    if m % 2 == 0:
        out.append(BiDegree(m, m // 2))
    return out


def dq_additive_basis_localization(n: int) -> list[BiDegree]:
    """Additive basis of the mod-2 cohomology of the deleted quadric DQ_n,
    derived from the localization sequence of Q_(n-1) in P^n.

    The integer Gysin matrices are reduced mod 2 (multiplication by 2 becomes
    zero, isomorphisms stay onto, the fold keeps rank one); cokernel
    generators land in their own degree and kernel generators shift by
    (1, 1).  The result is one generator in degree (i, ceil(i/2)) per
    0 <= i <= n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n - 1
    counts: dict[int, int] = {}
    for deg in quadric_generator_degrees(m):
        counts[deg.q] = counts.get(deg.q, 0) + 1

    basis: list[BiDegree] = []
    covered: dict[int, bool] = {}
    for c in range(0, m + 1):
        mat = gysin_pushforward(n, c)
        width = len(mat[0])
        if width != counts.get(c, 0):
            raise AssertionError("generator count disagrees with Gysin table shape")
        mod2 = tuple(e % 2 for e in mat[0])
        rank = 1 if any(mod2) else 0
        ker = width - rank
        for _ in range(ker):
            basis.append(BiDegree(2 * c + 1, c + 1))
        covered[c + 1] = rank == 1
    for d in range(0, n + 1):
        if not covered.get(d, False):
            basis.append(BiDegree(2 * d, d))
    return sorted(basis)


@dataclass(frozen=True)
class GysinTable:
    """Degree-indexed matrices for j_* and j^* between Q_(n-1) and P^n.

    Pushforward matrices are per codimension 0..n-1 (fold rows in the
    (alpha, beta) basis); pullback columns are per codimension 0..n, with the
    middle column (1, 1)^T expressing t^k -> alpha + beta.
    """

    n: int
    pushforward: tuple = field(default=())
    pullback: tuple = field(default=())

    @classmethod
    def build(cls, n: int) -> "GysinTable":
        push = tuple(gysin_pushforward(n, i) for i in range(n))
        pull = []
        m = n - 1
        k = _k_of(m)
        for i in range(n + 1):
            if i > m:
                pull.append(())  # CH^i(Q_(n-1)) = 0
            elif m % 2 == 0 and i == k:
                pull.append(((1,), (1,)))
            elif 2 * i < n - 1 or (m % 2 == 1 and i <= k):
                pull.append(((1,),))
            else:
                pull.append(((2,),))
        return cls(n, push, tuple(pull))

    def double_cover_check(self) -> bool:
        """j_* (codim i) composed with j^* (codim i) is multiplication by 2."""
        for i in range(self.n):
            push = self.pushforward[i]
            pull = self.pullback[i]
            if not pull:
                return False
            total = sum(push[0][a] * pull[a][0] for a in range(len(pull)))
            if total != 2:
                return False
        return True
