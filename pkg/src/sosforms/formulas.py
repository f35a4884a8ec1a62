"""Bilinear sums-of-squares composition formulas of type [r, s, n].

A formula is a coefficient tensor T[k][i][j] defining the bilinear forms
z_k = sum_{i,j} T[k][i][j] x_i y_j; it is *verified* when

    (x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2) = z_1^2 + ... + z_n^2

holds identically in the polynomial ring.  Two independent verification
routes are provided: direct expansion, and the equivalent matrix equations
B_j^T B_k + B_k^T B_j = 2 delta_{jk} I on the slices B_i[k][j] = T[k][i][j].

Classical constructions included: the trivial [r, s, rs] formula, the
2/4/8-square identities of the composition algebras C, H, O (loaded from a
fixture and re-verified), and the Hurwitz-Radon family of type
[rho(n), n, n] built from anticommuting signed-permutation matrices.
"""

from __future__ import annotations

import json
from importlib import resources

from .hopf import rho
from .poly import SparsePoly, poly_sum
from .rings import (
    CoeffRing,
    IntegerRing,
    ZZ,
    gaussian_ext,
    ring_from_json,
    ring_to_json,
)


class SosFormula:
    """An [r, s, n] bilinear formula as a coefficient tensor over a ring.

    The tensor is indexed T[k][i][j] with 0 <= k < n, 0 <= i < r, 0 <= j < s.
    In the associated polynomials, x_i has variable id i and y_j has id r+j.
    """

    __slots__ = ("r", "s", "n", "ring", "tensor")

    def __init__(self, r: int, s: int, n: int, ring: CoeffRing, tensor):
        if min(r, s, n) < 1:
            raise ValueError("r, s, n must be positive")
        if len(tensor) != n:
            raise ValueError("tensor has wrong number of slices")
        coerced = []
        for slice_k in tensor:
            if len(slice_k) != r or any(len(row) != s for row in slice_k):
                raise ValueError("tensor slice has wrong shape")
            coerced.append(tuple(tuple(ring.coerce(c) for c in row) for row in slice_k))
        self.r, self.s, self.n = r, s, n
        self.ring = ring
        self.tensor = tuple(coerced)

    @property
    def type_triple(self) -> tuple[int, int, int]:
        return (self.r, self.s, self.n)

    def x_var(self, i: int) -> int:
        return i

    def y_var(self, j: int) -> int:
        return self.r + j

    # -- polynomial side -------------------------------------------------------

    def z_poly(self, k: int) -> SparsePoly:
        ring = self.ring
        terms = {}
        for i in range(self.r):
            for j in range(self.s):
                c = self.tensor[k][i][j]
                if not ring.is_zero(c):
                    mono = ((self.x_var(i), 1), (self.y_var(j), 1))
                    terms[mono] = c
        return SparsePoly(ring, terms)

    def z_polys(self) -> list[SparsePoly]:
        return [self.z_poly(k) for k in range(self.n)]

    def expansion_defect(self) -> SparsePoly:
        """sum_k z_k^2 - (sum_i x_i^2)(sum_j y_j^2), exactly."""
        ring = self.ring
        zsq = poly_sum((z * z for z in self.z_polys()), ring)
        xs = poly_sum(
            (SparsePoly.variable(ring, self.x_var(i)) ** 2 for i in range(self.r)), ring
        )
        ys = poly_sum(
            (SparsePoly.variable(ring, self.y_var(j)) ** 2 for j in range(self.s)), ring
        )
        return zsq - xs * ys

    def verify_by_expansion(self) -> bool:
        return self.expansion_defect().is_zero

    # -- matrix side -----------------------------------------------------------

    def to_hurwitz(self) -> "HurwitzSystem":
        mats = tuple(
            tuple(tuple(self.tensor[k][i][j] for j in range(self.s)) for k in range(self.n))
            for i in range(self.r)
        )
        return HurwitzSystem(self.ring, self.n, self.s, mats)

    @classmethod
    def from_hurwitz(cls, system: "HurwitzSystem") -> "SosFormula":
        r = len(system.matrices)
        tensor = [
            [[system.matrices[i][k][j] for j in range(system.s)] for i in range(r)]
            for k in range(system.n)
        ]
        return cls(r, system.s, system.n, system.ring, tensor)

    def verify_by_hurwitz(self) -> bool:
        return self.to_hurwitz().verify()

    # -- transformations ---------------------------------------------------------

    def restrict(self, r2: int, s2: int) -> "SosFormula":
        """Zero out the trailing x and y variables: an [r', s', n] formula."""
        if not (1 <= r2 <= self.r and 1 <= s2 <= self.s):
            raise ValueError("restricted type out of bounds")
        tensor = [
            [[self.tensor[k][i][j] for j in range(s2)] for i in range(r2)]
            for k in range(self.n)
        ]
        return SosFormula(r2, s2, self.n, self.ring, tensor)

    def change_ring(self, ring: CoeffRing) -> "SosFormula":
        return SosFormula(self.r, self.s, self.n, ring, self.tensor)

    def evaluate(self, xs, ys) -> list:
        """The vector z(x, y) at concrete ring elements."""
        ring = self.ring
        xs = [ring.coerce(v) for v in xs]
        ys = [ring.coerce(v) for v in ys]
        if len(xs) != self.r or len(ys) != self.s:
            raise ValueError("wrong vector lengths")
        out = []
        for k in range(self.n):
            acc = ring.zero()
            for i in range(self.r):
                for j in range(self.s):
                    acc = ring.add(acc, ring.mul(self.tensor[k][i][j], ring.mul(xs[i], ys[j])))
            out.append(acc)
        return out

    # -- serialization -------------------------------------------------------------

    def to_json_dict(self) -> dict:
        ring = self.ring
        return {
            "r": self.r,
            "s": self.s,
            "n": self.n,
            "field": ring_to_json(ring),
            "tensor": [
                [[ring.element_to_json(c) for c in row] for row in slice_k]
                for slice_k in self.tensor
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "SosFormula":
        ring = ring_from_json(data["field"])
        tensor = [
            [[ring.element_from_json(c) for c in row] for row in slice_k]
            for slice_k in data["tensor"]
        ]
        return cls(data["r"], data["s"], data["n"], ring, tensor)

    @classmethod
    def from_json(cls, text: str) -> "SosFormula":
        return cls.from_json_dict(json.loads(text))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SosFormula):
            return NotImplemented
        return (
            self.type_triple == other.type_triple
            and self.ring == other.ring
            and self.tensor == other.tensor
        )

    __hash__ = None

    def __repr__(self):
        return f"SosFormula[{self.r},{self.s},{self.n}] over {self.ring!r}"


class HurwitzSystem:
    """The r matrices B_i (each n x s) with z = sum_i x_i B_i y.

    The formula identity is equivalent to
    B_j^T B_k + B_k^T B_j = 2 delta_{jk} I_s for all j, k.
    """

    __slots__ = ("ring", "n", "s", "matrices")

    def __init__(self, ring: CoeffRing, n: int, s: int, matrices):
        self.ring = ring
        self.n = n
        self.s = s
        self.matrices = tuple(
            tuple(tuple(ring.coerce(c) for c in row) for row in mat) for mat in matrices
        )
        for mat in self.matrices:
            if len(mat) != n or any(len(row) != s for row in mat):
                raise ValueError("matrix has wrong shape")

    def _gram(self, a, b):
        """B_a^T B_b + B_b^T B_a as an s x s matrix."""
        ring = self.ring
        A, B = self.matrices[a], self.matrices[b]
        out = []
        for j in range(self.s):
            row = []
            for k in range(self.s):
                acc = ring.zero()
                for m in range(self.n):
                    acc = ring.add(acc, ring.mul(A[m][j], B[m][k]))
                    acc = ring.add(acc, ring.mul(B[m][j], A[m][k]))
                row.append(acc)
            out.append(row)
        return out

    def verify(self) -> bool:
        if self.ring.characteristic() == 2:  # unreachable: such rings are rejected
            raise ValueError("matrix criterion needs characteristic != 2")
        ring = self.ring
        two = ring.coerce(2)
        for a in range(len(self.matrices)):
            for b in range(a, len(self.matrices)):
                expected = two if a == b else ring.zero()
                gram = self._gram(a, b)
                for j in range(self.s):
                    for k in range(self.s):
                        want = expected if j == k else ring.zero()
                        if gram[j][k] != want:
                            return False
        return True


# -- classical constructions ------------------------------------------------------


def _load_tables() -> dict:
    text = resources.files("sosforms.data").joinpath("classical_formulas.json").read_text()
    return json.loads(text)


_TABLE_CACHE: dict = {}


def _tensor_from_table(table) -> list:
    d = len(table)
    tensor = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            v = table[i][j]
            tensor[abs(v) - 1][i][j] = 1 if v > 0 else -1
    return tensor


def construct_trivial(r: int, s: int) -> SosFormula:
    """[r, s, rs] with z_(i,j) = x_i y_j."""
    if r < 1 or s < 1:
        raise ValueError("r, s must be positive")
    n = r * s
    tensor = [[[0] * s for _ in range(r)] for _ in range(n)]
    for i in range(r):
        for j in range(s):
            tensor[i * s + j][i][j] = 1
    return SosFormula(r, s, n, ZZ, tensor)


def construct_classical(kind: str, r: int | None = None, s: int | None = None) -> SosFormula:
    """One of the classical identities: ``trivial`` (give r, s), ``two``
    (Gauss, [2,2,2]), ``four`` (Euler, [4,4,4]), or ``eight`` (Degen, [8,8,8]).

    The 2/4/8 tensors come from a fixture file holding the signed
    multiplication tables of C, H, O; they are verified once at load and the
    loader refuses corrupted data.
    """
    if kind == "trivial":
        if r is None or s is None:
            raise ValueError("trivial formula needs r and s")
        return construct_trivial(r, s)
    if kind not in ("two", "four", "eight"):
        raise ValueError(f"unknown classical formula {kind!r}")
    if kind not in _TABLE_CACHE:
        table = _load_tables()[kind]
        d = len(table)
        f = SosFormula(d, d, d, ZZ, _tensor_from_table(table))
        if not f.verify_by_expansion():
            raise ValueError(f"fixture table {kind!r} does not satisfy the identity")
        _TABLE_CACHE[kind] = f
    return _TABLE_CACHE[kind]


# -- Hurwitz-Radon family -----------------------------------------------------------
#
# A family of rho(n)-1 pairwise anticommuting skew matrices A with A^2 = -I,
# all signed permutation matrices, yields the [rho(n), n, n] formula with
# B_1 = I, B_{i+1} = A_i.  The family is assembled from tensor-product blocks:
# sizes 1, 2, 4 use quaternion-type generators, size 8 uses the octonion
# table, and each extra factor of 16 contributes eight more matrices via a
# symmetric involution that anticommutes with the size-16 family.


def _eye(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _kron(A, B) -> list:
    nb, mb = len(B), len(B[0])
    return [
        [A[i][j] * B[k][l] for j in range(len(A[0])) for l in range(mb)]
        for i in range(len(A))
        for k in range(nb)
    ]


_J = [[0, -1], [1, 0]]
_P = [[0, 1], [1, 0]]
_R = [[1, 0], [0, -1]]


def _octonion_family() -> list:
    f = construct_classical("eight")
    mats = f.to_hurwitz().matrices
    return [[list(row) for row in mat] for mat in mats[1:]]


def _small_family(b: int) -> list:
    if b == 0:
        return []
    if b == 1:
        return [_J]
    if b == 2:
        return [_kron(_J, _eye(2)), _kron(_P, _J), _kron(_R, _J)]
    return _octonion_family()


def _skew_family(t: int) -> list:
    """rho(2^t) - 1 anticommuting skew signed-permutation matrices of size 2^t."""
    a, b = divmod(t, 4)
    fam = _small_family(b)
    size = 2 ** b
    if a:
        oct_fam = _octonion_family()
        g16 = [_kron(_J, _eye(8))] + [_kron(_P, o) for o in oct_fam]
        s16 = _kron(_R, _eye(8))
        for _ in range(a):
            fam = [_kron(g, _eye(size)) for g in g16] + [_kron(s16, d) for d in fam]
            size *= 16
    return fam


def construct_hurwitz_radon(n: int) -> SosFormula:
    """The [rho(n), n, n] formula with entries in {-1, 0, 1}."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n
    t = 0
    while m % 2 == 0:
        m //= 2
        t += 1
    fam = _skew_family(t)
    if m > 1:
        block = _eye(m)
        fam = [_kron(A, block) for A in fam]
    mats = [_eye(n)] + fam
    assert len(mats) == rho(n)
    system = HurwitzSystem(ZZ, n, n, mats)
    return SosFormula.from_hurwitz(system)


# -- orthonormality and homotopy checks -------------------------------------------------


def orthonormal_vectors(f: SosFormula):
    """u = z(e_1, e_1) and v = z(e_2, e_1), with the flag

        ok  <=>  sum u^2 = 1, sum v^2 = 1, sum u*v = 0.

    For any verified formula with r >= 2 the flag is True: substituting the
    first two standard basis vectors into the defining identity forces
    exactly these relations.
    """
    if f.r < 2:
        raise ValueError("need r >= 2")
    ring = f.ring
    u = [f.tensor[k][0][0] for k in range(f.n)]
    v = [f.tensor[k][1][0] for k in range(f.n)]

    def dot(a, b):
        acc = ring.zero()
        for x, y in zip(a, b):
            acc = ring.add(acc, ring.mul(x, y))
        return acc

    ok = dot(u, u) == ring.one() and dot(v, v) == ring.one() and ring.is_zero(dot(u, v))
    return u, v, ok


def _homotopy_formal(mode: str, ring, omit_uv_relation: bool) -> bool:
    # variables: a=0, b=1, t=2, S_uu=3, S_vv=4, S_uv=5
    a = SparsePoly.variable(ring, 0)
    b = SparsePoly.variable(ring, 1)
    t = SparsePoly.variable(ring, 2)
    s_uu = SparsePoly.variable(ring, 3)
    s_vv = SparsePoly.variable(ring, 4)
    s_uv = SparsePoly.variable(ring, 5)
    i_c = SparsePoly.constant(ring, ring.sqrt_minus_one())

    # sum over j of (u_j a + v_j b)^2 written with the three sum symbols
    block = s_uu * a * a + 2 * s_uv * a * b + s_vv * b * b
    if mode == "first":
        total = block + (t * a - t * i_c * b) ** 2 + (t * i_c * a + t * b) ** 2
    elif mode == "second":
        total = t * t * block + (a - t * i_c * b) ** 2 + (t * i_c * a + b) ** 2
    else:
        raise ValueError(f"unknown homotopy mode {mode!r}")

    subst = {3: SparsePoly.constant(ring, 1), 4: SparsePoly.constant(ring, 1)}
    if not omit_uv_relation:
        subst[5] = SparsePoly.zero(ring)
    reduced = total.substitute(subst)
    return reduced == a * a + b * b


def _reduce_modulo(poly: SparsePoly, rules) -> SparsePoly:
    """Rewrite until no term is divisible by a rule's leading monomial.

    Each rule is (leading monomial, replacement polynomial); this is plain
    polynomial reduction, sound for ideal-membership *confirmation*.
    """
    changed = True
    while changed:
        changed = False
        for lead, repl in rules:
            for mono, coeff in list(poly.terms.items()):
                exps = dict(mono)
                if all(exps.get(v, 0) >= e for v, e in lead):
                    rest = dict(exps)
                    for v, e in lead:
                        rest[v] -= e
                        if rest[v] == 0:
                            del rest[v]
                    rest_mono = tuple(sorted(rest.items()))
                    quotient = SparsePoly(poly.ring, {rest_mono: coeff})
                    poly = (poly - SparsePoly(poly.ring, {mono: coeff})) + quotient * repl
                    changed = True
                    break
            if changed:
                break
    return poly


def _homotopy_concrete(mode: str, n: int, ring, omit_uv_relation: bool) -> bool:
    # variables: a=0, b=1, t=2, u_j=3..n+2, v_j=n+3..2n+2
    a = SparsePoly.variable(ring, 0)
    b = SparsePoly.variable(ring, 1)
    t = SparsePoly.variable(ring, 2)
    u = [SparsePoly.variable(ring, 3 + j) for j in range(n)]
    v = [SparsePoly.variable(ring, 3 + n + j) for j in range(n)]
    i_c = SparsePoly.constant(ring, ring.sqrt_minus_one())

    coords = []
    for j in range(n):
        base = u[j] * a + v[j] * b
        coords.append(t * base if mode == "second" else base)
    if mode == "first":
        coords += [t * a - t * i_c * b, t * i_c * a + t * b]
    elif mode == "second":
        coords += [a - t * i_c * b, t * i_c * a + b]
    else:
        raise ValueError(f"unknown homotopy mode {mode!r}")

    defect = poly_sum((c * c for c in coords), ring) - (a * a + b * b)

    one = SparsePoly.constant(ring, 1)
    un, vn = 3 + n - 1, 3 + 2 * n - 1
    sum_uu = poly_sum((u[j] * u[j] for j in range(n - 1)), ring)
    sum_vv = poly_sum((v[j] * v[j] for j in range(n - 1)), ring)
    sum_uv = poly_sum((u[j] * v[j] for j in range(n - 1)), ring)
    rules = [
        (((un, 2),), one - sum_uu),
        (((vn, 2),), one - sum_vv),
    ]
    if not omit_uv_relation:
        rules.append((tuple(sorted(((un, 1), (vn, 1)))), -sum_uv))
    return _reduce_modulo(defect, rules).is_zero


def homotopy_invariance_check(
    mode: str,
    n: int | str = "formal",
    *,
    omit_uv_relation: bool = False,
    ring: CoeffRing | None = None,
) -> bool:
    """Check that the two contraction homotopies of the standard line inside a
    deleted quadric preserve the defining inequation: the sum of squares of
    the n+2 image coordinates must equal a^2 + b^2 identically, given
    sum u^2 = 1, sum v^2 = 1, sum u*v = 0.

    ``mode='first'`` uses coordinates (u_j a + v_j b, ..., ta - tib, tia + tb);
    ``mode='second'`` uses (t u_j a + t v_j b, ..., a - tib, tia + b).

    With ``n='formal'`` the three sums are symbolic; a concrete integer n
    spells out the u's and v's and reduces modulo the three relations.
    Dropping the orthogonality relation must break the identity (the
    residual cross term in ab survives), which is exposed via
    ``omit_uv_relation``.
    """
    if ring is None:
        ring = gaussian_ext(IntegerRing())
    if ring.sqrt_minus_one() is None:
        raise ValueError("ring has no square root of -1")
    if n == "formal":
        return _homotopy_formal(mode, ring, omit_uv_relation)
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be 'formal' or a positive integer")
    return _homotopy_concrete(mode, n, ring, omit_uv_relation)
