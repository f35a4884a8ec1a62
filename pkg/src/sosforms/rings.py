"""Exact coefficient rings: Z, Q, GF(p) for odd p, and Gaussian extensions.

A ring object owns the arithmetic; elements are lightweight Python values
(int, Fraction, or a (re, im) pair for Gaussian extensions).  All arithmetic
is exact -- no floats anywhere.  Ring objects are immutable and compare by
structure, so they can be shared freely between threads.

Characteristic 2 is rejected at construction: every identity handled here
lives over a field (or domain) in which 2 is regular, and the matrix form of
the composition equations divides by 2.
"""

from __future__ import annotations

from fractions import Fraction


class CoeffRing:
    """Base class for coefficient rings.  Use the concrete subclasses."""

    kind: str = "?"

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def characteristic(self) -> int:
        return 0

    def sqrt_minus_one(self):
        """An element i with i*i = -1, or None if the ring has none."""
        return None

    def format_element(self, a) -> str:
        return str(a)

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, v):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.kind


class IntegerRing(CoeffRing):
    """The integers, with arbitrary-precision arithmetic."""

    kind = "Z"

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value)
            raise ValueError(f"cannot coerce {value!r} into Z")
        return value

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def element_to_json(self, a):
        return a

    def element_from_json(self, v):
        return self.coerce(v)


class RationalField(CoeffRing):
    """The rationals, backed by fractions.Fraction."""

    kind = "Q"

    def coerce(self, value):
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise ValueError(f"cannot coerce {value!r} into Q")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def element_to_json(self, a):
        return int(a) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def element_from_json(self, v):
        return self.coerce(v)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(CoeffRing):
    """GF(p) for an odd prime p; elements are canonical residues 0..p-1."""

    kind = "GF"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p

    def coerce(self, value):
        if isinstance(value, bool):
            raise ValueError("cannot coerce bool into GF(p)")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ValueError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        raise ValueError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def characteristic(self) -> int:
        return self.p

    def sqrt_minus_one(self):
        if self.p % 4 != 1:
            return None
        # i = n^((p-1)/4) for any quadratic nonresidue n
        for n in range(2, self.p):
            if pow(n, (self.p - 1) // 2, self.p) == self.p - 1:
                return pow(n, (self.p - 1) // 4, self.p)
        raise AssertionError("unreachable: every field GF(p), p>2, has nonresidues")

    def element_to_json(self, a):
        return a

    def element_from_json(self, v):
        return self.coerce(v)

    def __repr__(self):
        return f"GF({self.p})"


class GaussianExt(CoeffRing):
    """Adjoin a formal square root of -1 to a base ring.

    Elements are (re, im) pairs over the base.  Use :func:`gaussian_ext` to
    construct one: over GF(p) with p = 1 mod 4 the extension collapses,
    since -1 is already a square there.
    """

    kind = "Gaussian"

    def __init__(self, base: CoeffRing):
        if isinstance(base, GaussianExt):
            raise ValueError("base ring already contains a square root of -1")
        if isinstance(base, PrimeField) and base.p % 4 == 1:
            raise ValueError(
                f"GF({base.p}) already contains a square root of -1; "
                "use gaussian_ext() to collapse"
            )
        self.base = base

    def coerce(self, value):
        if isinstance(value, tuple) and len(value) == 2:
            return (self.base.coerce(value[0]), self.base.coerce(value[1]))
        return (self.base.coerce(value), self.base.zero())

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        # (x + yi)(u + vi) = (xu - yv) + (xv + yu)i
        x, y = a
        u, v = b
        re = self.base.sub(self.base.mul(x, u), self.base.mul(y, v))
        im = self.base.add(self.base.mul(x, v), self.base.mul(y, u))
        return (re, im)

    def characteristic(self) -> int:
        return self.base.characteristic()

    def sqrt_minus_one(self):
        return (self.base.zero(), self.base.one())

    def format_element(self, a) -> str:
        re, im = a
        if self.base.is_zero(im):
            return self.base.format_element(re)
        if self.base.is_zero(re):
            return f"{self.base.format_element(im)}*i"
        return f"({self.base.format_element(re)}+{self.base.format_element(im)}*i)"

    def element_to_json(self, a):
        return [self.base.element_to_json(a[0]), self.base.element_to_json(a[1])]

    def element_from_json(self, v):
        if isinstance(v, list) and len(v) == 2:
            return (self.base.element_from_json(v[0]), self.base.element_from_json(v[1]))
        return self.coerce(self.base.element_from_json(v))

    def __repr__(self):
        return f"{self.base!r}[i]"


def gaussian_ext(base: CoeffRing) -> CoeffRing:
    """A ring extending ``base`` in which -1 is a square.

    Returns ``base`` itself when it already has a square root of -1
    (a Gaussian extension, or GF(p) with p = 1 mod 4).
    """
    if base.sqrt_minus_one() is not None:
        return base
    return GaussianExt(base)


ZZ = IntegerRing()
QQ = RationalField()


def ring_to_json(ring: CoeffRing) -> dict:
    if isinstance(ring, IntegerRing):
        return {"kind": "Z"}
    if isinstance(ring, RationalField):
        return {"kind": "Q"}
    if isinstance(ring, PrimeField):
        return {"kind": "GF", "p": ring.p}
    if isinstance(ring, GaussianExt):
        inner = ring_to_json(ring.base)
        return {"kind": inner["kind"] + "i", **{k: v for k, v in inner.items() if k != "kind"}}
    raise ValueError(f"unknown ring {ring!r}")


def ring_from_json(data: dict) -> CoeffRing:
    kind = data.get("kind")
    if kind == "Z":
        return ZZ
    if kind == "Q":
        return QQ
    if kind == "GF":
        return PrimeField(data["p"])
    if isinstance(kind, str) and kind.endswith("i"):
        return gaussian_ext(ring_from_json({**data, "kind": kind[:-1]}))
    raise ValueError(f"unknown ring descriptor {data!r}")
