"""Binomial-parity combinatorics: the Hopf condition, lower-bound tables,
and the Hurwitz-Radon function for the matching upper bounds.

The Hopf condition for a triple (r, s, n) requires C(n, i) to be even for
every integer i with n - r < i < s; it is necessary for the existence of an
[r, s, n] composition formula over any field of characteristic != 2.  Parity
is computed two independent ways: the Lucas bit test (C(n, i) is odd exactly
when i is a bit-submask of n) and Pascal's triangle mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

# n may always be grown to the next power of two, so the search below is
# bounded; the cap only guards against absurd inputs.
_LOWER_BOUND_CAP = 2 ** 20


class HopfTriple(NamedTuple):
    """A type triple (r, s, n); unpacks into hopf_admissible(*t).

    Admissibility is symmetric in r and s, since C(n, i) = C(n, n-i) carries
    the tested range n - r < i < s onto n - s < i < r.
    """

    r: int
    s: int
    n: int


def binom_is_odd(n: int, i: int) -> bool:
    """Lucas bit test; C(n, i) = 0 (even) outside 0 <= i <= n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return 0 <= i <= n and (i & n) == i


def binom_parity(n: int, i: int) -> str:
    return "odd" if binom_is_odd(n, i) else "even"


_PASCAL_ROWS: list[int] = [1]  # row k stored as a bitmask: bit i = C(k, i) mod 2


def binom_parity_pascal(n: int, i: int) -> str:
    """Independent oracle: parity read off Pascal's triangle built mod 2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    while len(_PASCAL_ROWS) <= n:
        row = _PASCAL_ROWS[-1]
        _PASCAL_ROWS.append(row ^ (row << 1))
    if i < 0 or i > n:
        return "even"
    return "odd" if (_PASCAL_ROWS[n] >> i) & 1 else "even"


def hopf_admissible(r: int, s: int, n: int) -> bool:
    """True iff C(n, i) is even for every i with n - r < i < s."""
    if min(r, s, n) < 1:
        raise ValueError("r, s, n must be positive")
    for i in range(max(n - r + 1, 0), min(s, n + 1)):
        if (i & n) == i:
            return False
    return True


def hopf_violation_witness(r: int, s: int, n: int) -> int | None:
    """The smallest i in the tested range with C(n, i) odd, if any."""
    for i in range(max(n - r + 1, 0), min(s, n + 1)):
        if (i & n) == i:
            return i
    return None


def hopf_lower_bound(r: int, s: int) -> int:
    """Smallest n >= max(r, s) passing the Hopf condition for (r, s).

    Always exists: any power of two n >= max(r, s) is admissible, since
    C(2^k, i) is even for 0 < i < 2^k.
    """
    if r < 1 or s < 1:
        raise ValueError("r, s must be positive")
    n = max(r, s)
    while n <= _LOWER_BOUND_CAP:
        if hopf_admissible(r, s, n):
            return n
        n += 1
    raise ValueError("no admissible n below the cap; inputs are out of scope")


def rho(n: int) -> int:
    """Hurwitz-Radon function: for n = 2^(4a+b) * odd with 0 <= b <= 3,
    rho(n) = 8a + 2^b.  This is the largest r with a classical [r, n, n]
    formula."""
    if n < 1:
        raise ValueError("n must be positive")
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    a, b = divmod(t, 4)
    return 8 * a + 2 ** b


def hurwitz_radon_upper_bound(r: int, s: int) -> int:
    """Smallest n with rho(n) >= r and n >= s, so that the [rho(n), n, n]
    family restricts to an [r, s, n] formula."""
    if r < 1 or s < 1:
        raise ValueError("r, s must be positive")
    n = s
    while rho(n) < r:
        n += 1
    return n


@dataclass(frozen=True)
class BoundEntry:
    r: int
    s: int
    hopf_lower: int
    construct_upper: int
    tight: bool


def bound_table(rmax: int, smax: int, verify: bool = True) -> list[BoundEntry]:
    """For each (r, s) up to (rmax, smax): the Hopf lower bound on the
    composition range, the upper bound realized by restricting a
    Hurwitz-Radon formula, and whether they meet.

    With ``verify`` set, each upper bound is actually realized: the
    restricted formula is built and checked by expansion.
    """
    if rmax < 1 or smax < 1:
        raise ValueError("bounds must be >= 1")
    from .formulas import construct_hurwitz_radon  # deferred: avoids import cycle

    hr_cache: dict[int, object] = {}
    entries = []
    for r in range(1, rmax + 1):
        for s in range(1, smax + 1):
            lower = hopf_lower_bound(r, s)
            upper = hurwitz_radon_upper_bound(r, s)
            if verify:
                if upper not in hr_cache:
                    hr_cache[upper] = construct_hurwitz_radon(upper)
                restricted = hr_cache[upper].restrict(r, s)
                if not restricted.verify_by_expansion():
                    raise AssertionError(
                        f"restricted Hurwitz-Radon formula [{r},{s},{upper}] failed to verify"
                    )
            entries.append(BoundEntry(r, s, lower, upper, lower == upper))
    return entries


def bound_table_csv(entries: list[BoundEntry]) -> str:
    lines = ["r,s,hopf_lower,construct_upper,tight"]
    for e in entries:
        lines.append(f"{e.r},{e.s},{e.hopf_lower},{e.construct_upper},{str(e.tight).lower()}")
    return "\n".join(lines) + "\n"


def bound_table_text(entries: list[BoundEntry]) -> str:
    header = f"{'r':>3} {'s':>3} {'lower':>6} {'upper':>6}  tight"
    lines = [header, "-" * len(header)]
    for e in entries:
        mark = "yes" if e.tight else "no"
        lines.append(f"{e.r:>3} {e.s:>3} {e.hopf_lower:>6} {e.construct_upper:>6}  {mark}")
    return "\n".join(lines) + "\n"
