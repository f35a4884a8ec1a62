"""Tour of composition formulas: construction, verification, serialization.

Run:  python demos/verify_classics.py
"""

from sosforms import (
    SosFormula,
    ZZ,
    construct_classical,
    construct_hurwitz_radon,
    construct_trivial,
    orthonormal_vectors,
    rho,
)
from sosforms.rings import PrimeField

print("=== the classical 2/4/8-square identities ===")
for kind in ("two", "four", "eight"):
    f = construct_classical(kind)
    print(f"{kind:>6}: type {f.type_triple}, "
          f"expansion={f.verify_by_expansion()}, hurwitz={f.verify_by_hurwitz()}")

print("\nThe Gauss identity written out (z_k as polynomials):")
gauss = construct_classical("two")
names = {0: "x1", 1: "x2", 2: "y1", 3: "y2"}
for k, z in enumerate(gauss.z_polys(), start=1):
    print(f"  z{k} = {z.to_text(names)}")

print("\n=== a formula that is NOT a composition identity ===")
bad = SosFormula(1, 1, 1, ZZ, [[[2]]])  # z = 2xy
print(f"  z = 2*x*y has defect {bad.expansion_defect().to_text({0: 'x', 1: 'y'})}")

print("\n=== the trivial [r, s, rs] family ===")
f = construct_trivial(2, 3)
print(f"  trivial(2,3): type {f.type_triple}, verified={f.verify_by_expansion()}")

print("\n=== Hurwitz-Radon formulas [rho(n), n, n] ===")
for n in (1, 2, 4, 8, 16, 24, 32):
    f = construct_hurwitz_radon(n)
    print(f"  n={n:>2}: rho(n)={rho(n):>2}, type {f.type_triple}, "
          f"verified={f.verify_by_expansion()}")

print("\nRestricting Degen [8,8,8] to [5,5,8]:")
small = construct_classical("eight").restrict(5, 5)
print(f"  type {small.type_triple}, verified={small.verify_by_expansion()}")

print("\nReducing the octonion identity mod 3 and mod 5:")
for p in (3, 5):
    g = construct_classical("eight").change_ring(PrimeField(p))
    print(f"  mod {p}: verified={g.verify_by_expansion()}")

print("\nFirst-column vectors of a verified formula are orthonormal:")
u, v, ok = orthonormal_vectors(construct_classical("four"))
print(f"  u={u}  v={v}  relations hold: {ok}")

print("\nJSON round trip (bit-exact):")
blob = gauss.to_json()
print(f"  {blob}")
print(f"  parses back equal: {SosFormula.from_json(blob) == gauss}")
