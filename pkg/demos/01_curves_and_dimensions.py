"""Tour of the curve model and the exact Riemann-Roch dimension oracle.

Run as: python demos/01_curves_and_dimensions.py
"""

import random

from puregaps import Divisor, INFINITY, KummerCurve, divisor_from_tuple, ell

# A Kummer curve is described by the exponent m, the number of affine branch
# places r, and the branch multiplicity lambda; gcd(m, lambda*r) must be 1.
curve = KummerCurve(5, 9)
print(f"curve: y^{curve.m} = f(x), deg f = {curve.r}")
print(f"genus = {curve.genus}, period between branch places = {curve.period}")
print(f"canonical divisor W = {curve.canonical_divisor()!r}")
print()

# Dimensions of Riemann-Roch spaces come out as exact integers, with the
# contribution of each residue class of the Kummer generator alongside.
zero = Divisor()
print("ell(0) =", ell(curve, zero).dim)
W = curve.canonical_divisor()
print("ell(W) =", ell(curve, W).dim, "(equals the genus)")

D = divisor_from_tuple((26, 1, 1), curve.ramified_places(3))
res = ell(curve, D)
print(f"ell({D!r}) = {res.dim}, per residue class: {res.per_residue}")
print()

# The dimension formula is validated by the Riemann-Roch identity
#   ell(D) - ell(W - D) = deg(D) + 1 - g
# on arbitrary divisors supported on the branch places and infinity.
rng = random.Random(1)
places = list(curve.ramified_places()) + [INFINITY]
print("spot-checking the Riemann-Roch identity on random divisors:")
for _ in range(5):
    D = Divisor({p: rng.randint(-6, 8) for p in rng.sample(places, 4)})
    lhs = ell(curve, D).dim - ell(curve, W - D).dim
    rhs = D.degree + 1 - curve.genus
    print(f"  deg {D.degree:>3}: ell(D) - ell(W-D) = {lhs:>3} = deg + 1 - g = {rhs:>3}")
