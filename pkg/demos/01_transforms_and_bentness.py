"""Walsh transforms, bentness, and regularity on small worked functions.

Everything below is exact arithmetic in Z[zeta_p]: a Walsh value is stored
by its coefficients on 1, zeta, ..., zeta^(p-2), and bentness means every
|W(u)|^2 equals p^n as an integer identity.
"""

from parybent import (
    PAryFunction,
    classify_regularity,
    format_function_literal,
    function_from_anf_text,
    is_bent,
    signature,
    walsh_transform,
)

# A ternary function of two variables that is NOT bent: its Walsh moduli
# are not all equal.
f = PAryFunction.from_values(3, 2, [0, 1, 1, 2, 0, 1, 2, 1, 0])
spec = walsh_transform(f)
print("value table:", f.values)
print("|W(u)|^2 over all u:", [w.norm_sq().is_rational() for w in spec.values])
print("bent:", is_bent(f))
print()

# The quadratic x0^2 + x1^2 is bent; it is weakly regular with mu = -1 and
# its dual is read off the exponents of W(u) / W(0).
g = function_from_anf_text("x0^2 + x1^2", 3, 2)
profile = classify_regularity(g)
print("x0^2 + x1^2 over GF(3)^2")
print("  bent:", profile.is_bent)
print("  weakly regular:", profile.is_weakly_regular, "->", profile.mu_text())
print("  regular:", profile.is_regular)
print("  dual:", format_function_literal(profile.dual))
print()

# Over GF(3)^3 the quadratic x0*x1 + x2^2 is bent and weakly regular, but
# n odd with p = 3 mod 4 leaves no room for regularity: the unimodular
# factor is a quarter turn (mu^2 = -1).
h = function_from_anf_text("x0*x1 + x2^2", 3, 3)
ph = classify_regularity(h)
print("x0*x1 + x2^2 over GF(3)^3")
print("  bent:", ph.is_bent, " weakly regular:", ph.is_weakly_regular)
print("  ", ph.mu_text())
print("  signature:", signature(h))
print()

# Over GF(5)^2 the homogeneous quadratic x0^2 + x0*x1 is regular: W(0) is
# the rational number 5 = p^(n/2).
k = function_from_anf_text("x0^2 + x0*x1", 5, 2)
pk = classify_regularity(k)
print("x0^2 + x0*x1 over GF(5)^2")
print("  regular:", pk.is_regular, " W(0) =", walsh_transform(k).values[0])
