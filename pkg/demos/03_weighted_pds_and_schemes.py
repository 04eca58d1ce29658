"""Partial difference sets, their weighted refinement, and schemes.

The nonzero quadratic residues of GF(9) = GF(3)[x]/(x^2+1), read as vectors
(a, b) <-> a + b*x over GF(3)^2, form the classical (9,4,1,2) PDS; splitting
them into {1, 2} and {x, 2x} refines it into a weighted PDS whose structure
constants generate a 3-class association scheme.
"""

from parybent import (
    LevelCurves,
    build_association_scheme,
    complement_pds_params,
    function_from_anf_text,
    intersection_numbers_direct,
    intersection_numbers_trace,
    is_pds,
    is_weighted_pds,
    latin_square_type,
)

D = {1, 2, 3, 6}  # indices of 1, 2, x, 2x
params = is_pds(3, 2, D)
print("quadratic residues of GF(9):", params)
print("complement parameters:", complement_pds_params(params))
print("Latin-square typings:", latin_square_type(*params))
print()

curves = LevelCurves.from_parts(3, 2, {1: {1, 2}, 2: {3, 6}})
report = is_weighted_pds(curves)
print("weighted refinement {1,2} | {x,2x}: weighted PDS:", report.is_weighted_pds)
print("  lambda(1,1,1) =", report.lam[(1, 1, 1)], " mu(1,2) =", report.mu[(1, 2)])
scheme = build_association_scheme(curves)
print("  association scheme classes:", scheme.class_indices)
print()

# the level curves of the regular bent function -x0*x1 + x1^2 over GF(5)^2
# form a weighted PDS with a full 6-class scheme
f2 = function_from_anf_text("-x0*x1 + x1^2", 5, 2)
c2 = LevelCurves.from_function(f2)
print("level-curve sizes of -x0*x1 + x1^2:", c2.sizes())
t = intersection_numbers_direct(c2)
print("p_ij^1 table:")
for i in range(6):
    print("  ", [t.entry(i, j, 1) for j in range(6)])
print("scheme classes:", build_association_scheme(c2).class_indices)
print()

# a bent function whose curves do NOT form a weighted PDS: the trace
# formula certifies it with non-integer structure constants
f3 = function_from_anf_text("-2x0^4 + 2x0^2 + 2x0*x1", 5, 2)
trace = intersection_numbers_trace(LevelCurves.from_function(f3))
print("-2x0^4 + 2x0^2 + 2x0*x1: p_11^5 =", trace.entry(1, 1, 5),
      "(not an integer -> no edge-weighted SRG)")
