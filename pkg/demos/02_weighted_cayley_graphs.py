"""Edge-weighted Cayley graphs: matrices, spectra, strong regularity.

The graph of f puts an edge of weight f(u - v) between u and v; per-weight
0/1 slices A_1, ..., A_(p-1) plus the identity A_0 and the complement A_p
partition the all-ones matrix and span a commutative matrix ring when f is
even.
"""

from parybent import (
    PAryFunction,
    build_cayley_graph,
    connected_components,
    distance_regularity_check,
    is_strongly_regular_unweighted,
    matrix_walk_counts,
    spectrum_via_fourier,
    weighted_srg_verdict,
)

f = PAryFunction.from_values(3, 2, [0, 2, 2, 0, 0, 1, 0, 1, 0])
g = build_cayley_graph(f)
print("weighted adjacency matrix of", f.values)
for row in g.matrix_rows():
    print(" ", row)

# the slice ring: here A_1 A_3 = 2 A_2 + A_3 holds, and all slices commute
A = g.slices
print("A1*A3 == 2*A2 + A3:", (A[1] @ A[3] == 2 * A[2] + A[3]).all())
print("slices commute:", all(
    (A[i] @ A[j] == A[j] @ A[i]).all() for i in range(4) for j in range(4)
))
print("closed 3-walks of weight pattern (1,1,1):", matrix_walk_counts(g, [1, 1, 1])[1])
print()

# connectivity matches p^(n - dim span(supp f)) — three triangles here
t = PAryFunction.from_values(3, 2, [0, 0, 0, 1, 0, 0, 1, 0, 0])
gt = build_cayley_graph(t)
print("components of", t.values, "->", connected_components(gt)[0])
print("each component distance regular:",
      [v.is_distance_regular for v in distance_regularity_check(gt)])
print()

# the spectrum of the weighted graph is the multiset of Fourier values of
# the integer lift, certified by the exact eigen-relation F v_a = fhat(-a) v_a
w = PAryFunction.from_values(3, 2, [0, 1, 1, 2, 0, 1, 2, 1, 0])
gw = build_cayley_graph(w)
print("weighted spectrum:", sorted(
    (v.is_rational() for v in spectrum_via_fourier(gw)), reverse=True
))

# unweighted strong regularity and the full edge-weighted verdict
b2 = PAryFunction.from_values(3, 2, [0, 2, 2, 1, 0, 0, 1, 0, 0])
print("unweighted SRG parameters of b2-graph:",
      is_strongly_regular_unweighted(build_cayley_graph(b2)))
verdict = weighted_srg_verdict(gw)
print("edge-weighted strongly regular:", verdict.is_edge_weighted_srg)
print("  k(1,1) =", verdict.single("k", (1, 1)),
      " mu(1,1) =", verdict.single("mu", (1, 1)),
      " lambda(1,1,2) =", verdict.single("lambda", (1, 1, 2)))
