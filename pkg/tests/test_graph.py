import random
from collections import Counter

import pytest

from parybent.core import (
    PAryFunction,
    even_function_from_pair_values,
    function_from_anf_text,
)
from parybent.golden import GF3_2_BENT_TABLES, GF5_2_X02X0X1_WSRG
from parybent.graph import (
    build_cayley_graph,
    connected_components,
    distance_regularity_check,
    emit_dot,
    is_strongly_regular_unweighted,
    matrix_walk_counts,
    spectrum_via_fourier,
    weighted_srg_verdict,
)

B8 = PAryFunction(3, 2, GF3_2_BENT_TABLES[8])
NOT_BENT = PAryFunction.from_values(3, 2, [0, 1, 1, 2, 0, 1, 2, 1, 0])


def test_matrix_first_rows():
    g = build_cayley_graph(B8)
    assert g.matrix_rows()[0] == "0 2 2 0 0 1 0 1 0"
    h = build_cayley_graph(function_from_anf_text("x0^2+x0*x1", 5, 2))
    assert h.matrix_rows()[0] == (
        "0 1 4 4 1 0 2 1 2 0 0 3 3 0 4 0 4 0 3 3 0 0 2 1 2"
    )
    assert (build_cayley_graph(PAryFunction.zero(3, 2)).weight_matrix == 0).all()


def test_full_matrix_of_worked_example():
    g = build_cayley_graph(NOT_BENT)
    expected = [
        "0 1 1 2 0 1 2 1 0", "1 0 1 1 2 0 0 2 1", "1 1 0 0 1 2 1 0 2",
        "2 1 0 0 1 1 2 0 1", "0 2 1 1 0 1 1 2 0", "1 0 2 1 1 0 0 1 2",
        "2 0 1 2 1 0 0 1 1", "1 2 0 0 2 1 1 0 1", "0 1 2 1 0 2 1 1 0",
    ]
    assert g.matrix_rows() == expected


def test_slice_partition_and_loop_flag():
    rng = random.Random(0)
    for _ in range(20):
        f = PAryFunction(3, 2, (0,) + tuple(rng.randrange(3) for _ in range(8)))
        g = build_cayley_graph(f)
        assert (sum(g.slices) == 1).all()
        assert not g.has_loops
    g = build_cayley_graph(PAryFunction(3, 2, (1,) * 9))
    assert g.has_loops


def test_slice_identity_b8():
    A = build_cayley_graph(B8).slices
    assert (A[1] @ A[3] == 2 * A[2] + A[3]).all()


def test_slices_commute_for_even():
    for vals in [(0, 2, 2, 0, 0, 1, 0, 1, 0), (0, 1, 1, 2, 0, 1, 2, 1, 0)]:
        A = build_cayley_graph(PAryFunction(3, 2, vals)).slices
        for i in range(4):
            for j in range(4):
                assert (A[i] @ A[j] == A[j] @ A[i]).all()


def test_row_sums_match_degrees():
    rng = random.Random(3)
    for p, n in [(3, 2), (5, 2)]:
        pairs = (p**n - 1) // 2
        f = even_function_from_pair_values(
            p, n, [rng.randrange(p) for _ in range(pairs)]
        )
        g = build_cayley_graph(f)
        assert (g.unweighted_adjacency().sum(axis=1) == g.omega()).all()
        assert (g.weight_matrix.sum(axis=1) == g.sigma()).all()


def test_connected_components_examples():
    assert connected_components(
        build_cayley_graph(PAryFunction.from_values(3, 2, [0, 0, 0, 1, 0, 0, 1, 0, 0]))
    )[0] == 3
    assert connected_components(build_cayley_graph(NOT_BENT))[0] == 1
    assert connected_components(build_cayley_graph(PAryFunction.zero(3, 2)))[0] == 9


def test_connected_components_random_cross_check():
    # BFS count is re-derived from the span formula inside the call
    rng = random.Random(12)
    for p, n in [(3, 2), (3, 3), (5, 2)]:
        for _ in range(1000):
            f = PAryFunction(
                p, n, (0,) + tuple(rng.randrange(p) for _ in range(p**n - 1))
            )
            connected_components(build_cayley_graph(f))


def test_spectrum_via_fourier_examples():
    spec = spectrum_via_fourier(build_cayley_graph(NOT_BENT), weighted=True)
    assert sorted(v.is_rational() for v in spec) == [-4, -4, -1, -1, -1, -1, 2, 2, 8]
    f33 = PAryFunction.from_values(
        3, 3,
        [0, 2, 2, 1, 1, 1, 1, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 0, 2, 1, 0, 1, 0, 0, 1, 0, 2],
    )
    spec33 = spectrum_via_fourier(build_cayley_graph(f33), weighted=False)
    assert Counter(v.is_rational() for v in spec33) == {18: 1, 3: 6, 0: 8, -3: 12}
    zero = spectrum_via_fourier(build_cayley_graph(PAryFunction.zero(3, 2)))
    assert all(v.is_rational() == 0 for v in zero)


def test_spectrum_rejects_odd_functions():
    odd = [0] * 9
    odd[1] = 1
    with pytest.raises(ValueError):
        spectrum_via_fourier(build_cayley_graph(PAryFunction.from_values(3, 2, odd)))


def test_unweighted_srg_examples():
    b2 = PAryFunction(3, 2, GF3_2_BENT_TABLES[2])
    assert is_strongly_regular_unweighted(build_cayley_graph(b2)) == (9, 4, 1, 2)
    g = build_cayley_graph(function_from_anf_text("x0^2+x0*x1", 5, 2))
    assert is_strongly_regular_unweighted(g) == (25, 16, 9, 12)
    h = build_cayley_graph(function_from_anf_text("x0^4+2x0*x1", 5, 2))
    assert is_strongly_regular_unweighted(h) is None
    # complete and empty graphs fall outside the convention
    assert is_strongly_regular_unweighted(build_cayley_graph(PAryFunction(3, 2, GF3_2_BENT_TABLES[1]))) is None
    assert is_strongly_regular_unweighted(build_cayley_graph(PAryFunction.zero(3, 2))) is None


def test_weighted_srg_worked_example_cells():
    wv = weighted_srg_verdict(build_cayley_graph(NOT_BENT))
    assert wv.is_edge_weighted_srg
    assert wv.single("mu", (2, 2)) == 0
    assert wv.single("k", (2, 2)) == 2
    assert wv.single("lambda", (2, 2, 2)) == 1
    assert wv.single("lambda", (2, 2, 1)) == 0
    assert wv.single("mu", (2, 1)) == 2
    assert wv.single("k", (2, 1)) == 0
    assert wv.single("lambda", (2, 1, 2)) == 0
    assert wv.single("lambda", (2, 1, 1)) == 1
    assert wv.single("mu", (1, 1)) == 2
    assert wv.single("k", (1, 1)) == 4
    assert wv.single("lambda", (1, 1, 2)) == 2
    assert wv.single("lambda", (1, 1, 1)) == 1


def test_weighted_srg_second_worked_example():
    f = PAryFunction.from_values(3, 2, [0, 2, 2, 2, 0, 1, 2, 1, 0])
    wv = weighted_srg_verdict(build_cayley_graph(f))
    assert wv.is_edge_weighted_srg
    assert wv.single("mu", (1, 1)) == 0 and wv.single("k", (1, 1)) == 2
    assert wv.single("lambda", (1, 2, 2)) == 1
    assert wv.single("mu", (2, 2)) == 2 and wv.single("k", (2, 2)) == 4
    assert wv.single("lambda", (2, 2, 1)) == 2


def test_weighted_srg_non_constant_cells_gf27():
    f = PAryFunction.from_values(
        3, 3,
        [0, 2, 2, 1, 1, 1, 1, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 0, 2, 1, 0, 1, 0, 0, 1, 0, 2],
    )
    wv = weighted_srg_verdict(build_cayley_graph(f))
    assert not wv.is_edge_weighted_srg
    assert wv.cell("mu", (1, 1)) == (4, 6)
    assert wv.single("k", (1, 1)) == 12
    assert wv.single("lambda", (1, 1, 1)) == 5
    assert wv.cell("lambda", (1, 2, 1)) == (2, 4)
    assert wv.cell("mu", (2, 2)) == (0, 2)
    assert wv.single("lambda", (2, 2, 2)) == 1


def test_weighted_srg_gf27_quadratic_block():
    # x0*x1 + x2^2 carries a constant parameter block with mu_11 = 6
    f = function_from_anf_text("x0*x1 + x2^2", 3, 3)
    wv = weighted_srg_verdict(build_cayley_graph(f))
    assert wv.is_edge_weighted_srg
    assert wv.single("mu", (1, 1)) == 6 and wv.single("k", (1, 1)) == 12
    assert wv.single("lambda", (1, 1, 1)) == 5 and wv.single("lambda", (1, 1, 2)) == 4
    assert wv.single("mu", (1, 2)) == 3 and wv.single("lambda", (1, 2, 1)) == 2
    assert wv.single("mu", (2, 2)) == 0 and wv.single("k", (2, 2)) == 6


def test_weighted_srg_full_gf25_block():
    wv = weighted_srg_verdict(
        build_cayley_graph(function_from_anf_text("x0^2+x0*x1", 5, 2))
    )
    assert wv.is_edge_weighted_srg
    for (a1, a2), cells in GF5_2_X02X0X1_WSRG.items():
        assert wv.single("mu", (a1, a2)) == cells["mu"]
        assert wv.single("k", (a1, a2)) == cells["k"]
        for a3, lam in cells["lam"].items():
            assert wv.single("lambda", (a1, a2, a3)) == lam


def test_distance_regularity():
    b2 = PAryFunction(3, 2, GF3_2_BENT_TABLES[2])
    verdicts = distance_regularity_check(build_cayley_graph(b2))
    assert len(verdicts) == 1
    assert verdicts[0].is_distance_regular and verdicts[0].diameter == 2
    tri = distance_regularity_check(
        build_cayley_graph(PAryFunction.from_values(3, 2, [0, 0, 0, 1, 0, 0, 1, 0, 0]))
    )
    assert len(tri) == 3 and all(v.is_distance_regular for v in tri)
    complete = distance_regularity_check(
        build_cayley_graph(PAryFunction(3, 2, GF3_2_BENT_TABLES[1]))
    )
    assert complete[0].is_distance_regular and complete[0].diameter == 1


def test_distance_regularity_every_even_function_sample():
    rng = random.Random(21)
    for _ in range(15):
        f = even_function_from_pair_values(3, 2, [rng.randrange(3) for _ in range(4)])
        assert all(v.is_distance_regular for v in distance_regularity_check(build_cayley_graph(f)))


def test_matrix_walk_counts_f3():
    f3 = function_from_anf_text("-2x0^4 + 2x0^2 + 2x0*x1", 5, 2)
    g = build_cayley_graph(f3)
    assert matrix_walk_counts(g, [1, 1, 1])[1] == 0
    assert matrix_walk_counts(g, [1, 1, 2])[1] == 0
    assert matrix_walk_counts(g, [1, 2, 2])[1] == 200
    assert matrix_walk_counts(g, [3, 3, 3])[1] == 300
    assert matrix_walk_counts(g, [1, 1, 5])[1] == 100
    assert matrix_walk_counts(g, [2, 5, 5])[1] == 400
    assert matrix_walk_counts(g, [0, 0, 0])[1] == 25
    with pytest.raises(ValueError):
        matrix_walk_counts(g, [6])


def test_emit_dot_shape():
    dot = emit_dot(build_cayley_graph(B8))
    assert dot.startswith("graph cayley {")
    assert 'v0 -- v1 [label="2"]' in dot
