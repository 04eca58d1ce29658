import random

import pytest

from parybent.core import PAryFunction, function_from_anf_text, signature
from parybent.golden import (
    GF3_2_BENT_TABLES,
    GF3_2_NEGATION_PAIRS,
    GF3_2_SUPPORTS,
    GF5_2_REPS,
    GF5_2_SCALAR_CLOSED,
    GF5_2_SCALAR_RELATIONS,
)
from parybent.orbits import (
    act,
    enumerate_gl,
    gl_order,
    orbit_partition,
    scalar_relations,
)
from parybent.transforms import walsh_transform

B = {k: PAryFunction(3, 2, v) for k, v in GF3_2_BENT_TABLES.items()}


def test_gl_orders():
    assert len(enumerate_gl(2, 3)) == 48
    assert len(enumerate_gl(2, 5)) == 480
    assert len(enumerate_gl(3, 3)) == 11232
    assert gl_order(3, 3) == 11232


def test_gl_guard():
    with pytest.raises(ValueError):
        enumerate_gl(3, 5)


def test_act_identity_and_negation():
    f = B[1]
    assert act([[1, 0], [0, 1]], f) == f
    assert act([[2, 0], [0, 2]], f) == f  # -I fixes even functions
    with pytest.raises(ValueError):
        act([[1, 1], [1, 1]], f)
    with pytest.raises(ValueError):
        act([[1, 0, 0], [0, 1, 0], [0, 0, 1]], f)


def test_act_walsh_covariance():
    # W_(f o phi)(u) = W_f((phi^-1)^T u)
    phi = [[1, 1], [0, 1]]
    phi_inv_T = [[1, 0], [2, 1]]  # inverse transpose of phi mod 3
    f = B[2]
    g = act(phi, f)
    spec_f = walsh_transform(f)
    spec_g = walsh_transform(g)
    from parybent.core import index_vector, vector_index

    for u in range(9):
        uv = index_vector(u, 3, 2)
        image = tuple(
            sum(phi_inv_T[r][c] * uv[c] for c in range(2)) % 3 for r in range(2)
        )
        assert spec_g.values[u] == spec_f.values[vector_index(image, 3)]


def test_act_preserves_invariants():
    rng = random.Random(6)
    from parybent.transforms import classify_regularity

    mats = enumerate_gl(2, 3)
    for _ in range(10):
        phi = rng.choice(mats)
        f = B[rng.choice(list(B))]
        g = act(phi, f)
        assert signature(g) == signature(f)
        pf, pg = classify_regularity(f), classify_regularity(g)
        assert (pf.is_bent, pf.is_weakly_regular, pf.is_regular) == (
            pg.is_bent, pg.is_weakly_regular, pg.is_regular
        )


def test_orbit_partition_32(classification_32):
    report = classification_32.orbit_report
    assert sorted(report.sizes()) == [6, 12]
    assert report.total() == 18
    by_size = {o.size: o for o in report.orbits}
    assert by_size[12].attributes["regular"]
    assert by_size[6].attributes["weakly_regular"]
    assert not by_size[6].attributes["regular"]


def test_orbit_partition_closure_violation():
    with pytest.raises(ValueError, match="not closed"):
        orbit_partition([B[1], B[2]], 3, 2)


def test_orbit_partition_rejects_duplicates():
    with pytest.raises(ValueError, match="duplicate"):
        orbit_partition([B[1], B[1]], 3, 2)


def test_negation_relations():
    for a, b in GF3_2_NEGATION_PAIRS:
        assert B[a].scale_output(2) == B[b]


def test_support_partnering():
    from parybent.core import support

    for supp, (a, b) in GF3_2_SUPPORTS.items():
        assert support(B[a]) == set(supp)
        assert support(B[b]) == set(supp)


def test_scalar_relations_32(classification_32):
    rel = scalar_relations(classification_32.orbit_report)
    # scaling by 2 = negation maps each orbit to itself here
    for (a, src), dst in rel.items():
        assert src == dst


def test_scalar_relations_52(classification_52):
    report = classification_52.orbit_report
    orbit_of = {
        name: report.orbit_of(function_from_anf_text(text, 5, 2))
        for name, text in GF5_2_REPS.items()
    }
    rel = scalar_relations(report)
    for o in report.orbits:  # a = 1 is the identity relation
        assert rel[(1, o.orbit_id)] == o.orbit_id
    for name in GF5_2_SCALAR_CLOSED:
        for a in (2, 3, 4):
            assert rel[(a, orbit_of[name])] == orbit_of[name]
    for (name, a), target in GF5_2_SCALAR_RELATIONS.items():
        assert rel[(a, orbit_of[name])] == orbit_of[target]


def test_orbit_report_serialization(classification_32):
    report = classification_32.orbit_report
    data = report.to_json()
    assert data["total"] == 18
    assert {o["size"] for o in data["orbits"]} == {6, 12}
    csv = report.to_csv()
    assert csv.splitlines()[0].startswith("orbit_id,size,signature")
    assert len(csv.splitlines()) == 3
