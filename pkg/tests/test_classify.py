import json

import pytest

from parybent.classify import classify, conjecture_report, lemma34_check
from parybent.fastscan import (
    bent_candidate_indices,
    candidate_count,
    incremental_bent_scan,
)


def test_scale_guard_message():
    with pytest.raises(ValueError, match="outside the classified scope"):
        classify(7, 2)
    with pytest.raises(ValueError, match=str(candidate_count(7, 2))):
        classify(7, 2)


def test_candidate_space_sizes():
    assert candidate_count(3, 2) == 81
    assert candidate_count(3, 3) == 1_594_323
    assert candidate_count(5, 2) == 244_140_625


def test_report_byte_stability():
    a = classify(3, 2)
    b = classify(3, 2)
    dump = lambda r: json.dumps(r.to_json(), sort_keys=True)
    # elapsed differs between runs; everything else must be byte-identical
    ja, jb = a.to_json(), b.to_json()
    ja.pop("elapsed_seconds"), jb.pop("elapsed_seconds")
    assert json.dumps(ja, sort_keys=True) == json.dumps(jb, sort_keys=True)
    assert a.orbit_report.to_csv() == b.orbit_report.to_csv()


def test_incremental_matches_full_gf27():
    full = bent_candidate_indices(3, 3, method="full")
    fast = bent_candidate_indices(3, 3, method="incremental")
    assert full == fast


def test_incremental_scan_jobs_param():
    one = incremental_bent_scan(3, 3, jobs=1)
    two = incremental_bent_scan(3, 3, jobs=2)
    assert one == two and len(one) == 2340


def test_checkpoint_resume(tmp_path):
    ckpt = tmp_path / "scan.json"
    complete = incremental_bent_scan(3, 3, checkpoint_path=str(ckpt))
    state = json.loads(ckpt.read_text())
    assert len(state["blocks_done"]) == 3 ** state["d0"]
    # drop half the finished blocks (and their found entries): the resumed
    # run must still produce the identical sorted result
    keep = set(state["blocks_done"][::2])
    suffix = 3 ** (13 - state["d0"])
    state["blocks_done"] = sorted(keep)
    state["found"] = [c for c in state["found"] if c // suffix in keep]
    ckpt.write_text(json.dumps(state))
    resumed = incremental_bent_scan(3, 3, checkpoint_path=str(ckpt))
    assert resumed == complete
    # a fully complete checkpoint resumes to the same answer without work
    again = incremental_bent_scan(3, 3, checkpoint_path=str(ckpt))
    assert again == complete


def test_checkpoint_mismatched_parameters_ignored(tmp_path):
    ckpt = tmp_path / "scan.json"
    ckpt.write_text(json.dumps({"p": 5, "n": 2, "d0": 4,
                                "blocks_done": [0], "found": [123]}))
    out = incremental_bent_scan(3, 3, checkpoint_path=str(ckpt))
    assert len(out) == 2340  # stale state for another (p, n) is discarded


def test_unsafe_scale_allows_small_offscope_runs():
    # over GF(2) negation is the identity, so every f with f(0) = 0 counts:
    # 2^15 candidates for n = 4, of which 448 are bent
    result = classify(2, 4, unsafe_scale=True, verify_invariants=False)
    assert result.candidate_total == 2**15
    assert result.bent_count == 448
    assert result.golden_ok  # no golden data applies off scope


def test_lemma34_rows_complete():
    out = lemma34_check()
    assert len(out["rows"]) == 18
    regular = {r["b"] for r in out["rows"] if r["regular"]}
    assert regular == {2, 3, 4, 5, 6, 7, 8, 9, 11, 14, 15, 16}
    assert all(r["weighted_srg"] for r in out["rows"])


def test_conjecture_report(classification_32, classification_33, classification_52):
    rep = conjecture_report(
        results={
            (3, 2): classification_32,
            (3, 3): classification_33,
            (5, 2): classification_52,
        }
    )
    main = rep["main_conjecture"]
    # every weighted-PDS bent orbit observed is homogeneous and weakly regular
    assert main["counterexamples"] == []
    assert len(main["observations"]) == 2 + 2 + 5
    mu = rep["mu_diagonal_conjecture"]
    assert mu["all_mu_ii_zero"]
    # the even-n observations cover the (3,2) and (5,2) suites only
    assert {(o["p"], o["n"]) for o in mu["observations"]} == {(3, 2), (5, 2)}
    w = mu["hypothesis_witness"]
    assert not w["bent"] and w["edge_weighted_srg"] and w["mu_11"] == [2]
