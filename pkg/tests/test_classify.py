import pytest

from theta_parity.classify import (ClassifyConfig, SPORADIC_TRIPLES, Triple,
                                   VERIFIED, REFUTED, brute_search,
                                   candidate_filter, egyptian_a,
                                   enumerate_candidates, family_criterion,
                                   run_classification, theorem_prediction,
                                   verify_triple)
from theta_parity.numth import is_square, vp
from theta_parity.quadform import repcount


def test_egyptian_a_examples():
    assert egyptian_a(6, 12) == 4
    assert egyptian_a(8, 8) == 4
    assert egyptian_a(5, 7) is None


def test_candidate_filter_examples():
    assert candidate_filter(6, 12) is None
    reason = candidate_filter(18, 36)
    assert reason is not None and "v3" in reason
    assert candidate_filter(24, 264) is None   # decoy: passes, refuted by series


def test_candidate_filter_requires_ordered_pair():
    with pytest.raises(ValueError):
        candidate_filter(12, 6)


def test_family_criterion_examples():
    assert family_criterion(4)
    assert not family_criterion(16)
    assert family_criterion(24)
    assert not family_criterion(7)


def test_verify_triple_examples():
    assert verify_triple(4, 6, 12, 20000).status == VERIFIED
    cert = verify_triple(18, 24, 72, 100)
    assert cert.status == REFUTED and cert.witness == 1
    assert verify_triple(2, 4, 4, 20000).status == VERIFIED


def test_verify_triple_witness_is_first_disagreement():
    cert = verify_triple(8, 16, 16, 2000)
    assert cert.status == REFUTED
    k = cert.witness
    # below the witness the parity of the representation count matches
    for j in range(k):
        assert repcount(16, 16, j) % 2 == (1 if is_square(8 * j + 1) else 0)
    assert repcount(16, 16, k) % 2 != (1 if is_square(8 * k + 1) else 0)


def test_enumerate_candidates_contents():
    cands = enumerate_candidates()
    assert Triple(15, 24, 40) in cands
    assert Triple(18, 24, 72) in cands          # decoy, refuted by series
    assert set(SPORADIC_TRIPLES) <= set(cands)
    for t in cands:
        assert candidate_filter(t.b, t.c) is None
        assert t.b_p != t.c_p
        assert egyptian_a(t.b, t.c) == t.a
    assert cands == sorted(cands)
    assert len(cands) == len(set(cands))


def test_run_classification_small_scale():
    config = ClassifyConfig(weber_bound=6, weber_max_enumerated=50_000,
                            family_spot_max_d=60, family_spot_terms=2048)
    report = run_classification(20000, config)
    assert report.ok, report.mismatches
    assert sorted(c.triple for c in report.verified) == sorted(SPORADIC_TRIPLES)
    for cert in report.refuted:
        assert cert.witness is not None
        t, k = cert.triple, cert.witness
        assert repcount(t.b, t.c, k) % 2 != (1 if is_square(t.a * k + 1) else 0)
    for cert in report.certificates:
        if cert.status == VERIFIED:
            assert cert.weber is None
            assert cert.n_terms == 20000
    assert all(f.consistent for f in report.family_checks)
    # the lenient v2(d) <= 4 filter bound admits candidates the sharper
    # <= 3 derivation would not; all are refuted anyway
    assert report.weak_bound_admits
    assert all(vp(t.d, 2) == 4 for t in report.weak_bound_admits)


def test_classification_with_threads_matches_serial():
    config = ClassifyConfig(weber_bound=2, weber_max_enumerated=20_000,
                            family_spot_max_d=20)
    serial = run_classification(4096, config)
    threaded = run_classification(
        4096, ClassifyConfig(weber_bound=2, weber_max_enumerated=20_000,
                             family_spot_max_d=20, threads=4))
    assert [c.triple for c in serial.certificates] == \
           [c.triple for c in threaded.certificates]
    assert [c.status for c in serial.certificates] == \
           [c.status for c in threaded.certificates]


def test_theorem_prediction_small():
    assert [t.as_tuple() for t in theorem_prediction(12)] == \
        [(2, 4, 4), (4, 6, 12), (4, 8, 8), (6, 12, 12)]


def test_brute_search_example_bound_40():
    found = brute_search(40, 2000)
    families = {(2, 4, 4), (6, 12, 12), (10, 20, 20), (14, 28, 28),
                (18, 36, 36), (4, 8, 8), (12, 24, 24), (20, 40, 40)}
    sporadics = {(4, 6, 12), (6, 8, 24), (8, 12, 24), (15, 24, 40)}
    assert {t.as_tuple() for t in found} == families | sporadics
    assert found == theorem_prediction(40)


def test_brute_search_minimal_bound():
    assert [t.as_tuple() for t in brute_search(4, 100)] == [(2, 4, 4)]


def test_brute_search_results_satisfy_known_necessities():
    found = brute_search(60, 2000)
    for t in found:
        assert egyptian_a(t.b, t.c) == t.a
        if t.b_p == t.c_p:
            assert t.b_p == 1 and family_criterion(t.d)
        else:
            assert candidate_filter(t.b, t.c) is None


def test_brute_search_validation():
    with pytest.raises(ValueError):
        brute_search(3, 100)


def test_triple_validation():
    with pytest.raises(ValueError):
        Triple(4, 12, 6)
    with pytest.raises(ValueError):
        Triple(0, 4, 6)
    t = Triple(15, 24, 40)
    assert (t.d, t.b_p, t.c_p) == (8, 3, 5)
