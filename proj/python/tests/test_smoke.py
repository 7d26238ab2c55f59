import math

import fracwave as fw


def test_validate_regimes():
    assert fw.validate(2.0, 0.3)["regime"] == "WaveSolvable"
    assert fw.validate(1.8, 0.3)["regime"] == "WaveNonSolvable"
    assert math.isclose(fw.validate(2.0, 0.3)["growth"], 1.0)


def test_identity_grid_point():
    lhs, rhs, err = fw.fbm_sine_identity(1.0, 1.0, 0.3)
    assert math.isclose(rhs, 0.25 * 2.0**0.6)
    assert abs(lhs - rhs) / rhs < 1e-3


def test_alpha_cardinality():
    assert len(fw.alpha_index_set(6)) == 32


def test_chaos_bound_dominates():
    r = fw.chaos_norm(2, 1.0, 2.0, 0.3)
    bound = fw.chaos_norm_upper_bound(2, 1.0, 2.0, 0.3)
    assert r["value"] <= bound + r["error_estimate"]


def test_probe_verdicts():
    assert fw.divergence_probe(1.6, 0.3)["verdict"] == "Divergent"
    assert fw.divergence_probe(2.0, 0.3)["verdict"] == "Convergent"


def test_moment_sandwich():
    lo = fw.second_moment_lower_log(4.0, 2.0, 0.3)
    hi = fw.second_moment_upper_log(4.0, 2.0, 0.3)
    assert 0.0 < lo <= hi


def test_lemma_suite_passes():
    assert all(c["passed"] for c in fw.lemma_suite())


def test_determinism():
    a = fw.chaos_norm(3, 1.0, 2.0, 0.3, seed=11)
    b = fw.chaos_norm(3, 1.0, 2.0, 0.3, seed=11)
    assert a["value"] == b["value"]
