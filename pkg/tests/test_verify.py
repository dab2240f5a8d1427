import json
from fractions import Fraction

from stickelberger import verify as V


def _square(x):
    return x * x


def test_parallel_map_preserves_order(monkeypatch):
    monkeypatch.setenv("STICKELBERGER_THREADS", "3")
    assert V.worker_count() == 3
    assert V.parallel_map(_square, list(range(20))) == [x * x for x in range(20)]
    monkeypatch.setenv("STICKELBERGER_THREADS", "1")
    assert V.parallel_map(_square, [3, 1, 2]) == [9, 1, 4]


def test_conductors_skip_2_mod_4():
    assert V.conductors(12) == [1, 3, 4, 5, 7, 8, 9, 11, 12]


def test_check_result_serialization():
    res = V.CheckResult("demo", {"x": (1, 2)})
    for i in range(8):
        res.record(i % 2 == 0, {"i": i, "q": Fraction(i, 3)})
    res.finish()
    data = res.to_json()
    assert data["total"] == 8 and data["failed"] == 4 and not data["ok"]
    assert len(data["counterexamples"]) == 4
    assert data["counterexamples"][0] == {"i": 1, "q": "1/3"}
    json.dumps(data)


def test_small_sweeps_pass():
    for res in (
        V.check_integrality(12, 2, 12),
        V.check_restriction([(3, 15), (4, 12)], 2, (7,)),
        V.check_characters(9, 1, (2, 5)),
        V.check_towers([(3, 5)], 1, 1),
        V.check_euler_split(9, 5, 2),
        V.check_multiplicativity(9, 1, (2, 5, 7)),
        V.check_zeta(9, 3),
        V.check_invariants(5, 20, 4),
        V.check_oracles((3, 5)),
    ):
        assert res.ok, res.to_json()


def test_congruence_buckets():
    res = V.check_congruence(12, 2, 8)
    info = res.info["by_prime_position"]
    assert info["odd_l_dividing_f"]["failed"] == 0
    assert info["odd_l_not_dividing_f"]["failed"] > 0
    assert 0 < res.failed <= info["odd_l_not_dividing_f"]["failed"]


def test_congruence_generalized_m_is_free_of_odd_failures_at_l_dividing_f():
    for m in (1, 2):
        res = V.check_congruence(15, 3, 10, m=m)
        assert res.info["by_prime_position"]["odd_l_dividing_f"]["failed"] == 0
