import pytest

import tables
from binsys import (
    CLAIMS,
    OrderTooLarge,
    PreconditionError,
    REGISTRY,
    all_groupoids,
    census,
    groupoid,
    random_groupoids,
    table_count,
    verify_claims,
)


class TestAllGroupoids:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 16), (3, 19683)])
    def test_counts(self, n, count):
        assert table_count(n) == count
        assert len(list(all_groupoids(n))) == count

    def test_lexicographic_order(self):
        tables2 = [g.table for g in all_groupoids(2)]
        assert tables2[0] == ((0, 0), (0, 0))
        assert tables2[1] == ((0, 0), (0, 1))
        assert tables2[-1] == ((1, 1), (1, 1))
        assert tables2 == sorted(tables2)

    def test_order_cap(self):
        with pytest.raises(OrderTooLarge):
            list(all_groupoids(4))

    def test_cache_returns_fresh_iterators(self):
        first = list(all_groupoids(2))
        second = list(all_groupoids(2))
        assert first == second


class TestRandomGroupoids:
    def test_deterministic(self):
        a = list(random_groupoids(4, 10, seed=5))
        b = list(random_groupoids(4, 10, seed=5))
        assert a == b

    def test_seed_matters(self):
        a = list(random_groupoids(4, 10, seed=5))
        b = list(random_groupoids(4, 10, seed=6))
        assert a != b

    def test_cells_in_range(self):
        for g in random_groupoids(5, 20, seed=0):
            assert g.order == 5


class TestCensus:
    def test_order_two_frozen(self):
        rep = census(2)
        assert rep.total == 16
        assert rep.counts == tables.CENSUS2

    def test_order_three_frozen(self):
        rep = census(3)
        assert rep.total == 19683
        assert rep.counts == tables.CENSUS3

    def test_order_one(self):
        rep = census(1)
        assert rep.total == 1
        assert rep.counts["locally_zero"] == 1
        assert rep.counts["u_composite"] == 0

    def test_order_cap(self):
        with pytest.raises(OrderTooLarge):
            census(4)

    def test_worker_count_does_not_change_results(self):
        assert census(2, workers=3).counts == tables.CENSUS2

    def test_forced_parallel_census(self):
        # weight is high enough at order 3 for the pool to engage
        assert census(3, workers=2).counts == tables.CENSUS3


class TestThreadsEnv:
    def test_invalid_env_value(self, monkeypatch):
        monkeypatch.setenv("BINSYS_THREADS", "many")
        with pytest.raises(PreconditionError):
            census(3)

    def test_zero_env_value(self, monkeypatch):
        monkeypatch.setenv("BINSYS_THREADS", "0")
        with pytest.raises(PreconditionError):
            census(3)

    def test_env_respected(self, monkeypatch):
        monkeypatch.setenv("BINSYS_THREADS", "2")
        assert census(2).counts == tables.CENSUS2


class TestRegistry:
    def test_ids_unique_and_indexed(self):
        assert len({c.id for c in CLAIMS}) == len(CLAIMS) == 40
        assert all(REGISTRY[c.id] is c for c in CLAIMS)

    def test_expected_fail_claims(self):
        failers = {c.id for c in CLAIMS if c.expected == "fail"}
        assert failers == {
            "prop-3.2.10-statement",
            "prop-5.9-magma",
            "center-agreement",
        }


class TestVerifyClaims:
    def test_order_one_all_pass(self):
        for rep in verify_claims(1):
            assert rep.passed, rep.claim

    def test_order_two_failures_are_expected(self):
        reports = {r.claim: r for r in verify_claims(2)}
        failing = {cid for cid, r in reports.items() if not r.passed}
        assert failing == {"prop-3.2.10-statement", "prop-5.9-magma"}

    def test_known_counterexamples_at_order_two(self):
        reports = {r.claim: r for r in verify_claims(2)}
        stmt = reports["prop-3.2.10-statement"]
        assert len(stmt.counterexamples) == 3
        found = {ce.table for ce in stmt.counterexamples}
        assert ((1, 0), (1, 0)) in found
        magma = reports["prop-5.9-magma"]
        assert magma.counterexamples[0].table == ((0, 0), (0, 0))

    def test_subset_run_in_given_order(self):
        reports = verify_claims(
            2, claims=["thm-4.1.2-oj-universal", "thm-2.4-identity"]
        )
        assert [r.claim for r in reports] == [
            "thm-4.1.2-oj-universal", "thm-2.4-identity",
        ]
        assert all(r.passed for r in reports)

    def test_unknown_claim_id(self):
        with pytest.raises(ValueError):
            verify_claims(2, claims=["thm-0.0-missing"])

    def test_exhaustive_order_cap(self):
        with pytest.raises(OrderTooLarge):
            verify_claims(4)

    def test_sampled_mode(self):
        reports = verify_claims(4, sample=200, seed=3)
        assert all(r.mode == "sampled" for r in reports)
        by_id = {r.claim: r for r in reports}
        assert by_id["thm-3.2.3-au-universal"].passed
        assert by_id["thm-3.2.3-au-universal"].checked == 200

    def test_sampled_mode_deterministic(self):
        a = [r.to_dict() for r in verify_claims(4, sample=50, seed=1)]
        b = [r.to_dict() for r in verify_claims(4, sample=50, seed=1)]
        assert a == b

    def test_bad_sample_count(self):
        with pytest.raises(PreconditionError):
            verify_claims(4, sample=0)

    def test_min_order_notes(self):
        reports = {r.claim: r for r in verify_claims(1)}
        rz = reports["thm-4.3.3-right-zero-j-composite"]
        assert rz.checked == 0
        assert rz.note is not None
        semi = reports["cor-5.5-strong-b1-semi-normal"]
        assert semi.checked == 0

    def test_right_zero_claim_skips_order_two(self):
        reports = {r.claim: r for r in verify_claims(2)}
        assert reports["thm-4.3.3-right-zero-j-composite"].checked == 0

    def test_report_dict_shape(self):
        rep = verify_claims(2, claims=["thm-2.4-identity"])[0]
        d = rep.to_dict()
        assert d["claim"] == "thm-2.4-identity"
        assert d["passed"] is True
        assert d["order"] == 2
        assert d["mode"] == "exhaustive"
        assert d["checked"] == 16
        assert d["counterexamples"] == []

    def test_workers_do_not_change_reports(self):
        base = [r.to_dict() for r in verify_claims(2)]
        forked = [r.to_dict() for r in verify_claims(2, workers=2)]
        assert base == forked


class TestCenterAgreementClaim:
    def test_passes_below_order_three(self):
        reports = {r.claim: r for r in verify_claims(2)}
        assert reports["center-agreement"].passed

    def test_fails_at_order_three(self):
        rep = verify_claims(3, claims=["center-agreement"])[0]
        assert not rep.passed
        assert rep.expected == "fail"
        mixed = groupoid(tables.MIXED3)
        assert any(ce == mixed for ce in rep.counterexamples)
