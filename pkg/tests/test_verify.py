from __future__ import annotations

import json
from math import comb

import pytest

from splitham.canon import are_isomorphic
from splitham.families import build_family, family
from splitham.graph import build_graph, from_graph6
from splitham.verify import (
    BudgetError,
    EnumFilter,
    Verdict,
    VerificationReport,
    Witness,
    enumerate_split_graphs,
    extremal_graph,
    mask_count,
    property_suite,
    random_equitable_graph,
    split_from_masks,
    verify_lemma,
    verify_theorem,
)


class TestEnumeration:
    def test_typed_connected_k2_i1(self):
        graphs = list(enumerate_split_graphs(2, 1, EnumFilter(connected=True, max_clique_typed=True)))
        assert len(graphs) == 2
        assert are_isomorphic(*graphs)

    def test_unfiltered_count(self):
        assert sum(1 for _ in enumerate_split_graphs(3, 1)) == 8

    @pytest.mark.parametrize("k,i", [(2, 2), (3, 2), (2, 3), (4, 2), (1, 4)])
    def test_labelled_count_without_reduction(self, k, i):
        assert sum(1 for _ in enumerate_split_graphs(k, i, reduce_permutations=False)) == 2 ** (k * i)

    @pytest.mark.parametrize("k,i", [(3, 3), (4, 2), (2, 4)])
    def test_reduced_count_is_multiset_count(self, k, i):
        m = 2 ** k
        assert sum(1 for _ in enumerate_split_graphs(k, i)) == comb(m + i - 1, i)
        typed = sum(1 for _ in enumerate_split_graphs(k, i, EnumFilter(max_clique_typed=True)))
        assert typed == comb(m - 1 + i - 1, i)

    def test_contains_g83(self):
        g83 = build_family(family("G", 8, 3))
        filt = EnumFilter(connected=True, k1r_free=3, non_hamiltonian=True, max_clique_typed=True)
        assert any(g == g83 for g in enumerate_split_graphs(5, 3, filt))

    def test_chunks_partition_the_stream(self):
        whole = list(enumerate_split_graphs(3, 3))
        total = mask_count(3, typed=False)
        pieces = [g for lo, hi in [(0, 3), (3, 5), (5, total)] for g in enumerate_split_graphs(3, 3, first_masks=range(lo, hi))]
        assert pieces == whole

    def test_budget(self):
        with pytest.raises(BudgetError):
            next(enumerate_split_graphs(6, 5))

    def test_split_from_masks(self):
        g = split_from_masks(3, (0b001, 0b110))
        assert g == build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 4)])

    def test_filters_are_conjunctive(self):
        a = {g.adj for g in enumerate_split_graphs(4, 2, EnumFilter(connected=True))}
        b = {g.adj for g in enumerate_split_graphs(4, 2, EnumFilter(k1r_free=3))}
        both = {g.adj for g in enumerate_split_graphs(4, 2, EnumFilter(connected=True, k1r_free=3))}
        assert both == a & b


class TestTheorems:
    def test_n1_6_2(self):
        r = verify_theorem("N1", 6, 2)
        assert r.verdict is Verdict.PASS and r.checked > 0
        assert r.details["maximizer_is_extremal"]
        assert are_isomorphic(from_graph6(r.details["maximizer"]), build_family(family("G", 6, 2)))

    def test_n2_6_3_exception(self):
        r = verify_theorem("N2", 6, 3)
        assert r.passed
        assert are_isomorphic(from_graph6(r.details["maximizer"]), build_family(family("GammaP", 6, 3)))

    def test_th2_8_4(self):
        assert verify_theorem("Th2", 8, 4).passed

    def test_th1_small(self):
        assert verify_theorem("Th1", 7, 3).passed

    def test_wrong_extremal_fails_with_witness(self, monkeypatch):
        import splitham.verify as v

        # pretend the extremal graph is a weaker one: the true maximizer becomes a counterexample
        monkeypatch.setattr(v, "extremal_graph", lambda t, n, i: build_family(family("GammaPP", 7, 3)))
        r = v.verify_theorem("N2", 7, 3)
        assert r.verdict is Verdict.FAIL and r.witnesses

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_theorem("N1", 5, 3)
        with pytest.raises(ValueError):
            verify_theorem("N2", 4, 1)
        with pytest.raises(ValueError):
            verify_theorem("N1", 8, 2, margin=1e-13)

    def test_threads_do_not_change_report(self):
        single = verify_theorem("N2", 8, 3)
        multi = verify_theorem("N2", 8, 3, threads=2)
        assert json.dumps(single.to_dict()) == json.dumps(multi.to_dict())

    def test_extremal_table(self):
        assert are_isomorphic(extremal_graph("N2", 5, 2), build_family(family("GammaP", 5, 2)))
        assert extremal_graph("N2", 8, 3) == build_family(family("Gamma", 8, 3))
        assert extremal_graph("N1", 8, 3) == build_family(family("G", 8, 3))


class TestLemmas:
    def test_bbb(self):
        r = verify_lemma("bbb", 6, 40)
        assert r.passed and r.checked == 2 * 35

    def test_i3_reversal_at_6(self):
        r = verify_lemma("I3", 6, 6)
        assert r.passed
        rhos = {row["family"]: row["rho"] for row in r.rows}
        assert rhos["GammaP_n3(6, 3)"] > rhos["Gamma_nt(6, 3)"] > rhos["GammaPP_n3(6, 3)"]

    def test_i4(self):
        r = verify_lemma("I4", 12, 30, i_size=6)
        assert r.passed and r.details["star_relation_residual"] < 1e-9

    def test_rows_have_table_columns(self):
        r = verify_lemma("I44", 8, 9)
        assert all(set(row) == {"n", "family", "rho"} for row in r.rows)

    def test_failing_margin_is_indistinguishable(self):
        r = verify_lemma("I5", 11, 11, margin=0.05)
        assert r.verdict is Verdict.INDISTINGUISHABLE and r.witnesses

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            verify_lemma("I44", 7, 9)
        with pytest.raises(ValueError):
            verify_lemma("I4", 10, 12, i_size=6)


class TestProperties:
    def test_zero_trials(self):
        r = property_suite(3, 0)
        assert r.passed and r.checked == 0

    def test_reproducible(self):
        a = property_suite(7, 25)
        b = property_suite(7, 25)
        assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())

    def test_small_run(self):
        r = property_suite(11, 50)
        assert r.passed and r.checked == 150

    def test_rotation_precondition_filters(self):
        r = property_suite(5, 40, ["L2"])
        assert r.passed and r.rows[0]["skipped_preconditions"] > 0

    def test_equitable_generator(self, rng):
        from splitham.equitable import is_equitable, quotient

        for _ in range(50):
            g, part, designed = random_equitable_graph(rng)
            assert is_equitable(g, part)
            assert [list(r) for r in quotient(g, part).entries] == designed


def test_failing_report_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, Verdict.FAIL, 1)
    r = VerificationReport("x", {}, Verdict.FAIL, 1, [Witness("@", {"rho": 0.0})], elapsed=3.0)
    assert "elapsed" not in r.to_dict() and r.to_dict(include_elapsed=True)["elapsed"] == 3.0
