from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatcolor.construction import (
    ALPHA_POSITIVE,
    ALPHA_ZERO,
    PlanError,
    build_graph,
    least_g,
    non_equivalence_sweep,
    plan_construction,
    predict_properties,
    verify_construction,
)
from fatcolor.graph import Graph, count_neighbors_in, degree, induced_subgraph, is_regular


def _fields(plan):
    return (plan.a0, plan.b0, plan.g, plan.a, plan.b, plan.ell, plan.beta)


class TestPlan:
    def test_k2_third(self):
        p = plan_construction(2, "1/3", 1)
        assert p.branch == ALPHA_POSITIVE
        assert p.b0 - (p.k - 1) * p.a0 == 2
        assert _fields(p) == (1, 3, 2, 3, 9, 7, Fraction(2, 3))

    def test_k3_quarter(self):
        p = plan_construction(3, Fraction(1, 4), 1)
        assert _fields(p) == (1, 4, 2, 3, 12, 7, Fraction(1, 2))

    def test_alpha_zero(self):
        p = plan_construction(3, 0, 2)
        assert p.branch == ALPHA_ZERO and p.beta == 1 and p.component_order == 3

    def test_alpha_reduced_to_lowest_terms(self):
        assert plan_construction(2, "2/6", 1) == plan_construction(2, "1/3", 1)

    def test_least_g_is_least(self):
        for k, a0, b0 in [(2, 1, 3), (3, 1, 4), (4, 1, 5), (3, 2, 7), (2, 2, 5), (5, 1, 100)]:
            gap = b0 - (k - 1) * a0
            g = least_g(k, a0, b0)
            assert g * gap > k and (g - 1) * gap <= k

    def test_explicit_g(self):
        p = plan_construction(2, "1/3", 1, g=5)
        assert (p.g, p.a, p.b, p.ell) == (5, 6, 18, 13)
        with pytest.raises(PlanError):
            plan_construction(2, "1/3", 1, g=1)

    @pytest.mark.parametrize(
        "k, alpha, n",
        [(1, "0", 1), (2, "1", 1), (3, "1/2", 1), (3, "-1/5", 1), (2, "1/3", 0), (4, "2/5", 1)],
    )
    def test_rejects(self, k, alpha, n):
        with pytest.raises(PlanError):
            plan_construction(k, alpha, n)

    @settings(max_examples=200)
    @given(st.integers(2, 6), st.integers(1, 40), st.integers(1, 60), st.integers(1, 5))
    def test_plan_invariants(self, k, num, den, n):
        alpha = Fraction(num, den)
        if alpha >= Fraction(1, k - 1):
            with pytest.raises(PlanError):
                plan_construction(k, alpha, n)
            return
        p = plan_construction(k, alpha, n)
        assert p.ell > k
        assert p.ell - 1 == p.b - (k - 1) * p.a
        assert (k - 1) * p.a + (p.ell - 1) == p.b
        assert Fraction(p.a, p.b) == alpha
        assert p.beta == 1 - (k - 1) * alpha and 0 <= p.beta <= 1


class TestBuild:
    def test_k2_third_instance(self):
        plan = plan_construction(2, "1/3", 1)
        g, part = build_graph(plan)
        assert g.order == 42 and is_regular(g) == 9
        assert part.class_sizes == (21, 21)

    def test_alpha_zero_instance(self):
        g, part = build_graph(plan_construction(3, 0, 2))
        assert g == Graph.disjoint_union(*(Graph.complete(3) for _ in range(3)))
        assert is_regular(g) == 2 and part.class_sizes == (3, 3, 3)

    def test_k3_quarter_instance(self):
        g, _ = build_graph(plan_construction(3, "1/4", 1))
        assert g.order == 63 and is_regular(g) == 12

    def test_vertex_index_round_trip(self):
        plan = plan_construction(3, "1/4", 1)
        seen = set()
        for r in range(1, 4):
            for s in range(1, plan.a + 1):
                for t in range(1, plan.ell + 1):
                    v = plan.vertex_index(r, s, t)
                    assert plan.vertex_triple(v) == (r, s, t)
                    seen.add(v)
        assert seen == set(range(3 * plan.a * plan.ell))

    @pytest.mark.parametrize("k, alpha, n", [(2, "1/3", 1), (3, "1/4", 2), (3, "2/7", 1), (4, "1/5", 1)])
    def test_neighbourhood_structure(self, k, alpha, n):
        plan = plan_construction(k, alpha, n)
        g, part = build_graph(plan)
        a, ell = plan.a, plan.ell
        blocks = part.blocks
        for v in range(g.order):
            r, s, t = plan.vertex_triple(v)
            layer = {plan.vertex_index(r2, s2, t) for r2 in range(1, k + 1) if r2 != r for s2 in range(1, a + 1)}
            fibre = {plan.vertex_index(r, s, t2) for t2 in range(1, ell + 1) if t2 != t}
            assert not layer & fibre
            assert set(g.neighbors(v)) == layer | fibre
            assert degree(g, v) == len(layer) + len(fibre) == plan.b
            assert part.class_of[v] == r
            for i in range(1, k + 1):
                expected = ell - 1 if i == r else a
                assert count_neighbors_in(g, v, blocks[i - 1]) == expected

    def test_induced_layers_and_fibres(self):
        plan = plan_construction(3, "1/4", 1)
        g, _ = build_graph(plan)
        k, a, ell = plan.k, plan.a, plan.ell
        layer = induced_subgraph(g, [plan.vertex_index(r, s, 2) for r in range(1, k + 1) for s in range(1, a + 1)])
        # Complete k-partite with parts of size a: (k-1)a-regular and no edge inside a part.
        assert is_regular(layer) == (k - 1) * a
        for r in range(k):
            assert induced_subgraph(layer, range(r * a, (r + 1) * a)) == Graph.empty(a)
        fibre = induced_subgraph(g, [plan.vertex_index(2, 1, t) for t in range(1, ell + 1)])
        assert fibre == Graph.complete(ell)


class TestPredict:
    def test_k2_third(self):
        pr = predict_properties(plan_construction(2, "1/3", 1))
        assert (pr.order, pr.regular_degree, pr.clique_number, pr.class_sizes) == (42, 9, 7, (21, 21))

    def test_k2_third_n2(self):
        plan = plan_construction(2, "1/3", 2)
        assert (plan.a, plan.b, plan.ell) == (4, 12, 9)
        pr = predict_properties(plan)
        assert (pr.order, pr.regular_degree, pr.clique_number) == (72, 12, 9)

    def test_alpha_zero(self):
        pr = predict_properties(plan_construction(3, 0, 1))
        assert (pr.order, pr.regular_degree, pr.clique_number) == (6, 1, 2)


class TestVerifyConstruction:
    @pytest.mark.parametrize("k, alpha, n", [(2, "1/3", 1), (4, "1/5", 1), (2, "0", 3)])
    def test_passes(self, k, alpha, n):
        report = verify_construction(plan_construction(k, alpha, n))
        assert report.passed
        assert {c.name: c.status for c in report.checks} == {
            "order": "pass", "regularity": "pass", "fat": "pass", "clique_number": "pass",
        }

    def test_alpha_zero_parameters(self):
        report = verify_construction(plan_construction(2, 0, 3))
        assert report.check("fat").measured == (0, 1)

    def test_gate_is_explicit(self):
        report = verify_construction(plan_construction(2, "1/3", 1), clique_gate=10)
        c = report.check("clique_number")
        assert c.status == "unchecked" and "unchecked at this scale" in c.note
        assert report.passed


class TestSweep:
    def test_k2_third(self):
        omegas, entries = non_equivalence_sweep(2, "1/3", 3)
        assert [omegas[n]["measured"] for n in (1, 2, 3)] == [7, 9, 11]
        assert [(e.i, e.j) for e in entries] == [(1, 2), (1, 3), (2, 3)]
        assert all(e.status == "not-equivalent" and e.source == "measured" for e in entries)

    def test_k3_quarter(self):
        omegas, _ = non_equivalence_sweep(3, "1/4", 2)
        assert [omegas[n]["measured"] for n in (1, 2)] == [7, 9]

    def test_alpha_zero(self):
        omegas, entries = non_equivalence_sweep(2, 0, 2)
        assert [omegas[n]["predicted"] for n in (1, 2)] == [2, 3]
        assert entries[0].status == "not-equivalent"

    def test_predicted_only_beyond_gate(self):
        omegas, entries = non_equivalence_sweep(2, "1/3", 2, clique_gate=50)
        assert omegas[2]["measured"] is None
        assert entries[0].source == "predicted" and entries[0].status == "not-equivalent"

    def test_formula(self):
        # omega(G_n) = (g + n)(b0 - (k-1) a0) + 1
        for k, alpha in [(2, "1/3"), (3, "2/7"), (4, "1/5")]:
            omegas, _ = non_equivalence_sweep(k, alpha, 4, clique_gate=0)
            p = plan_construction(k, alpha, 1)
            gap = p.b0 - (k - 1) * p.a0
            assert [omegas[n]["predicted"] for n in range(1, 5)] == [(p.g + n) * gap + 1 for n in range(1, 5)]
